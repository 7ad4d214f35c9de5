// Copyright 2026 The qnn-cancer Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// qnn: train, evaluate and query the quantum breast-cancer classifier.

#include "qnn/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

struct Flags {
    std::string config;
    std::string data, topology, out, params, image, init;
    std::size_t qubits{}, layers{}, patience{}, epochs{}, seed{}, train_count{},
        patch_row{}, patch_col{}, sample{}, workers{}, window{};
    double rate{}, decay{}, fd_step{}, clip_epsilon{};
    std::vector<double> thresholds;
    bool record_params{false}, shuffle{false};
};

void add_common(CLI::App &cmd, Flags &f) {
    cmd.add_option("--config", f.config,
                   "key=value settings file (e.g. a previous config_echo); flags win");
    cmd.add_option("--data", f.data, "WDBC CSV file");
    cmd.add_option("--topology", f.topology, "partial-chain | fully-entangled");
    cmd.add_option("--qubits", f.qubits, "register size (10 for WDBC, 16 for patches)");
    cmd.add_option("--layers", f.layers, "number of trainable layers");
    cmd.add_option("--train-count", f.train_count, "size of the training prefix");
    cmd.add_flag("--shuffle", f.shuffle, "seeded shuffle before splitting");
    cmd.add_option("--seed", f.seed, "seed for shuffling and uniform init");
    cmd.add_option("--out", f.out, "output directory");
    cmd.add_option("--thresholds", f.thresholds, "loss thresholds for the summary")
        ->delimiter(',');
    cmd.add_option("--clip-epsilon", f.clip_epsilon, "prediction clipping in the loss");
}

void add_training(CLI::App &cmd, Flags &f) {
    cmd.add_option("--rate", f.rate, "initial learning rate (step length)");
    cmd.add_option("--decay", f.decay, "learning-rate decay factor");
    cmd.add_option("--patience", f.patience, "plateau window length in iterations");
    cmd.add_option("--fd-step", f.fd_step, "finite-difference half-step (radians)");
    cmd.add_option("--epochs", f.epochs, "passes over the training set");
    cmd.add_option("--init", f.init, "zeros | uniform");
    cmd.add_option("--workers", f.workers, "threads per gradient evaluation");
    cmd.add_flag("--record-params", f.record_params, "write params.csv");
}

// Copies every flag the user actually passed into the settings list, after
// any config-file entries, so that flags take precedence.
std::vector<qnn::cli::Setting> explicit_settings(const CLI::App &cmd) {
    std::vector<qnn::cli::Setting> out;
    for (const CLI::Option *opt : cmd.get_options()) {
        if (opt->count() == 0 || opt->get_lnames().empty()) {
            continue;
        }
        const std::string name = opt->get_lnames().front();
        if (name == "help" || name == "config") {
            continue;
        }
        if (opt->get_type_size() == 0) { // flag
            out.emplace_back(name, "true");
            continue;
        }
        std::string joined;
        for (const auto &r : opt->results()) {
            joined += (joined.empty() ? "" : ";") + r;
        }
        out.emplace_back(name, joined);
    }
    return out;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum neural network classifier for the Wisconsin breast "
                 "cancer data"};
    app.require_subcommand(1);

    Flags flags;
    auto *train = app.add_subcommand("train", "train on the dataset and write metrics");
    auto *evaluate = app.add_subcommand("evaluate", "per-sample losses for saved params");
    auto *predict = app.add_subcommand("predict", "predict one sample or image patch");
    auto *curves = app.add_subcommand("export-curves", "windowed loss curve from loss.csv");

    for (auto *cmd : {train, evaluate, predict, curves}) {
        add_common(*cmd, flags);
    }
    add_training(*train, flags);
    for (auto *cmd : {evaluate, predict}) {
        cmd->add_option("--params", flags.params, "final_params file")->required();
    }
    predict->add_option("--sample", flags.sample, "dataset row index (0-based)");
    predict->add_option("--image", flags.image, "PGM image for patch prediction");
    predict->add_option("--patch-row", flags.patch_row, "top row of the 4x4 patch");
    predict->add_option("--patch-col", flags.patch_col, "left column of the 4x4 patch");
    curves->add_option("--window", flags.window, "iterations per curve point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App *cmd = app.get_subcommands().front();
    qnn::cli::RunConfig config;
    try {
        if (!flags.config.empty()) {
            config = qnn::cli::load_config(flags.config);
        }
        config.command = qnn::cli::parse_command(cmd->get_name());
        for (const auto &[key, value] : explicit_settings(*cmd)) {
            qnn::cli::apply_setting(config, key, value);
        }
    } catch (const std::exception &e) {
        std::cerr << "qnn " << cmd->get_name() << ": error: " << e.what() << '\n';
        return 2;
    }
    return qnn::cli::run(config, std::cout, std::cerr);
}
