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
#include "qnn/cli.hpp"

#include "qnn/data.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qnn::cli {

namespace fs = std::filesystem;

std::string_view to_string(Command command) {
    switch (command) {
    case Command::Train:
        return "train";
    case Command::Evaluate:
        return "evaluate";
    case Command::Predict:
        return "predict";
    case Command::ExportCurves:
        return "export-curves";
    }
    return "unknown";
}

Command parse_command(std::string_view name) {
    for (auto c : {Command::Train, Command::Evaluate, Command::Predict,
                   Command::ExportCurves}) {
        if (name == to_string(c)) {
            return c;
        }
    }
    throw RunError("unknown command '" + std::string{name} + "'");
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    std::string s{buf};
    if (std::isfinite(value) && s.find_first_of(".eE") == std::string::npos) {
        s += ".0";
    }
    return s;
}

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string{s.substr(first, last - first + 1)};
}

double to_double(std::string_view key, std::string_view text) {
    const std::string t = trim(text);
    double v = 0.0;
    const char *begin = t.data();
    if (!t.empty() && t.front() == '+') {
        ++begin;
    }
    auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw RunError("invalid number '" + t + "' for " + std::string{key});
    }
    return v;
}

std::size_t to_size(std::string_view key, std::string_view text) {
    const std::string t = trim(text);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw RunError("invalid non-negative integer '" + t + "' for " +
                       std::string{key});
    }
    return v;
}

bool to_bool(std::string_view key, std::string_view text) {
    const std::string t = trim(text);
    if (t == "1" || t == "true" || t == "on" || t == "yes") {
        return true;
    }
    if (t == "0" || t == "false" || t == "off" || t == "no") {
        return false;
    }
    throw RunError("invalid boolean '" + t + "' for " + std::string{key});
}

std::vector<double> to_double_list(std::string_view key, std::string_view text) {
    std::vector<double> out;
    std::string item;
    for (char ch : text) {
        if (ch == ',' || ch == ';') {
            out.push_back(to_double(key, item));
            item.clear();
        } else {
            item.push_back(ch);
        }
    }
    if (!trim(item).empty() || !out.empty()) {
        out.push_back(to_double(key, item));
    }
    return out;
}

std::string optional_size(const std::optional<std::size_t> &v) {
    return v ? std::to_string(*v) : std::string{};
}

} // namespace

void apply_setting(RunConfig &c, std::string_view key, std::string_view value) {
    const std::string v = trim(value);
    auto &t = c.train;
    if (key == "command") {
        c.command = parse_command(v);
    } else if (key == "data") {
        c.data = v;
    } else if (key == "topology") {
        try {
            c.topology = arch::parse_topology(v);
        } catch (const std::invalid_argument &e) {
            throw RunError(e.what());
        }
    } else if (key == "qubits") {
        c.qubits = to_size(key, v);
    } else if (key == "layers") {
        c.layers = to_size(key, v);
    } else if (key == "rate") {
        t.initial_rate = to_double(key, v);
    } else if (key == "decay") {
        t.decay_factor = to_double(key, v);
    } else if (key == "patience") {
        t.decay_patience = to_size(key, v);
    } else if (key == "fd-step") {
        t.fd_step = to_double(key, v);
    } else if (key == "epochs") {
        t.epochs = to_size(key, v);
    } else if (key == "clip-epsilon") {
        t.loss_clip_epsilon = to_double(key, v);
    } else if (key == "seed") {
        t.seed = to_size(key, v);
    } else if (key == "init") {
        try {
            t.init = train::parse_param_init(v);
        } catch (const std::invalid_argument &e) {
            throw RunError(e.what());
        }
    } else if (key == "record-params") {
        t.record_params = to_bool(key, v);
    } else if (key == "workers") {
        t.workers = to_size(key, v);
    } else if (key == "train-count") {
        c.train_count = v.empty() ? std::nullopt
                                  : std::optional<std::size_t>{to_size(key, v)};
    } else if (key == "shuffle") {
        c.shuffle = to_bool(key, v);
    } else if (key == "out") {
        c.out = v;
    } else if (key == "thresholds") {
        c.thresholds = to_double_list(key, v);
    } else if (key == "params") {
        c.params = v;
    } else if (key == "image") {
        c.image = v;
    } else if (key == "patch-row") {
        c.patch_row = to_size(key, v);
    } else if (key == "patch-col") {
        c.patch_col = to_size(key, v);
    } else if (key == "sample") {
        c.sample = v.empty() ? std::nullopt
                             : std::optional<std::size_t>{to_size(key, v)};
    } else if (key == "window") {
        c.window = to_size(key, v);
    } else {
        throw RunError("unknown configuration key '" + std::string{key} + "'");
    }
}

std::vector<Setting> settings(const RunConfig &c) {
    std::string thresholds;
    for (std::size_t i = 0; i < c.thresholds.size(); ++i) {
        thresholds += (i ? ";" : "") + format_double(c.thresholds[i]);
    }
    const auto &t = c.train;
    return {
        {"command", std::string{to_string(c.command)}},
        {"data", c.data.string()},
        {"topology", std::string{arch::to_string(c.topology)}},
        {"qubits", std::to_string(c.qubits)},
        {"layers", std::to_string(c.layers)},
        {"rate", format_double(t.initial_rate)},
        {"decay", format_double(t.decay_factor)},
        {"patience", std::to_string(t.decay_patience)},
        {"fd-step", format_double(t.fd_step)},
        {"epochs", std::to_string(t.epochs)},
        {"clip-epsilon", format_double(t.loss_clip_epsilon)},
        {"seed", std::to_string(t.seed)},
        {"init", std::string{train::to_string(t.init)}},
        {"record-params", t.record_params ? "true" : "false"},
        {"workers", std::to_string(t.workers)},
        {"train-count", optional_size(c.train_count)},
        {"shuffle", c.shuffle ? "true" : "false"},
        {"out", c.out.string()},
        {"thresholds", thresholds},
        {"params", c.params.string()},
        {"image", c.image.string()},
        {"patch-row", std::to_string(c.patch_row)},
        {"patch-col", std::to_string(c.patch_col)},
        {"sample", optional_size(c.sample)},
        {"window", std::to_string(c.window)},
    };
}

std::vector<Setting> read_settings_file(const fs::path &path) {
    std::ifstream in{path};
    if (!in) {
        throw RunError("cannot open config file '" + path.string() + "'");
    }
    std::vector<Setting> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        const auto sep = line.find_first_of("=,");
        if (sep == std::string::npos) {
            throw RunError(path.string() + ": line " + std::to_string(line_no) +
                           ": expected key=value");
        }
        std::string key = trim(std::string_view{line}.substr(0, sep));
        std::string value = trim(std::string_view{line}.substr(sep + 1));
        if (key == "key" && value == "value") {
            continue;
        }
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

RunConfig load_config(const fs::path &path) {
    RunConfig c;
    for (const auto &[k, v] : read_settings_file(path)) {
        apply_setting(c, k, v);
    }
    return c;
}

// ---------------------------------------------------------------------------
// File output

namespace {

class CsvWriter {
  public:
    explicit CsvWriter(const fs::path &path) : path_{path}, out_{path} {
        if (!out_) {
            throw RunError("cannot write '" + path.string() + "'");
        }
    }

    template <typename... Cells> void row(const Cells &...cells) {
        bool first = true;
        ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
        out_ << '\n';
    }

    void row(const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out_ << (i ? "," : "") << cells[i];
        }
        out_ << '\n';
    }

    ~CsvWriter() = default;

    void close() {
        out_.close();
        if (!out_) {
            throw RunError("failed writing '" + path_.string() + "'");
        }
    }

  private:
    static std::string cell(double v) { return format_double(v); }
    static std::string cell(std::size_t v) { return std::to_string(v); }
    static std::string cell(int v) { return std::to_string(v); }
    static std::string cell(const std::string &v) { return v; }
    static std::string cell(const char *v) { return v; }

    fs::path path_;
    std::ofstream out_;
};

void write_config_echo(const RunConfig &config) {
    CsvWriter w{config.out / "config_echo"};
    w.row("key", "value");
    for (const auto &[k, v] : settings(config)) {
        w.row(k, v);
    }
    w.close();
}

void ensure_out_dir(const fs::path &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw RunError("cannot create output directory '" + dir.string() + "'");
    }
}

struct PreparedData {
    std::vector<data::Sample> all;
    std::vector<data::Sample> train;
    std::vector<data::Sample> test;
    data::FeatureBounds bounds;
};

PreparedData prepare_wbc(const RunConfig &c) {
    if (c.data.empty()) {
        throw RunError("--data is required");
    }
    if (c.qubits != data::kFeatureCount) {
        throw RunError("the tabular dataset needs " +
                       std::to_string(data::kFeatureCount) +
                       " qubits, architecture has " + std::to_string(c.qubits));
    }
    PreparedData p;
    try {
        p.all = data::load_wbc_csv(c.data);
    } catch (const data::DataError &e) {
        throw RunError(e.what());
    }
    const std::size_t count = c.train_count.value_or(p.all.size());
    if (count == 0 || count > p.all.size()) {
        throw RunError("--train-count " + std::to_string(count) + " outside 1.." +
                       std::to_string(p.all.size()));
    }
    auto parts = c.shuffle ? data::split_shuffled(p.all, count, c.train.seed)
                           : data::split(p.all, count);
    p.train = std::move(parts.train);
    p.test = std::move(parts.test);
    // Bounds come from the training rows only.
    p.bounds = data::compute_bounds(p.train);
    return p;
}

std::vector<train::LabeledInput> encode_all(std::span<const data::Sample> samples,
                                            const data::FeatureBounds &bounds) {
    std::vector<train::LabeledInput> out;
    out.reserve(samples.size());
    for (const auto &s : samples) {
        out.push_back({data::encode(s, bounds), s.label});
    }
    return out;
}

std::string threshold_label(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

void summary_rows(CsvWriter &w, const std::string &prefix, const train::Evaluation &ev) {
    w.row(prefix + "samples", ev.loss.size());
    w.row(prefix + "average_loss", ev.average_loss);
    w.row(prefix + "accuracy", ev.accuracy);
    for (const auto &f : ev.above) {
        w.row(prefix + "fraction_loss_gt_" + threshold_label(f.threshold), f.fraction);
    }
}

arch::Architecture checked_architecture(const RunConfig &c) {
    try {
        return c.architecture();
    } catch (const std::invalid_argument &e) {
        throw RunError(e.what());
    }
}

} // namespace

arch::ParamVector read_params(const fs::path &path, std::size_t expected_len) {
    std::ifstream in{path};
    if (!in) {
        throw RunError("cannot open parameter file '" + path.string() + "'");
    }
    std::vector<double> values;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        if (header) {
            header = false;
            if (trim(line) == "index,value") {
                continue;
            }
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw RunError(path.string() + ": malformed parameter row '" + line + "'");
        }
        const std::size_t index = to_size("parameter index", line.substr(0, comma));
        if (index != values.size()) {
            throw RunError(path.string() + ": parameter rows out of order at index " +
                           std::to_string(index));
        }
        values.push_back(to_double("parameter value", line.substr(comma + 1)));
    }
    if (values.size() != expected_len) {
        throw RunError(path.string() + ": architecture expects " +
                       std::to_string(expected_len) + " parameters, found " +
                       std::to_string(values.size()));
    }
    return arch::ParamVector{std::move(values), expected_len};
}

void write_params(const fs::path &path, const arch::ParamVector &params) {
    CsvWriter w{path};
    w.row("index", "value");
    for (std::size_t k = 0; k < params.size(); ++k) {
        w.row(k, params[k]);
    }
    w.close();
}

void run_train(const RunConfig &c) {
    const auto arch = checked_architecture(c);
    try {
        c.train.validate();
    } catch (const std::invalid_argument &e) {
        throw RunError(e.what());
    }
    const auto prepared = prepare_wbc(c);
    const auto train_set = encode_all(prepared.train, prepared.bounds);
    const auto init = train::initial_params(arch, c.train.init, c.train.seed);
    const auto result = train::train_online(arch, train_set, c.train, init);

    const auto train_eval = train::evaluate(arch, result.params, train_set,
                                            c.thresholds, c.train.loss_clip_epsilon);
    std::optional<train::Evaluation> whole_eval;
    std::optional<train::Evaluation> test_eval;
    if (!prepared.test.empty()) {
        const auto whole = encode_all(prepared.all, prepared.bounds);
        const auto test = encode_all(prepared.test, prepared.bounds);
        whole_eval = train::evaluate(arch, result.params, whole, c.thresholds,
                                     c.train.loss_clip_epsilon);
        test_eval = train::evaluate(arch, result.params, test, c.thresholds,
                                    c.train.loss_clip_epsilon);
    }

    ensure_out_dir(c.out);
    {
        CsvWriter w{c.out / "loss.csv"};
        w.row("iteration", "sample_index", "loss", "rate");
        const auto &tr = result.trace;
        for (std::size_t i = 0; i < tr.iterations(); ++i) {
            w.row(i, tr.sample[i], tr.loss[i], tr.rate[i]);
        }
        w.close();
    }
    if (c.train.record_params) {
        CsvWriter w{c.out / "params.csv"};
        std::vector<std::string> header{"iteration"};
        for (std::size_t k = 0; k < arch.param_count(); ++k) {
            header.push_back("p_" + std::to_string(k));
        }
        w.row(header);
        auto snapshot_row = [&](std::size_t it, std::span<const double> p) {
            std::vector<std::string> cells{std::to_string(it)};
            for (double v : p) {
                cells.push_back(format_double(v));
            }
            w.row(cells);
        };
        // Row 0 is the initial point; row i is the state after update i.
        snapshot_row(0, init.values());
        for (std::size_t i = 0; i < result.trace.params.size(); ++i) {
            snapshot_row(i + 1, result.trace.params[i]);
        }
        w.close();
    }
    write_params(c.out / "final_params", result.params);
    {
        CsvWriter w{c.out / "summary"};
        w.row("metric", "value");
        w.row("dataset_samples", prepared.all.size());
        w.row("test_samples", prepared.test.size());
        w.row("parameters", arch.param_count());
        w.row("iterations", result.trace.iterations());
        w.row("decay_events", result.trace.decay_events());
        w.row("final_rate", result.trace.rate.back());
        summary_rows(w, "train_", train_eval);
        if (whole_eval) {
            summary_rows(w, "whole_", *whole_eval);
            summary_rows(w, "test_", *test_eval);
        }
        w.close();
    }
    write_config_echo(c);
}

void run_evaluate(const RunConfig &c) {
    const auto arch = checked_architecture(c);
    if (c.params.empty()) {
        throw RunError("--params is required");
    }
    const auto prepared = prepare_wbc(c);
    const auto params = read_params(c.params, arch.param_count());
    const auto whole = encode_all(prepared.all, prepared.bounds);
    const auto ev =
        train::evaluate(arch, params, whole, c.thresholds, c.train.loss_clip_epsilon);

    ensure_out_dir(c.out);
    {
        CsvWriter w{c.out / "per_sample_loss.csv"};
        w.row("sample_index", "label", "predicted", "loss");
        for (std::size_t i = 0; i < ev.loss.size(); ++i) {
            w.row(i, ev.label[i], ev.prediction[i], ev.loss[i]);
        }
        w.close();
    }
    {
        CsvWriter w{c.out / "summary"};
        w.row("metric", "value");
        w.row("parameters", arch.param_count());
        summary_rows(w, "", ev);
        w.close();
    }
    write_config_echo(c);
}

void run_predict(const RunConfig &c, std::ostream &out) {
    const auto arch = checked_architecture(c);
    if (c.params.empty()) {
        throw RunError("--params is required");
    }
    std::optional<arch::InputAngles> input;
    if (!c.image.empty()) {
        if (c.qubits != data::kPatchPixels) {
            throw RunError("patch prediction needs " +
                           std::to_string(data::kPatchPixels) +
                           " qubits, architecture has " + std::to_string(c.qubits));
        }
        try {
            const auto image = data::load_pgm(c.image);
            input = data::patch_to_angles(
                data::extract_patch(image, c.patch_row, c.patch_col));
        } catch (const data::DataError &e) {
            throw RunError(e.what());
        } catch (const std::out_of_range &e) {
            throw RunError(e.what());
        }
    } else {
        if (!c.sample) {
            throw RunError("predict needs --sample or --image");
        }
        const auto prepared = prepare_wbc(c);
        if (*c.sample >= prepared.all.size()) {
            throw RunError("--sample " + std::to_string(*c.sample) + " outside 0.." +
                           std::to_string(prepared.all.size() - 1));
        }
        input = data::encode(prepared.all[*c.sample], prepared.bounds);
    }
    const auto params = read_params(c.params, arch.param_count());
    const double p = arch::forward(arch, *input, params);
    out << "l_hat=" << format_double(p) << " label=" << (p >= 0.5 ? 1 : 0) << '\n';
}

void run_export_curves(const RunConfig &c) {
    if (c.window < 1) {
        throw RunError("--window must be >= 1");
    }
    const fs::path loss_path = c.out / "loss.csv";
    std::ifstream in{loss_path};
    if (!in) {
        throw RunError("cannot open '" + loss_path.string() + "'");
    }
    std::vector<double> losses;
    std::vector<double> rates;
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss{line};
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (cells.size() != 4) {
            throw RunError(loss_path.string() + ": malformed row '" + line + "'");
        }
        losses.push_back(to_double("loss", cells[2]));
        rates.push_back(to_double("rate", cells[3]));
    }
    CsvWriter w{c.out / "loss_curve.csv"};
    w.row("window", "first_iteration", "last_iteration", "mean_loss", "min_loss",
          "max_loss", "rate");
    for (std::size_t begin = 0, k = 0; begin < losses.size(); begin += c.window, ++k) {
        const std::size_t end = std::min(losses.size(), begin + c.window);
        double sum = 0.0;
        double lo = losses[begin];
        double hi = losses[begin];
        for (std::size_t i = begin; i < end; ++i) {
            sum += losses[i];
            lo = std::min(lo, losses[i]);
            hi = std::max(hi, losses[i]);
        }
        w.row(k, begin, end - 1, sum / static_cast<double>(end - begin), lo, hi,
              rates[end - 1]);
    }
    w.close();
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        switch (config.command) {
        case Command::Train:
            run_train(config);
            break;
        case Command::Evaluate:
            run_evaluate(config);
            break;
        case Command::Predict:
            run_predict(config, out);
            break;
        case Command::ExportCurves:
            run_export_curves(config);
            break;
        }
    } catch (const std::exception &e) {
        err << "qnn " << to_string(config.command) << ": error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace qnn::cli
