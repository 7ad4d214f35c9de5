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
/**
 * @file
 * Experiment orchestration behind the `qnn` command-line tool.
 *
 * All numbers are written with 17 significant digits so that files can be
 * read back bit-exactly. Every CSV output has a header row.
 */
#pragma once

#include "qnn/arch.hpp"
#include "qnn/train.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qnn::cli {

enum class Command { Train, Evaluate, Predict, ExportCurves };

std::string_view to_string(Command command);
Command parse_command(std::string_view name);

/// Configuration or input problem; reported as a one-line diagnostic.
class RunError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Command command{Command::Train};
    std::filesystem::path data;
    arch::Topology topology{arch::Topology::PartialChain};
    std::size_t qubits{10};
    std::size_t layers{2};
    train::TrainConfig train;
    std::optional<std::size_t> train_count; ///< empty: whole dataset
    bool shuffle{false};                    ///< seeded shuffle before split
    std::filesystem::path out{"run"};
    std::vector<double> thresholds{0.01, 0.05};
    std::filesystem::path params;
    std::filesystem::path image;
    std::size_t patch_row{0};
    std::size_t patch_col{0};
    std::optional<std::size_t> sample; ///< dataset row for `predict`
    std::size_t window{50};            ///< `export-curves` window length

    [[nodiscard]] arch::Architecture architecture() const {
        return arch::Architecture{topology, qubits, layers};
    }
};

using Setting = std::pair<std::string, std::string>;

/// Sets one field from its flag name (without dashes), e.g. "fd-step".
/// Throws RunError on unknown keys or unparsable values.
void apply_setting(RunConfig &config, std::string_view key, std::string_view value);

/// Fully resolved configuration as key/value pairs, in a fixed order.
std::vector<Setting> settings(const RunConfig &config);

/// Reads `key=value` or `key,value` lines; '#' starts a comment and a
/// leading `key,value` header is skipped.
std::vector<Setting> read_settings_file(const std::filesystem::path &path);

/// Loads a settings file into a default RunConfig.
RunConfig load_config(const std::filesystem::path &path);

/// %.17g, with ".0" appended to integral values.
std::string format_double(double value);

/// Reads a `final_params` file; throws RunError naming expected vs. found
/// length when it does not match `expected_len`.
arch::ParamVector read_params(const std::filesystem::path &path,
                              std::size_t expected_len);
void write_params(const std::filesystem::path &path, const arch::ParamVector &params);

void run_train(const RunConfig &config);
void run_evaluate(const RunConfig &config);
/// Writes the `l_hat=<p> label=<0|1>` line to `out`.
void run_predict(const RunConfig &config, std::ostream &out);
void run_export_curves(const RunConfig &config);

/// Dispatches on config.command. Returns the process exit status; errors are
/// reported as a single line on `err`.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace qnn::cli
