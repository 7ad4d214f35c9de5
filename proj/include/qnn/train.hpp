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
 * Loss, finite-difference gradients and online normalized-gradient descent.
 */
#pragma once

#include "qnn/arch.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qnn::train {

enum class ParamInit { Zeros, Uniform };

std::string_view to_string(ParamInit init);
ParamInit parse_param_init(std::string_view name);

struct TrainConfig {
    double initial_rate{0.2};
    double decay_factor{0.5};
    /// Window length (iterations) of the plateau test.
    std::size_t decay_patience{50};
    /// Half-step of the central difference, radians.
    double fd_step{0.01};
    std::size_t epochs{2};
    double loss_clip_epsilon{1e-10};
    std::uint64_t seed{0};
    ParamInit init{ParamInit::Zeros};
    /// Store a parameter snapshot after every update.
    bool record_params{false};
    /// Threads used inside one gradient evaluation.
    std::size_t workers{1};

    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

struct LabeledInput {
    arch::InputAngles input;
    int label{0};
};

/**
 * Binary cross-entropy -(1-l) ln(1-l') - l ln(l'), with l' clipped to
 * [eps, 1-eps] first.
 */
double loss(int expected, double predicted, double clip_epsilon = 1e-10);

struct GradientOptions {
    double fd_step{0.01};
    double clip_epsilon{1e-10};
    std::size_t workers{1};
};

/// Central-difference gradient of the single-sample loss w.r.t. every
/// parameter. Result is independent of `workers`.
std::vector<double> finite_diff_gradient(const arch::Architecture &arch,
                                         const arch::InputAngles &input,
                                         int expected,
                                         const arch::ParamVector &params,
                                         const GradientOptions &opts = {});

/// Gradient norms at or below this leave the parameters unchanged.
inline constexpr double kStationaryNorm = 1e-12;

/// p - rate * grad / |grad|; a step of length exactly `rate`.
arch::ParamVector step(const arch::ParamVector &params,
                       std::span<const double> grad, double rate);

arch::ParamVector initial_params(const arch::Architecture &arch, ParamInit init,
                                 std::uint64_t seed);

/// One row per processed sample.
struct TrainTrace {
    std::vector<double> loss;          ///< evaluated before the update
    std::vector<std::size_t> sample;   ///< index into the training set
    std::vector<double> rate;          ///< rate used for the update
    std::vector<std::vector<double>> params; ///< post-update, if recorded

    [[nodiscard]] std::size_t iterations() const { return loss.size(); }
    [[nodiscard]] std::size_t decay_events() const;
};

/// Parameters, iteration counter, current rate and the trace so far.
class TrainState {
  public:
    TrainState(arch::Architecture arch, TrainConfig config, arch::ParamVector init);

    /// Processes one sample: records its loss, updates params, maybe decays
    /// the rate. Returns the recorded (pre-update) loss.
    double observe(const LabeledInput &sample, std::size_t sample_index);

    [[nodiscard]] const arch::ParamVector &params() const { return params_; }
    [[nodiscard]] std::size_t iteration() const { return iteration_; }
    [[nodiscard]] double rate() const { return rate_; }
    [[nodiscard]] const TrainTrace &trace() const { return trace_; }
    TrainTrace take_trace() { return std::move(trace_); }

  private:
    void update_schedule();

    arch::Architecture arch_;
    TrainConfig config_;
    arch::ParamVector params_;
    arch::ForwardWorkspace workspace_;
    std::size_t iteration_{0};
    double rate_;
    double previous_window_mean_{0.0};
    bool have_previous_window_{false};
    TrainTrace trace_;
};

struct TrainResult {
    arch::ParamVector params;
    TrainTrace trace;
};

/**
 * Online training: for each epoch, each sample in order, one gradient step.
 * Every decay_patience iterations the mean loss of the window just finished
 * is compared with the previous window; if it did not go down the rate is
 * multiplied by decay_factor. Throws std::invalid_argument on an empty set.
 */
TrainResult train_online(const arch::Architecture &arch,
                         std::span<const LabeledInput> train_set,
                         const TrainConfig &config, const arch::ParamVector &init);

struct ThresholdFraction {
    double threshold{0.0};
    double fraction{0.0};
};

struct Evaluation {
    std::vector<double> loss;
    std::vector<double> prediction;
    std::vector<int> label;
    double average_loss{0.0};
    double accuracy{0.0}; ///< predicted label is 1 iff l' >= 0.5
    std::vector<ThresholdFraction> above;
};

Evaluation evaluate(const arch::Architecture &arch, const arch::ParamVector &params,
                    std::span<const LabeledInput> dataset,
                    std::span<const double> thresholds,
                    double clip_epsilon = 1e-10);

} // namespace qnn::train
