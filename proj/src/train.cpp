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
#include "qnn/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace qnn::train {

std::string_view to_string(ParamInit init) {
    return init == ParamInit::Zeros ? "zeros" : "uniform";
}

ParamInit parse_param_init(std::string_view name) {
    if (name == "zeros") {
        return ParamInit::Zeros;
    }
    if (name == "uniform") {
        return ParamInit::Uniform;
    }
    throw std::invalid_argument("unknown parameter init '" + std::string{name} +
                                "' (expected zeros or uniform)");
}

void TrainConfig::validate() const {
    auto fail = [](const std::string &msg) { throw std::invalid_argument(msg); };
    if (!(initial_rate > 0.0) || !std::isfinite(initial_rate)) {
        fail("learning rate must be > 0");
    }
    if (!(decay_factor > 0.0 && decay_factor < 1.0)) {
        fail("decay factor must be in (0, 1)");
    }
    if (decay_patience < 1) {
        fail("decay patience must be >= 1");
    }
    if (!(fd_step > 0.0) || !std::isfinite(fd_step)) {
        fail("finite-difference step must be > 0");
    }
    if (epochs < 1) {
        fail("epochs must be >= 1");
    }
    if (!(loss_clip_epsilon > 0.0 && loss_clip_epsilon < 0.5)) {
        fail("loss clip epsilon must be in (0, 0.5)");
    }
    if (workers < 1) {
        fail("workers must be >= 1");
    }
}

double loss(int expected, double predicted, double clip_epsilon) {
    const double p = std::clamp(predicted, clip_epsilon, 1.0 - clip_epsilon);
    const double l = expected != 0 ? 1.0 : 0.0;
    return -(1.0 - l) * std::log(1.0 - p) - l * std::log(p);
}

std::vector<double> finite_diff_gradient(const arch::Architecture &arch,
                                         const arch::InputAngles &input,
                                         int expected,
                                         const arch::ParamVector &params,
                                         const GradientOptions &opts) {
    const std::size_t count = params.size();
    std::vector<double> grad(count, 0.0);

    // Each component is computed by exactly one worker from the same base
    // params, so the result does not depend on scheduling.
    auto run_range = [&](std::size_t begin, std::size_t end) {
        arch::ForwardWorkspace ws{arch};
        for (std::size_t k = begin; k < end; ++k) {
            const double plus = loss(expected, ws(input, params.shifted(k, opts.fd_step)),
                                     opts.clip_epsilon);
            const double minus = loss(
                expected, ws(input, params.shifted(k, -opts.fd_step)), opts.clip_epsilon);
            grad[k] = (plus - minus) / (2.0 * opts.fd_step);
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(opts.workers, 1, count == 0 ? 1 : count);
    if (workers == 1) {
        run_range(0, count);
        return grad;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin < end) {
            pool.emplace_back(run_range, begin, end);
        }
    }
    pool.clear(); // joins
    return grad;
}

arch::ParamVector step(const arch::ParamVector &params,
                       std::span<const double> grad, double rate) {
    if (grad.size() != params.size()) {
        throw std::invalid_argument("gradient length " + std::to_string(grad.size()) +
                                    " does not match parameter length " +
                                    std::to_string(params.size()));
    }
    const double norm =
        std::sqrt(std::inner_product(grad.begin(), grad.end(), grad.begin(), 0.0));
    if (!(norm > kStationaryNorm)) {
        return params;
    }
    std::vector<double> next(params.values().begin(), params.values().end());
    for (std::size_t k = 0; k < next.size(); ++k) {
        next[k] -= rate * (grad[k] / norm);
    }
    return arch::ParamVector{std::move(next), params.size()};
}

arch::ParamVector initial_params(const arch::Architecture &arch, ParamInit init,
                                 std::uint64_t seed) {
    if (init == ParamInit::Zeros) {
        return arch::ParamVector::zeros(arch);
    }
    std::mt19937_64 rng{seed};
    std::uniform_real_distribution<double> dist{-0.1, 0.1};
    std::vector<double> values(arch.param_count());
    for (auto &v : values) {
        v = dist(rng);
    }
    return arch::ParamVector{arch, std::move(values)};
}

std::size_t TrainTrace::decay_events() const {
    std::size_t events = 0;
    for (std::size_t i = 1; i < rate.size(); ++i) {
        if (rate[i] < rate[i - 1]) {
            ++events;
        }
    }
    return events;
}

TrainState::TrainState(arch::Architecture arch, TrainConfig config,
                       arch::ParamVector init)
    : arch_{arch}, config_{config}, params_{std::move(init)}, workspace_{arch},
      rate_{config.initial_rate} {
    config_.validate();
    if (params_.size() != arch_.param_count()) {
        throw std::invalid_argument("initial parameters have length " +
                                    std::to_string(params_.size()) +
                                    ", architecture expects " +
                                    std::to_string(arch_.param_count()));
    }
}

double TrainState::observe(const LabeledInput &sample, std::size_t sample_index) {
    const double before = loss(sample.label, workspace_(sample.input, params_),
                               config_.loss_clip_epsilon);
    const auto grad = finite_diff_gradient(
        arch_, sample.input, sample.label, params_,
        GradientOptions{config_.fd_step, config_.loss_clip_epsilon, config_.workers});
    params_ = step(params_, grad, rate_);

    trace_.loss.push_back(before);
    trace_.sample.push_back(sample_index);
    trace_.rate.push_back(rate_);
    if (config_.record_params) {
        trace_.params.emplace_back(params_.values().begin(), params_.values().end());
    }
    ++iteration_;
    update_schedule();
    return before;
}

void TrainState::update_schedule() {
    const std::size_t window = config_.decay_patience;
    if (iteration_ % window != 0) {
        return;
    }
    const auto last = trace_.loss.end();
    const double mean =
        std::accumulate(last - static_cast<std::ptrdiff_t>(window), last, 0.0) /
        static_cast<double>(window);
    if (have_previous_window_ && !(mean < previous_window_mean_)) {
        rate_ *= config_.decay_factor;
    }
    previous_window_mean_ = mean;
    have_previous_window_ = true;
}

TrainResult train_online(const arch::Architecture &arch,
                         std::span<const LabeledInput> train_set,
                         const TrainConfig &config, const arch::ParamVector &init) {
    if (train_set.empty()) {
        throw std::invalid_argument("training set is empty");
    }
    TrainState state{arch, config, init};
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        for (std::size_t i = 0; i < train_set.size(); ++i) {
            state.observe(train_set[i], i);
        }
    }
    return TrainResult{state.params(), state.take_trace()};
}

Evaluation evaluate(const arch::Architecture &arch, const arch::ParamVector &params,
                    std::span<const LabeledInput> dataset,
                    std::span<const double> thresholds, double clip_epsilon) {
    if (dataset.empty()) {
        throw std::invalid_argument("evaluation set is empty");
    }
    Evaluation ev;
    ev.loss.reserve(dataset.size());
    ev.prediction.reserve(dataset.size());
    ev.label.reserve(dataset.size());
    arch::ForwardWorkspace ws{arch};
    std::size_t correct = 0;
    for (const auto &s : dataset) {
        const double p = ws(s.input, params);
        ev.prediction.push_back(p);
        ev.label.push_back(s.label);
        ev.loss.push_back(loss(s.label, p, clip_epsilon));
        if ((p >= 0.5 ? 1 : 0) == (s.label != 0 ? 1 : 0)) {
            ++correct;
        }
    }
    const auto n = static_cast<double>(dataset.size());
    ev.average_loss = std::accumulate(ev.loss.begin(), ev.loss.end(), 0.0) / n;
    ev.accuracy = static_cast<double>(correct) / n;
    for (double t : thresholds) {
        const auto above = std::count_if(ev.loss.begin(), ev.loss.end(),
                                         [t](double l) { return l > t; });
        ev.above.push_back({t, static_cast<double>(above) / n});
    }
    return ev;
}

} // namespace qnn::train
