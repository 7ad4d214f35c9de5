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
 * Dataset ingestion and angle encoding.
 *
 * Tabular path: Wisconsin Diagnostic Breast Cancer CSV (id, diagnosis M/B,
 * 30 real features). Only the ten "mean" columns are kept, one per qubit.
 * Image path: grayscale PGM, 4x4 patches, 16 angles.
 */
#pragma once

#include "qnn/arch.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace qnn::data {

inline constexpr std::size_t kFeatureCount = 10;
inline constexpr std::size_t kWdbcColumns = 32;

/// Column names of the ten features, in order.
extern const std::array<std::string_view, kFeatureCount> kFeatureNames;

using Features = std::array<double, kFeatureCount>;

struct Sample {
    Features features{};
    int label{0}; ///< 0 benign, 1 malignant

    friend bool operator==(const Sample &, const Sample &) = default;
};

/// Thrown for unreadable or malformed dataset files.
class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::vector<Sample> load_wbc_csv(const std::filesystem::path &path);

/// Parses CSV text already in memory. `source` only labels error messages.
std::vector<Sample> parse_wbc_csv(std::string_view text,
                                  std::string_view source = "<memory>");

struct FeatureBounds {
    Features mins{};
    Features maxs{};
};

/// Per-feature min/max. Throws std::invalid_argument on empty input.
FeatureBounds compute_bounds(std::span<const Sample> samples);

/**
 * Maps feature i to pi * (x - min) / (max - min), clamped to [0, pi].
 * A constant feature (max == min) encodes to 0.
 */
arch::InputAngles encode(const Sample &sample, const FeatureBounds &bounds);
double encode_feature(double x, double lo, double hi);

struct Split {
    std::vector<Sample> train;
    std::vector<Sample> test;
};

/// First train_count samples train, the rest test. 0 < train_count <= size.
Split split(std::span<const Sample> samples, std::size_t train_count);

/// Same as split() after a seeded shuffle.
Split split_shuffled(std::span<const Sample> samples, std::size_t train_count,
                     std::uint64_t seed);

/// Grayscale image with intensities scaled to [0, 1], row-major.
struct GrayImage {
    std::size_t rows{0};
    std::size_t cols{0};
    std::vector<double> pixels;

    [[nodiscard]] double at(std::size_t r, std::size_t c) const {
        return pixels[r * cols + c];
    }
};

/// Reads plain (P2) or raw (P5) PGM, 8- or 16-bit; divides by maxval.
GrayImage load_pgm(const std::filesystem::path &path);

inline constexpr std::size_t kPatchSide = 4;
inline constexpr std::size_t kPatchPixels = kPatchSide * kPatchSide;

class GrayPatch {
  public:
    /// Throws std::invalid_argument if any pixel is outside [0, 1].
    explicit GrayPatch(const std::array<double, kPatchPixels> &pixels);

    [[nodiscard]] const std::array<double, kPatchPixels> &pixels() const {
        return pixels_;
    }

  private:
    std::array<double, kPatchPixels> pixels_;
};

/// 4x4 window with top-left corner (row, col). Throws std::out_of_range
/// when the window does not fit.
GrayPatch extract_patch(const GrayImage &image, std::size_t row, std::size_t col);

/// pi * pixel, row-major; 16 angles for a 16-qubit architecture.
arch::InputAngles patch_to_angles(const GrayPatch &patch);

} // namespace qnn::data
