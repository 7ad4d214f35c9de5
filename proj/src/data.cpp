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
#include "qnn/data.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

namespace qnn::data {

const std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "radius_mean",      "texture_mean",        "perimeter_mean",
    "area_mean",        "smoothness_mean",     "compactness_mean",
    "concavity_mean",   "concave_points_mean", "symmetry_mean",
    "fractal_dimension_mean"};

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

bool parse_double(std::string_view field, double &out) {
    if (field.empty()) {
        return false;
    }
    if (field.front() == '+') {
        field.remove_prefix(1);
    }
    const auto *end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

} // namespace

std::vector<Sample> parse_wbc_csv(std::string_view text, std::string_view source) {
    std::vector<Sample> samples;
    std::size_t line_no = 0;
    bool first_content_line = true;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        const std::string_view line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (first_content_line) {
            first_content_line = false;
            double ignored = 0.0;
            if (!parse_double(fields.front(), ignored)) {
                continue; // header row
            }
        }
        const auto where = std::string{source} + ": row " + std::to_string(line_no);
        if (fields.size() != kWdbcColumns) {
            throw DataError(where + ": expected " + std::to_string(kWdbcColumns) +
                            " columns, found " + std::to_string(fields.size()));
        }
        Sample s;
        if (fields[1] == "M") {
            s.label = 1;
        } else if (fields[1] == "B") {
            s.label = 0;
        } else {
            throw DataError(where + ": unknown diagnosis code '" +
                            std::string{fields[1]} + "'");
        }
        for (std::size_t i = 0; i < kFeatureCount; ++i) {
            if (!parse_double(fields[2 + i], s.features[i]) ||
                !std::isfinite(s.features[i])) {
                throw DataError(where + ": non-numeric value '" +
                                std::string{fields[2 + i]} + "' in column " +
                                std::to_string(2 + i));
            }
        }
        // Remaining feature columns are validated but not kept.
        for (std::size_t c = 2 + kFeatureCount; c < kWdbcColumns; ++c) {
            double ignored = 0.0;
            if (!parse_double(fields[c], ignored)) {
                throw DataError(where + ": non-numeric value '" +
                                std::string{fields[c]} + "' in column " +
                                std::to_string(c));
            }
        }
        samples.push_back(s);
    }
    if (samples.empty()) {
        throw DataError(std::string{source} + ": no samples");
    }
    return samples;
}

std::vector<Sample> load_wbc_csv(const std::filesystem::path &path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) {
        throw DataError("cannot open dataset '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_wbc_csv(buf.str(), path.string());
}

FeatureBounds compute_bounds(std::span<const Sample> samples) {
    if (samples.empty()) {
        throw std::invalid_argument("cannot compute bounds of an empty sample set");
    }
    FeatureBounds b{samples.front().features, samples.front().features};
    for (const auto &s : samples.subspan(1)) {
        for (std::size_t i = 0; i < kFeatureCount; ++i) {
            b.mins[i] = std::min(b.mins[i], s.features[i]);
            b.maxs[i] = std::max(b.maxs[i], s.features[i]);
        }
    }
    return b;
}

double encode_feature(double x, double lo, double hi) {
    if (!(hi > lo)) {
        return 0.0;
    }
    const double angle = std::numbers::pi * ((x - lo) / (hi - lo));
    if (!(angle > 0.0)) {
        return 0.0; // also maps NaN to 0
    }
    return std::min(angle, std::numbers::pi);
}

arch::InputAngles encode(const Sample &sample, const FeatureBounds &bounds) {
    std::vector<double> angles(kFeatureCount);
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
        angles[i] = encode_feature(sample.features[i], bounds.mins[i], bounds.maxs[i]);
    }
    return arch::InputAngles{std::move(angles)};
}

Split split(std::span<const Sample> samples, std::size_t train_count) {
    if (train_count == 0 || train_count > samples.size()) {
        throw std::out_of_range("train count " + std::to_string(train_count) +
                                " outside 1.." + std::to_string(samples.size()));
    }
    return Split{{samples.begin(), samples.begin() + train_count},
                 {samples.begin() + train_count, samples.end()}};
}

Split split_shuffled(std::span<const Sample> samples, std::size_t train_count,
                     std::uint64_t seed) {
    std::vector<Sample> shuffled{samples.begin(), samples.end()};
    std::mt19937_64 rng{seed};
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    return split(shuffled, train_count);
}

namespace {

// Next whitespace-delimited header token, skipping '#' comments.
std::string next_pgm_token(std::istream &in) {
    std::string tok;
    char ch = 0;
    while (in.get(ch)) {
        if (ch == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch)) != 0) {
            if (!tok.empty()) {
                break;
            }
            continue;
        }
        tok.push_back(ch);
    }
    return tok;
}

std::size_t parse_pgm_uint(const std::string &tok, const std::string &what,
                           const std::filesystem::path &path) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw DataError(path.string() + ": bad PGM " + what + " '" + tok + "'");
    }
    return v;
}

} // namespace

GrayImage load_pgm(const std::filesystem::path &path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) {
        throw DataError("cannot open image '" + path.string() + "'");
    }
    const std::string magic = next_pgm_token(in);
    if (magic != "P2" && magic != "P5") {
        throw DataError(path.string() + ": not a PGM file (magic '" + magic + "')");
    }
    GrayImage img;
    img.cols = parse_pgm_uint(next_pgm_token(in), "width", path);
    img.rows = parse_pgm_uint(next_pgm_token(in), "height", path);
    const std::size_t maxval = parse_pgm_uint(next_pgm_token(in), "maxval", path);
    if (img.rows == 0 || img.cols == 0 || maxval == 0 || maxval > 65535) {
        throw DataError(path.string() + ": invalid PGM dimensions or maxval");
    }
    const std::size_t count = img.rows * img.cols;
    img.pixels.resize(count);
    const auto scale = static_cast<double>(maxval);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t raw = 0;
        if (magic == "P2") {
            raw = parse_pgm_uint(next_pgm_token(in), "pixel", path);
        } else if (maxval < 256) {
            const int b = in.get();
            if (b == EOF) {
                throw DataError(path.string() + ": truncated PGM data");
            }
            raw = static_cast<std::size_t>(b);
        } else {
            const int hi = in.get();
            const int lo = in.get();
            if (hi == EOF || lo == EOF) {
                throw DataError(path.string() + ": truncated PGM data");
            }
            raw = (static_cast<std::size_t>(hi) << 8) | static_cast<std::size_t>(lo);
        }
        if (raw > maxval) {
            throw DataError(path.string() + ": pixel value exceeds maxval");
        }
        img.pixels[i] = static_cast<double>(raw) / scale;
    }
    return img;
}

GrayPatch::GrayPatch(const std::array<double, kPatchPixels> &pixels)
    : pixels_{pixels} {
    for (double p : pixels_) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("patch pixel outside [0, 1]");
        }
    }
}

GrayPatch extract_patch(const GrayImage &image, std::size_t row, std::size_t col) {
    if (row + kPatchSide > image.rows || col + kPatchSide > image.cols) {
        throw std::out_of_range("4x4 patch at (" + std::to_string(row) + ", " +
                                std::to_string(col) + ") does not fit in " +
                                std::to_string(image.rows) + "x" +
                                std::to_string(image.cols) + " image");
    }
    std::array<double, kPatchPixels> px{};
    for (std::size_t r = 0; r < kPatchSide; ++r) {
        for (std::size_t c = 0; c < kPatchSide; ++c) {
            px[r * kPatchSide + c] = image.at(row + r, col + c);
        }
    }
    return GrayPatch{px};
}

arch::InputAngles patch_to_angles(const GrayPatch &patch) {
    std::vector<double> angles(kPatchPixels);
    std::transform(patch.pixels().begin(), patch.pixels().end(), angles.begin(),
                   [](double p) { return std::min(std::numbers::pi * p, std::numbers::pi); });
    return arch::InputAngles{std::move(angles)};
}

} // namespace qnn::data
