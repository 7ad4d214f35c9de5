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
#include "support/helpers.hpp"

#include <catch2/catch.hpp>

#include <fstream>
#include <numbers>

using namespace qnn;
using data::Sample;
using Catch::Matchers::Contains;

namespace {
constexpr double pi = std::numbers::pi;

std::string wdbc_row(int id, const char *diagnosis, double base) {
    std::string row = std::to_string(id) + "," + diagnosis;
    for (int c = 0; c < 30; ++c) {
        row += "," + std::to_string(base + c);
    }
    return row;
}

Sample make_sample(double fill, int label) {
    Sample s;
    s.features.fill(fill);
    s.label = label;
    return s;
}

std::vector<Sample> numbered(std::size_t n) {
    std::vector<Sample> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(make_sample(static_cast<double>(i), static_cast<int>(i % 2)));
    }
    return out;
}

void write_file(const std::filesystem::path &p, const std::string &contents) {
    std::ofstream out{p, std::ios::binary};
    out << contents;
}
} // namespace

TEST_CASE("parse WDBC rows", "[data]") {
    const std::string text = wdbc_row(842302, "M", 1.0) + "\n" + wdbc_row(7, "B", 2.5) + "\n";
    const auto samples = data::parse_wbc_csv(text);
    REQUIRE(samples.size() == 2);
    CHECK(samples[0].label == 1);
    CHECK(samples[1].label == 0);
    CHECK(samples[0].features[0] == 1.0);
    CHECK(samples[0].features[9] == 10.0);
    CHECK(samples[1].features[3] == 5.5);
}

TEST_CASE("header line is detected by a non-numeric first field", "[data]") {
    std::string header = "id,diagnosis";
    for (int c = 0; c < 30; ++c) header += ",f" + std::to_string(c);
    const auto samples =
        data::parse_wbc_csv(header + "\r\n" + wdbc_row(1, "B", 0.0) + "\r\n");
    REQUIRE(samples.size() == 1);
    CHECK(samples[0].label == 0);
}

TEST_CASE("malformed WDBC input is rejected", "[data]") {
    const std::string good = wdbc_row(1, "B", 0.0);
    CHECK_THROWS_AS(data::parse_wbc_csv(""), data::DataError);
    CHECK_THROWS_AS(data::parse_wbc_csv("\n\n"), data::DataError);
    CHECK_THROWS_WITH(data::parse_wbc_csv(good + "\n1,B,2,3\n"), Contains("row 2"));
    CHECK_THROWS_WITH(data::parse_wbc_csv(good + "\n" + wdbc_row(2, "X", 0.0)),
                      Contains("unknown diagnosis"));
    std::string bad = good;
    bad.replace(bad.find(",0.000000"), 9, ",abc");
    CHECK_THROWS_WITH(data::parse_wbc_csv(good + "\n" + bad), Contains("non-numeric"));
    CHECK_THROWS_AS(data::load_wbc_csv("/nonexistent/wdbc.data"), data::DataError);
}

TEST_CASE("published WDBC file", "[data][wdbc]") {
    const auto samples = data::load_wbc_csv(testing::wdbc_path());
    REQUIRE(samples.size() == 569);
    const auto malignant = std::count_if(samples.begin(), samples.end(),
                                         [](const Sample &s) { return s.label == 1; });
    CHECK(malignant == 212);
    CHECK(samples.size() - static_cast<std::size_t>(malignant) == 357);
    CHECK(samples.front().label == 1); // first row is "M"

    const auto b = data::compute_bounds(samples);
    CHECK(b.mins[0] == 6.981);
    CHECK(b.maxs[0] == 28.11);

    CHECK(data::load_wbc_csv(testing::wdbc_path()) == samples);
}

TEST_CASE("compute_bounds", "[data]") {
    const std::vector<Sample> two{make_sample(0.0, 0), make_sample(1.0, 1)};
    const auto b = data::compute_bounds(two);
    CHECK(b.mins[0] == 0.0);
    CHECK(b.maxs[0] == 1.0);

    const std::vector<Sample> single{make_sample(4.2, 0)};
    const auto s = data::compute_bounds(single);
    CHECK(s.mins == single[0].features);
    CHECK(s.maxs == single[0].features);

    CHECK_THROWS_AS(data::compute_bounds({}), std::invalid_argument);
}

TEST_CASE("encode maps min to 0 and max to pi", "[data]") {
    data::FeatureBounds b;
    b.mins.fill(2.0);
    b.maxs.fill(6.0);
    b.maxs[9] = 2.0; // constant feature

    Sample s;
    s.features = {2.0, 6.0, 4.0, -10.0, 100.0, 3.0, 5.0, 2.0, 6.0, 2.0};
    const auto a = data::encode(s, b);
    CHECK(a[0] == 0.0);
    CHECK(a[1] == pi);
    CHECK(a[2] == pi / 2);
    CHECK(a[3] == 0.0); // clamped
    CHECK(a[4] == pi);  // clamped
    CHECK(a[9] == 0.0); // degenerate
    CHECK_THAT(a[5], Catch::Matchers::WithinAbs(pi / 4, 1e-15));

    // Encoding alone on a midpoint feature is an equal superposition.
    auto state = qsim::new_zero_state(1);
    state.apply(qsim::Gate::ry(0, a[2]));
    CHECK_THAT(state.prob_one(0), Catch::Matchers::WithinAbs(0.5, 1e-12));
}

TEST_CASE("encoding is monotone and always in range", "[data][property]") {
    std::mt19937_64 rng{4};
    std::uniform_real_distribution<double> wide{-1e3, 1e3};
    for (int trial = 0; trial < 500; ++trial) {
        double lo = wide(rng);
        double hi = wide(rng);
        if (lo > hi) std::swap(lo, hi);
        double x = wide(rng);
        double y = wide(rng);
        if (x > y) std::swap(x, y);
        const double ax = data::encode_feature(x, lo, hi);
        const double ay = data::encode_feature(y, lo, hi);
        CHECK(ax <= ay);
        CHECK(ax >= 0.0);
        CHECK(ay <= pi);
    }
    CHECK(data::encode_feature(std::nan(""), 0.0, 1.0) == 0.0);
}

TEST_CASE("interval endpoints encode exactly", "[data][property]") {
    std::mt19937_64 rng{5};
    std::uniform_real_distribution<double> wide{-1e4, 1e4};
    for (int trial = 0; trial < 2000; ++trial) {
        double lo = wide(rng);
        double hi = wide(rng);
        if (lo == hi) continue;
        if (lo > hi) std::swap(lo, hi);
        CHECK(data::encode_feature(lo, lo, hi) == 0.0);
        CHECK(data::encode_feature(hi, lo, hi) == pi);
    }
}

TEST_CASE("split keeps file order", "[data]") {
    const auto six_hundred = numbered(600);
    const auto all = data::split(six_hundred, 600);
    CHECK(all.train.size() == 600);
    CHECK(all.test.empty());

    const auto wdbc_like = numbered(569);
    const auto hundred = data::split(wdbc_like, 100);
    CHECK(hundred.train.size() == 100);
    CHECK(hundred.test.size() == 469);
    CHECK(hundred.train.back().features[0] == 99.0);
    CHECK(hundred.test.front().features[0] == 100.0);

    const auto one = data::split(wdbc_like, 1);
    CHECK(one.train.size() == 1);
    CHECK(one.test.size() == 568);

    CHECK_THROWS_AS(data::split(wdbc_like, 0), std::out_of_range);
    CHECK_THROWS_AS(data::split(wdbc_like, 570), std::out_of_range);
}

TEST_CASE("shuffled split is a seeded permutation", "[data]") {
    const auto samples = numbered(50);
    const auto a = data::split_shuffled(samples, 20, 9);
    const auto b = data::split_shuffled(samples, 20, 9);
    CHECK(a.train == b.train);
    CHECK(a.test == b.test);
    std::vector<double> seen;
    for (const auto &s : a.train) seen.push_back(s.features[0]);
    for (const auto &s : a.test) seen.push_back(s.features[0]);
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i) {
        CHECK(seen[i] == static_cast<double>(i));
    }
    CHECK(a.train != data::split(samples, 20).train);
}

TEST_CASE("patch extraction", "[data][image]") {
    data::GrayImage tiny{4, 4, std::vector<double>(16)};
    for (std::size_t i = 0; i < 16; ++i) tiny.pixels[i] = static_cast<double>(i) / 15.0;
    const auto whole = data::extract_patch(tiny, 0, 0);
    for (std::size_t i = 0; i < 16; ++i) CHECK(whole.pixels()[i] == tiny.pixels[i]);

    data::GrayImage blank{6, 7, std::vector<double>(42, 0.0)};
    const auto zero_angles = data::patch_to_angles(data::extract_patch(blank, 1, 2));
    for (double a : zero_angles.angles()) CHECK(a == 0.0);

    data::GrayImage gradient{8, 8, std::vector<double>(64)};
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c)
            gradient.pixels[r * 8 + c] = static_cast<double>(8 * r + c) / 63.0;
    const auto p = data::extract_patch(gradient, 2, 2);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            CHECK(p.pixels()[r * 4 + c] == gradient.at(r + 2, c + 2));
    CHECK(p.pixels()[0] == 18.0 / 63.0);
    CHECK(p.pixels()[15] == 45.0 / 63.0);

    CHECK_THROWS_AS(data::extract_patch(gradient, 5, 0), std::out_of_range);
    CHECK_THROWS_AS(data::extract_patch(gradient, 0, 5), std::out_of_range);
    CHECK_NOTHROW(data::extract_patch(gradient, 4, 4));
}

TEST_CASE("patch pixels map linearly to angles", "[data][image]") {
    std::array<double, 16> ones{};
    ones.fill(1.0);
    const auto full = data::patch_to_angles(data::GrayPatch{ones});
    for (double a : full.angles()) CHECK(a == pi);

    std::array<double, 16> halves{};
    halves.fill(0.5);
    const auto half = data::patch_to_angles(data::GrayPatch{halves});
    for (double a : half.angles()) CHECK(a == pi / 2);

    std::array<double, 16> bad{};
    bad[3] = 1.5;
    CHECK_THROWS_AS(data::GrayPatch{bad}, std::invalid_argument);
}

TEST_CASE("PGM loading", "[data][image]") {
    const auto dir = testing::scratch_dir("pgm");

    SECTION("plain P2 with comments") {
        write_file(dir / "a.pgm", "P2\n# a comment\n3 2\n4\n0 1 2\n3 4 0\n");
        const auto img = data::load_pgm(dir / "a.pgm");
        CHECK(img.rows == 2);
        CHECK(img.cols == 3);
        CHECK(img.at(0, 1) == 0.25);
        CHECK(img.at(1, 1) == 1.0);
    }
    SECTION("raw 8-bit P5") {
        std::string bytes = "P5\n2 2\n255\n";
        bytes += std::string{'\x00', '\xff', '\x33', '\x66'};
        write_file(dir / "b.pgm", bytes);
        const auto img = data::load_pgm(dir / "b.pgm");
        CHECK(img.at(0, 0) == 0.0);
        CHECK(img.at(0, 1) == 1.0);
        CHECK(img.at(1, 0) == 51.0 / 255.0);
    }
    SECTION("raw 16-bit P5 is big-endian") {
        std::string bytes = "P5 1 2 65535\n";
        bytes += std::string{'\x80', '\x00', '\xff', '\xff'};
        write_file(dir / "c.pgm", bytes);
        const auto img = data::load_pgm(dir / "c.pgm");
        CHECK(img.at(0, 0) == 32768.0 / 65535.0);
        CHECK(img.at(1, 0) == 1.0);
    }
    SECTION("errors") {
        write_file(dir / "d.pgm", "P6\n1 1\n255\n\x01");
        CHECK_THROWS_AS(data::load_pgm(dir / "d.pgm"), data::DataError);
        write_file(dir / "e.pgm", "P5\n4 4\n255\nab");
        CHECK_THROWS_WITH(data::load_pgm(dir / "e.pgm"), Contains("truncated"));
        write_file(dir / "f.pgm", "P2\n1 1\n10\n11\n");
        CHECK_THROWS_AS(data::load_pgm(dir / "f.pgm"), data::DataError);
        CHECK_THROWS_AS(data::load_pgm(dir / "missing.pgm"), data::DataError);
    }
}
