#include <doctest.h>

#include <cmath>

#include "rssl/errors.hpp"
#include "rssl/synth.hpp"

using namespace rssl;

TEST_SUITE("synth") {

TEST_CASE("fixed seed reproduces the corpus bit for bit") {
    SynthSpec spec;
    spec.patch_size = 16;
    spec.seed = 42;
    const auto a = gen_corpus(spec, 20);
    const auto b = gen_corpus(spec, 20);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == b[i].x);
        CHECK(a[i].clean == b[i].clean);
        CHECK(a[i].gt_mask == b[i].gt_mask);
    }
}

TEST_CASE("no outliers means empty masks") {
    SynthSpec spec;
    spec.patch_size = 8;
    spec.outlier_prob = 0.0;
    for (const auto& s : gen_corpus(spec, 10))
        for (uint8_t m : s.gt_mask) CHECK(m == 0);
}

TEST_CASE("dc-only background with no noise is constant") {
    SynthSpec spec;
    spec.patch_size = 8;
    spec.bg_rank = 1;
    spec.outlier_prob = 0.0;
    spec.noise_sigma = 0.0;
    for (const auto& s : gen_corpus(spec, 5)) {
        for (double v : s.x) CHECK(v == s.x[0]);
        CHECK(s.x == s.clean);
    }
}

TEST_CASE("outputs stay inside [0,1]") {
    SynthSpec spec;
    spec.patch_size = 16;
    spec.outlier_prob = 0.5;
    spec.outlier_mag = 0.9;
    spec.noise_sigma = 0.1;
    for (const auto& s : gen_corpus(spec, 20))
        for (double v : s.x) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
}

TEST_CASE("planted outliers are column-contiguous runs") {
    SynthSpec spec;
    spec.patch_size = 16;
    spec.outlier_prob = 0.4;
    spec.seed = 9;
    size_t planted = 0;
    for (const auto& s : gen_corpus(spec, 30)) {
        const size_t p = spec.patch_size;
        for (size_t col = 0; col < p; ++col) {
            // collect rows flagged in this column; must be one contiguous run
            int first = -1, last = -1;
            size_t count = 0;
            for (size_t r = 0; r < p; ++r)
                if (s.gt_mask[r * p + col]) {
                    if (first < 0) first = static_cast<int>(r);
                    last = static_cast<int>(r);
                    ++count;
                }
            if (count > 0) {
                CHECK(static_cast<size_t>(last - first + 1) == count);
                planted += count;
            }
        }
    }
    CHECK(planted > 0);
}

TEST_CASE("parameter validation") {
    SynthSpec spec;
    spec.outlier_prob = 1.5;
    CHECK_THROWS_AS(gen_corpus(spec, 1), InvalidParameterError);
    spec = SynthSpec{};
    spec.outlier_mag = -0.1;
    CHECK_THROWS_AS(gen_corpus(spec, 1), InvalidParameterError);
    spec = SynthSpec{};
    spec.bg_rank = 0;
    CHECK_THROWS_AS(gen_corpus(spec, 1), InvalidParameterError);
}

} // TEST_SUITE
