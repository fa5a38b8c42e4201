#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "../support/oracles.hpp"
#include "rieszap/errors.hpp"
#include "rieszap/torus.hpp"

using namespace rieszap;

namespace {

IntervalSet make(std::vector<std::pair<double, double>> raw) { return IntervalSet::normalize(raw); }

IntervalSet from_raw(const oracle::RawArcs& raw) { return IntervalSet::normalize(raw); }

}  // namespace

TEST_CASE("normalize: single arc, wrap split, overlap merge") {
    const auto a = make({{0.0, 0.3}});
    REQUIRE(a.arcs().size() == 1);
    CHECK(a.measure() == doctest::Approx(0.3).epsilon(1e-15));

    const auto w = make({{0.9, 1.2}});
    REQUIRE(w.arcs().size() == 2);
    CHECK(w.arcs()[0].start == 0.0);
    CHECK(w.arcs()[0].end == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(w.arcs()[1].start == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(w.arcs()[1].end == 1.0);
    CHECK(w.measure() == doctest::Approx(0.3).epsilon(1e-12));

    const auto m = make({{0.0, 0.2}, {0.1, 0.3}});
    REQUIRE(m.arcs().size() == 1);
    CHECK(m.arcs()[0].end == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("normalize: adjacent arcs merge and a negative length wraps") {
    CHECK(make({{0.1, 0.2}, {0.2, 0.4}}).arcs().size() == 1);
    const auto neg = make({{0.9, 0.2}});
    const auto pos = make({{0.9, 1.2}});
    REQUIRE(neg.arcs().size() == pos.arcs().size());
    for (std::size_t i = 0; i < neg.arcs().size(); ++i) {
        CHECK(std::abs(neg.arcs()[i].start - pos.arcs()[i].start) < 1e-12);
        CHECK(std::abs(neg.arcs()[i].end - pos.arcs()[i].end) < 1e-12);
    }
}

TEST_CASE("normalize: rejects empty and degenerate input") {
    CHECK_THROWS_AS(make({}), EmptyInput);
    CHECK_THROWS_AS(make({{0.3, 0.3}}), InvalidArc);
    CHECK_THROWS_AS(make({{0.0, 1.5}}), InvalidArc);
    CHECK(make({{0.0, 1.0}}) == IntervalSet::full_circle());
}

TEST_CASE("complement") {
    const auto c = complement(make({{0.0, 0.3}}));
    REQUIRE(c.arcs().size() == 1);
    CHECK(c.arcs()[0].start == doctest::Approx(0.3));
    CHECK(c.measure() == doctest::Approx(0.7).epsilon(1e-15));

    CHECK(complement(IntervalSet::full_circle()).empty());
    CHECK(complement(IntervalSet::full_circle()).measure() == 0.0);
    CHECK(complement(IntervalSet{}) == IntervalSet::full_circle());

    const auto two = complement(make({{0.1, 0.2}, {0.5, 0.6}}));
    CHECK(two.measure() == doctest::Approx(0.8).epsilon(1e-15));
    // (0.2, 0.5) and the wrapped (0.6, 1.1), stored split at 0
    CHECK(two.arcs().size() == 3);
}

TEST_CASE("scale_periodize") {
    const auto one = scale_periodize(0.1, 1);
    CHECK(one.measure() == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(contains(one, 0.0));
    CHECK(contains(one, 0.95));
    CHECK_FALSE(contains(one, 0.5));

    const auto four = scale_periodize(0.05, 4);
    CHECK(four.measure() == doctest::Approx(0.1).epsilon(1e-12));
    for (double c : {0.0, 0.25, 0.5, 0.75}) CHECK(contains(four, c));
    CHECK(contains(four, 0.25 + 0.0124));
    CHECK_FALSE(contains(four, 0.25 + 0.0126));

    CHECK_THROWS_AS(scale_periodize(0.3, 2), OverlapError);

    for (std::int64_t ell = 1; ell <= 50; ++ell) {
        const double delta = 0.37 / static_cast<double>(ell);
        CHECK(std::abs(scale_periodize(delta, ell).measure() - 2 * delta) < 1e-12);
    }
}

TEST_CASE("contains: half-open") {
    const auto s = make({{0.0, 0.3}});
    CHECK(contains(s, 0.1));
    CHECK_FALSE(contains(s, 0.3));
    CHECK(contains(s, 0.0));
    CHECK(contains(make({{0.9, 1.2}}), 0.95));
    CHECK(contains(make({{0.9, 1.2}}), 1.1));
}

TEST_CASE("fourier_coeff: analytic values") {
    const auto full = IntervalSet::full_circle();
    CHECK(std::abs(fourier_coeff(full, 3)) < 1e-15);
    CHECK(fourier_coeff(full, 0) == Complex(1.0, 0.0));

    const auto half = make({{0.0, 0.5}});
    const Complex c1 = fourier_coeff(half, 1);
    CHECK(std::abs(c1 - Complex(0.0, -1.0 / std::numbers::pi)) < 1e-15);
    CHECK(std::arg(c1) == doctest::Approx(-std::numbers::pi / 2));
    CHECK(std::abs(fourier_coeff(half, 2)) < 1e-15);

    // the same values from the independent quadrature oracle, 10^5 cells
    const auto q = oracle::midpoint_coeffs({{0.0, 0.5}}, 2, 100000);
    CHECK(std::abs(q[1] - c1) < 1e-8);
    CHECK(std::abs(q[2]) < 1e-8);
}

TEST_CASE("fourier_coeff: conjugate symmetry is exact") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto s = from_raw(oracle::random_arcs(rng, 4));
        for (std::int64_t k = 1; k <= 40; ++k) {
            const Complex p = fourier_coeff(s, k), m = fourier_coeff(s, -k);
            CHECK(m.real() == p.real());
            CHECK(m.imag() == -p.imag());
        }
    }
}

TEST_CASE("fourier_coeff: complement relation") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
        const auto s = from_raw(oracle::random_arcs(rng, 3));
        const auto c = complement(s);
        for (std::int64_t k = -20; k <= 20; ++k) {
            const Complex expect = (k == 0 ? 1.0 : 0.0) - fourier_coeff(s, k);
            CHECK(std::abs(fourier_coeff(c, k) - expect) < 1e-12);
        }
    }
}

TEST_CASE("fourier_coeff: matches the hand-written closed form") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        const auto raw = oracle::random_arcs(rng, 3);
        const auto s = from_raw(raw);
        for (std::int64_t k = -64; k <= 64; ++k) {
            CHECK(std::abs(fourier_coeff(s, k) - oracle::set_coeff(raw, k)) < 1e-12);
        }
    }
}

TEST_CASE("Bessel inequality, nondecreasing partial sums") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 10; ++t) {
        const auto s = from_raw(oracle::random_arcs(rng, 3));
        double sum = std::norm(fourier_coeff(s, 0));
        for (std::int64_t k = 1; k <= 500; ++k) {
            const double next = sum + 2 * std::norm(fourier_coeff(s, k));
            CHECK(next >= sum);
            sum = next;
            CHECK(sum <= s.measure() + 1e-9);
        }
    }
}

TEST_CASE("quadrature_coeff") {
    const auto half = make({{0.0, 0.5}});
    CHECK(std::abs(quadrature_coeff(half, 1, 100000) - fourier_coeff(half, 1)) < 1e-8);
    CHECK(std::abs(quadrature_coeff(half, 0, 100000) - 0.5) < 1e-12);
    const auto full = IntervalSet::full_circle();
    for (std::int64_t k : {1, 5, 64}) CHECK(std::abs(quadrature_coeff(full, k, 100000)) < 1e-10);
    CHECK_THROWS_AS(quadrature_coeff(half, 64, 100), ResolutionError);

    std::mt19937_64 rng(15);
    for (int t = 0; t < 5; ++t) {
        const auto s = from_raw(oracle::random_arcs(rng, 3));
        for (std::int64_t k : {-64, -7, 1, 33, 64}) {
            CHECK(std::abs(quadrature_coeff(s, k, 100000) - fourier_coeff(s, k)) < 1e-8);
        }
    }
}

TEST_CASE("CoefficientTable") {
    const auto full = fourier_table(IntervalSet::full_circle(), 4);
    CHECK(full(0) == Complex(1.0));
    for (int k = 1; k <= 4; ++k) CHECK(std::abs(full(k)) < 1e-15);

    const auto half = fourier_table(make({{0.0, 0.5}}), 2);
    CHECK(half(0).real() == doctest::Approx(0.5));
    CHECK(std::abs(half(1)) == doctest::Approx(1.0 / std::numbers::pi));
    CHECK(std::abs(half(-1)) == doctest::Approx(1.0 / std::numbers::pi));
    CHECK(std::abs(half(2)) < 1e-15);
    CHECK(half.covers(-2));
    CHECK_FALSE(half.covers(3));
    CHECK_THROWS_AS(half(3), TableTooSmall);

    const auto s = make({{0.1, 0.35}, {0.6, 0.7}});
    const auto zero = fourier_table(s, 0);
    CHECK(zero(0).real() == doctest::Approx(s.measure()));

    // threads do not change values
    const auto t1 = fourier_table(s, 300, 1);
    const auto t4 = fourier_table(s, 300, 4);
    for (int k = -300; k <= 300; ++k) CHECK(t1(k) == t4(k));
    CHECK(t1.energy(7) == doctest::Approx(std::norm(fourier_coeff(s, 7))));
}

TEST_CASE("unite") {
    std::vector<IntervalSet> parts{make({{0.0, 0.1}}), make({{0.05, 0.2}}), make({{0.5, 0.6}})};
    const auto u = unite(parts);
    CHECK(u.arcs().size() == 2);
    CHECK(u.measure() == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(unite(std::vector<IntervalSet>{}).empty());
}
