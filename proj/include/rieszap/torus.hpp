#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rieszap {

using Complex = std::complex<double>;

/*
 * Finite unions of arcs on the circle, normalized to [0, 1) with total
 * measure 1. Frequencies pair with e^{2 pi i k x}.
 *
 * Arcs are half-open [start, end). An arc crossing the wrap point is stored
 * as two pieces, [start, 1) and [0, end), so set equality is arc equality.
 */

struct Arc {
    double start = 0.0;
    double end = 0.0;

    double length() const noexcept { return end - start; }
    bool operator==(const Arc&) const = default;
};

class IntervalSet {
public:
    IntervalSet() = default;  // empty set

    // Canonical union of raw (a, b) pairs. Coordinates are taken mod 1 and
    // the arc runs from a for length b - a (a negative length wraps, so
    // (0.9, 0.2) is the same as (0.9, 1.2)). Overlapping and adjacent arcs
    // merge. Throws EmptyInput for an empty list and InvalidArc for
    // zero-length or longer-than-1 pairs.
    static IntervalSet normalize(std::span<const std::pair<double, double>> raw);
    static IntervalSet full_circle();

    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    double measure() const noexcept { return measure_; }
    bool empty() const noexcept { return arcs_.empty(); }

    bool operator==(const IntervalSet& other) const { return arcs_ == other.arcs_; }

private:
    explicit IntervalSet(std::vector<Arc> canonical);

    std::vector<Arc> arcs_;
    double measure_ = 0.0;

    friend IntervalSet complement(const IntervalSet&);
    friend IntervalSet unite(std::span<const IntervalSet>);
};

IntervalSet complement(const IntervalSet& set);
IntervalSet unite(std::span<const IntervalSet> sets);

// Union of the l arcs of half-width delta/l centered at k/l, k = 0..l-1.
// Measure is 2*delta. Throws OverlapError unless delta < 1/(2l).
IntervalSet scale_periodize(double delta, std::int64_t ell);

// Half-open membership, x taken mod 1.
bool contains(const IntervalSet& set, double x);

// Closed-form coefficient  c(k) = integral over S of e^{-2 pi i k x} dx.
// c(-k) is computed as conj(c(k)), so conjugate symmetry is exact.
Complex fourier_coeff(const IntervalSet& set, std::int64_t k);

// Composite midpoint approximation of c(k), with ceil(length * points_per_unit)
// cells per arc. Error is O(points^-2). Requires
// points_per_unit >= 10|k| + 10 (ResolutionError otherwise).
Complex quadrature_coeff(const IntervalSet& set, std::int64_t k, std::int64_t points_per_unit);

// c(k) for |k| <= max_index. Only k >= 0 is stored.
class CoefficientTable {
public:
    CoefficientTable(std::int64_t max_index, std::vector<Complex> nonnegative);

    std::int64_t max_index() const noexcept { return max_index_; }
    bool covers(std::int64_t k) const noexcept;

    // Throws TableTooSmall when |k| > max_index.
    Complex operator()(std::int64_t k) const;
    // a(k) = |c(k)|^2
    double energy(std::int64_t k) const;

private:
    std::int64_t max_index_;
    std::vector<Complex> values_;
};

CoefficientTable fourier_table(const IntervalSet& set, std::int64_t max_index, unsigned threads = 1);

}  // namespace rieszap
