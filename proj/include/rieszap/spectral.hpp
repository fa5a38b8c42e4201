#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "rieszap/torus.hpp"

namespace rieszap {

// Strictly increasing, nonempty set of integer frequencies.
class FrequencySet {
public:
    // Sorts the input. Throws InvalidArgument on duplicates or an empty list.
    explicit FrequencySet(std::vector<std::int64_t> values);

    // {shift + step, shift + 2 step, ..., shift + length*step}
    static FrequencySet progression(std::int64_t shift, std::int64_t step, std::int64_t length);

    const std::vector<std::int64_t>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::int64_t operator[](std::size_t i) const { return values_[i]; }
    bool contains(std::int64_t v) const;
    bool disjoint_from(const FrequencySet& other) const;

    FrequencySet shifted(std::int64_t by) const;

    bool operator==(const FrequencySet&) const = default;

private:
    std::vector<std::int64_t> values_;
};

// Union of disjoint sets; throws OverlapError on a shared frequency.
FrequencySet merge_disjoint(const FrequencySet& a, const FrequencySet& b);

// G[j][k] = c(lambda_k - lambda_j), the Gram matrix of E(L) in L^2(S).
class GramMatrix {
public:
    GramMatrix(Eigen::MatrixXcd entries, double measure, FrequencySet freqs)
        : entries_(std::move(entries)), measure_(measure), freqs_(std::move(freqs)) {}

    std::size_t size() const noexcept { return freqs_.size(); }
    const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
    double measure() const noexcept { return measure_; }
    const FrequencySet& frequencies() const noexcept { return freqs_; }

private:
    Eigen::MatrixXcd entries_;
    double measure_;
    FrequencySet freqs_;
};

// Upper triangle evaluated in closed form, lower triangle mirrored.
// Throws DegenerateSet for a null set.
GramMatrix gram(const IntervalSet& set, const FrequencySet& freqs, unsigned threads = 1);

struct ExtremeEigs {
    double lambda_min = 0.0;
    double lambda_max = 0.0;
};

ExtremeEigs extreme_eigs(const GramMatrix& g);
ExtremeEigs extreme_eigs(const Eigen::MatrixXcd& hermitian);

// (c* G c) / (c* c). Throws DimensionMismatch or InvalidArgument for c = 0.
double rayleigh(const GramMatrix& g, std::span<const Complex> c);

// Numerical Riesz bounds of E(L) in L^2(S).
struct RieszReport {
    double lower = 0.0;           // lambda_min
    double upper = 0.0;           // lambda_max
    double cs_lower = 0.0;        // |S| - sqrt(offdiag_energy)
    double offdiag_energy = 0.0;  // sum over lambda != mu of |c(mu - lambda)|^2
    std::size_t size = 0;
};

RieszReport riesz_report(const IntervalSet& set, const FrequencySet& freqs, unsigned threads = 1);

double offdiag_energy(const IntervalSet& set, const FrequencySet& freqs);

// Cauchy-Schwarz lower bound |S| - sqrt(offdiag_energy). May be negative.
double cs_lower_bound(const IntervalSet& set, const FrequencySet& freqs);

// Frobenius norm of the cross block [c(mu - lambda)], lambda in a, mu in b.
// Upper bound for the operator norm, so
//   lambda_min(a u b) >= min(lambda_min(a), lambda_min(b)) - cross_block_bound.
double cross_block_bound(const IntervalSet& set, const FrequencySet& a, const FrequencySet& b);

// Uniform-vector Rayleigh quotient of gram(S, {shift + step, ..., shift + length*step}),
// evaluated through the Toeplitz structure in O(length) coefficient calls:
//   |S| + (2/length) * sum_{d=1}^{length-1} (length - d) Re c(d*step).
// An upper bound for lambda_min; independent of shift.
double uniform_rayleigh_progression(const IntervalSet& set, std::int64_t step, std::int64_t length,
                                    unsigned threads = 1);

// Energy of P_N = N^{-1/2} sum_{k=1}^N e^{2 pi i k x} outside the arc (-delta, delta).
double dirichlet_tail(std::int64_t n, double delta, unsigned threads = 1);

// (2 / (pi N)) cot(pi delta): integral of 1/(N sin^2(pi x)) over [delta, 1 - delta],
// which dominates dirichlet_tail since |P_N(x)|^2 <= 1/(N sin^2(pi x)).
double dirichlet_tail_bound(std::int64_t n, double delta);

}  // namespace rieszap
