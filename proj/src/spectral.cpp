#include "rieszap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "rieszap/errors.hpp"
#include "rieszap/parallel.hpp"

namespace rieszap {

FrequencySet::FrequencySet(std::vector<std::int64_t> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvalidArgument("frequency set must be nonempty");
    std::sort(values_.begin(), values_.end());
    const auto dup = std::adjacent_find(values_.begin(), values_.end());
    if (dup != values_.end()) {
        throw InvalidArgument("frequency set has duplicate value " + std::to_string(*dup));
    }
}

FrequencySet FrequencySet::progression(std::int64_t shift, std::int64_t step, std::int64_t length) {
    if (step < 1) throw InvalidArgument("progression step must be positive");
    if (length < 1) throw InvalidArgument("progression length must be positive");
    std::vector<std::int64_t> v(static_cast<std::size_t>(length));
    for (std::int64_t k = 1; k <= length; ++k) v[static_cast<std::size_t>(k - 1)] = shift + k * step;
    return FrequencySet(std::move(v));
}

bool FrequencySet::contains(std::int64_t v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

bool FrequencySet::disjoint_from(const FrequencySet& other) const {
    auto a = values_.begin();
    auto b = other.values_.begin();
    while (a != values_.end() && b != other.values_.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a; else ++b;
    }
    return true;
}

FrequencySet FrequencySet::shifted(std::int64_t by) const {
    std::vector<std::int64_t> v = values_;
    for (auto& x : v) x += by;
    return FrequencySet(std::move(v));
}

FrequencySet merge_disjoint(const FrequencySet& a, const FrequencySet& b) {
    if (!a.disjoint_from(b)) throw OverlapError("frequency sets overlap");
    std::vector<std::int64_t> v;
    v.reserve(a.size() + b.size());
    std::merge(a.values().begin(), a.values().end(), b.values().begin(), b.values().end(),
               std::back_inserter(v));
    return FrequencySet(std::move(v));
}

GramMatrix gram(const IntervalSet& set, const FrequencySet& freqs, unsigned threads) {
    if (!(set.measure() > 0.0)) throw DegenerateSet("gram: set has measure 0");
    const std::size_t m = freqs.size();
    Eigen::MatrixXcd g(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    const auto& f = freqs.values();
    parallel_for(m, threads, [&](std::size_t j) {
        const auto jj = static_cast<Eigen::Index>(j);
        g(jj, jj) = Complex{set.measure(), 0.0};
        for (std::size_t k = j + 1; k < m; ++k) {
            g(jj, static_cast<Eigen::Index>(k)) = fourier_coeff(set, f[k] - f[j]);
        }
    });
    for (Eigen::Index j = 0; j < g.rows(); ++j) {
        for (Eigen::Index k = j + 1; k < g.cols(); ++k) g(k, j) = std::conj(g(j, k));
    }
    return GramMatrix(std::move(g), set.measure(), freqs);
}

ExtremeEigs extreme_eigs(const Eigen::MatrixXcd& hermitian) {
    if (hermitian.rows() != hermitian.cols() || hermitian.rows() == 0) {
        throw DimensionMismatch("extreme_eigs: matrix must be square and nonempty");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("extreme_eigs: Hermitian QR iteration did not converge for a " +
                               std::to_string(hermitian.rows()) + "x" +
                               std::to_string(hermitian.cols()) + " matrix");
    }
    const auto& ev = solver.eigenvalues();
    return {ev(0), ev(ev.size() - 1)};
}

ExtremeEigs extreme_eigs(const GramMatrix& g) { return extreme_eigs(g.entries()); }

double rayleigh(const GramMatrix& g, std::span<const Complex> c) {
    if (c.size() != g.size()) {
        throw DimensionMismatch("rayleigh: vector has " + std::to_string(c.size()) +
                                " entries, matrix is " + std::to_string(g.size()));
    }
    const Eigen::Map<const Eigen::VectorXcd> v(c.data(), static_cast<Eigen::Index>(c.size()));
    const double norm2 = v.squaredNorm();
    if (!(norm2 > 0.0)) throw InvalidArgument("rayleigh: zero vector");
    const Complex num = v.dot(g.entries() * v);  // dot conjugates the left operand
    return num.real() / norm2;
}

double offdiag_energy(const IntervalSet& set, const FrequencySet& freqs) {
    const auto& f = freqs.values();
    double sum = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        for (std::size_t k = j + 1; k < f.size(); ++k) sum += std::norm(fourier_coeff(set, f[k] - f[j]));
    }
    return 2.0 * sum;
}

double cs_lower_bound(const IntervalSet& set, const FrequencySet& freqs) {
    if (!(set.measure() > 0.0)) throw DegenerateSet("cs_lower_bound: set has measure 0");
    return set.measure() - std::sqrt(offdiag_energy(set, freqs));
}

RieszReport riesz_report(const IntervalSet& set, const FrequencySet& freqs, unsigned threads) {
    const GramMatrix g = gram(set, freqs, threads);
    const ExtremeEigs eigs = extreme_eigs(g);
    const auto& e = g.entries();
    double energy = 0.0;
    for (Eigen::Index j = 0; j < e.rows(); ++j) {
        for (Eigen::Index k = j + 1; k < e.cols(); ++k) energy += std::norm(e(j, k));
    }
    energy *= 2.0;
    RieszReport r;
    r.lower = eigs.lambda_min;
    r.upper = eigs.lambda_max;
    r.offdiag_energy = energy;
    r.cs_lower = set.measure() - std::sqrt(energy);
    r.size = freqs.size();
    return r;
}

double cross_block_bound(const IntervalSet& set, const FrequencySet& a, const FrequencySet& b) {
    if (!a.disjoint_from(b)) throw OverlapError("cross_block_bound: frequency sets overlap");
    double sum = 0.0;
    for (std::int64_t lambda : a.values()) {
        for (std::int64_t mu : b.values()) sum += std::norm(fourier_coeff(set, mu - lambda));
    }
    return std::sqrt(sum);
}

double uniform_rayleigh_progression(const IntervalSet& set, std::int64_t step, std::int64_t length,
                                    unsigned threads) {
    if (!(set.measure() > 0.0)) throw DegenerateSet("uniform_rayleigh: set has measure 0");
    if (step < 1 || length < 1) throw InvalidArgument("uniform_rayleigh: step and length must be positive");
    const auto lags = static_cast<std::size_t>(length - 1);
    std::vector<double> re(lags);
    parallel_for(lags, threads, [&](std::size_t i) {
        const auto d = static_cast<std::int64_t>(i) + 1;
        re[i] = fourier_coeff(set, d * step).real();
    });
    double sum = 0.0;
    for (std::size_t i = 0; i < lags; ++i) {
        sum += static_cast<double>(length - static_cast<std::int64_t>(i) - 1) * re[i];
    }
    return set.measure() + 2.0 * sum / static_cast<double>(length);
}

double dirichlet_tail(std::int64_t n, double delta, unsigned threads) {
    if (n < 1) throw InvalidArgument("dirichlet_tail: N must be positive");
    if (!(delta > 0.0 && delta < 0.5)) throw InvalidArgument("dirichlet_tail: delta must lie in (0, 1/2)");
    const std::pair<double, double> base[] = {{-delta, delta}};
    const IntervalSet outside = complement(IntervalSet::normalize(base));
    return uniform_rayleigh_progression(outside, 1, n, threads);
}

double dirichlet_tail_bound(std::int64_t n, double delta) {
    if (n < 1) throw InvalidArgument("dirichlet_tail_bound: N must be positive");
    if (!(delta > 0.0 && delta < 0.5)) {
        throw InvalidArgument("dirichlet_tail_bound: delta must lie in (0, 1/2)");
    }
    return 2.0 / (std::numbers::pi * static_cast<double>(n) * std::tan(std::numbers::pi * delta));
}

}  // namespace rieszap
