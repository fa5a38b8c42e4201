#include "rieszap/torus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "rieszap/errors.hpp"
#include "rieszap/parallel.hpp"

namespace rieszap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_unit(double x) {
    double r = x - std::floor(x);
    return r >= 1.0 ? 0.0 : r;
}

// e^{-2 pi i k x}. The product k*x is reduced mod 1 together with its fma
// rounding residual, which keeps the phase accurate for large k.
Complex unit_phase(std::int64_t k, double x) {
    const double kd = static_cast<double>(k);
    const double p = kd * x;
    const double residual = std::fma(kd, x, -p);
    const double frac = (p - std::floor(p)) + residual;
    const double angle = -kTwoPi * frac;
    return {std::cos(angle), std::sin(angle)};
}

std::vector<Arc> merge_sorted(std::vector<Arc> arcs) {
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
        return a.start < b.start || (a.start == b.start && a.end < b.end);
    });
    std::vector<Arc> merged;
    merged.reserve(arcs.size());
    for (const Arc& a : arcs) {
        if (!merged.empty() && a.start <= merged.back().end) {
            merged.back().end = std::max(merged.back().end, a.end);
        } else {
            merged.push_back(a);
        }
    }
    return merged;
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Arc> canonical) : arcs_(std::move(canonical)) {
    for (const Arc& a : arcs_) measure_ += a.length();
}

IntervalSet IntervalSet::normalize(std::span<const std::pair<double, double>> raw) {
    if (raw.empty()) throw EmptyInput("interval set: no arcs given");

    std::vector<Arc> pieces;
    pieces.reserve(raw.size() + 1);
    for (const auto& [a, b] : raw) {
        if (!std::isfinite(a) || !std::isfinite(b)) {
            throw InvalidArc("interval set: non-finite arc coordinate");
        }
        double len = b - a;
        if (len < 0.0 && len > -1.0) len += 1.0;
        if (len <= 0.0) {
            throw InvalidArc("interval set: arc (" + std::to_string(a) + ", " + std::to_string(b) +
                             ") reduces to a point");
        }
        if (len > 1.0 + 1e-12) {
            throw InvalidArc("interval set: arc (" + std::to_string(a) + ", " + std::to_string(b) +
                             ") is longer than the circle");
        }
        if (len >= 1.0) {
            pieces.push_back({0.0, 1.0});
            continue;
        }
        const double start = wrap_unit(a);
        const double end = start + len;
        if (end > 1.0) {
            pieces.push_back({start, 1.0});
            pieces.push_back({0.0, end - 1.0});
        } else {
            pieces.push_back({start, end});
        }
    }
    IntervalSet out(merge_sorted(std::move(pieces)));
    if (out.measure() <= 0.0) throw EmptyInput("interval set: union has measure 0");
    return out;
}

IntervalSet IntervalSet::full_circle() { return IntervalSet(std::vector<Arc>{{0.0, 1.0}}); }

IntervalSet complement(const IntervalSet& set) {
    std::vector<Arc> gaps;
    double prev = 0.0;
    for (const Arc& a : set.arcs()) {
        if (a.start > prev) gaps.push_back({prev, a.start});
        prev = a.end;
    }
    if (prev < 1.0) gaps.push_back({prev, 1.0});
    return IntervalSet(std::move(gaps));
}

IntervalSet unite(std::span<const IntervalSet> sets) {
    std::vector<Arc> all;
    for (const IntervalSet& s : sets) all.insert(all.end(), s.arcs().begin(), s.arcs().end());
    return IntervalSet(merge_sorted(std::move(all)));
}

IntervalSet scale_periodize(double delta, std::int64_t ell) {
    if (ell < 1) throw InvalidArgument("scale_periodize: ell must be positive");
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw InvalidArgument("scale_periodize: delta must be positive");
    }
    const double ell_d = static_cast<double>(ell);
    if (delta >= 1.0 / (2.0 * ell_d)) {
        throw OverlapError("scale_periodize: delta=" + std::to_string(delta) +
                           " >= 1/(2*" + std::to_string(ell) + "), copies would overlap");
    }
    const double half = delta / ell_d;
    std::vector<std::pair<double, double>> raw;
    raw.reserve(static_cast<std::size_t>(ell));
    for (std::int64_t k = 0; k < ell; ++k) {
        const double center = static_cast<double>(k) / ell_d;
        raw.emplace_back(center - half, center + half);
    }
    return IntervalSet::normalize(raw);
}

bool contains(const IntervalSet& set, double x) {
    const double r = wrap_unit(x);
    const auto& arcs = set.arcs();
    auto it = std::upper_bound(arcs.begin(), arcs.end(), r,
                               [](double v, const Arc& a) { return v < a.start; });
    if (it == arcs.begin()) return false;
    --it;
    return it->start <= r && r < it->end;
}

Complex fourier_coeff(const IntervalSet& set, std::int64_t k) {
    if (k == 0) return {set.measure(), 0.0};
    if (k < 0) return std::conj(fourier_coeff(set, -k));
    Complex acc{0.0, 0.0};
    for (const Arc& a : set.arcs()) acc += unit_phase(k, a.start) - unit_phase(k, a.end);
    // acc / (2 pi i k)
    const double scale = kTwoPi * static_cast<double>(k);
    return {acc.imag() / scale, -acc.real() / scale};
}

Complex quadrature_coeff(const IntervalSet& set, std::int64_t k, std::int64_t points_per_unit) {
    const std::int64_t needed = 10 * std::llabs(k) + 10;
    if (points_per_unit < needed) {
        throw ResolutionError("quadrature_coeff: points_per_unit=" + std::to_string(points_per_unit) +
                              " below required " + std::to_string(needed));
    }
    constexpr std::int64_t kReanchor = 256;
    Complex total{0.0, 0.0};
    for (const Arc& a : set.arcs()) {
        const auto cells = static_cast<std::int64_t>(
            std::ceil(a.length() * static_cast<double>(points_per_unit)));
        const std::int64_t n = std::max<std::int64_t>(1, cells);
        const double h = a.length() / static_cast<double>(n);
        const Complex step = unit_phase(k, h);
        Complex sum{0.0, 0.0};
        Complex w{};
        for (std::int64_t j = 0; j < n; ++j) {
            if (j % kReanchor == 0) {
                w = unit_phase(k, a.start + (static_cast<double>(j) + 0.5) * h);
            } else {
                w *= step;
            }
            sum += w;
        }
        total += sum * h;
    }
    return total;
}

CoefficientTable::CoefficientTable(std::int64_t max_index, std::vector<Complex> nonnegative)
    : max_index_(max_index), values_(std::move(nonnegative)) {
    if (max_index_ < 0 || values_.size() != static_cast<std::size_t>(max_index_) + 1) {
        throw InvalidArgument("CoefficientTable: value count does not match max_index");
    }
}

bool CoefficientTable::covers(std::int64_t k) const noexcept { return std::llabs(k) <= max_index_; }

Complex CoefficientTable::operator()(std::int64_t k) const {
    if (!covers(k)) {
        throw TableTooSmall("coefficient table covers |k| <= " + std::to_string(max_index_) +
                            ", index " + std::to_string(k) + " requested");
    }
    const Complex v = values_[static_cast<std::size_t>(std::llabs(k))];
    return k < 0 ? std::conj(v) : v;
}

double CoefficientTable::energy(std::int64_t k) const { return std::norm((*this)(k)); }

CoefficientTable fourier_table(const IntervalSet& set, std::int64_t max_index, unsigned threads) {
    if (max_index < 0) throw InvalidArgument("fourier_table: max_index must be >= 0");
    std::vector<Complex> values(static_cast<std::size_t>(max_index) + 1);
    parallel_for(values.size(), threads, [&](std::size_t k) {
        values[k] = fourier_coeff(set, static_cast<std::int64_t>(k));
    });
    return CoefficientTable(max_index, std::move(values));
}

}  // namespace rieszap
