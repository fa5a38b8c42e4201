#include "rieszap/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "rieszap/errors.hpp"
#include "rieszap/numtheory.hpp"

namespace rieszap {

namespace {

double summand(double ell) {
    const double lg = std::log1p(ell);
    return 1.0 / (ell * lg * lg);
}

// log of ln(1 + e^t), stable for large t
double log_log1p_exp(double t) {
    const double l = t > 30.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
    return std::log(l);
}

double lambda_min_of(const IntervalSet& set, const FrequencySet& freqs, unsigned threads) {
    return extreme_eigs(gram(set, freqs, threads)).lambda_min;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// DeltaSchedule

DeltaSchedule::DeltaSchedule(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw InvalidArgument("epsilon must lie in (0, 1), got " + fmt(epsilon));
    }
    double sum = 0.0;
    for (std::int64_t l = 1; l <= kNormalizerCutoff; ++l) sum += summand(static_cast<double>(l));
    normalizer_ = sum + 1.0 / std::log(static_cast<double>(kNormalizerCutoff));
}

double DeltaSchedule::operator()(std::int64_t ell) const {
    if (ell < 1) throw InvalidArgument("delta schedule: ell must be positive");
    return at(static_cast<double>(ell));
}

double DeltaSchedule::at(double ell) const { return epsilon_ / (2.0 * normalizer_) * summand(ell); }

ConditionACheck check_condition_a(const DeltaSchedule& schedule, std::int64_t cutoff) {
    if (cutoff < 2) throw InvalidArgument("condition (a): cutoff must be >= 2");
    ConditionACheck c;
    c.cutoff = cutoff;
    for (std::int64_t l = 1; l <= cutoff; ++l) c.partial_sum += schedule(l);
    c.tail_bound = schedule.epsilon() / (2.0 * schedule.normalizer()) / std::log(static_cast<double>(cutoff));
    c.total = c.partial_sum + c.tail_bound;
    c.limit = schedule.epsilon() / 2.0;
    c.holds = c.total < c.limit;
    return c;
}

ConditionBCheck check_condition_b(const DeltaSchedule& schedule, double alpha, int decades) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("condition (b): alpha must lie in (0, 1)");
    if (decades < 1) throw InvalidArgument("condition (b): need at least one decade");
    ConditionBCheck c;
    c.alpha = alpha;

    // log(delta(e^t) e^{t/alpha}) up to the constant log(epsilon/(2 C0))
    const auto log_growth = [alpha](double t) { return (1.0 / alpha - 1.0) * t - 2.0 * log_log1p_exp(t); };

    // Increasing iff (1 + e^{-t}) ln(1 + e^t) >= 2 alpha / (1 - alpha); the left side increases in t.
    const double threshold = 2.0 * alpha / (1.0 - alpha);
    const auto h = [](double t) { return (1.0 + std::exp(-t)) * std::exp(log_log1p_exp(t)); };
    constexpr double kMaxLog = 600.0;
    if (h(kMaxLog) < threshold) throw InvalidArgument("condition (b): alpha too close to 1 for a finite grid");
    double lo = -20.0;
    double hi = kMaxLog;
    if (h(lo) >= threshold) {
        hi = lo;
    } else {
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (h(mid) >= threshold ? hi : lo) = mid;
        }
    }
    c.turning_point = std::exp(hi);

    double prev = -std::numeric_limits<double>::infinity();
    c.window_increasing = true;
    for (int j = 1; j <= 5; ++j) {
        const double ell = std::pow(10.0, j);
        const double v = schedule.at(ell) * std::pow(ell, 1.0 / alpha);
        c.window.push_back({ell, v});
        if (!(v > prev)) c.window_increasing = false;
        prev = v;
    }

    const int first = std::max(1, static_cast<int>(std::ceil(hi / std::log(10.0))));
    double prev_log = -std::numeric_limits<double>::infinity();
    c.beyond_increasing = true;
    const double log_scale = std::log(schedule.epsilon() / (2.0 * schedule.normalizer()));
    for (int j = first; j <= first + decades; ++j) {
        const double t = j * std::log(10.0);
        const double lg = log_growth(t);
        c.beyond.push_back({std::pow(10.0, j), std::exp(log_scale + lg)});
        if (!(lg > prev_log)) c.beyond_increasing = false;
        prev_log = lg;
    }
    c.holds = c.beyond_increasing;
    return c;
}

IntervalSet build_adversarial_set(const DeltaSchedule& schedule, std::int64_t l_max) {
    if (l_max < 1) throw InvalidArgument("adversarial set: L_max must be positive");
    std::vector<IntervalSet> removed;
    removed.reserve(static_cast<std::size_t>(l_max));
    for (std::int64_t l = 1; l <= l_max; ++l) {
        const double d = schedule(l);
        if (d >= 1.0 / (2.0 * static_cast<double>(l))) {
            throw ScheduleError("adversarial set: delta(" + std::to_string(l) + ") = " + fmt(d) +
                                " >= 1/(2l)");
        }
        removed.push_back(scale_periodize(d, l));
    }
    return complement(unite(removed));
}

IntervalSet build_adversarial_set(double epsilon, std::int64_t l_max) {
    return build_adversarial_set(DeltaSchedule(epsilon), l_max);
}

Theorem1Cell theorem1_demo(const IntervalSet& set, const DeltaSchedule& schedule, std::int64_t l_max,
                           std::int64_t ell, std::int64_t n, unsigned threads) {
    if (ell < 1 || ell > l_max) {
        throw InvalidArgument("theorem1 demo: ell=" + std::to_string(ell) + " outside [1, " +
                              std::to_string(l_max) + "]");
    }
    if (n < 1) throw InvalidArgument("theorem1 demo: N must be positive");
    Theorem1Cell cell;
    cell.ell = ell;
    cell.n = n;
    cell.delta = schedule(ell);
    cell.rayleigh_uniform = uniform_rayleigh_progression(set, ell, n, threads);
    cell.tail = dirichlet_tail(n, cell.delta, threads);
    cell.tail_bound = dirichlet_tail_bound(n, cell.delta);
    cell.within_tail = cell.rayleigh_uniform <= cell.tail + 1e-9;
    cell.within_bound = cell.rayleigh_uniform <= cell.tail_bound + 1e-9;
    return cell;
}

// ---------------------------------------------------------------------------
// Blocks

FrequencySet BlockSpec::frequencies() const { return FrequencySet::progression(shift, step, length); }

FrequencySet block(std::int64_t n) { return block_spec(n).frequencies(); }

BlockSpec block_spec(std::int64_t n) {
    if (n < 1) throw InvalidArgument("block: n must be positive");
    return {n, n, n, 0};
}

std::vector<std::int64_t> good_n_search(const CoefficientTable& table, double eps, std::int64_t n_lo,
                                        std::int64_t n_hi) {
    if (!(eps > 0.0)) throw InvalidArgument("good_n_search: eps must be positive");
    if (n_lo < 1 || n_hi < n_lo) throw InvalidArgument("good_n_search: invalid range");
    if (!table.covers(n_hi * n_hi)) {
        throw TableTooSmall("good_n_search: table must cover " + std::to_string(n_hi * n_hi) +
                            ", covers " + std::to_string(table.max_index()));
    }
    std::vector<std::int64_t> hits;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        double sum = 0.0;
        for (std::int64_t l = 1; l <= n; ++l) sum += table.energy(l * n);
        if (sum < eps / static_cast<double>(n)) hits.push_back(n);
    }
    return hits;
}

double block_offdiag_sum(const CoefficientTable& table, const BlockSpec& spec) {
    if (spec.step < 1 || spec.length < 1) throw InvalidArgument("block_offdiag_sum: invalid block");
    const std::int64_t reach = spec.step * (spec.length - 1);
    if (!table.covers(reach)) {
        throw TableTooSmall("block_offdiag_sum: table must cover " + std::to_string(reach));
    }
    double sum = 0.0;
    for (std::int64_t l = 1; l < spec.length; ++l) {
        sum += static_cast<double>(spec.length - l) * table.energy(l * spec.step);
    }
    return 2.0 * sum;
}

ShiftChoice select_shift(const IntervalSet& set, const std::optional<FrequencySet>& existing,
                         const BlockSpec& block, double target, const ShiftScan& scan, unsigned threads) {
    if (scan.step < 1 || scan.cap < scan.start) throw InvalidArgument("shift scan: invalid start/step/cap");
    BlockSpec base = block;
    base.shift = 0;
    const FrequencySet unshifted = base.frequencies();
    const double block_min = lambda_min_of(set, unshifted, threads);
    if (block_min < target) {
        throw InvalidArgument("select_shift: block lambda_min " + fmt(block_min) + " below target " + fmt(target));
    }
    if (!existing) return {scan.start, block_min};

    const double existing_min = lambda_min_of(set, *existing, threads);
    if (existing_min < target) {
        throw InvalidArgument("select_shift: existing lambda_min " + fmt(existing_min) + " below target " +
                              fmt(target));
    }

    std::optional<ShiftChoice> best;
    for (std::int64_t m = scan.start;; m += scan.step) {
        const FrequencySet candidate = unshifted.shifted(m);
        if (existing->disjoint_from(candidate)) {
            const double lm = lambda_min_of(set, merge_disjoint(*existing, candidate), threads);
            if (lm >= target) return {m, lm};
            if (!best || lm > best->lambda_min) best = ShiftChoice{m, lm};
        }
        if (scan.cap - m < scan.step) break;
    }
    const std::int64_t best_m = best ? best->shift : scan.start;
    const double best_l = best ? best->lambda_min : std::numeric_limits<double>::quiet_NaN();
    throw ScanExhausted("shift scan exhausted at cap " + std::to_string(scan.cap) + ": best M=" +
                            std::to_string(best_m) + " with lambda_min " + fmt(best_l) + " < target " +
                            fmt(target),
                        best_m, best_l);
}

FrequencySet LambdaBuild::partial_union(std::size_t count) const {
    if (count == 0 || count > blocks.size()) throw InvalidArgument("partial_union: count out of range");
    FrequencySet acc = blocks[0].spec.frequencies();
    for (std::size_t i = 1; i < count; ++i) acc = merge_disjoint(acc, blocks[i].spec.frequencies());
    return acc;
}

std::vector<double> LambdaBuild::schedule() const {
    std::vector<double> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) out.push_back(b.cert_lambda_min);
    return out;
}

LambdaBuild build_lambda_thm2(const IntervalSet& set, std::size_t count, const Thm2Config& config) {
    if (count == 0) throw InvalidArgument("theorem 2 build: count must be positive");
    if (!(set.measure() > 0.0)) throw DegenerateSet("theorem 2 build: set has measure 0");
    // The boundary eps = |S|/4 is admitted: certificates come from eigensolves,
    // not from the eps margin.
    if (!(config.eps > 0.0 && config.eps <= set.measure() / 4.0 * (1.0 + 1e-12))) {
        throw InvalidArgument("theorem 2 build: eps must lie in (0, |S|/4]");
    }
    if (config.n_lo < 1 || config.n_hi < config.n_lo) throw InvalidArgument("theorem 2 build: invalid n range");

    const CoefficientTable table = fourier_table(set, config.n_hi * config.n_hi, config.threads);
    const std::vector<std::int64_t> hits = good_n_search(table, config.eps, config.n_lo, config.n_hi);

    LambdaBuild build;
    build.gamma = set.measure() / 2.0;
    build.set = set;
    std::optional<FrequencySet> current;
    std::size_t rejected = 0;
    for (std::int64_t n : hits) {
        if (build.blocks.size() == count) break;
        BlockSpec spec = block_spec(n);
        // membership: gamma is a lower Riesz bound for E(B_n)
        if (lambda_min_of(set, spec.frequencies(), config.threads) < build.gamma) {
            ++rejected;
            continue;
        }
        const double target = build.gamma / 2.0 * (1.0 + 1.0 / static_cast<double>(n));
        const ShiftChoice choice = select_shift(set, current, spec, target, config.scan, config.threads);
        spec.shift = choice.shift;
        const FrequencySet placed = spec.frequencies();
        current = current ? merge_disjoint(*current, placed) : placed;
        build.blocks.push_back({spec, choice.lambda_min, target, std::nullopt, std::nullopt});
    }
    if (build.blocks.size() < count) {
        throw NotEnoughBlocks("theorem 2 build: " + std::to_string(hits.size()) + " good n in [" +
                              std::to_string(config.n_lo) + ", " + std::to_string(config.n_hi) + "], " +
                              std::to_string(rejected) + " below gamma, " +
                              std::to_string(build.blocks.size()) + " of " + std::to_string(count) +
                              " blocks placed");
    }
    return build;
}

// ---------------------------------------------------------------------------
// Divisor-averaged step search

namespace {

// Largest integer strictly below N^alpha, plus ceil(N^alpha); near-integral
// powers are snapped to the integer.
std::pair<std::int64_t, std::int64_t> power_limits(std::int64_t n, double alpha) {
    const double p = std::pow(static_cast<double>(n), alpha);
    if (!std::isfinite(p) || p > 9.0e15) throw InvalidArgument("step search: N^alpha too large");
    const double r = std::round(p);
    if (std::abs(p - r) <= 1e-9 * std::max(1.0, p)) {
        const auto ri = static_cast<std::int64_t>(r);
        return {ri - 1, ri};
    }
    return {static_cast<std::int64_t>(std::floor(p)), static_cast<std::int64_t>(std::ceil(p))};
}

constexpr double kStepTieTolerance = 1e-15;

}  // namespace

std::int64_t step_bound(std::int64_t n, double alpha) {
    if (n < 1) throw InvalidArgument("step_bound: N must be positive");
    return power_limits(n, alpha).second;
}

StepSearchResult step_search_alpha(const CoefficientTable& table, double alpha, std::int64_t n,
                                   std::int64_t l_bound) {
    if (!(alpha > 1.0)) throw InvalidArgument("step search: alpha must exceed 1");
    if (n < 1) throw InvalidArgument("step search: N must be positive");
    if (l_bound < 1) throw InvalidArgument("step search: L must be positive");
    const std::int64_t below = power_limits(n, alpha).first;
    const std::int64_t cands = std::min(l_bound, below);
    if (cands < 1) throw InvalidArgument("step search: no step l < N^alpha");
    if (!table.covers(cands * n)) {
        throw TableTooSmall("step search: table must cover " + std::to_string(cands * n) + ", covers " +
                            std::to_string(table.max_index()));
    }

    std::vector<double> sums(static_cast<std::size_t>(cands));
    for (std::int64_t l = 1; l <= cands; ++l) {
        double s = 0.0;
        for (std::int64_t k = 1; k <= n; ++k) s += table.energy(k * l);
        sums[static_cast<std::size_t>(l - 1)] = s;
    }
    const double smallest = *std::min_element(sums.begin(), sums.end());

    StepSearchResult r;
    r.candidates = cands;
    for (std::int64_t l = 1; l <= cands; ++l) {
        if (sums[static_cast<std::size_t>(l - 1)] <= smallest + kStepTieTolerance) {
            r.ell = l;
            r.sum = sums[static_cast<std::size_t>(l - 1)];
            break;
        }
    }
    for (double s : sums) r.averaging_lhs += s;
    const DivisorTable divisors = sieve_divisors(cands * n);
    for (std::int64_t k = 1; k <= cands * n; ++k) {
        r.averaging_rhs += static_cast<double>(divisors[k]) * table.energy(k);
    }
    r.certificate_holds = r.averaging_lhs <= r.averaging_rhs + 1e-12;
    return r;
}

StepSearchResult step_search_alpha(const CoefficientTable& table, double alpha, std::int64_t n) {
    if (n < 1) throw InvalidArgument("step search: N must be positive");
    return step_search_alpha(table, alpha, n, step_bound(n, alpha));
}

LambdaBuild build_lambda_thm3(const IntervalSet& set, const Thm3Config& config) {
    if (!(set.measure() > 0.0)) throw DegenerateSet("theorem 3 build: set has measure 0");
    if (config.alphas.empty()) throw InvalidArgument("theorem 3 build: no alphas");
    if (config.lengths.size() != config.alphas.size()) {
        throw InvalidArgument("theorem 3 build: need one N range per alpha");
    }
    std::int64_t coverage = 0;
    for (std::size_t i = 0; i < config.alphas.size(); ++i) {
        const double a = config.alphas[i];
        if (!(a > 1.0)) throw InvalidArgument("theorem 3 build: every alpha must exceed 1");
        if (i > 0 && !(a < config.alphas[i - 1])) {
            throw InvalidArgument("theorem 3 build: alphas must be strictly decreasing");
        }
        if (config.lengths[i].empty()) {
            throw InvalidArgument("theorem 3 build: empty N range for alpha=" + fmt(a));
        }
        for (std::int64_t n : config.lengths[i]) {
            if (n < 1) throw InvalidArgument("theorem 3 build: N must be positive");
            const std::int64_t cands = power_limits(n, a).first;
            if (cands < 1) throw InvalidArgument("theorem 3 build: no step below N^alpha for N=" + std::to_string(n));
            coverage = std::max(coverage, cands * n);
        }
    }

    const CoefficientTable table = fourier_table(set, coverage, config.threads);
    LambdaBuild build;
    build.gamma = set.measure() / 2.0;
    build.set = set;
    const double target = build.gamma / 2.0;
    std::optional<FrequencySet> current;
    for (std::size_t i = 0; i < config.alphas.size(); ++i) {
        const double a = config.alphas[i];
        for (std::int64_t n : config.lengths[i]) {
            const StepSearchResult step = step_search_alpha(table, a, n);
            BlockSpec spec{n, step.ell, n, 0};
            const ShiftChoice choice = select_shift(set, current, spec, target, config.scan, config.threads);
            spec.shift = choice.shift;
            const FrequencySet placed = spec.frequencies();
            current = current ? merge_disjoint(*current, placed) : placed;
            build.blocks.push_back({spec, choice.lambda_min, target, a, step.sum});
        }
    }
    return build;
}

BuildVerification verify_lambda_build(const LambdaBuild& build, double tolerance, unsigned threads) {
    BuildVerification v;
    if (build.blocks.empty()) {
        v.ok = false;
        v.failure = "build has no blocks";
        return v;
    }
    std::optional<FrequencySet> current;
    for (std::size_t i = 0; i < build.blocks.size(); ++i) {
        const LambdaBlock& b = build.blocks[i];
        const std::string where = "block " + std::to_string(i + 1);
        const FrequencySet placed = b.spec.frequencies();
        if (current && !current->disjoint_from(placed)) {
            v.ok = false;
            v.failure = where + ": overlaps earlier blocks";
            return v;
        }
        current = current ? merge_disjoint(*current, placed) : placed;
        const double lm = lambda_min_of(build.set, *current, threads);
        v.recomputed.push_back(lm);
        if (std::abs(lm - b.cert_lambda_min) > tolerance) {
            v.ok = false;
            v.failure = where + ": certificate " + fmt(b.cert_lambda_min) + " but recomputed lambda_min " + fmt(lm);
            return v;
        }
        if (lm + tolerance < b.target) {
            v.ok = false;
            v.failure = where + ": lambda_min " + fmt(lm) + " below target " + fmt(b.target);
            return v;
        }
        if (lm + tolerance < build.gamma / 2.0) {
            v.ok = false;
            v.failure = where + ": lambda_min " + fmt(lm) + " below gamma/2 = " + fmt(build.gamma / 2.0);
            return v;
        }
    }
    return v;
}

}  // namespace rieszap
