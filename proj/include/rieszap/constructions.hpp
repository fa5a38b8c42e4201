#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rieszap/spectral.hpp"
#include "rieszap/torus.hpp"

namespace rieszap {

// ---------------------------------------------------------------------------
// Adversarial set for progressions with small step
// ---------------------------------------------------------------------------

/*
 * delta(l) = (epsilon / (2 C0)) / (l ln^2(l + 1)).
 *
 * C0 = sum_{l <= 1000} 1/(l ln^2(l + 1)) + 1/ln(1000) is an upper bound for
 * the full series (the tail is dominated by the integral of 1/(x ln^2 x)), so
 * sum_l delta(l) < epsilon / 2, while delta(l) l^{1/alpha} -> infinity for
 * every alpha in (0, 1).
 */
class DeltaSchedule {
public:
    static constexpr std::int64_t kNormalizerCutoff = 1000;

    // Throws InvalidArgument unless 0 < epsilon < 1.
    explicit DeltaSchedule(double epsilon);

    double epsilon() const noexcept { return epsilon_; }
    double normalizer() const noexcept { return normalizer_; }

    double operator()(std::int64_t ell) const;
    // Same rule at a real argument (used for far-out growth samples).
    double at(double ell) const;

private:
    double epsilon_;
    double normalizer_;
};

struct ConditionACheck {
    std::int64_t cutoff = 0;
    double partial_sum = 0.0;  // sum_{l <= cutoff} delta(l)
    double tail_bound = 0.0;   // (epsilon/(2 C0)) / ln(cutoff)
    double total = 0.0;
    double limit = 0.0;        // epsilon / 2
    bool holds = false;
};

ConditionACheck check_condition_a(const DeltaSchedule& schedule, std::int64_t cutoff = 1'000'000);

struct GrowthSample {
    double ell = 0.0;
    double value = 0.0;  // delta(l) * l^{1/alpha}
};

struct ConditionBCheck {
    double alpha = 0.0;
    // delta(l) l^{1/alpha} is increasing for l >= turning_point.
    double turning_point = 0.0;
    // Decade grid 10, 100, ..., 10^5.
    std::vector<GrowthSample> window;
    bool window_increasing = false;
    // Decade grid starting at the first power of ten past turning_point.
    std::vector<GrowthSample> beyond;
    bool beyond_increasing = false;
    bool holds = false;  // == beyond_increasing
};

// Throws InvalidArgument unless 0 < alpha < 1.
ConditionBCheck check_condition_b(const DeltaSchedule& schedule, double alpha, int decades = 5);

// Complement of the union of scale_periodize(delta(l), l) over l = 1..l_max.
// Throws ScheduleError if some delta(l) >= 1/(2l) in that range.
IntervalSet build_adversarial_set(const DeltaSchedule& schedule, std::int64_t l_max);
IntervalSet build_adversarial_set(double epsilon, std::int64_t l_max);

struct Theorem1Cell {
    std::int64_t ell = 0;
    std::int64_t n = 0;
    double delta = 0.0;
    double rayleigh_uniform = 0.0;  // uniform-vector Rayleigh quotient of gram(S, {l, ..., N l})
    double tail = 0.0;              // dirichlet_tail(N, delta(l))
    double tail_bound = 0.0;        // (2/(pi N)) cot(pi delta(l))
    bool within_tail = false;       // rayleigh_uniform <= tail + 1e-9
    bool within_bound = false;      // rayleigh_uniform <= tail_bound + 1e-9
};

// S must be build_adversarial_set(schedule, l_max); requires 1 <= ell <= l_max.
Theorem1Cell theorem1_demo(const IntervalSet& set, const DeltaSchedule& schedule, std::int64_t l_max,
                           std::int64_t ell, std::int64_t n, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Blocks, shifts and assembled frequency sets
// ---------------------------------------------------------------------------

// {shift + step, shift + 2 step, ..., shift + length*step}
struct BlockSpec {
    std::int64_t n = 1;
    std::int64_t step = 1;
    std::int64_t length = 1;
    std::int64_t shift = 0;

    FrequencySet frequencies() const;
    bool operator==(const BlockSpec&) const = default;
};

// B_n = {n, 2n, ..., n^2}
FrequencySet block(std::int64_t n);
BlockSpec block_spec(std::int64_t n);

// Every n in [n_lo, n_hi] with sum_{l=1}^{n} a(l n) < eps / n, increasing.
// The table must cover n_hi^2.
std::vector<std::int64_t> good_n_search(const CoefficientTable& table, double eps, std::int64_t n_lo,
                                        std::int64_t n_hi);

// sum over lambda != mu in the (unshifted) block of a(lambda - mu)
//   = 2 sum_{l=1}^{length-1} (length - l) a(l step).
double block_offdiag_sum(const CoefficientTable& table, const BlockSpec& spec);

struct ShiftScan {
    std::int64_t start = 0;
    std::int64_t step = 1;
    std::int64_t cap = 1'000'000;
};

struct ShiftChoice {
    std::int64_t shift = 0;
    double lambda_min = 0.0;
};

// Smallest scanned M with (M + block) disjoint from existing and
// lambda_min(gram(S, existing u (M + block))) >= target. Requires
// lambda_min(existing) >= target and lambda_min(unshifted block) >= target
// (InvalidArgument otherwise). Throws ScanExhausted past scan.cap.
ShiftChoice select_shift(const IntervalSet& set, const std::optional<FrequencySet>& existing,
                         const BlockSpec& block, double target, const ShiftScan& scan,
                         unsigned threads = 1);

struct LambdaBlock {
    BlockSpec spec;
    double cert_lambda_min = 0.0;  // lambda_min of the partial union ending here
    double target = 0.0;
    std::optional<double> alpha;     // set for divisor-averaged blocks
    std::optional<double> step_sum;  // sum_{n<=N} a(n l) achieved by the step search
};

struct LambdaBuild {
    double gamma = 0.0;
    IntervalSet set;
    std::vector<LambdaBlock> blocks;

    // Union of the first `count` shifted blocks.
    FrequencySet partial_union(std::size_t count) const;
    FrequencySet frequencies() const { return partial_union(blocks.size()); }
    std::vector<double> schedule() const;
};

struct Thm2Config {
    double eps = 0.075;
    std::int64_t n_lo = 1;
    std::int64_t n_hi = 2000;
    ShiftScan scan;
    unsigned threads = 1;
};

/*
 * Block/shift assembly for progressions with step O(N).
 *
 * gamma = |S|/2. Candidates are the good_n_search hits n whose block B_n has
 * lambda_min >= gamma; the k-th accepted block is shifted so the partial union
 * has lambda_min >= (gamma/2)(1 + 1/n_k). Requires 0 < eps <= |S|/4.
 * Throws NotEnoughBlocks when fewer than `count` candidates qualify.
 */
LambdaBuild build_lambda_thm2(const IntervalSet& set, std::size_t count, const Thm2Config& config);

struct StepSearchResult {
    std::int64_t ell = 0;
    double sum = 0.0;             // sum_{n=1}^{N} a(n ell)
    std::int64_t candidates = 0;  // steps scanned: 1 <= l <= L with l < N^alpha
    double averaging_lhs = 0.0;   // sum_l sum_n a(n l) over the candidates
    double averaging_rhs = 0.0;   // sum_{k <= candidates*N} d(k) a(k)
    bool certificate_holds = false;
};

// ceil(N^alpha), with near-integral powers snapped (so 16^1.5 is 64).
std::int64_t step_bound(std::int64_t n, double alpha);

// Minimizes sum_{n=1}^{N} a(n l) over the candidate steps; sums within 1e-15
// of the minimum tie and the smallest l wins.
StepSearchResult step_search_alpha(const CoefficientTable& table, double alpha, std::int64_t n,
                                   std::int64_t l_bound);
StepSearchResult step_search_alpha(const CoefficientTable& table, double alpha, std::int64_t n);

struct Thm3Config {
    std::vector<double> alphas;                      // strictly decreasing, > 1
    std::vector<std::vector<std::int64_t>> lengths;  // N values per alpha
    ShiftScan scan;
    unsigned threads = 1;
};

// Diagonal assembly: one block of length N and step l < N^alpha_k per
// (alpha_k, N), each shifted so every partial union has lambda_min >= gamma/2.
LambdaBuild build_lambda_thm3(const IntervalSet& set, const Thm3Config& config);

struct BuildVerification {
    bool ok = true;
    std::vector<double> recomputed;  // lambda_min per partial union
    std::string failure;             // first failed check
};

// Recomputes every certificate from scratch: blocks pairwise disjoint,
// |recomputed - cert| <= tolerance, recomputed >= target and >= gamma/2.
BuildVerification verify_lambda_build(const LambdaBuild& build, double tolerance = 1e-9,
                                      unsigned threads = 1);

}  // namespace rieszap
