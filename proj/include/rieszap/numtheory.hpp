#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rieszap {

// Sieves refuse limits above this (memory grows linearly).
inline constexpr std::int64_t kMaxSieveLimit = 10'000'000;

class PrimeTable {
public:
    PrimeTable(std::int64_t limit, std::vector<std::int64_t> primes)
        : limit_(limit), primes_(std::move(primes)) {}

    std::int64_t limit() const noexcept { return limit_; }
    const std::vector<std::int64_t>& primes() const noexcept { return primes_; }
    bool is_prime(std::int64_t n) const;

private:
    std::int64_t limit_;
    std::vector<std::int64_t> primes_;
};

// d(k) = number of positive divisors, 1 <= k <= limit.
class DivisorTable {
public:
    DivisorTable(std::int64_t limit, std::vector<std::uint32_t> counts)
        : limit_(limit), d_(std::move(counts)) {}

    std::int64_t limit() const noexcept { return limit_; }
    // Throws TableTooSmall outside [1, limit].
    std::uint32_t operator[](std::int64_t k) const;

private:
    std::int64_t limit_;
    std::vector<std::uint32_t> d_;  // d_[0] unused
};

PrimeTable sieve_primes(std::int64_t limit);
DivisorTable sieve_divisors(std::int64_t limit);

struct DisjointnessReport {
    bool disjoint = true;
    std::size_t blocks_checked = 0;
    // First violation in (n, m) lexicographic order, with the smallest shared element.
    std::optional<std::int64_t> first_n;
    std::optional<std::int64_t> second_n;
    std::optional<std::int64_t> shared;
};

// Pairwise brute-force intersection of B_n = {n, 2n, ..., n^2} for the given n.
DisjointnessReport blocks_disjoint(std::span<const std::int64_t> ns);

// blocks_disjoint over all primes p <= limit.
DisjointnessReport prime_blocks_disjoint(std::int64_t limit);

struct DivisorGrowth {
    double max_ratio = 0.0;
    std::int64_t argmax = 0;
};

// max over n in [from, limit] of d(n) / n^exponent. Ties keep the smallest n.
DivisorGrowth divisor_growth_report(std::int64_t limit, double exponent, std::int64_t from = 1);
DivisorGrowth divisor_growth_report(const DivisorTable& table, double exponent, std::int64_t from = 1);

}  // namespace rieszap
