#include "rieszap/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rieszap/errors.hpp"

namespace rieszap {

namespace {

void check_limit(std::int64_t limit, std::int64_t minimum, const char* what, std::size_t bytes_per_entry) {
    if (limit < minimum) {
        throw InvalidArgument(std::string(what) + ": limit must be >= " + std::to_string(minimum));
    }
    if (limit > kMaxSieveLimit) {
        const double mib = static_cast<double>(limit) * static_cast<double>(bytes_per_entry) / (1024.0 * 1024.0);
        throw InvalidArgument(std::string(what) + ": limit " + std::to_string(limit) + " exceeds " +
                              std::to_string(kMaxSieveLimit) + " (would need ~" +
                              std::to_string(static_cast<long long>(mib)) + " MiB)");
    }
}

}  // namespace

bool PrimeTable::is_prime(std::int64_t n) const {
    if (n > limit_) throw TableTooSmall("prime table limit " + std::to_string(limit_) + " < " + std::to_string(n));
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

std::uint32_t DivisorTable::operator[](std::int64_t k) const {
    if (k < 1 || k > limit_) {
        throw TableTooSmall("divisor table covers 1.." + std::to_string(limit_) + ", index " +
                            std::to_string(k) + " requested");
    }
    return d_[static_cast<std::size_t>(k)];
}

PrimeTable sieve_primes(std::int64_t limit) {
    check_limit(limit, 2, "sieve_primes", 1);
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return PrimeTable(limit, std::move(primes));
}

DivisorTable sieve_divisors(std::int64_t limit) {
    check_limit(limit, 1, "sieve_divisors", sizeof(std::uint32_t));
    std::vector<std::uint32_t> d(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t i = 1; i <= limit; ++i) {
        for (std::int64_t j = i; j <= limit; j += i) ++d[static_cast<std::size_t>(j)];
    }
    return DivisorTable(limit, std::move(d));
}

DisjointnessReport blocks_disjoint(std::span<const std::int64_t> ns) {
    DisjointnessReport report;
    report.blocks_checked = ns.size();
    for (std::size_t i = 0; i < ns.size(); ++i) {
        for (std::size_t j = i + 1; j < ns.size(); ++j) {
            const std::int64_t p = ns[i];
            const std::int64_t q = ns[j];
            // smallest common element of {p..p^2 step p} and {q..q^2 step q}
            for (std::int64_t a = 1; a <= p; ++a) {
                const std::int64_t x = a * p;
                if (x % q == 0 && x / q >= 1 && x / q <= q) {
                    report.disjoint = false;
                    report.first_n = p;
                    report.second_n = q;
                    report.shared = x;
                    return report;
                }
            }
        }
    }
    return report;
}

DisjointnessReport prime_blocks_disjoint(std::int64_t limit) {
    if (limit < 3) throw InvalidArgument("prime_blocks_disjoint: limit must be >= 3");
    const PrimeTable table = sieve_primes(limit);
    return blocks_disjoint(table.primes());
}

DivisorGrowth divisor_growth_report(const DivisorTable& table, double exponent, std::int64_t from) {
    if (from < 1 || from > table.limit()) throw InvalidArgument("divisor_growth_report: empty range");
    DivisorGrowth best;
    for (std::int64_t n = from; n <= table.limit(); ++n) {
        const double ratio = static_cast<double>(table[n]) / std::pow(static_cast<double>(n), exponent);
        if (ratio > best.max_ratio) {
            best.max_ratio = ratio;
            best.argmax = n;
        }
    }
    return best;
}

DivisorGrowth divisor_growth_report(std::int64_t limit, double exponent, std::int64_t from) {
    if (limit < 10) throw InvalidArgument("divisor_growth_report: limit must be >= 10");
    return divisor_growth_report(sieve_divisors(limit), exponent, from);
}

}  // namespace rieszap
