#include "rieszap/checks.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "rieszap/constructions.hpp"
#include "rieszap/errors.hpp"
#include "rieszap/numtheory.hpp"

namespace rieszap::checks {

namespace {

std::string g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

bool CheckSuite::passed() const {
    for (const auto& l : lines) {
        if (!l.informational && !l.passed) return false;
    }
    return true;
}

std::string CheckSuite::to_text() const {
    std::ostringstream o;
    for (const auto& l : lines) {
        const char* tag = l.informational ? "INFO" : (l.passed ? "PASS" : "FAIL");
        o << tag << "  " << name << "/" << l.name;
        if (!l.detail.empty()) o << "  " << l.detail;
        o << '\n';
    }
    o << (passed() ? "PASS" : "FAIL") << "  " << name << '\n';
    return o.str();
}

bool is_prime_trial(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::int64_t divisor_count_trial(std::int64_t n) {
    std::int64_t count = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    }
    return count;
}

CheckSuite lemma4_suite(std::int64_t limit) {
    CheckSuite suite{"lemma4", {}};
    const DisjointnessReport primes = prime_blocks_disjoint(limit);
    CheckLine l1{"prime_blocks_disjoint", primes.disjoint, false,
                 std::to_string(primes.blocks_checked) + " prime blocks up to " + std::to_string(limit)};
    if (!primes.disjoint) {
        l1.detail += ", B_" + std::to_string(*primes.first_n) + " and B_" + std::to_string(*primes.second_n) +
                     " share " + std::to_string(*primes.shared);
    }
    suite.lines.push_back(l1);

    const std::array<std::int64_t, 2> composite{2, 4};
    const DisjointnessReport c = blocks_disjoint(composite);
    const bool found = !c.disjoint && c.shared == 4;
    suite.lines.push_back({"composite_overlap_detected", found, false,
                           found ? "B_2 and B_4 share 4" : "expected B_2 and B_4 to share 4"});
    return suite;
}

CheckSuite divisor_suite(std::int64_t limit) {
    CheckSuite suite{"divisors", {}};
    if (limit < 2) throw InvalidArgument("divisor suite: limit must be >= 2");
    const PrimeTable primes = sieve_primes(limit);
    const DivisorTable d = sieve_divisors(limit);

    std::int64_t first_bad_prime = 0, first_bad_divisor = 0;
    for (std::int64_t n = 1; n <= limit; ++n) {
        if (!first_bad_prime && primes.is_prime(n) != is_prime_trial(n)) first_bad_prime = n;
        if (!first_bad_divisor && static_cast<std::int64_t>(d[n]) != divisor_count_trial(n)) first_bad_divisor = n;
    }
    suite.lines.push_back({"primes_vs_trial_division", first_bad_prime == 0, false,
                           std::to_string(primes.primes().size()) + " primes <= " + std::to_string(limit) +
                               (first_bad_prime ? ", first mismatch at " + std::to_string(first_bad_prime) : "")});
    suite.lines.push_back({"divisors_vs_trial_division", first_bad_divisor == 0, false,
                           "n <= " + std::to_string(limit) +
                               (first_bad_divisor ? ", first mismatch at " + std::to_string(first_bad_divisor) : "")});

    for (std::int64_t k : {10, 100, 1000}) {
        if (k > limit) continue;
        std::int64_t lhs = 0, rhs = 0;
        for (std::int64_t i = 1; i <= k; ++i) lhs += d[i];
        for (std::int64_t l = 1; l <= k; ++l) rhs += k / l;
        suite.lines.push_back({"hyperbola_identity_K" + std::to_string(k), lhs == rhs, false,
                               std::to_string(lhs) + " == " + std::to_string(rhs)});
    }

    if (limit >= 10) {
        const std::int64_t from = std::max<std::int64_t>(1, limit / 10);
        const DivisorGrowth growth = divisor_growth_report(d, 0.5, from);
        suite.lines.push_back({"growth_d(n)/n^0.5", true, true,
                               "max " + g(growth.max_ratio) + " at n=" + std::to_string(growth.argmax) +
                                   " over [" + std::to_string(from) + ", " + std::to_string(limit) + "]"});
    }
    return suite;
}

CheckSuite schedule_suite(double epsilon) {
    CheckSuite suite{"schedule", {}};
    const DeltaSchedule schedule(epsilon);

    const ConditionACheck a = check_condition_a(schedule);
    suite.lines.push_back({"condition_a", a.holds, false,
                           "sum_{l<=1e6} " + g(a.partial_sum) + " + tail " + g(a.tail_bound) + " = " +
                               g(a.total) + " < " + g(a.limit)});

    constexpr std::int64_t kRange = 100'000;
    bool decreasing = true, separated = true;
    double prev = schedule(1);
    for (std::int64_t l = 1; l <= kRange; ++l) {
        const double v = schedule(l);
        if (l > 1 && !(v < prev)) decreasing = false;
        if (!(v < 1.0 / (2.0 * static_cast<double>(l)))) separated = false;
        prev = v;
    }
    suite.lines.push_back({"decreasing", decreasing, false, "l <= 1e5"});
    suite.lines.push_back({"copies_disjoint", separated, false, "delta(l) < 1/(2l) for l <= 1e5"});

    for (double alpha : {0.5, 0.75, 0.9}) {
        const ConditionBCheck b = check_condition_b(schedule, alpha);
        std::string beyond;
        for (const auto& s : b.beyond) beyond += (beyond.empty() ? "" : " ") + g(s.value);
        suite.lines.push_back({"condition_b_alpha_" + g(alpha), b.holds, false,
                               "increasing past l*=" + g(b.turning_point) + " on decades from " +
                                   g(b.beyond.front().ell) + ": " + beyond});
        std::string window;
        for (const auto& s : b.window) window += (window.empty() ? "" : " ") + g(s.value);
        suite.lines.push_back({"window_alpha_" + g(alpha), b.window_increasing, true,
                               std::string(b.window_increasing ? "increasing" : "not increasing") +
                                   " on l = 10..1e5: " + window});
    }
    return suite;
}

}  // namespace rieszap::checks
