#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rieszap::checks {

struct CheckLine {
    std::string name;
    bool passed = true;
    bool informational = false;  // reported, never fails the suite
    std::string detail;
};

struct CheckSuite {
    std::string name;
    std::vector<CheckLine> lines;

    bool passed() const;
    std::string to_text() const;
};

// Brute-force disjointness of B_p for primes p <= limit, plus detection of
// the composite overlap B_2 n B_4 = {4}.
CheckSuite lemma4_suite(std::int64_t limit);

// Sieves against trial division for n <= limit; hyperbola identity
// sum_{k<=K} d(k) = sum_{l<=K} floor(K/l) at K in {10, 100, 1000} (K <= limit).
CheckSuite divisor_suite(std::int64_t limit);

// Delta schedule: condition (a) with cutoff 10^6; monotone decrease and
// delta(l) < 1/(2l) on l <= 10^5; condition (b) growth for alpha in {0.5, 0.75, 0.9}.
CheckSuite schedule_suite(double epsilon);

// Independent reference routines for the sieves.
bool is_prime_trial(std::int64_t n);
std::int64_t divisor_count_trial(std::int64_t n);

}  // namespace rieszap::checks
