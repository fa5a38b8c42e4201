#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rieszap/constructions.hpp"
#include "rieszap/report.hpp"

namespace rieszap::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyViolation = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kSearchFailure = 3;

// Theorem 1 grid: one cell per (ell, N), sorted by ell then N.
std::vector<Theorem1Cell> run_theorem1(double epsilon, std::int64_t l_max, const std::vector<std::int64_t>& ells,
                                       const std::vector<std::int64_t>& ns, unsigned threads);

// Columns: ell, N, delta, rayleigh_uniform, tail_bound
report::Table theorem1_table(const std::vector<Theorem1Cell>& cells);
// Columns: k, n_k, shift, cert_lambda_min, schedule_target
report::Table theorem2_table(const LambdaBuild& build);
// Columns: alpha, N, ell, sum, shift, cert_lambda_min
report::Table theorem3_table(const LambdaBuild& build);

// Parses "4..7", "16,32" or a mix such as "4..5,9".
std::vector<std::int64_t> parse_int_list(const std::string& text);

// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rieszap::cli
