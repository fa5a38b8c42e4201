// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Eigenvalues>

#include "../support/oracles.hpp"
#include "rieszap/checks.hpp"
#include "rieszap/cli.hpp"
#include "rieszap/constructions.hpp"
#include "rieszap/io.hpp"
#include "rieszap/numtheory.hpp"
#include "rieszap/parallel.hpp"
#include "rieszap/spectral.hpp"

using namespace rieszap;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

unsigned hw_threads() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

const oracle::RawArcs kArc03{{0.0, 0.3}};

// 1. closed form vs 10^5-cell midpoint quadrature per arc
Outcome fourier_oracle() {
    constexpr int kSets = 100, kMaxK = 64;
    std::mt19937_64 rng(20240601);
    std::vector<oracle::RawArcs> sets(kSets);
    for (auto& s : sets) s = oracle::random_arcs(rng, 3);
    std::vector<double> worst(kSets, 0.0);
    std::vector<int> exact_conj(kSets, 1);
    parallel_for(kSets, hw_threads(), [&](std::size_t i) {
        const auto set = IntervalSet::normalize(sets[i]);
        const auto q = oracle::midpoint_coeffs(sets[i], kMaxK, 100000);
        for (int k = 0; k <= kMaxK; ++k) {
            const Complex p = fourier_coeff(set, k), m = fourier_coeff(set, -k);
            worst[i] = std::max({worst[i], std::abs(p - q[k]), std::abs(m - std::conj(q[k]))});
            if (m != std::conj(p)) exact_conj[i] = 0;
        }
    });
    const double err = *std::max_element(worst.begin(), worst.end());
    const bool conj_ok = std::all_of(exact_conj.begin(), exact_conj.end(), [](int v) { return v == 1; });
    return {err < 1e-8 && conj_ok,
            "max |closed - quadrature| = " + fmt("%.3g", err) + " over 100 sets, |k| <= 64" +
                (conj_ok ? "" : "; conjugate symmetry not exact")};
}

// 2. Gram invariants on 200 random (S, L)
Outcome gram_invariants() {
    std::mt19937_64 rng(777);
    int bad = 0;
    std::string first;
    double worst_oracle = 0.0;
    for (int t = 0; t < 200; ++t) {
        const auto raw = oracle::random_arcs(rng, 3);
        const auto s = IntervalSet::normalize(raw);
        std::uniform_int_distribution<int> size(2, 30);
        std::uniform_int_distribution<std::int64_t> val(-200, 200);
        std::vector<std::int64_t> f;
        const int m = size(rng);
        while (static_cast<int>(f.size()) < m) {
            const auto v = val(rng);
            if (std::find(f.begin(), f.end(), v) == f.end()) f.push_back(v);
        }
        const FrequencySet freqs(f);
        const auto g = gram(s, freqs);
        const auto e = extreme_eigs(g);
        const auto r = riesz_report(s, freqs);

        std::vector<std::string> fails;
        if (!(e.lambda_min >= -1e-9)) fails.push_back("psd");
        if (!(e.lambda_min <= s.measure() + 1e-12 && s.measure() <= e.lambda_max + 1e-12)) fails.push_back("sandwich");
        if (gram(s, freqs.shifted(1'000'003)).entries() != g.entries()) fails.push_back("translation");
        if (!(e.lambda_min >= s.measure() - std::sqrt(r.offdiag_energy) - 1e-9)) fails.push_back("cs_bound");

        // Cauchy interlacing for the principal submatrix dropping the last frequency
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> full(g.entries(), Eigen::EigenvaluesOnly);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sub(g.entries().topLeftCorner(m - 1, m - 1),
                                                            Eigen::EigenvaluesOnly);
        for (int i = 0; i + 1 < m; ++i) {
            const double a = full.eigenvalues()(i), b = sub.eigenvalues()(i), c = full.eigenvalues()(i + 1);
            if (!(a <= b + 1e-12 && b <= c + 1e-12)) {
                fails.push_back("interlacing");
                break;
            }
        }

        const auto ev = oracle::hermitian_eigenvalues(oracle::gram(raw, f), f.size());
        worst_oracle = std::max({worst_oracle, std::abs(ev.front() - e.lambda_min), std::abs(ev.back() - e.lambda_max)});

        if (!fails.empty()) {
            ++bad;
            if (first.empty()) first = "instance " + std::to_string(t) + ": " + fails.front();
        }
    }
    const bool oracle_ok = worst_oracle < 1e-9;
    return {bad == 0 && oracle_ok, std::to_string(200 - bad) + "/200 instances hold all invariants; |eig - jacobi| <= " +
                                       fmt("%.2g", worst_oracle) + (first.empty() ? "" : "; first failure " + first)};
}

// 3. adversarial set against progressions with small step
const std::vector<std::int64_t> kEll{2, 4, 8}, kN{256, 1024, 4096};

Outcome theorem1() {
    const auto cells = cli::run_theorem1(0.25, 64, kEll, kN, hw_threads());
    const DeltaSchedule schedule(0.25);
    bool ok = cells.size() == 9;
    double worst_gap = -1e300, n4096 = 0.0;
    for (const auto& c : cells) {
        const double bound = 2.0 / (std::numbers::pi * static_cast<double>(c.n)) /
                             std::tan(std::numbers::pi * schedule(c.ell));
        worst_gap = std::max(worst_gap, c.rayleigh_uniform - bound);
        if (!(c.rayleigh_uniform <= bound + 1e-9)) ok = false;
        if (c.n == 4096 && c.ell <= 4) {
            n4096 = std::max(n4096, c.rayleigh_uniform);
            if (!(c.rayleigh_uniform < 0.05)) ok = false;
        }
    }
    // frozen values for the N = 4096 column
    const std::vector<double> frozen{0.0008715968128109042, 0.0036595564985659745, 0.01354789430078418};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& c = cells[3 * i + 2];
        if (std::abs(c.rayleigh_uniform - frozen[i]) > 1e-9 * frozen[i] + 1e-15) ok = false;
    }
    return {ok, "max(rayleigh - bound) = " + fmt("%.3g", worst_gap) + "; N=4096, l<=4 max rayleigh " +
                    fmt("%.6g", n4096) + " < 0.05"};
}

// 4. block/shift build on a single arc of measure 0.3
Outcome theorem2() {
    const auto set = IntervalSet::normalize(kArc03);
    const auto table = fourier_table(set, 2000 * 2000, hw_threads());
    const auto hits = good_n_search(table, 0.075, 1, 2000);

    Thm2Config cfg;
    cfg.threads = hw_threads();
    const auto build = build_lambda_thm2(set, 3, cfg);
    bool ok = hits.size() >= 3 && build.blocks.size() == 3;
    double min_cert = 1e300;
    for (std::size_t k = 1; k <= build.blocks.size(); ++k) {
        const double l = extreme_eigs(gram(set, build.partial_union(k))).lambda_min;
        min_cert = std::min(min_cert, l);
        if (!(l >= 0.075)) ok = false;
    }

    // round trip through a build file and the riesz --verify command
    const auto dir = std::filesystem::temp_directory_path() / "rieszap_acceptance";
    std::filesystem::create_directories(dir);
    const auto path = dir / "thm2_build.json";
    io::write_text_file(path, io::build_to_json(build).dump(2));
    std::ostringstream out, err;
    const int code = cli::run({"riesz", "--build", path.string(), "--verify"}, out, err);
    double worst = 0.0;
    if (code != cli::kOk) {
        ok = false;
    } else {
        const auto j = io::Json::parse(out.str());
        const auto& rec = j["verification"]["recomputed"];
        if (rec.size() != build.blocks.size()) ok = false;
        for (std::size_t k = 0; k < rec.size() && k < build.blocks.size(); ++k) {
            worst = std::max(worst, std::abs(rec[k].get<double>() - build.blocks[k].cert_lambda_min));
        }
        if (!(worst <= 1e-9)) ok = false;
    }
    return {ok, std::to_string(hits.size()) + " good n <= 2000; min certified lambda_min " + fmt("%.6g", min_cert) +
                    " >= 0.075; verify exit " + std::to_string(code) + ", max drift " + fmt("%.2g", worst)};
}

// 5. divisor-averaged build, alpha = 1.5, N in {16, 32}
Outcome theorem3() {
    const auto set = IntervalSet::normalize(kArc03);
    const auto table = fourier_table(set, step_bound(32, 1.5) * 32, hw_threads());
    bool ok = true;
    std::string detail;
    for (std::int64_t n : {16, 32}) {
        const auto r = step_search_alpha(table, 1.5, n);
        if (!(static_cast<double>(r.ell) < std::pow(static_cast<double>(n), 1.5))) ok = false;
        if (!(r.averaging_lhs <= r.averaging_rhs + 1e-12)) ok = false;
        detail += "N=" + std::to_string(n) + ": l=" + std::to_string(r.ell) + ", LHS " + fmt("%.6g", r.averaging_lhs) +
                  " <= RHS " + fmt("%.6g", r.averaging_rhs) + "; ";
    }
    Thm3Config cfg;
    cfg.alphas = {1.5};
    cfg.lengths = {{16, 32}};
    cfg.threads = hw_threads();
    const auto build = build_lambda_thm3(set, cfg);
    double min_cert = 1e300;
    for (std::size_t k = 1; k <= build.blocks.size(); ++k) {
        min_cert = std::min(min_cert, extreme_eigs(gram(set, build.partial_union(k))).lambda_min);
    }
    if (build.blocks.size() != 2 || !(min_cert >= 0.075)) ok = false;
    return {ok, detail + "min certified lambda_min " + fmt("%.6g", min_cert)};
}

// 6. prime blocks are disjoint, composite blocks are not
Outcome lemma4() {
    const auto suite = checks::lemma4_suite(100);
    const auto r = prime_blocks_disjoint(100);
    const std::vector<std::int64_t> comp{2, 4};
    const auto c = blocks_disjoint(comp);
    const bool ok = suite.passed() && r.disjoint && !c.disjoint && c.shared == 4;
    return {ok, std::to_string(r.blocks_checked) + " prime blocks pairwise disjoint; B_2 and B_4 share " +
                    (c.shared ? std::to_string(*c.shared) : std::string("nothing"))};
}

// 7. sieves vs trial division, hyperbola identity
Outcome divisors() {
    const auto suite = checks::divisor_suite(10000);
    int lines = 0;
    for (const auto& l : suite.lines) lines += l.informational ? 0 : 1;
    return {suite.passed() && lines == 5, std::to_string(lines) + " exact checks (n <= 10^4; K = 10, 100, 1000)"};
}

// 8. byte-identical CSV with 1 and 8 threads
Outcome determinism() {
    const std::vector<std::vector<std::string>> runs{
        {"thm1", "--epsilon", "0.25", "--lmax", "64", "--ells", "2,4,8", "--ns", "256,1024,4096"},
        {"thm2", "--arc", "0,0.3", "--count", "3", "--eps", "0.075", "--n-max", "2000"},
        {"thm3", "--arc", "0,0.3", "--alphas", "1.5", "--n-range", "16,32"},
    };
    bool ok = true;
    std::string detail;
    for (const auto& args : runs) {
        std::string csv[2];
        int codes[2];
        for (int t = 0; t < 2; ++t) {
            auto a = args;
            a.push_back("--threads");
            a.push_back(t == 0 ? "1" : "8");
            std::ostringstream out, err;
            codes[t] = cli::run(a, out, err);
            csv[t] = out.str();
        }
        const bool same = codes[0] == 0 && codes[1] == 0 && csv[0] == csv[1] && !csv[0].empty();
        ok = ok && same;
        detail += args[0] + (same ? " identical" : " DIFFERS") + " (" + std::to_string(csv[0].size()) + " bytes); ";
    }
    return {ok, detail};
}

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "fourier oracle equivalence", 10, fourier_oracle},
        {2, "gram invariants", 30, gram_invariants},
        {3, "theorem 1 demo", 60, theorem1},
        {4, "theorem 2 build", 120, theorem2},
        {5, "theorem 3 build", 60, theorem3},
        {6, "lemma 4 brute force", 1, lemma4},
        {7, "divisor suite", 5, divisors},
        {8, "determinism across thread counts", 240, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.limit_s;
        const bool pass = o.passed && in_time;
        failed += pass ? 0 : 1;
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "  [" << fmt("%.2f", secs)
                  << " s, limit " << fmt("%.0f", c.limit_s) << " s" << (in_time ? "" : ", TOO SLOW") << "]  "
                  << o.detail << std::endl;
    }
    std::cout << (failed == 0 ? "PASS" : "FAIL") << "  acceptance: " << (criteria.size() - failed) << "/"
              << criteria.size() << " criteria" << std::endl;
    return failed == 0 ? 0 : 1;
}
