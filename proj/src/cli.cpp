#include "rieszap/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "rieszap/checks.hpp"
#include "rieszap/errors.hpp"
#include "rieszap/io.hpp"
#include "rieszap/parallel.hpp"

namespace rieszap::cli {

namespace {

constexpr std::size_t kMaxEigensolveSize = 4000;

std::int64_t parse_int(const std::string& s) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("not an integer: \"" + s + "\"");
    }
    if (used != s.size()) throw InvalidArgument("not an integer: \"" + s + "\"");
    return v;
}

double parse_real(const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("not a number: \"" + s + "\"");
    }
    if (used != s.size()) throw InvalidArgument("not a number: \"" + s + "\"");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        if (!cur.empty()) parts.push_back(cur);
    }
    return parts;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& p : split(text, ',')) out.push_back(parse_real(p));
    return out;
}

std::pair<double, double> parse_arc(const std::string& text) {
    const auto v = parse_real_list(text);
    if (v.size() != 2) throw InvalidArgument("arc must be \"start,end\", got \"" + text + "\"");
    return {v[0], v[1]};
}

IntervalSet set_from_options(const std::string& set_path, const std::vector<std::string>& arcs) {
    if (!set_path.empty() && !arcs.empty()) throw InvalidArgument("give either --set or --arc, not both");
    if (!set_path.empty()) return io::load_set(set_path);
    if (arcs.empty()) throw InvalidArgument("a set is required (--set FILE or --arc start,end)");
    std::vector<std::pair<double, double>> raw;
    for (const auto& a : arcs) raw.push_back(parse_arc(a));
    return IntervalSet::normalize(raw);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        io::write_text_file(path, text);
    }
}

std::string render(const report::Table& table, const std::string& format) {
    return format == "json" ? table.to_json().dump(2) + "\n" : table.to_csv();
}

ShiftScan scan_from(std::int64_t start, std::int64_t step, std::int64_t cap) {
    if (step < 1) throw InvalidArgument("--shift-step must be positive");
    if (cap < start) throw InvalidArgument("--shift-cap must be >= --shift-start");
    return {start, step, cap};
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    for (const auto& part : split(text, ',')) {
        const auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(part));
            continue;
        }
        const std::int64_t lo = parse_int(part.substr(0, dots));
        const std::int64_t hi = parse_int(part.substr(dots + 2));
        if (hi - lo > 10'000'000) throw InvalidArgument("range too long: \"" + part + "\"");
        for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
}

std::vector<Theorem1Cell> run_theorem1(double epsilon, std::int64_t l_max, const std::vector<std::int64_t>& ells,
                                       const std::vector<std::int64_t>& ns, unsigned threads) {
    const DeltaSchedule schedule(epsilon);
    if (ells.empty() || ns.empty()) throw InvalidArgument("theorem 1 grid needs at least one ell and one N");
    std::vector<std::pair<std::int64_t, std::int64_t>> keys;
    for (auto l : ells) {
        if (l < 1 || l > l_max) {
            throw InvalidArgument("ell=" + std::to_string(l) + " outside [1, " + std::to_string(l_max) + "]");
        }
        for (auto n : ns) {
            if (n < 1) throw InvalidArgument("N must be positive");
            keys.emplace_back(l, n);
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    const IntervalSet set = build_adversarial_set(schedule, l_max);
    std::vector<Theorem1Cell> cells(keys.size());
    // Cells are independent; each slot is written once.
    parallel_for(keys.size(), threads, [&](std::size_t i) {
        cells[i] = theorem1_demo(set, schedule, l_max, keys[i].first, keys[i].second, 1);
    });
    return cells;
}

report::Table theorem1_table(const std::vector<Theorem1Cell>& cells) {
    report::Table t({"ell", "N", "delta", "rayleigh_uniform", "tail_bound"});
    for (const auto& c : cells) t.add_row({c.ell, c.n, c.delta, c.rayleigh_uniform, c.tail_bound});
    return t;
}

report::Table theorem2_table(const LambdaBuild& build) {
    report::Table t({"k", "n_k", "shift", "cert_lambda_min", "schedule_target"});
    std::int64_t k = 1;
    for (const auto& b : build.blocks) t.add_row({k++, b.spec.n, b.spec.shift, b.cert_lambda_min, b.target});
    return t;
}

report::Table theorem3_table(const LambdaBuild& build) {
    report::Table t({"alpha", "N", "ell", "sum", "shift", "cert_lambda_min"});
    for (const auto& b : build.blocks) {
        t.add_row({b.alpha.value_or(0.0), b.spec.length, b.spec.step, b.step_sum.value_or(0.0), b.spec.shift,
                   b.cert_lambda_min});
    }
    return t;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rieszap: numerical Riesz bounds for exponential systems on unions of arcs"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads (output does not depend on it)")
        ->check(CLI::Range(1u, 256u));

    // set build / set info
    auto* set_cmd = app.add_subcommand("set", "build or inspect set files");
    set_cmd->require_subcommand(1);
    auto* set_build = set_cmd->add_subcommand("build", "write a set file");
    bool adversarial = false;
    double sb_epsilon = 0.25;
    std::int64_t sb_lmax = 64;
    std::vector<std::string> sb_arcs;
    std::string sb_out;
    set_build->add_flag("--adversarial", adversarial, "complement of the scaled periodized arcs, l = 1..L_max");
    set_build->add_option("--epsilon", sb_epsilon, "complement measure budget, in (0, 1)");
    set_build->add_option("--lmax", sb_lmax, "largest step l removed");
    set_build->add_option("--arc", sb_arcs, "explicit arc \"start,end\" (repeatable)");
    set_build->add_option("--out", sb_out, "output path (default: stdout)");

    auto* set_info = set_cmd->add_subcommand("info", "measure, arcs and leading Fourier coefficients");
    std::string si_set;
    std::int64_t si_coeffs = 4;
    std::string si_format = "json";
    set_info->add_option("--set", si_set, "set file")->required();
    set_info->add_option("--coeffs", si_coeffs, "print c(k) for 0 <= k <= K");
    set_info->add_option("--format", si_format)->check(CLI::IsMember({"json", "csv"}));

    // riesz
    auto* riesz_cmd = app.add_subcommand("riesz", "Riesz bounds of E(L) in L^2(S)");
    std::string r_set, r_freqs, r_ap, r_build, r_format = "json";
    std::vector<std::string> r_arcs;
    bool r_verify = false, r_uniform = false;
    riesz_cmd->add_option("--set", r_set, "set file (not needed with --build)");
    riesz_cmd->add_option("--arc", r_arcs, "explicit arc \"start,end\" (repeatable)");
    riesz_cmd->add_option("--freqs", r_freqs, "frequencies, e.g. \"0,1,5\" or \"1..8\"");
    riesz_cmd->add_option("--ap", r_ap, "progression \"shift,step,length\"");
    riesz_cmd->add_option("--build", r_build, "LambdaBuild file");
    riesz_cmd->add_flag("--verify", r_verify, "re-check every certificate of --build");
    riesz_cmd->add_flag("--uniform-rayleigh", r_uniform, "with --ap: uniform-vector Rayleigh quotient only");
    riesz_cmd->add_option("--format", r_format)->check(CLI::IsMember({"json", "csv"}));

    // thm1
    auto* thm1_cmd = app.add_subcommand("thm1", "adversarial set against progressions with small step");
    double t1_epsilon = 0.25;
    std::int64_t t1_lmax = 64;
    std::string t1_ells = "2,4,8", t1_ns = "256,1024,4096", t1_format = "csv", t1_out, t1_plot;
    thm1_cmd->add_option("--epsilon", t1_epsilon, "complement measure budget, in (0, 1)");
    thm1_cmd->add_option("--lmax", t1_lmax, "largest step removed from the set");
    thm1_cmd->add_option("--ells", t1_ells, "progression steps");
    thm1_cmd->add_option("--ns", t1_ns, "progression lengths");
    thm1_cmd->add_option("--format", t1_format)->check(CLI::IsMember({"json", "csv"}));
    thm1_cmd->add_option("--out", t1_out, "report path (default: stdout)");
    thm1_cmd->add_option("--plot", t1_plot, "SVG decay plot path");

    // thm2 / thm3 share set and scan options
    struct BuildOptions {
        std::string set;
        std::vector<std::string> arcs;
        std::int64_t shift_start = 0, shift_step = 1, shift_cap = 1'000'000;
        std::string format = "csv", out, build_out;
    };
    auto add_build_options = [](CLI::App* cmd, BuildOptions& o) {
        cmd->add_option("--set", o.set, "set file");
        cmd->add_option("--arc", o.arcs, "explicit arc \"start,end\" (repeatable)");
        cmd->add_option("--shift-start", o.shift_start, "first shift scanned");
        cmd->add_option("--shift-step", o.shift_step, "shift stride");
        cmd->add_option("--shift-cap", o.shift_cap, "last shift scanned");
        cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", o.out, "report path (default: stdout)");
        cmd->add_option("--build-out", o.build_out, "write the LambdaBuild JSON here");
    };

    auto* thm2_cmd = app.add_subcommand("thm2", "block/shift assembly, progressions with step O(N)");
    BuildOptions t2;
    std::int64_t t2_count = 3, t2_nmin = 1, t2_nmax = 2000;
    double t2_eps = 0.075;
    add_build_options(thm2_cmd, t2);
    thm2_cmd->add_option("--count", t2_count, "number of blocks");
    thm2_cmd->add_option("--eps", t2_eps, "good-n threshold, below |S|/4");
    thm2_cmd->add_option("--n-min", t2_nmin, "smallest n searched");
    thm2_cmd->add_option("--n-max", t2_nmax, "largest n searched");

    auto* thm3_cmd = app.add_subcommand("thm3", "diagonal assembly, progressions with step < N^alpha");
    BuildOptions t3;
    std::string t3_alphas = "1.5";
    std::vector<std::string> t3_ranges;
    add_build_options(thm3_cmd, t3);
    thm3_cmd->add_option("--alphas", t3_alphas, "strictly decreasing exponents > 1, e.g. \"2.0,1.5\"");
    thm3_cmd->add_option("--n-range", t3_ranges, "lengths N for each alpha, e.g. \"16,32\" or \"4..5\" (repeat per alpha)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "brute-force and invariant suites (exit 1 on violation)");
    verify_cmd->require_subcommand(1);
    std::int64_t v_limit4 = 100, v_limitd = 10000;
    double v_epsilon = 0.25;
    auto* v_lemma4 = verify_cmd->add_subcommand("lemma4", "pairwise disjointness of prime blocks");
    v_lemma4->add_option("--limit", v_limit4, "largest prime considered");
    auto* v_div = verify_cmd->add_subcommand("divisors", "sieves against trial division");
    v_div->add_option("--limit", v_limitd, "largest n checked");
    auto* v_sched = verify_cmd->add_subcommand("schedule", "delta schedule conditions");
    v_sched->add_option("--epsilon", v_epsilon, "in (0, 1)");

    std::vector<const char*> argv{"rieszap"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        if (set_build->parsed()) {
            IntervalSet set;
            if (adversarial) {
                if (!sb_arcs.empty()) throw InvalidArgument("--adversarial and --arc are exclusive");
                set = build_adversarial_set(DeltaSchedule(sb_epsilon), sb_lmax);
            } else {
                set = set_from_options("", sb_arcs);
            }
            const std::string text = io::set_to_json(set).dump(2) + "\n";
            if (sb_out.empty()) {
                out << text;
            } else {
                io::write_text_file(sb_out, text);
                out << io::Json{{"path", sb_out}, {"measure", set.measure()}, {"arcs", set.arcs().size()}}.dump()
                    << "\n";
            }
            return kOk;
        }

        if (set_info->parsed()) {
            if (si_coeffs < 0) throw InvalidArgument("--coeffs must be >= 0");
            const IntervalSet set = io::load_set(si_set);
            const CoefficientTable table = fourier_table(set, si_coeffs, threads);
            report::Table coeffs({"k", "re", "im", "abs"});
            for (std::int64_t k = 0; k <= si_coeffs; ++k) {
                const Complex c = table(k);
                coeffs.add_row({k, c.real(), c.imag(), std::abs(c)});
            }
            if (si_format == "csv") {
                out << coeffs.to_csv();
            } else {
                io::Json j{{"measure", set.measure()}, {"arcs", set.arcs().size()}, {"coefficients", coeffs.to_json()}};
                out << j.dump(2) << "\n";
            }
            return kOk;
        }

        if (riesz_cmd->parsed()) {
            const int sources = !r_freqs.empty() + !r_ap.empty() + !r_build.empty();
            if (sources != 1) throw InvalidArgument("give exactly one of --freqs, --ap, --build");
            if (r_verify && r_build.empty()) throw InvalidArgument("--verify needs --build");
            if (r_uniform && r_ap.empty()) throw InvalidArgument("--uniform-rayleigh needs --ap");

            std::optional<LambdaBuild> build;
            IntervalSet set;
            std::optional<FrequencySet> freqs;
            if (!r_build.empty()) {
                if (!r_set.empty() || !r_arcs.empty()) throw InvalidArgument("--build carries its own set");
                build = io::load_build(r_build);
                set = build->set;
                freqs = build->frequencies();
            } else {
                set = set_from_options(r_set, r_arcs);
            }

            if (!r_ap.empty()) {
                const auto v = parse_int_list(r_ap);
                if (v.size() != 3) throw InvalidArgument("--ap must be \"shift,step,length\"");
                if (r_uniform) {
                    const double q = uniform_rayleigh_progression(set, v[1], v[2], threads);
                    io::Json j{{"method", "uniform_rayleigh"}, {"rayleigh_uniform", q}, {"size", v[2]}};
                    if (r_format == "csv") {
                        out << "method,rayleigh_uniform,size\nuniform_rayleigh," << report::format_real(q) << ","
                            << v[2] << "\n";
                    } else {
                        out << j.dump(2) << "\n";
                    }
                    return kOk;
                }
                freqs = FrequencySet::progression(v[0], v[1], v[2]);
            } else if (!r_freqs.empty()) {
                freqs = FrequencySet(parse_int_list(r_freqs));
            }
            if (freqs->size() > kMaxEigensolveSize) {
                throw InvalidArgument("system of size " + std::to_string(freqs->size()) +
                                      " is too large for a dense eigensolve; use --ap with --uniform-rayleigh");
            }

            const RieszReport rep = riesz_report(set, *freqs, threads);
            int code = kOk;
            io::Json j = io::report_to_json(rep);
            j["method"] = "eigensolve";
            if (r_verify) {
                const BuildVerification v = verify_lambda_build(*build, 1e-9, threads);
                j["verification"] = io::Json{{"ok", v.ok}, {"recomputed", v.recomputed}, {"failure", v.failure}};
                if (!v.ok) {
                    err << "certificate mismatch: " << v.failure << "\n";
                    code = kSearchFailure;
                }
            }
            if (r_format == "csv") {
                report::Table t({"lower", "upper", "cs_lower", "offdiag_energy", "size"});
                t.add_row({rep.lower, rep.upper, rep.cs_lower, rep.offdiag_energy,
                           static_cast<std::int64_t>(rep.size)});
                out << t.to_csv();
            } else {
                out << j.dump(2) << "\n";
            }
            return code;
        }

        if (thm1_cmd->parsed()) {
            const auto cells = run_theorem1(t1_epsilon, t1_lmax, parse_int_list(t1_ells), parse_int_list(t1_ns), threads);
            emit(render(theorem1_table(cells), t1_format), t1_out, out);
            if (!t1_plot.empty()) {
                std::vector<report::Series> series;
                for (auto l : parse_int_list(t1_ells)) {
                    report::Series r{"l=" + std::to_string(l) + " rayleigh", {}, {}, false};
                    report::Series b{"l=" + std::to_string(l) + " bound", {}, {}, true};
                    for (const auto& c : cells) {
                        if (c.ell != l) continue;
                        r.x.push_back(static_cast<double>(c.n));
                        r.y.push_back(c.rayleigh_uniform);
                        b.x.push_back(static_cast<double>(c.n));
                        b.y.push_back(c.tail_bound);
                    }
                    if (r.x.empty()) continue;
                    series.push_back(std::move(r));
                    series.push_back(std::move(b));
                }
                try {
                    io::write_text_file(t1_plot, report::svg_loglog_chart("Uniform Rayleigh quotient on the adversarial set",
                                                                          "N", "energy", series));
                } catch (const Error& e) {
                    err << "warning: plot not written: " << e.what() << "\n";
                }
            }
            return kOk;
        }

        if (thm2_cmd->parsed()) {
            if (t2_count < 1) throw InvalidArgument("--count must be positive");
            const IntervalSet set = set_from_options(t2.set, t2.arcs);
            Thm2Config cfg;
            cfg.eps = t2_eps;
            cfg.n_lo = t2_nmin;
            cfg.n_hi = t2_nmax;
            cfg.scan = scan_from(t2.shift_start, t2.shift_step, t2.shift_cap);
            cfg.threads = threads;
            const LambdaBuild build = build_lambda_thm2(set, static_cast<std::size_t>(t2_count), cfg);
            emit(render(theorem2_table(build), t2.format), t2.out, out);
            if (!t2.build_out.empty()) io::write_text_file(t2.build_out, io::build_to_json(build).dump(2) + "\n");
            return kOk;
        }

        if (thm3_cmd->parsed()) {
            const IntervalSet set = set_from_options(t3.set, t3.arcs);
            Thm3Config cfg;
            cfg.alphas = parse_real_list(t3_alphas);
            for (const auto& r : t3_ranges) cfg.lengths.push_back(parse_int_list(r));
            cfg.scan = scan_from(t3.shift_start, t3.shift_step, t3.shift_cap);
            cfg.threads = threads;
            const LambdaBuild build = build_lambda_thm3(set, cfg);
            emit(render(theorem3_table(build), t3.format), t3.out, out);
            if (!t3.build_out.empty()) io::write_text_file(t3.build_out, io::build_to_json(build).dump(2) + "\n");
            return kOk;
        }

        if (verify_cmd->parsed()) {
            checks::CheckSuite suite;
            if (v_lemma4->parsed()) {
                suite = checks::lemma4_suite(v_limit4);
            } else if (v_div->parsed()) {
                suite = checks::divisor_suite(v_limitd);
            } else {
                suite = checks::schedule_suite(v_epsilon);
            }
            out << suite.to_text();
            return suite.passed() ? kOk : kPropertyViolation;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const SearchError& e) {
        err << "search failed: " << e.what() << "\n";
        return kSearchFailure;
    } catch (const ConvergenceError& e) {
        err << "eigensolver failed: " << e.what() << "\n";
        return kSearchFailure;
    }
    err << "error: no command\n";
    return kInvalidInput;
}

}  // namespace rieszap::cli
