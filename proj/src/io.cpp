#include "rieszap/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "rieszap/errors.hpp"

namespace rieszap::io {

namespace {

template <class T>
T required(const Json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidArgument(std::string(where) + ": missing field \"" + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InvalidArgument(std::string(where) + ": field \"" + key + "\" has the wrong type");
    }
}

}  // namespace

Json set_to_json(const IntervalSet& set) {
    Json arcs = Json::array();
    for (const Arc& a : set.arcs()) arcs.push_back(Json::array({a.start, a.end}));
    return Json{{"arcs", arcs}};
}

IntervalSet set_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("arcs") || !j.at("arcs").is_array()) {
        throw InvalidArgument("set file: expected {\"arcs\": [[start, end], ...]}");
    }
    std::vector<std::pair<double, double>> raw;
    for (const Json& pair : j.at("arcs")) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw InvalidArgument("set file: each arc must be a [start, end] pair of numbers");
        }
        const double a = pair[0].get<double>();
        const double b = pair[1].get<double>();
        if (a < 0.0 || a > 1.0 || b < 0.0 || b > 1.0) {
            throw InvalidArgument("set file: coordinates must lie in [0, 1]");
        }
        raw.emplace_back(a, b);
    }
    return IntervalSet::normalize(raw);
}

IntervalSet load_set(const std::filesystem::path& path) { return set_from_json(read_json_file(path)); }

void save_set(const std::filesystem::path& path, const IntervalSet& set) {
    write_text_file(path, set_to_json(set).dump(2) + "\n");
}

Json report_to_json(const RieszReport& r) {
    return Json{{"lower", r.lower},
                {"upper", r.upper},
                {"cs_lower", r.cs_lower},
                {"offdiag_energy", r.offdiag_energy},
                {"size", r.size}};
}

Json build_to_json(const LambdaBuild& build, const std::optional<std::string>& set_ref) {
    Json blocks = Json::array();
    for (const LambdaBlock& b : build.blocks) {
        Json e{{"n", b.spec.n},
               {"step", b.spec.step},
               {"length", b.spec.length},
               {"shift", b.spec.shift},
               {"cert_lambda_min", b.cert_lambda_min},
               {"target", b.target}};
        if (b.alpha) e["alpha"] = *b.alpha;
        if (b.step_sum) e["step_sum"] = *b.step_sum;
        blocks.push_back(std::move(e));
    }
    Json out{{"gamma", build.gamma}, {"blocks", blocks}};
    if (set_ref) {
        out["set"] = *set_ref;
    } else {
        out["set"] = set_to_json(build.set);
    }
    return out;
}

LambdaBuild build_from_json(const Json& j, const std::filesystem::path& base_dir) {
    constexpr const char* where = "build file";
    LambdaBuild build;
    build.gamma = required<double>(j, "gamma", where);
    if (!j.contains("set")) throw InvalidArgument("build file: missing field \"set\"");
    const Json& set = j.at("set");
    if (set.is_string()) {
        build.set = load_set(base_dir / set.get<std::string>());
    } else {
        build.set = set_from_json(set);
    }
    if (!j.contains("blocks") || !j.at("blocks").is_array()) {
        throw InvalidArgument("build file: \"blocks\" must be an array");
    }
    for (const Json& e : j.at("blocks")) {
        LambdaBlock b;
        b.spec.n = required<std::int64_t>(e, "n", "build block");
        b.spec.step = required<std::int64_t>(e, "step", "build block");
        b.spec.length = required<std::int64_t>(e, "length", "build block");
        b.spec.shift = required<std::int64_t>(e, "shift", "build block");
        b.cert_lambda_min = required<double>(e, "cert_lambda_min", "build block");
        b.target = e.contains("target") ? required<double>(e, "target", "build block") : build.gamma / 2.0;
        if (e.contains("alpha")) b.alpha = required<double>(e, "alpha", "build block");
        if (e.contains("step_sum")) b.step_sum = required<double>(e, "step_sum", "build block");
        build.blocks.push_back(b);
    }
    return build;
}

LambdaBuild load_build(const std::filesystem::path& path) {
    return build_from_json(read_json_file(path), path.parent_path());
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    out << text;
}

}  // namespace rieszap::io
