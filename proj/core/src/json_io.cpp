#include "cauchy/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cauchy::io {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) {
        throw Error("input is not valid JSON");
    }
    return parsed;
}

int require_int(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer()) {
        throw Error(std::string("field \"") + field +
                    "\" must be present and integral");
    }
    return j[field].get<int>();
}

json pair_to_json(const SpectralPair& pair) {
    json out;
    out["kind"] = pair.kind == EigKind::H ? "H" : "Z";
    out["lambda"] = pair.lambda;
    out["x"] = pair.x;
    out["residual"] = pair.residual;
    out["iterations"] = pair.iterations;
    out["converged"] = pair.converged;
    return out;
}

}  // namespace

GeneratingVector parse_generating_vector(const std::string& json_text) {
    const json j = parse_or_throw(json_text);
    if (!j.is_object()) {
        throw Error("expected a JSON object with \"c\"/\"m\" or \"n\"/\"m\"");
    }
    const int m = require_int(j, "m");
    if (j.contains("c")) {
        if (!j["c"].is_array() || j["c"].empty()) {
            throw Error("field \"c\" must be a nonempty array of reals");
        }
        std::vector<double> c;
        c.reserve(j["c"].size());
        for (const auto& v : j["c"]) {
            if (!v.is_number()) {
                throw Error("field \"c\" must contain numbers only");
            }
            c.push_back(v.get<double>());
        }
        return GeneratingVector(std::move(c), m);
    }
    if (j.contains("n")) {
        const int n = require_int(j, "n");
        if (j.contains("hilbert") && j["hilbert"].is_boolean() &&
            !j["hilbert"].get<bool>()) {
            throw Error("{\"n\", \"m\"} input is only used for Hilbert tensors;"
                        " pass \"c\" for an explicit generating vector");
        }
        return hilbert_generating_vector(n, m);
    }
    throw Error("expected either field \"c\" (explicit entries) or \"n\""
                " (Hilbert)");
}

GeneratingVector load_generating_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open input file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_generating_vector(buffer.str());
}

std::string dump_tensor_json(const SymmetricTensor& t) {
    json entries = json::array();
    const std::size_t count = t.canonical_size();
    for (std::size_t pos = 0; pos < count; ++pos) {
        const auto tuple = t.tuple_at(pos);
        json idx = json::array();
        for (int v : tuple) idx.push_back(v + 1);
        entries.push_back({{"idx", std::move(idx)}, {"value", t.value_at(pos)}});
    }
    json out;
    out["order"] = t.order();
    out["dim"] = t.dimension();
    out["entries"] = std::move(entries);
    return out.dump(2);
}

TensorDump parse_tensor_dump(const std::string& json_text) {
    const json j = parse_or_throw(json_text);
    TensorDump dump;
    dump.order = require_int(j, "order");
    dump.dim = require_int(j, "dim");
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw Error("field \"entries\" must be an array");
    }
    for (const auto& e : j["entries"]) {
        if (!e.contains("idx") || !e["idx"].is_array() || !e.contains("value") ||
            !e["value"].is_number()) {
            throw Error("each entry needs an \"idx\" array and a numeric"
                        " \"value\"");
        }
        std::vector<int> idx;
        for (const auto& v : e["idx"]) idx.push_back(v.get<int>());
        dump.entries.emplace_back(std::move(idx), e["value"].get<double>());
    }
    return dump;
}

std::string definiteness_report_json(const DefinitenessReport& report,
                                     const RowSumProfile* profile) {
    json out;
    out["classification"] = to_string(report.classification);
    out["witness"] = report.witness;
    json dups = json::array();
    for (const auto& [i, j2] : report.duplicate_pairs) {
        dups.push_back({i + 1, j2 + 1});
    }
    out["duplicates"] = std::move(dups);
    if (profile != nullptr) {
        out["row_sums"] = profile->row_sums;
        out["R"] = profile->max_row_sum;
        out["r"] = profile->min_row_sum;
        out["argmax_row"] = profile->argmax_row + 1;
        out["argmin_row"] = profile->argmin_row + 1;
    }
    return out.dump(2);
}

std::string spectral_pair_json(const SpectralPair& pair) {
    return pair_to_json(pair).dump(2);
}

std::string spectral_pairs_json(const std::vector<SpectralPair>& pairs) {
    json out = json::array();
    for (const auto& pair : pairs) out.push_back(pair_to_json(pair));
    return out.dump(2);
}

std::string bounds_report_json(const BoundsReport& report) {
    json out;
    json lemma;
    lemma["applicable"] = report.lemma31.applicable;
    lemma["reason"] = report.lemma31.reason;
    out["lemma31"] = std::move(lemma);
    json thm;
    thm["applicable"] = report.thm31.applicable;
    thm["reason"] = report.thm31.reason;
    out["thm31"] = std::move(thm);
    if (report.lemma31_lower_cap) {
        out["lemma31_lower_cap"] = *report.lemma31_lower_cap;
    }
    if (report.lemma31_upper_floor) {
        out["lemma31_upper_floor"] = *report.lemma31_upper_floor;
    }
    if (report.thm31_lower) out["thm31_lower"] = *report.thm31_lower;
    if (report.thm31_upper) out["thm31_upper"] = *report.thm31_upper;
    return out.dump(2);
}

std::string verify_report_json(const verify::Report& report,
                               std::uint64_t seed) {
    json checks = json::array();
    for (const auto& check : report.checks) {
        checks.push_back({{"tag", check.tag},
                          {"status", verify::to_string(check.status)},
                          {"detail", check.detail}});
    }
    json out;
    out["suite"] = report.suite;
    out["seed"] = seed;
    out["checks"] = std::move(checks);
    out["passes"] = report.passes;
    out["failures"] = report.failures;
    out["skipped"] = report.skipped;
    return out.dump(2);
}

std::string build_summary_json(const SymmetricTensor& t, bool hankel,
                               const BuildDiagnostics& diagnostics) {
    json out;
    out["order"] = t.order();
    out["dim"] = t.dimension();
    out["canonical_entries"] = t.canonical_size();
    out["hankel_compatible"] = hankel;
    json warnings = json::array();
    for (const auto& w : diagnostics.near_singular) {
        json idx = json::array();
        for (int v : w.indices) idx.push_back(v + 1);
        warnings.push_back({{"idx", std::move(idx)}, {"sum", w.sum}});
    }
    out["near_singular"] = std::move(warnings);
    out["near_singular_threshold"] = diagnostics.threshold;
    return out.dump(2);
}

}  // namespace cauchy::io
