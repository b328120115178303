#include "hk/report.hpp"

#include <algorithm>
#include <vector>

namespace hk {

namespace {

Json readings_json(const std::vector<ReadingOutcome>& readings) {
    Json out = Json::array();
    for (const auto& r : readings) out.push_back({{"label", r.label}, {"value", to_json(r.value)}, {"matches", r.matches}});
    return out;
}

std::string csv_field(const Json& v) {
    std::string s;
    if (v.is_null())
        return "";
    else if (v.is_string())
        s = v.get<std::string>();
    else
        s = v.dump();
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

}  // namespace

Json to_json(const Scalar& v) { return v.to_string(); }

Json to_json(const SweepCell& c) {
    Json j;
    j["id"] = std::string(closed_form_name(c.id));
    j["family"] = std::string(family_name(c.family));
    j["m"] = c.m;
    j["k"] = c.k;
    j["size"] = c.size;
    j["point"] = c.point;
    j["params"] = c.params;
    j["method"] = c.method;
    j["predicted"] = to_json(c.predicted);
    j["computed"] = to_json(c.computed);
    j["verdict"] = std::string(verdict_name(c.verdict));
    j["readings"] = readings_json(c.readings);
    return j;
}

Json to_json(const SweepSummary& s) {
    return {{"cells", s.cells}, {"matches", s.matches}, {"mismatches", s.mismatches}, {"truncated", s.truncated}};
}

Json to_json(const ConjectureCell& c, ConjectureId id) {
    Json j;
    j["id"] = std::string(conjecture_name(id));
    j["quantity"] = c.quantity;
    j["params"] = c.params;
    j["predicted"] = c.verdict == Verdict::inapplicable ? Json() : to_json(c.predicted);
    j["computed"] = c.verdict == Verdict::inapplicable ? Json() : to_json(c.computed);
    j["verdict"] = std::string(verdict_name(c.verdict));
    j["readings"] = readings_json(c.readings);
    j["backing"] = c.backing;
    j["backing_value"] = c.theorem_backed() ? to_json(c.backing_value) : Json();
    j["note"] = c.note;
    return j;
}

Json to_json(const ConjectureSummary& s) {
    return {{"cells", s.cells},
            {"matches", s.matches},
            {"mismatches", s.mismatches},
            {"inapplicable", s.inapplicable},
            {"theorem_backed", s.backed},
            {"theorem_backed_failures", s.backed_failures},
            {"truncated", s.truncated}};
}

std::string to_csv(const Json& cells) {
    std::vector<std::string> columns;
    for (const auto& row : cells)
        for (const auto& [key, value] : row.items())
            if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    std::string out;
    auto emit_row = [&](auto field) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out += ',';
            out += field(columns[i]);
        }
        out += '\n';
    };
    emit_row([](const std::string& c) { return csv_field(Json(c)); });
    for (const auto& row : cells)
        emit_row([&](const std::string& c) { return row.contains(c) ? csv_field(row.at(c)) : std::string(); });
    return out;
}

}  // namespace hk
