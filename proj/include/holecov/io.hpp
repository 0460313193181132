#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "holecov/error.hpp"
#include "holecov/healing.hpp"
#include "holecov/hole_analysis.hpp"
#include "holecov/sensor_field.hpp"

// Scenario and report documents. Keys are emitted in sorted order and every
// floating value is cut to 9 significant digits, so parse ∘ serialize is the
// identity on anything this module wrote.

namespace holecov {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct ScenarioFile {
    SensorField field;
    json meta = json::object();

    friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

struct TriangleRecord {
    CellId id;
    std::array<SensorId, 3> vertices{};
    CaseLabel label = CaseLabel::A;
    double s_h = 0.0;
    HoleMethod method = HoleMethod::CaseFormula;
    bool is_hole = false;

    friend bool operator==(const TriangleRecord&, const TriangleRecord&) = default;
};

struct PlanRecord {
    double mobile_radius = 0.0;
    HealingPlan plan;

    friend bool operator==(const PlanRecord&, const PlanRecord&) = default;
};

/// Covered fractions before and after healing; `half_width` combines the two
/// 99% half-widths in quadrature.
struct VerifyRecord {
    double before = 0.0;
    double after = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double half_width = 0.0;

    friend bool operator==(const VerifyRecord&, const VerifyRecord&) = default;
};

struct ReportFile {
    std::string scenario_hash;
    json meta = json::object();
    std::optional<std::vector<TriangleRecord>> triangles;
    std::optional<PlanRecord> plan;
    std::optional<VerifyRecord> verify;

    friend bool operator==(const ReportFile&, const ReportFile&) = default;
};

/// Nearest double to `value` printed with 9 significant digits.
inline double round9(double value)
{
    if (!std::isfinite(value)) {
        return value;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    const double out = std::strtod(buf, nullptr);
    return out == 0.0 ? 0.0 : out; // drop negative zero
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& path, const std::string& message)
{
    fail(ErrorCode::ParseError, (path.empty() ? "/" : path) + ": " + message);
}

inline const json& member(const json& obj, const std::string& path, const char* key)
{
    if (!obj.is_object()) {
        parse_fail(path, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        parse_fail(path, std::string("missing key \"") + key + "\"");
    }
    return *it;
}

inline double read_number(const json& v, const std::string& path)
{
    if (!v.is_number()) {
        parse_fail(path, "expected a number");
    }
    const double out = v.get<double>();
    if (!std::isfinite(out)) {
        parse_fail(path, "number is not finite");
    }
    return out;
}

inline std::uint64_t read_unsigned(const json& v, const std::string& path)
{
    if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
    }
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    parse_fail(path, "expected a non-negative integer");
}

inline std::string read_string(const json& v, const std::string& path)
{
    if (!v.is_string()) {
        parse_fail(path, "expected a string");
    }
    return v.get<std::string>();
}

inline const json& read_array(const json& v, const std::string& path)
{
    if (!v.is_array()) {
        parse_fail(path, "expected an array");
    }
    return v;
}

inline void check_version(const json& doc)
{
    const auto version = read_unsigned(member(doc, "", "schema_version"), "/schema_version");
    if (version != kSchemaVersion) {
        parse_fail("/schema_version", "unsupported schema version " + std::to_string(version));
    }
}

/// Rounds every floating value in a free-form object.
inline json canonical_numbers(const json& v)
{
    if (v.is_number_float()) {
        return round9(v.get<double>());
    }
    if (v.is_object() || v.is_array()) {
        json out = v;
        for (auto& item : out) {
            item = canonical_numbers(item);
        }
        return out;
    }
    return v;
}

inline json point_json(Point p) { return {{"x", round9(p.x)}, {"y", round9(p.y)}}; }

inline Point read_point(const json& v, const std::string& path)
{
    return {read_number(member(v, path, "x"), path + "/x"), read_number(member(v, path, "y"), path + "/y")};
}

inline json parse_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::string message = e.what();
        if (auto cut = message.find("] "); cut != std::string::npos) {
            message = message.substr(cut + 2);
        }
        fail(ErrorCode::ParseError, message);
    }
}

inline HoleMethod parse_method(const std::string& text, const std::string& path)
{
    if (text == to_string(HoleMethod::CaseFormula)) {
        return HoleMethod::CaseFormula;
    }
    if (text == to_string(HoleMethod::ExactFallback)) {
        return HoleMethod::ExactFallback;
    }
    parse_fail(path, "unknown method \"" + text + "\"");
}

inline TargetKind parse_kind(const std::string& text, const std::string& path)
{
    if (text == to_string(TargetKind::Circumcenter)) {
        return TargetKind::Circumcenter;
    }
    if (text == to_string(TargetKind::Incenter)) {
        return TargetKind::Incenter;
    }
    parse_fail(path, "unknown target kind \"" + text + "\"");
}

} // namespace detail

inline json field_to_json(const SensorField& field)
{
    json stationary = json::array();
    for (const auto& node : field.stationary) {
        stationary.push_back({{"id", node.id.value}, {"x", round9(node.position.x)}, {"y", round9(node.position.y)}});
    }
    json mobile = json::array();
    for (const auto& node : field.mobile) {
        mobile.push_back({{"id", node.id.value},
                          {"x", round9(node.position.x)},
                          {"y", round9(node.position.y)},
                          {"sensing_radius", round9(node.sensing_radius)}});
    }
    return {{"width", round9(field.width)},
            {"height", round9(field.height)},
            {"sensing_radius", round9(field.sensing_radius)},
            {"stationary", stationary},
            {"mobile", mobile}};
}

inline SensorField field_from_json(const json& v, const std::string& path)
{
    using namespace detail;
    SensorField field;
    field.width = read_number(member(v, path, "width"), path + "/width");
    field.height = read_number(member(v, path, "height"), path + "/height");
    field.sensing_radius = read_number(member(v, path, "sensing_radius"), path + "/sensing_radius");
    const auto& stationary = read_array(member(v, path, "stationary"), path + "/stationary");
    for (std::size_t i = 0; i < stationary.size(); ++i) {
        const std::string at = path + "/stationary/" + std::to_string(i);
        field.stationary.push_back({SensorId{read_unsigned(member(stationary[i], at, "id"), at + "/id")},
                                    read_point(stationary[i], at)});
    }
    const auto& mobile = read_array(member(v, path, "mobile"), path + "/mobile");
    for (std::size_t i = 0; i < mobile.size(); ++i) {
        const std::string at = path + "/mobile/" + std::to_string(i);
        field.mobile.push_back({SensorId{read_unsigned(member(mobile[i], at, "id"), at + "/id")},
                                read_point(mobile[i], at),
                                read_number(member(mobile[i], at, "sensing_radius"), at + "/sensing_radius")});
    }
    return field;
}

/// Rounds a field to exactly what its serialized form holds.
inline SensorField canonical(const SensorField& field) { return field_from_json(field_to_json(field), ""); }

inline std::string serialize_scenario(const ScenarioFile& scenario)
{
    json doc{{"schema_version", kSchemaVersion},
             {"field", field_to_json(scenario.field)},
             {"meta", detail::canonical_numbers(scenario.meta)}};
    return doc.dump(2) + "\n";
}

/// Parses and validates a scenario document.
inline ScenarioFile parse_scenario(const std::string& text)
{
    const json doc = detail::parse_text(text);
    detail::check_version(doc);
    ScenarioFile scenario;
    scenario.field = field_from_json(detail::member(doc, "", "field"), "/field");
    if (auto it = doc.find("meta"); it != doc.end()) {
        if (!it->is_object()) {
            detail::parse_fail("/meta", "expected an object");
        }
        scenario.meta = detail::canonical_numbers(*it);
    }
    validate(scenario.field);
    return scenario;
}

/// FNV-1a (64-bit) over the canonical field text, as 16 hex digits.
inline std::string scenario_hash(const SensorField& field)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : field_to_json(field).dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace detail {

inline json target_json(const TargetLocation& t)
{
    return {{"cell_id", t.cell.value}, {"kind", std::string(to_string(t.kind))}, {"target", point_json(t.point)}};
}

inline TargetLocation read_target(const json& v, const std::string& path,
                                  const std::map<CellId, double>& areas)
{
    TargetLocation t;
    const auto cell = read_unsigned(member(v, path, "cell_id"), path + "/cell_id");
    if (cell > std::numeric_limits<std::uint32_t>::max()) {
        parse_fail(path + "/cell_id", "cell id out of range");
    }
    t.cell = CellId{static_cast<std::uint32_t>(cell)};
    t.kind = parse_kind(read_string(member(v, path, "kind"), path + "/kind"), path + "/kind");
    t.point = read_point(member(v, path, "target"), path + "/target");
    if (auto it = areas.find(t.cell); it != areas.end()) {
        t.hole_area = it->second;
    }
    return t;
}

} // namespace detail

inline std::string serialize_report(const ReportFile& report)
{
    json doc{{"schema_version", kSchemaVersion},
             {"scenario_hash", report.scenario_hash},
             {"meta", detail::canonical_numbers(report.meta)}};
    if (report.triangles) {
        json triangles = json::array();
        for (const auto& t : *report.triangles) {
            triangles.push_back({{"id", t.id.value},
                                 {"vertices", {t.vertices[0].value, t.vertices[1].value, t.vertices[2].value}},
                                 {"case", std::string(to_string(t.label))},
                                 {"s_h", round9(t.s_h)},
                                 {"method", std::string(to_string(t.method))},
                                 {"is_hole", t.is_hole}});
        }
        doc["triangles"] = triangles;
    }
    if (report.plan) {
        json assignments = json::array();
        for (const auto& a : report.plan->plan.assignments) {
            json entry = detail::target_json(a.target);
            entry["mobile_id"] = a.mobile.value;
            entry["distance"] = round9(a.distance);
            assignments.push_back(entry);
        }
        json unserved = json::array();
        for (const auto& t : report.plan->plan.unserved) {
            unserved.push_back(detail::target_json(t));
        }
        doc["plan"] = {{"assignments", assignments},
                       {"mobile_radius", round9(report.plan->mobile_radius)},
                       {"total_movement", round9(report.plan->plan.total_movement)},
                       {"unserved", unserved}};
    }
    if (report.verify) {
        const auto& v = *report.verify;
        doc["verify"] = {{"before", round9(v.before)},
                         {"after", round9(v.after)},
                         {"samples", v.samples},
                         {"seed", v.seed},
                         {"half_width", round9(v.half_width)}};
    }
    return doc.dump(2) + "\n";
}

inline ReportFile parse_report(const std::string& text)
{
    using namespace detail;
    const json doc = parse_text(text);
    check_version(doc);
    ReportFile report;
    report.scenario_hash = read_string(member(doc, "", "scenario_hash"), "/scenario_hash");
    if (auto it = doc.find("meta"); it != doc.end()) {
        if (!it->is_object()) {
            parse_fail("/meta", "expected an object");
        }
        report.meta = canonical_numbers(*it);
    }

    std::map<CellId, double> areas;
    if (auto it = doc.find("triangles"); it != doc.end()) {
        report.triangles.emplace();
        const auto& list = read_array(*it, "/triangles");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string at = "/triangles/" + std::to_string(i);
            const json& entry = list[i];
            TriangleRecord t;
            const auto id = read_unsigned(member(entry, at, "id"), at + "/id");
            if (id > std::numeric_limits<std::uint32_t>::max()) {
                parse_fail(at + "/id", "cell id out of range");
            }
            t.id = CellId{static_cast<std::uint32_t>(id)};
            const auto& vertices = read_array(member(entry, at, "vertices"), at + "/vertices");
            if (vertices.size() != 3) {
                parse_fail(at + "/vertices", "expected three sensor ids");
            }
            for (std::size_t k = 0; k < 3; ++k) {
                t.vertices[k] = SensorId{read_unsigned(vertices[k], at + "/vertices/" + std::to_string(k))};
            }
            const auto label = read_string(member(entry, at, "case"), at + "/case");
            const auto parsed = parse_case_label(label);
            if (!parsed) {
                parse_fail(at + "/case", "unknown case label \"" + label + "\"");
            }
            t.label = *parsed;
            t.s_h = read_number(member(entry, at, "s_h"), at + "/s_h");
            if (t.s_h < 0.0) {
                parse_fail(at + "/s_h", "hole area must be non-negative");
            }
            t.method = parse_method(read_string(member(entry, at, "method"), at + "/method"), at + "/method");
            const auto& is_hole = member(entry, at, "is_hole");
            if (!is_hole.is_boolean()) {
                parse_fail(at + "/is_hole", "expected a boolean");
            }
            t.is_hole = is_hole.get<bool>();
            areas[t.id] = t.s_h;
            report.triangles->push_back(t);
        }
    }

    if (auto it = doc.find("plan"); it != doc.end()) {
        PlanRecord record;
        record.mobile_radius = read_number(member(*it, "/plan", "mobile_radius"), "/plan/mobile_radius");
        const auto& assignments = read_array(member(*it, "/plan", "assignments"), "/plan/assignments");
        for (std::size_t i = 0; i < assignments.size(); ++i) {
            const std::string at = "/plan/assignments/" + std::to_string(i);
            Assignment a;
            a.target = read_target(assignments[i], at, areas);
            a.mobile = SensorId{read_unsigned(member(assignments[i], at, "mobile_id"), at + "/mobile_id")};
            a.distance = read_number(member(assignments[i], at, "distance"), at + "/distance");
            record.plan.assignments.push_back(a);
        }
        const auto& unserved = read_array(member(*it, "/plan", "unserved"), "/plan/unserved");
        for (std::size_t i = 0; i < unserved.size(); ++i) {
            record.plan.unserved.push_back(read_target(unserved[i], "/plan/unserved/" + std::to_string(i), areas));
        }
        record.plan.total_movement =
            read_number(member(*it, "/plan", "total_movement"), "/plan/total_movement");
        report.plan = record;
    }

    if (auto it = doc.find("verify"); it != doc.end()) {
        VerifyRecord v;
        v.before = read_number(member(*it, "/verify", "before"), "/verify/before");
        v.after = read_number(member(*it, "/verify", "after"), "/verify/after");
        v.samples = read_unsigned(member(*it, "/verify", "samples"), "/verify/samples");
        v.seed = read_unsigned(member(*it, "/verify", "seed"), "/verify/seed");
        v.half_width = read_number(member(*it, "/verify", "half_width"), "/verify/half_width");
        report.verify = v;
    }
    return report;
}

/// Exactly what a reader of the serialized report would get back.
inline ReportFile canonical(const ReportFile& report) { return parse_report(serialize_report(report)); }

namespace detail {

inline void require_same_scenario(const ScenarioFile& scenario, const ReportFile& report)
{
    const auto hash = scenario_hash(scenario.field);
    if (report.scenario_hash != hash) {
        fail(ErrorCode::InconsistentInput,
             "report was produced from scenario " + report.scenario_hash + ", not " + hash);
    }
}

} // namespace detail

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::IoError, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        fail(ErrorCode::IoError, "cannot write " + path);
    }
    out << text;
    if (!out.flush()) {
        fail(ErrorCode::IoError, "failed writing " + path);
    }
}

} // namespace holecov
