#include "symcalc/harness.hpp"

#include "json.hpp"

#include "symcalc/errors.hpp"

namespace symcalc {

using nlohmann::ordered_json;

bool Report::all_pass() const {
    for (const auto& s : suites)
        if (!s.pass) return false;
    return !suites.empty();
}

namespace {

ordered_json point_json(const Point& x) { return ordered_json::array({x[0], x[1], x[2], x[3]}); }

Point point_from(const ordered_json& j) {
    Point x{};
    for (int i = 0; i < 4; ++i) x[static_cast<size_t>(i)] = j.at(static_cast<size_t>(i)).get<double>();
    return x;
}

} // namespace

std::string Report::dump() const {
    ordered_json j;
    j["version"] = version;
    j["scenario"] = scenario;
    j["seed"] = seed;
    ordered_json entries = ordered_json::array();
    for (const auto& s : suites) {
        ordered_json e;
        e["name"] = s.name;
        e["pass"] = s.pass;
        e["max_residual"] = s.max_residual;
        e["worst_point"] = point_json(s.worst_point);
        e["note"] = s.note;
        entries.push_back(std::move(e));
    }
    j["suites"] = std::move(entries);
    ordered_json geo;
    geo["grid"] = grid;
    ordered_json pts = ordered_json::array();
    for (const auto& gs : geometry) {
        ordered_json e;
        e["x"] = point_json(gs.x);
        e["g_up"] = gs.g_up;
        e["frame"] = gs.frame;
        e["A"] = gs.A;
        pts.push_back(std::move(e));
    }
    geo["points"] = std::move(pts);
    j["geometry"] = std::move(geo);
    // nlohmann prints doubles as shortest round-trip decimals and ordered_json
    // keeps insertion order, so the same report always dumps the same bytes.
    return j.dump(2) + "\n";
}

Report Report::parse(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("report", e.what());
    }
    Report r;
    try {
        r.version = j.value("version", std::string{});
        r.scenario = j.value("scenario", std::string{});
        r.seed = j.value("seed", std::uint64_t{0});
        for (const auto& e : j.at("suites")) {
            SuiteResult s;
            s.name = e.value("name", std::string{});
            s.pass = e.value("pass", false);
            s.max_residual = e.value("max_residual", 0.0);
            if (e.contains("worst_point")) s.worst_point = point_from(e["worst_point"]);
            s.note = e.value("note", std::string{});
            r.suites.push_back(std::move(s));
        }
        if (j.contains("geometry")) {
            const auto& geo = j["geometry"];
            r.grid = geo.value("grid", 3);
            for (const auto& e : geo.at("points")) {
                GeometrySample gs;
                gs.x = point_from(e.at("x"));
                for (int i = 0; i < 16; ++i) {
                    gs.g_up[static_cast<size_t>(i)] = e.at("g_up").at(static_cast<size_t>(i)).get<double>();
                    gs.frame[static_cast<size_t>(i)] = e.at("frame").at(static_cast<size_t>(i)).get<double>();
                }
                for (int i = 0; i < 4; ++i)
                    gs.A[static_cast<size_t>(i)] = e.at("A").at(static_cast<size_t>(i)).get<double>();
                r.geometry.push_back(std::move(gs));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("report", e.what());
    }
    return r;
}

} // namespace symcalc
