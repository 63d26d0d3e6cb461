#include "doldmap/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace doldmap {

namespace {

using json = nlohmann::ordered_json;

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (start <= s.size()) {
        size_t end = s.find(sep, start);
        if (end == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return parts;
}

std::int64_t parse_int(const std::string& s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer literal: '" + s + "'");
    return value;
}

}  // namespace

DoldCoefficients parse_coefficient_literal(const std::string& text) {
    DoldCoefficients coeffs;
    const std::string body = strip(text);
    if (body.empty()) return coeffs;
    for (const std::string& part : split(body, ',')) {
        auto colon = part.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("coefficient entry needs k:a form: '" + part + "'");
        std::int64_t k = parse_int(part.substr(0, colon));
        std::int64_t a = parse_int(part.substr(colon + 1));
        if (k < 1) throw std::invalid_argument("coefficient period must be >= 1: '" + part + "'");
        if (coeffs.at(static_cast<int>(k)) != 0)
            throw std::invalid_argument("duplicate coefficient period " + std::to_string(k));
        coeffs.set(static_cast<int>(k), a);
    }
    return coeffs;
}

std::string format_coefficient_literal(const DoldCoefficients& coeffs) {
    std::string out;
    for (const auto& [k, a] : coeffs.entries()) {
        if (!out.empty()) out += ',';
        out += std::to_string(k) + ':' + std::to_string(a);
    }
    return out;
}

IndexSequence parse_index_literal(const std::string& text) {
    const std::string body = strip(text);
    if (body.empty()) throw std::invalid_argument("index sequence literal is empty");
    IndexSequence seq;
    for (const std::string& part : split(body, ',')) seq.push_back(parse_int(part));
    return seq;
}

std::string format_index_literal(const IndexSequence& seq) {
    std::string out;
    for (std::int64_t v : seq) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

namespace {

json coefficients_json(const DoldCoefficients& coeffs) {
    json pairs = json::array();
    for (const auto& [k, a] : coeffs.entries()) pairs.push_back({k, a});
    return pairs;
}

DoldCoefficients coefficients_from_json(const json& pairs) {
    DoldCoefficients coeffs;
    for (const auto& pair : pairs)
        coeffs.set(pair.at(0).get<int>(), pair.at(1).get<std::int64_t>());
    return coeffs;
}

const char* sign_label(Sign s) { return s == Sign::plus ? "+" : "-"; }

Sign sign_from_label(const std::string& s) {
    if (s == "+") return Sign::plus;
    if (s == "-") return Sign::minus;
    throw std::invalid_argument("bad sign label: " + s);
}

// c_minus(x) = 1 - x^2/2 + x^4/2, c_plus(x) = 1 + x^2/2 - x^4/2
const std::vector<std::string> kMinusPoly = {"1", "0", "-1/2", "0", "1/2"};
const std::vector<std::string> kPlusPoly = {"1", "0", "1/2", "0", "-1/2"};

}  // namespace

std::string index_report_to_json(const IndexReport& report) {
    json doc;
    doc["schema"] = 1;
    doc["coefficients"] = coefficients_json(report.coeffs);
    doc["max_n"] = report.max_n;
    json rows = json::array();
    for (const IndexRow& row : report.rows) {
        rows.push_back({{"n", row.n},
                        {"numeric", row.numeric},
                        {"combinatorial", row.combinatorial},
                        {"target", row.target},
                        {"agree", row.agree},
                        {"samples", row.samples}});
    }
    doc["rows"] = std::move(rows);
    doc["all_agree"] = report.all_agree;
    if (!report.curves.empty()) {
        json curves = json::array();
        for (size_t i = 0; i < report.curves.size(); ++i) {
            json points = json::array();
            for (const CurveSample& sample : report.curves[i])
                points.push_back({{"theta", sample.theta}, {"vx", sample.v.x}, {"vy", sample.v.y}});
            curves.push_back({{"n", static_cast<int>(i) + 1}, {"points", std::move(points)}});
        }
        doc["curves"] = std::move(curves);
    }
    return doc.dump(2) + "\n";
}

std::string map_to_json(const SkewProductMap& map) {
    json doc;
    doc["schema"] = 1;
    doc["coefficients"] = coefficients_json(map.coeffs);
    json periods = json::array();
    for (int k : map.periods) periods.push_back(k);
    doc["period_set"] = std::move(periods);
    doc["width_base"] = rational_to_string(map.blowup.width_base);
    doc["scale"] = rational_to_string(map.blowup.scale);

    json orbits = json::array();
    for (const auto& [k, orbit] : map.blowup.base_points.orbits) {
        json points = json::array();
        for (const Angle& p : orbit.points) points.push_back(rational_to_string(p.value()));
        orbits.push_back({{"period", k}, {"points", std::move(points)}});
    }
    doc["orbits"] = std::move(orbits);

    json intervals = json::array();
    for (const BlownInterval& interval : map.blowup.intervals) {
        intervals.push_back({{"base", rational_to_string(interval.base.value())},
                             {"period", interval.orbit_period},
                             {"pos", interval.orbit_pos},
                             {"left", rational_to_string(interval.left)},
                             {"right", rational_to_string(interval.right)}});
    }
    doc["intervals"] = std::move(intervals);

    json params = json::array();
    for (const auto& [k, ms] : map.params.by_period)
        params.push_back({{"period", k}, {"m", ms.first}, {"sign", sign_label(ms.second)}});
    doc["sector_params"] = std::move(params);

    json pieces = json::array();
    for (const AngularPiece& piece : map.pieces) {
        json entry;
        entry["kind"] = piece.is_sector ? "sector" : "gap";
        entry["x_lo"] = rational_to_string(piece.x_lo);
        entry["x_hi"] = rational_to_string(piece.x_hi);
        entry["y_lo"] = rational_to_string(piece.y_lo);
        entry["y_hi"] = rational_to_string(piece.y_hi);
        if (piece.is_sector) {
            entry["period"] = piece.orbit_period;
            entry["pos"] = piece.orbit_pos;
            entry["m"] = piece.subsectors;
            entry["sign"] = sign_label(piece.sign);
        } else {
            entry["slope"] = rational_to_string(piece.slope);
        }
        pieces.push_back(std::move(entry));
    }
    doc["pieces"] = std::move(pieces);

    doc["c_minus"] = kMinusPoly;
    doc["c_plus"] = kPlusPoly;
    return doc.dump(2) + "\n";
}

SkewProductMap map_from_json(const std::string& text) {
    json doc = json::parse(text);
    if (doc.at("schema").get<int>() != 1)
        throw std::invalid_argument("unsupported map dump schema");
    if (doc.at("c_minus") != json(kMinusPoly) || doc.at("c_plus") != json(kPlusPoly))
        throw std::invalid_argument("map dump uses unknown sector polynomials");

    DoldCoefficients coeffs = coefficients_from_json(doc.at("coefficients"));

    SectorParams params;
    for (const auto& entry : doc.at("sector_params")) {
        params.by_period[entry.at("period").get<int>()] = {
            entry.at("m").get<int>(), sign_from_label(entry.at("sign").get<std::string>())};
    }

    BlowupSchedule blowup;
    blowup.width_base = rational_from_string(doc.at("width_base").get<std::string>());
    blowup.scale = rational_from_string(doc.at("scale").get<std::string>());
    for (const auto& entry : doc.at("orbits")) {
        PeriodicOrbit orbit;
        for (const auto& p : entry.at("points"))
            orbit.points.emplace_back(rational_from_string(p.get<std::string>()));
        orbit.period = static_cast<int>(orbit.points.size());
        blowup.base_points.orbits.emplace(entry.at("period").get<int>(), std::move(orbit));
    }
    for (const auto& entry : doc.at("intervals")) {
        BlownInterval interval;
        interval.base = Angle(rational_from_string(entry.at("base").get<std::string>()));
        interval.orbit_period = entry.at("period").get<int>();
        interval.orbit_pos = entry.at("pos").get<int>();
        interval.left = rational_from_string(entry.at("left").get<std::string>());
        interval.right = rational_from_string(entry.at("right").get<std::string>());
        blowup.intervals.push_back(std::move(interval));
    }

    std::vector<AngularPiece> pieces;
    for (const auto& entry : doc.at("pieces")) {
        AngularPiece piece;
        piece.is_sector = entry.at("kind").get<std::string>() == "sector";
        piece.x_lo = rational_from_string(entry.at("x_lo").get<std::string>());
        piece.x_hi = rational_from_string(entry.at("x_hi").get<std::string>());
        piece.y_lo = rational_from_string(entry.at("y_lo").get<std::string>());
        piece.y_hi = rational_from_string(entry.at("y_hi").get<std::string>());
        if (piece.is_sector) {
            piece.orbit_period = entry.at("period").get<int>();
            piece.orbit_pos = entry.at("pos").get<int>();
            piece.subsectors = entry.at("m").get<int>();
            piece.sign = sign_from_label(entry.at("sign").get<std::string>());
        } else {
            piece.slope = rational_from_string(entry.at("slope").get<std::string>());
        }
        pieces.push_back(std::move(piece));
    }

    return assemble_map(std::move(coeffs), std::move(params), std::move(blowup),
                        std::move(pieces));
}

std::string separation_report_to_json(const SeparationReport& report) {
    json doc;
    doc["schema"] = 1;
    doc["n_max"] = report.n_max;
    doc["probe_period"] = report.probe_period;
    doc["floor"] = report.floor;
    doc["global_min"] = rational_to_string(report.global_min);
    doc["global_min_double"] = to_double(report.global_min);
    doc["any_flagged"] = report.any_flagged;
    json probes = json::array();
    for (const SeparationRow& row : report.rows) {
        json distances = json::array();
        for (const Rational& d : row.distances) distances.push_back(to_double(d));
        probes.push_back({{"beta", rational_to_string(row.probe.value())},
                          {"period", row.probe_period},
                          {"min_distance", rational_to_string(row.min_distance)},
                          {"min_distance_double", to_double(row.min_distance)},
                          {"min_at", row.min_at},
                          {"flagged", row.flagged},
                          {"distances", std::move(distances)}});
    }
    doc["probes"] = std::move(probes);
    return doc.dump(2) + "\n";
}

std::string escape_report_to_json(const EscapeReport& report) {
    json doc;
    doc["schema"] = 1;
    doc["samples"] = report.samples;
    doc["steps"] = report.steps;
    doc["band"] = report.band;
    doc["escaped"] = report.escaped;
    doc["escaped_fraction"] = report.escaped_fraction;
    json suspects = json::array();
    for (const auto& suspect : report.suspects)
        suspects.push_back({{"theta0", suspect.theta0}, {"step", suspect.step}});
    doc["suspects"] = std::move(suspects);
    return doc.dump(2) + "\n";
}

std::string stream_family_to_json(const std::map<int, std::vector<PeriodicStream>>& family) {
    json doc;
    doc["schema"] = 1;
    doc["n_max"] = family.empty() ? 0 : family.rbegin()->first;
    json groups = json::array();
    for (const auto& [n, streams] : family) {
        json list = json::array();
        for (const PeriodicStream& stream : streams)
            list.push_back({{"generator", stream.generator},
                            {"least_period", stream.least_period}});
        groups.push_back({{"n", n}, {"streams", std::move(list)}});
    }
    doc["groups"] = std::move(groups);
    return doc.dump(2) + "\n";
}

}  // namespace doldmap
