#include "output_format.hpp"

#include <sstream>

#include <json.hpp>

namespace realroots::cli {

using nlohmann::json;

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    throw ParseError("unknown format '" + name + "' (expected text or json)", 0);
}

namespace {

std::string coord_text(const AlgebraicNumber& a) {
    if (a.is_exact()) return "point " + a.exact_value().str();
    return "interval " + a.lo().str() + " " + a.hi().str();
}

json coord_json(const AlgebraicNumber& a) {
    if (a.is_exact()) return json{{"type", "point"}, {"value", a.exact_value().str()}};
    return json{{"type", "interval"}, {"lo", a.lo().str()}, {"hi", a.hi().str()}};
}

}  // namespace

std::string format_roots(const std::vector<IsolatedRoot>& roots, Format f) {
    if (f == Format::text) {
        std::ostringstream os;
        for (const auto& r : roots)
            os << coord_text(r.number) << " mult " << r.multiplicity << "\n";
        return os.str();
    }
    json arr = json::array();
    for (const auto& r : roots) {
        json rec = coord_json(r.number);
        rec["mult"] = r.multiplicity;
        arr.push_back(rec);
    }
    return arr.dump() + "\n";
}

std::string format_sign(Sign s, Format f) {
    if (f == Format::text) return std::to_string(to_int(s)) + "\n";
    return json{{"sign", to_int(s)}}.dump() + "\n";
}

std::string format_ordering(Ordering o, Format f) {
    const char* name = o == Ordering::LT ? "LT" : (o == Ordering::EQ ? "EQ" : "GT");
    if (f == Format::text) return std::string(name) + "\n";
    return json{{"order", name}}.dump() + "\n";
}

std::string format_solutions(const std::vector<SystemSolution>& sols, Format f) {
    if (f == Format::text) {
        std::ostringstream os;
        for (const auto& s : sols)
            os << "solution x " << coord_text(s.x) << " y " << coord_text(s.y) << "\n";
        return os.str();
    }
    json arr = json::array();
    for (const auto& s : sols)
        arr.push_back(json{{"x", coord_json(s.x)}, {"y", coord_json(s.y)}});
    return arr.dump() + "\n";
}

BoundsReport compute_bounds_report(const IntPolynomial& f) {
    if (f.degree() < 1) throw DomainError("bounds need a nonconstant polynomial");
    BoundsReport r{cauchy_root_bound(f), mahler_measure_upper_bound(f), false, Rational(0), {}};
    if (f.degree() >= 2) {
        r.has_separation = true;
        r.separation = separation_lower_bound(f);
        for (unsigned k = 1; k <= static_cast<unsigned>(f.degree()) - 1; ++k)
            r.davenport_mahler.emplace_back(k, davenport_mahler_lower_bound(f, k));
    }
    return r;
}

std::string format_bounds(const BoundsReport& r, Format f) {
    if (f == Format::text) {
        std::ostringstream os;
        os << "cauchy " << r.cauchy.str() << "\n";
        os << "mahler_upper " << r.mahler_upper.str() << "\n";
        if (r.has_separation) os << "separation " << r.separation.str() << "\n";
        for (const auto& [k, b] : r.davenport_mahler)
            os << "davenport_mahler " << k << " " << b.str() << "\n";
        return os.str();
    }
    json j{{"cauchy", r.cauchy.str()}, {"mahler_upper", r.mahler_upper.str()}};
    if (r.has_separation) j["separation"] = r.separation.str();
    json dm = json::array();
    for (const auto& [k, b] : r.davenport_mahler)
        dm.push_back(json{{"k", k}, {"bound", b.str()}});
    j["davenport_mahler"] = dm;
    return j.dump() + "\n";
}

}  // namespace realroots::cli
