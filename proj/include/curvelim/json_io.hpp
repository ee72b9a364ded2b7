#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "curvelim/detrep.hpp"
#include "curvelim/parse.hpp"
#include "curvelim/ratmap.hpp"

namespace curvelim {

using nlohmann::json;

// Exact scalars travel as strings "a", "a/b", or "a/b+c/d*i"; matrices
// as arrays of arrays of such strings. Float values travel as [re, im].

inline json to_json(const ExactScalar& v) { return v.str(); }
inline json to_json(const FloatScalar& v) { return json::array({v.real(), v.imag()}); }

namespace detail {

inline mpq_class parse_rat(const std::string& s, std::size_t& pos) {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = (s[pos++] == '-');
    std::size_t start = pos;
    std::size_t numstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == numstart) throw syntax_error("expected a rational literal", pos);
    std::string numtok = s.substr(start, pos - start);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t denstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == denstart) throw syntax_error("expected a denominator", pos);
        numtok += "/" + s.substr(denstart, pos - denstart);
    }
    mpq_class q(numtok);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

}  // namespace detail

inline ExactScalar parse_scalar(const std::string& s) {
    std::size_t pos = 0;
    mpq_class re = detail::parse_rat(s, pos);
    if (pos == s.size()) return ExactScalar(re);
    mpq_class im = detail::parse_rat(s, pos);
    if (pos + 2 != s.size() || s[pos] != '*' || s[pos + 1] != 'i')
        throw syntax_error("malformed scalar string", pos);
    return ExactScalar(re, im);
}

inline ExactScalar scalar_from_json(const json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return ExactScalar(j.get<long>());
    throw error("exact scalar must be a string or integer in JSON");
}

inline FloatScalar float_from_json(const json& j) {
    if (j.is_number()) return FloatScalar(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2) return FloatScalar(j[0].get<double>(), j[1].get<double>());
    if (j.is_string() || j.is_number_integer()) return scalar_from_json(j).to_complex();
    throw error("float scalar must be a number or [re, im] pair in JSON");
}

inline json to_json(const ExactMatrix& a) {
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const FloatMatrix& a) {
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_json(a(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ExactMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw error("matrix JSON must be a nonempty array of arrays");
    ExactMatrix a(j.size(), j[0].size());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (j[r].size() != a.cols()) throw error("ragged matrix JSON");
        for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = scalar_from_json(j[r][c]);
    }
    return a;
}

inline json to_json(const ExactDetRep& d) {
    return json{{"m", d.m},
                {"D0", to_json(d.d0)},
                {"D1", to_json(d.d1)},
                {"D2", to_json(d.d2)},
                {"hermitian", d.hermitian}};
}

inline ExactDetRep detrep_from_json(const json& j) {
    ExactDetRep d(matrix_from_json(j.at("D0")), matrix_from_json(j.at("D1")),
                  matrix_from_json(j.at("D2")), j.value("hermitian", false));
    if (j.contains("m") && j.at("m").get<std::size_t>() != d.m)
        throw error("declared m does not match the matrix sizes");
    return d;
}

inline json to_json(const std::array<ExactScalar, 3>& x) {
    return json::array({x[0].str(), x[1].str(), x[2].str()});
}

inline std::array<ExactScalar, 3> point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw error("point JSON must have three entries");
    return {scalar_from_json(j[0]), scalar_from_json(j[1]), scalar_from_json(j[2])};
}

inline json to_json(const RationalMap& r) {
    json bps = json::array();
    for (const auto& b : r.basepoints) bps.push_back(to_json(b));
    return json{{"p0", print_poly(r.p[0])},
                {"p1", print_poly(r.p[1])},
                {"p2", print_poly(r.p[2])},
                {"basepoints", std::move(bps)}};
}

inline RationalMap map_from_json(const json& j) {
    HomPoly3 p0 = parse_hom3(j.at("p0").get<std::string>());
    HomPoly3 p1 = parse_hom3(j.at("p1").get<std::string>(), p0.degree());
    HomPoly3 p2 = parse_hom3(j.at("p2").get<std::string>(), p0.degree());
    std::vector<std::array<ExactScalar, 3>> bps;
    if (j.contains("basepoints"))
        for (const auto& b : j.at("basepoints")) bps.push_back(point_from_json(b));
    return RationalMap(std::move(p0), std::move(p1), std::move(p2), std::move(bps));
}

}  // namespace curvelim
