#pragma once

// JSON forms of exact values: integers and rationals as decimal strings,
// polynomials as coefficient arrays with index = degree.

#include "multibrot/exact/int_poly.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace multibrot::exact {

using Json = nlohmann::json;

inline Json to_json(const BigInt& v) { return v.get_str(10); }
inline Json to_json(const Rational& v) { return v.get_str(10); }

inline Json to_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const auto& a : p.coeffs()) arr.push_back(a.get_str(10));
    return arr;
}

inline IntPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<BigInt> c;
    for (const auto& item : j) {
        if (!item.is_string()) throw std::invalid_argument("polynomial coefficients must be decimal strings");
        BigInt v;
        if (v.set_str(item.get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient: " + item.get<std::string>());
        c.push_back(v);
    }
    return IntPoly(std::move(c));
}

inline Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational JSON must be a string");
    return parse_rational(j.get<std::string>());
}

}  // namespace multibrot::exact
