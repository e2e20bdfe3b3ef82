#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace slopeforge {

// Exact arbitrary-precision integers and fractions. Every arithmetic result
// in this library is one of these two types; floating point appears only at
// explicitly marked trust boundaries (root finding, report approximations).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// "num/den" with the slash always present ("2" serializes as "2/1").
// This is the wire format for JSON and CSV fields.
inline std::string format_fraction(const Rat& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Human form: integers drop the "/1".
inline std::string format_human(const Rat& r) {
    return is_integer(r) ? rat_num(r).str() : format_fraction(r);
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Accepts "num/den" or a bare integer, with optional leading '-'.
inline Rat parse_rational(std::string_view text) {
    const auto bad = [&] {
        throw std::domain_error("parse_rational: not a rational literal: '" +
                                std::string(text) + "'");
    };
    if (text.empty()) bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(Int(std::string(text)));
        }
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat();  // unreachable
}

}  // namespace slopeforge
