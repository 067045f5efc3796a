#pragma once

#include <cctype>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spinpoly/errors.hpp"

namespace spinpoly {

// Every correctness-bearing quantity in this library is an exact rational.
// boost keeps them canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>; // row-major, rectangular

/// Serializes as "p/q" in lowest terms with positive denominator ("0/1", "-3/10", "1/1").
inline std::string rational_string(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

/// Parses "p" or "p/q" with optional leading minus; the result is reduced.
/// Anything else (whitespace, decimals, a zero denominator) is a ParseError.
inline Rational parse_rational(const std::string& text) {
    const auto fail = [&text]() -> Rational {
        throw ParseError("not a rational: \"" + text + "\"");
    };
    std::size_t pos = 0;
    const auto read_integer = [&]() -> std::string {
        std::string out;
        if (pos < text.size() && text[pos] == '-') out += text[pos++];
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out += text[pos++];
        }
        if (pos == start) fail();
        return out;
    };
    if (text.empty()) fail();
    const std::string num = read_integer();
    std::string den = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') fail();
        ++pos;
        den = read_integer();
        if (pos != text.size()) fail();
        if (den.front() == '-') fail(); // sign belongs to the numerator
    }
    const BigInt q(den);
    if (q == 0) throw ParseError("zero denominator: \"" + text + "\"");
    return Rational(BigInt(num), q);
}

inline std::vector<std::string> rational_strings(const RationalVector& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const Rational& v : values) out.push_back(rational_string(v));
    return out;
}

} // namespace spinpoly
