#ifndef ZGDOF_RATIONAL_HPP
#define ZGDOF_RATIONAL_HPP

// Exact arithmetic primitives shared by every module.
//
// Regime boundaries (beta = 1, alpha = beta, alpha = beta - 1) must be
// classified exactly, so region math runs on arbitrary-precision rationals.
// Power-level values can exceed 64 bits (P up to 1e16 with exponents up to 4),
// so level arithmetic runs on arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>

#include "zgdof/errors.hpp"

namespace zgdof {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor division, rounding toward negative infinity (cpp_int's operator/
// truncates toward zero, which is wrong for negative numerators here).
inline Int floor_div(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("floor_div: division by zero");
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

inline Int rational_floor(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

inline Rational positive_part(const Rational& r) {
    return r > 0 ? r : Rational(0);
}

// Parses "n", "-n", or "n/d" with d > 0 after normalization. Decimal points
// are rejected on purpose: a decimal alpha or beta silently lands on the
// wrong side of a regime boundary.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (text.find('.') != std::string::npos)
                throw std::invalid_argument("decimal literal not allowed here, use num/den: " + text);
            return Rational(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

// Floor of the k-th root of a nonnegative integer, computed exactly
// (Newton iteration on integers, then a final adjustment).
inline Int iroot(const Int& n, unsigned k) {
    if (k == 0) throw DomainError("iroot: zeroth root");
    if (n < 0) throw DomainError("iroot: negative radicand");
    if (n == 0 || n == 1 || k == 1) return k == 1 ? n : n;
    // Initial guess from the bit length: 2^ceil(bits/k) >= n^(1/k).
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    Int x = Int(1) << ((bits + k - 1) / k);
    while (true) {
        Int xk1 = boost::multiprecision::pow(x, k - 1);
        Int next = ((k - 1) * x + n / xk1) / k;
        if (next >= x) break;
        x = next;
    }
    while (boost::multiprecision::pow(x, k) > n) --x;
    while (boost::multiprecision::pow(x + 1, k) <= n) ++x;
    return x;
}

} // namespace zgdof

#endif // ZGDOF_RATIONAL_HPP
