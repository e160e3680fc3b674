#ifndef CUTCONES_RATIONAL_HPP
#define CUTCONES_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cutcones {

/// Exact arbitrary-precision rational. Always in lowest terms with positive
/// denominator; every weight, cut value and LP coefficient in this library is
/// one of these. No floating point appears on any decision path.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Builds p/q with sign normalization. The raw two-argument mpq_rational
/// constructor takes an unsigned denominator, so negative q must go through
/// here.
inline Rational make_rational(const BigInt& p, const BigInt& q) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(p) / Rational(q);
}

inline Rational make_rational(long p, long q) {
    return make_rational(BigInt(p), BigInt(q));
}

/// Parses "p", "-p" or "p/q". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    };
    if (text.empty()) bad();
    auto is_int = [](std::string_view s) {
        if (!s.empty() && s[0] == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) bad();
        return Rational(BigInt(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) bad();
    BigInt q{std::string(den)};
    if (q == 0) bad();
    return make_rational(BigInt(std::string(num)), q);
}

/// "p/q", or just "p" for integers. Never decimal.
inline std::string format_rational(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

} // namespace cutcones

#endif // CUTCONES_RATIONAL_HPP
