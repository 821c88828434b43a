#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace hk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// floor(a/b) for b != 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& x) { return floor_div(num(x), den(x)); }

// reduce x into [0, m) for m > 0
inline Rat mod_reduce(const Rat& x, const Rat& m) {
    Rat q = x / m;
    return x - Rat(floor_rat(q)) * m;
}

inline std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline Rat parse_rat(std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, pos)), Int(s.substr(pos + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n == 0) return 0;
    Int x = Int(1) << (unsigned)((boost::multiprecision::msb(n) / 2) + 1);
    for (;;) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

inline bool is_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace hk
