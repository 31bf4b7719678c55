#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "bf/errors.hpp"

namespace bf {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Integer& v) { return v.str(); }

inline Integer parse_integer(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw ParseError("bad integer literal: " + std::string(text));
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') {
            throw ParseError("bad integer literal: " + std::string(text));
        }
    }
    Integer v(std::string(text.substr(i)));
    return text[0] == '-' ? Integer(-v) : v;
}

// Floor division with a positive divisor.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Factorization q = p^e with p prime, e >= 1.
struct PrimePower {
    int q = 0;
    int p = 0;
    int e = 0;

    // Euler phi of q, i.e. degree of the q-th cyclotomic polynomial.
    int phi() const { return q - q / p; }

    static PrimePower of(long long q);
    bool operator==(const PrimePower&) const = default;
};

inline PrimePower PrimePower::of(long long q) {
    if (q < 2 || q > (1LL << 30)) throw NotPrimePower(q);
    long long p = 0;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;
    long long rest = q;
    int e = 0;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw NotPrimePower(q);
    return PrimePower{static_cast<int>(q), static_cast<int>(p), e};
}

}  // namespace bf
