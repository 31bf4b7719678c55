#pragma once

// Exact arithmetic in the Laurent polynomial rings Z[x_1^±, ..., x_k^±] and
// Z[x_1^±, ..., x_k^±, t^±].
//
// Every polynomial carries its Ring, which fixes k. The t variable always
// occupies slot k of the exponent vector; polynomials of R(k) simply have a
// zero t exponent. Operations on polynomials from different rings throw
// RingMismatch.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bf/errors.hpp"
#include "bf/integer.hpp"

namespace bf {

inline constexpr int kMaxRank = 4;
inline constexpr int kMaxSlots = kMaxRank + 1;

class Ring {
public:
    explicit Ring(int k = 2);

    int rank() const { return k_; }
    int var_count() const { return k_ + 1; }
    int t_slot() const { return k_; }

    // x, y, z, w for the group variables, t for the extra one.
    char var_name(int slot) const;
    // Slot for a variable letter, or -1 if the ring has no such variable.
    int slot_of(char name) const;

    bool operator==(const Ring&) const = default;

private:
    int k_;
};

struct ExpVec {
    std::array<std::int32_t, kMaxSlots> e{};

    std::int32_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    std::int32_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }

    ExpVec operator+(const ExpVec& o) const;
    ExpVec operator-(const ExpVec& o) const;
    ExpVec operator-() const;
    ExpVec scaled(std::int32_t n) const;

    long total_abs_degree() const;
    bool is_zero() const;

    auto operator<=>(const ExpVec&) const = default;
};

// Display order: total absolute degree ascending, then exponent tuple
// descending (so x precedes y precedes t precedes x^-1 in degree one).
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        const long da = a.total_abs_degree();
        const long db = b.total_abs_degree();
        if (da != db) return da < db;
        return a > b;
    }
};

class UnitMonomial;

class LaurentPoly {
public:
    using Term = std::pair<ExpVec, Integer>;

    explicit LaurentPoly(Ring ring = Ring(2)) : ring_(ring) {}

    static LaurentPoly constant(Ring ring, const Integer& c);
    static LaurentPoly monomial(Ring ring, const ExpVec& exps, const Integer& c = 1);
    static LaurentPoly variable(Ring ring, int slot, std::int32_t power = 1);
    // Build from arbitrary (possibly repeated, possibly zero) terms.
    static LaurentPoly from_terms(Ring ring, std::vector<Term> terms);

    static LaurentPoly parse(Ring ring, std::string_view text);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Integer coeff(const ExpVec& exps) const;
    std::optional<UnitMonomial> as_unit() const;
    bool is_one() const;

    // Degree range of one variable over the support; {0,0} for the zero polynomial.
    std::pair<std::int32_t, std::int32_t> degree_range(int slot) const;
    bool has_t() const;

    LaurentPoly operator-() const;
    LaurentPoly scaled(const Integer& c) const;
    // Multiply by the monomial with exponent vector `shift`.
    LaurentPoly shifted(const ExpVec& shift) const;
    LaurentPoly pow(unsigned n) const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const;

    std::string str() const;

private:
    void check_same_ring(const LaurentPoly& o) const;

    Ring ring_;
    std::vector<Term> terms_;  // GradedLex order, coefficients nonzero
};

class UnitMonomial {
public:
    UnitMonomial(Ring ring, int sign, const ExpVec& exps);

    static UnitMonomial one(Ring ring) { return UnitMonomial(ring, 1, ExpVec{}); }

    const Ring& ring() const { return ring_; }
    int sign() const { return sign_; }
    const ExpVec& exps() const { return exps_; }
    bool positive() const { return sign_ > 0; }

    UnitMonomial inverse() const { return UnitMonomial(ring_, sign_, -exps_); }
    UnitMonomial operator*(const UnitMonomial& o) const;
    LaurentPoly to_poly() const;
    std::string str() const { return to_poly().str(); }

    bool operator==(const UnitMonomial&) const = default;

private:
    Ring ring_;
    int sign_;
    ExpVec exps_;
};

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

// Sum of coefficients: the image under every variable -> 1.
Integer augmentation_eps(const LaurentPoly& p);

// Zero the t exponent of every term.
LaurentPoly set_t_one(const LaurentPoly& p);

// 1 + u + ... + u^(q-1) for a positive unit u and prime power q.
LaurentPoly cyc_element(int q, const UnitMonomial& u);

// Split p = sum_n t^n * c_n with every c_n t-free; zero coefficients omitted.
std::map<std::int32_t, LaurentPoly> t_coefficients(const LaurentPoly& p);

// Exact quotient p / (1 - x_slot), or nullopt when (1 - x_slot) does not divide p.
std::optional<LaurentPoly> divide_by_one_minus(const LaurentPoly& p, int slot);

}  // namespace bf
