#pragma once

// Arithmetic in Z[zeta] = Z[z] / Phi_q(z) for a prime power q, plus the
// ring homomorphism R(2) -> Z[zeta], x -> zeta^a, y -> zeta^b.

#include <string>
#include <vector>

#include "bf/integer.hpp"
#include "bf/ring.hpp"

namespace bf {

// Coefficients of Phi_q(z) = sum_{i<p} z^(i p^(e-1)), lowest degree first.
std::vector<Integer> phi_q(int q);

class CycInt {
public:
    // Zero element of Z[zeta_q].
    explicit CycInt(int q);
    CycInt(int q, std::vector<Integer> coeffs);

    static CycInt from_integer(int q, const Integer& v);
    // zeta^n for any integer n (negative allowed).
    static CycInt zeta_pow(int q, long long n);

    int q() const { return pp_.q; }
    const PrimePower& prime_power() const { return pp_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt scaled(const Integer& c) const;

    bool operator==(const CycInt& o) const = default;
    std::string str() const;

private:
    void check(const CycInt& o) const;

    PrimePower pp_;
    std::vector<Integer> coeffs_;  // length phi(q)
};

// Reduce a coefficient vector of any length modulo Phi_q.
std::vector<Integer> reduce_mod_phi(int q, std::vector<Integer> coeffs);

CycInt cycint_mul(const CycInt& a, const CycInt& b, int q);

// Image of a t-free polynomial of R(2) under x -> zeta^a, y -> zeta^b.
CycInt eval_root_of_unity(const LaurentPoly& p, int q, int a, int b);

}  // namespace bf
