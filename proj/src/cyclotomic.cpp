#include "bf/cyclotomic.hpp"

namespace bf {

std::vector<Integer> phi_q(int q) {
    const PrimePower pp = PrimePower::of(q);
    const int step = q / pp.p;
    std::vector<Integer> c(static_cast<std::size_t>(pp.phi()) + 1, 0);
    for (int i = 0; i < pp.p; ++i) c[static_cast<std::size_t>(i * step)] = 1;
    return c;
}

std::vector<Integer> reduce_mod_phi(int q, std::vector<Integer> coeffs) {
    const PrimePower pp = PrimePower::of(q);
    const auto deg = static_cast<std::size_t>(pp.phi());
    const auto step = static_cast<std::size_t>(q / pp.p);
    // Phi_q is monic: z^deg = -sum_{i<p-1} z^(i*step).
    for (std::size_t n = coeffs.size(); n-- > deg;) {
        if (coeffs[n] == 0) continue;
        const Integer c = coeffs[n];
        coeffs[n] = 0;
        const std::size_t base = n - deg;
        for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(pp.p); ++i) coeffs[base + i * step] -= c;
    }
    coeffs.resize(deg, 0);
    return coeffs;
}

CycInt::CycInt(int q) : pp_(PrimePower::of(q)), coeffs_(static_cast<std::size_t>(pp_.phi()), 0) {}

CycInt::CycInt(int q, std::vector<Integer> coeffs) : pp_(PrimePower::of(q)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(pp_.phi())) {
        throw DomainError("cyclotomic integer needs " + std::to_string(pp_.phi()) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
    }
}

CycInt CycInt::from_integer(int q, const Integer& v) {
    CycInt r(q);
    r.coeffs_[0] = v;
    return r;
}

CycInt CycInt::zeta_pow(int q, long long n) {
    n %= q;
    if (n < 0) n += q;
    std::vector<Integer> c(static_cast<std::size_t>(q), 0);
    c[static_cast<std::size_t>(n)] = 1;
    return CycInt(q, reduce_mod_phi(q, std::move(c)));
}

bool CycInt::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

void CycInt::check(const CycInt& o) const {
    if (pp_.q != o.pp_.q) throw DomainError("cyclotomic integers for different q");
}

CycInt CycInt::operator+(const CycInt& o) const {
    check(o);
    CycInt r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycInt CycInt::scaled(const Integer& c) const {
    CycInt r = *this;
    for (auto& v : r.coeffs_) v *= c;
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    check(o);
    std::vector<Integer> prod(2 * coeffs_.size(), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return CycInt(pp_.q, reduce_mod_phi(pp_.q, std::move(prod)));
}

std::string CycInt::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += coeffs_[i].str();
    }
    return out + ")";
}

CycInt cycint_mul(const CycInt& a, const CycInt& b, int q) {
    const auto n = static_cast<std::size_t>(PrimePower::of(q).phi());
    if (a.coeffs().size() != n || b.coeffs().size() != n || a.q() != q || b.q() != q) {
        throw DomainError("cyclotomic operand does not match q = " + std::to_string(q));
    }
    return a * b;
}

CycInt eval_root_of_unity(const LaurentPoly& p, int q, int a, int b) {
    if (p.ring().rank() != 2) throw DomainError("root-of-unity evaluation needs k = 2");
    if (p.has_t()) throw DomainError("root-of-unity evaluation needs a t-free polynomial");
    PrimePower::of(q);
    std::vector<Integer> powers(static_cast<std::size_t>(q), 0);
    for (const auto& [e, c] : p.terms()) {
        long long n = (static_cast<long long>(a) * e[0] + static_cast<long long>(b) * e[1]) % q;
        if (n < 0) n += q;
        powers[static_cast<std::size_t>(n)] += c;
    }
    return CycInt(q, reduce_mod_phi(q, std::move(powers)));
}

}  // namespace bf
