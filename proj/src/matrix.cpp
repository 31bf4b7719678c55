#include "bf/matrix.hpp"

namespace bf {

namespace {

LaurentPoly determinant(const std::vector<LaurentPoly>& a, int n, const Ring& ring) {
    if (n == 1) return a[0];
    if (n == 2) return a[0] * a[3] - a[1] * a[2];
    LaurentPoly acc(ring);
    std::vector<LaurentPoly> minor;
    for (int c = 0; c < n; ++c) {
        const LaurentPoly& pivot = a[static_cast<std::size_t>(c)];
        if (pivot.is_zero()) continue;
        minor.clear();
        for (int r = 1; r < n; ++r) {
            for (int cc = 0; cc < n; ++cc) {
                if (cc != c) minor.push_back(a[static_cast<std::size_t>(r * n + cc)]);
            }
        }
        const LaurentPoly term = pivot * determinant(minor, n - 1, ring);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

MatR::MatR(Ring ring) : ring_(ring), entries_(static_cast<std::size_t>(ring.rank() * ring.rank()), LaurentPoly(ring)) {}

MatR MatR::identity(Ring ring) {
    MatR m(ring);
    for (int i = 0; i < m.dim(); ++i) m(i, i) = LaurentPoly::constant(ring, 1);
    return m;
}

std::size_t MatR::index(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim() || j >= dim()) throw DomainError("matrix index out of range");
    return static_cast<std::size_t>(i * dim() + j);
}

void MatR::check(const MatR& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch("matrices over different rings");
}

MatR MatR::operator*(const MatR& o) const {
    check(o);
    MatR r(ring_);
    const int n = dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            LaurentPoly acc(ring_);
            for (int l = 0; l < n; ++l) {
                const LaurentPoly& a = (*this)(i, l);
                const LaurentPoly& b = o(l, j);
                if (a.is_zero() || b.is_zero()) continue;
                acc += a * b;
            }
            r(i, j) = std::move(acc);
        }
    }
    return r;
}

MatR MatR::operator+(const MatR& o) const {
    check(o);
    MatR r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
    return r;
}

MatR MatR::operator-(const MatR& o) const {
    check(o);
    MatR r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
    return r;
}

bool MatR::operator==(const MatR& o) const { return ring_ == o.ring_ && entries_ == o.entries_; }

bool MatR::is_identity() const { return *this == identity(ring_); }

bool MatR::has_t() const {
    for (const auto& e : entries_) {
        if (e.has_t()) return true;
    }
    return false;
}

LaurentPoly MatR::det() const { return determinant(entries_, dim(), ring_); }

LaurentPoly MatR::trace() const {
    LaurentPoly acc(ring_);
    for (int i = 0; i < dim(); ++i) acc += (*this)(i, i);
    return acc;
}

MatR MatR::pow(unsigned n) const {
    MatR result = identity(ring_);
    MatR base = *this;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

std::vector<std::vector<std::string>> MatR::to_strings() const {
    std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(dim()));
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) rows[static_cast<std::size_t>(i)].push_back((*this)(i, j).str());
    }
    return rows;
}

std::string MatR::str() const {
    std::string out = "[";
    const auto rows = to_strings();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) out += ", ";
            out += rows[i][j];
        }
        out += "]";
    }
    return out + "]";
}

MatR generator_M(int j, int k) {
    if (k < 1 || k > kMaxRank || j < 1 || j > k) {
        throw DomainError("generator M_" + std::to_string(j) + " undefined for k = " + std::to_string(k));
    }
    const Ring ring(k);
    const LaurentPoly one = LaurentPoly::constant(ring, 1);
    MatR m(ring);
    const LaurentPoly xj = LaurentPoly::variable(ring, j - 1);
    for (int i = 0; i < k; ++i) m(i, i) = xj;
    for (int c = 0; c < k; ++c) m(j - 1, c) += one - LaurentPoly::variable(ring, c);
    return m;
}

MatR generator_T(int i, int k) {
    if (k < 2 || k > kMaxRank || i < 2 || i > k) {
        throw DomainError("generator T_" + std::to_string(i) + " undefined for k = " + std::to_string(k));
    }
    const Ring ring(k);
    const LaurentPoly one = LaurentPoly::constant(ring, 1);
    const LaurentPoly t = LaurentPoly::variable(ring, ring.t_slot());
    MatR m(ring);
    for (int d = 0; d < k; ++d) m(d, d) = d < i - 1 ? t : one;
    for (int c = 0; c < i - 1; ++c) m(i - 1, c) = one - t;
    return m;
}

MatR mat_mul(const MatR& a, const MatR& b) { return a * b; }

MatR mat_inv(const MatR& a) {
    const auto det = a.det().as_unit();
    if (!det) throw DomainError("determinant is not a unit monomial: " + a.det().str());
    const LaurentPoly det_inv = det->inverse().to_poly();
    const int n = a.dim();
    MatR inv(a.ring());
    if (n == 1) {
        inv(0, 0) = det_inv;
        return inv;
    }
    std::vector<LaurentPoly> minor;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            minor.clear();
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0; c < n; ++c) {
                    if (c != j) minor.push_back(a(r, c));
                }
            }
            LaurentPoly cof = determinant(minor, n - 1, a.ring());
            if ((i + j) % 2 != 0) cof = -cof;
            inv(j, i) = cof * det_inv;
        }
    }
    return inv;
}

MatR mat_set_t_one(const MatR& m) {
    MatR r(m.ring());
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) r(i, j) = set_t_one(m(i, j));
    }
    return r;
}

GeneratorSet::GeneratorSet(GenSet kind, int k) : kind_(kind), ring_(k) {
    for (int j = 1; j <= k; ++j) {
        MatR g = generator_M(j, k);
        if (kind == GenSet::FRt && j >= 2) g = g * generator_T(j, k);
        invs_.push_back(mat_inv(g));
        gens_.push_back(std::move(g));
    }
}

const MatR& GeneratorSet::gen(int index) const {
    if (index < 1 || index > size()) throw DomainError("generator index out of range");
    return gens_[static_cast<std::size_t>(index - 1)];
}

const MatR& GeneratorSet::inverse(int index) const {
    if (index < 1 || index > size()) throw DomainError("generator index out of range");
    return invs_[static_cast<std::size_t>(index - 1)];
}

MatR eval_word(const Word& w, const GeneratorSet& gens) {
    MatR acc = MatR::identity(gens.ring());
    for (const Letter& l : w.letters()) acc = acc * (l.sign > 0 ? gens.gen(l.gen) : gens.inverse(l.gen));
    return acc;
}

MatR UNForm::reconstruct() const {
    const Ring& ring = u.ring();
    MatR m(ring);
    const LaurentPoly up = u.to_poly();
    const LaurentPoly one = LaurentPoly::constant(ring, 1);
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            LaurentPoly e = lambdas[static_cast<std::size_t>(i)] * (one - LaurentPoly::variable(ring, j));
            if (i == j) e += up;
            m(i, j) = std::move(e);
        }
    }
    return m;
}

bool UNForm::row_condition_holds() const {
    const Ring& ring = u.ring();
    const LaurentPoly one = LaurentPoly::constant(ring, 1);
    LaurentPoly acc(ring);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        acc += lambdas[i] * (one - LaurentPoly::variable(ring, static_cast<int>(i)));
    }
    return acc == one - u.to_poly();
}

UNForm un_form_extract(const MatR& m, const UnitMonomial& u) {
    const Ring& ring = m.ring();
    if (!(u.ring() == ring)) throw RingMismatch("unit and matrix from different rings");
    if (m.has_t()) throw NotInForm("matrix has t in its entries");
    if (!u.positive()) throw NotInForm("u must be a positive unit, got " + u.str());
    const int k = m.dim();
    const LaurentPoly up = u.to_poly();
    const LaurentPoly one = LaurentPoly::constant(ring, 1);

    // N = m - uI must have every row proportional to v; check by cross-multiplying.
    MatR n = m;
    for (int i = 0; i < k; ++i) n(i, i) -= up;
    std::vector<LaurentPoly> v;
    for (int j = 0; j < k; ++j) v.push_back(one - LaurentPoly::variable(ring, j));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            for (int l = j + 1; l < k; ++l) {
                if (!(n(i, j) * v[static_cast<std::size_t>(l)] == n(i, l) * v[static_cast<std::size_t>(j)])) {
                    throw NotInForm("row " + std::to_string(i + 1) + " is not proportional to v");
                }
            }
        }
    }
    if (k == 2 && !(m.trace() == one + up)) throw NotInForm("trace identity tr = 1 + u fails");

    UNForm form{u, {}};
    for (int i = 0; i < k; ++i) {
        auto lambda = divide_by_one_minus(n(i, 0), 0);
        if (!lambda) throw NotInForm("row " + std::to_string(i + 1) + " entry 1 not divisible by 1 - x");
        form.lambdas.push_back(std::move(*lambda));
    }
    if (!form.row_condition_holds()) throw NotInForm("row condition sum lambda_i (1 - x_i) = 1 - u fails");
    if (!(form.reconstruct() == m)) throw NotInForm("uI + N does not reproduce the matrix");
    return form;
}

UNForm un_form_extract(const MatR& m) {
    if (m.dim() != 2) throw DomainError("determinant-based extraction needs k = 2; supply u for other k");
    if (m.has_t()) throw NotInForm("matrix has t in its entries");
    const auto u = m.det().as_unit();
    if (!u) throw NotInForm("determinant is not a unit monomial");
    return un_form_extract(m, *u);
}

UnitMonomial abelianization_unit(const Word& w, Ring ring) {
    const auto sums = exponent_sums(w, ring.rank());
    ExpVec e;
    for (int i = 0; i < ring.rank(); ++i) e[i] = static_cast<std::int32_t>(sums[static_cast<std::size_t>(i)]);
    return UnitMonomial(ring, 1, e);
}

bool check_T_commute(int k) {
    std::vector<MatR> ts;
    for (int i = 2; i <= k; ++i) ts.push_back(generator_T(i, k));
    for (std::size_t a = 0; a < ts.size(); ++a) {
        for (std::size_t b = a + 1; b < ts.size(); ++b) {
            if (!(ts[a] * ts[b] == ts[b] * ts[a])) return false;
        }
    }
    return true;
}

}  // namespace bf
