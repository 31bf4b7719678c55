#pragma once

// Matrices over the Laurent rings and the generators of the matrix groups
// F(R) = gp<M_1, ..., M_k> and F(R[t,t^-1]) = gp<M_1, M_2 T_2, ..., M_k T_k>.

#include <string>
#include <vector>

#include "bf/ring.hpp"
#include "bf/word.hpp"

namespace bf {

class MatR {
public:
    // Zero matrix of size ring.rank().
    explicit MatR(Ring ring = Ring(2));

    static MatR identity(Ring ring);

    const Ring& ring() const { return ring_; }
    int dim() const { return ring_.rank(); }

    const LaurentPoly& operator()(int i, int j) const { return entries_[index(i, j)]; }
    LaurentPoly& operator()(int i, int j) { return entries_[index(i, j)]; }
    const std::vector<LaurentPoly>& entries() const { return entries_; }

    MatR operator*(const MatR& o) const;
    MatR operator+(const MatR& o) const;
    MatR operator-(const MatR& o) const;
    bool operator==(const MatR& o) const;

    bool is_identity() const;
    bool has_t() const;
    LaurentPoly det() const;
    LaurentPoly trace() const;
    MatR pow(unsigned n) const;

    // Row-major polynomial strings.
    std::vector<std::vector<std::string>> to_strings() const;
    std::string str() const;

private:
    std::size_t index(int i, int j) const;
    void check(const MatR& o) const;

    Ring ring_;
    std::vector<LaurentPoly> entries_;
};

// x_j I plus the matrix whose only nonzero row is row j, equal to
// v = (1 - x_1, ..., 1 - x_k). Indices are 1-based.
MatR generator_M(int j, int k);

// t on the first i-1 diagonal entries, 1 on the rest, 1 - t in row i before
// the diagonal.
MatR generator_T(int i, int k);

MatR mat_mul(const MatR& a, const MatR& b);
// Adjugate over a unit-monomial determinant.
MatR mat_inv(const MatR& a);
MatR mat_set_t_one(const MatR& m);

enum class GenSet {
    FR,   // M_1, ..., M_k
    FRt,  // M_1, M_2 T_2, ..., M_k T_k
};

class GeneratorSet {
public:
    GeneratorSet(GenSet kind, int k);

    GenSet kind() const { return kind_; }
    const Ring& ring() const { return ring_; }
    int size() const { return static_cast<int>(gens_.size()); }
    const MatR& gen(int index) const;      // 1-based
    const MatR& inverse(int index) const;  // 1-based

private:
    GenSet kind_;
    Ring ring_;
    std::vector<MatR> gens_;
    std::vector<MatR> invs_;
};

MatR eval_word(const Word& w, const GeneratorSet& gens);

// The matrix uI + [lambda_i v] with sum lambda_i (1 - x_i) = 1 - u.
struct UNForm {
    UnitMonomial u;
    std::vector<LaurentPoly> lambdas;

    MatR reconstruct() const;
    // sum lambda_i (1 - x_i) == 1 - u, exactly.
    bool row_condition_holds() const;
};

// Recover the normal form of a t-free 2x2 matrix using u = det.
UNForm un_form_extract(const MatR& m);
// Same for any k with u supplied by the caller (e.g. from exponent sums).
UNForm un_form_extract(const MatR& m, const UnitMonomial& u);

// x_1^(e_1) ... x_k^(e_k) for the exponent sums of w.
UnitMonomial abelianization_unit(const Word& w, Ring ring);

// T_i T_j == T_j T_i for every pair, exactly.
bool check_T_commute(int k);

}  // namespace bf
