#pragma once

// Hermite normal form over Z.
//
// Convention: lattice vectors are columns indexed by row positions
// 0..dim-1. The basis returned has strictly increasing pivot rows (the first
// nonzero entry of each vector), positive pivots, and every entry of another
// basis vector in a pivot row lies in [0, pivot). That form is unique for a
// given lattice, so two generating sets span the same lattice exactly when
// their HNF bases coincide.
//
// The elimination kernel is written once as a template. It first runs on
// overflow-checked 64-bit integers and restarts on arbitrary precision when
// any intermediate value leaves the int64 range.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "bf/integer.hpp"

namespace bf {

template <class Z>
using SparseVec = std::vector<std::pair<std::uint32_t, Z>>;

// Dense row-major integer matrix.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> init);

    static IntMatrix identity(std::size_t n);

    Integer& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix&) const = default;
};

// Echelon basis in the HNF convention above, with optional bookkeeping of
// how each basis vector combines the input columns.
struct EchelonBasis {
    std::size_t dim = 0;
    std::vector<std::uint32_t> pivots;          // pivot row of each basis vector, increasing
    std::vector<SparseVec<Integer>> vectors;    // basis vectors
    std::vector<SparseVec<Integer>> combos;     // basis vector = sum combo[j] * input column j
    std::vector<SparseVec<Integer>> kernel;     // input-column relations that reduced to zero

    std::size_t rank() const { return vectors.size(); }
    // Index of the basis vector pivoting at `row`, or -1.
    long find_pivot(std::uint32_t row) const;
};

struct HnfOptions {
    bool track_combos = false;
    bool track_kernel = false;
};

EchelonBasis echelon_hnf(std::size_t dim, const std::vector<SparseVec<Integer>>& columns,
                         HnfOptions opts = {});

// Structural check of the HNF invariants.
bool is_hnf(const EchelonBasis& b);

// Coefficients c with sum c_i * vectors[i] = v, or nullopt if v is not in the lattice.
std::optional<std::vector<Integer>> solve_in_basis(const EchelonBasis& b, const SparseVec<Integer>& v);

struct HnfResult {
    IntMatrix h;  // m * u, basis columns first then zero columns
    IntMatrix u;  // unimodular
    std::size_t rank = 0;
};

// Column-style HNF of a dense matrix: H = m U.
HnfResult hnf(const IntMatrix& m);

SparseVec<Integer> to_sparse(const std::vector<Integer>& dense);
std::vector<Integer> to_dense(const SparseVec<Integer>& v, std::size_t dim);

namespace detail {

struct Overflow : std::exception {
    const char* what() const noexcept override { return "int64 overflow"; }
};

// int64 with every operation checked.
class Checked64 {
public:
    constexpr Checked64() = default;
    constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    std::int64_t value() const { return v_; }

    friend Checked64 operator+(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow();
        return r;
    }
    friend Checked64 operator-(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow();
        return r;
    }
    friend Checked64 operator*(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow();
        return r;
    }
    friend Checked64 operator/(Checked64 a, Checked64 b) {
        if (a.v_ == INT64_MIN && b.v_ == -1) throw Overflow();
        return a.v_ / b.v_;
    }
    friend Checked64 operator%(Checked64 a, Checked64 b) {
        if (b.v_ == -1) return 0;
        return a.v_ % b.v_;
    }
    Checked64 operator-() const {
        if (v_ == INT64_MIN) throw Overflow();
        return -v_;
    }
    friend bool operator==(Checked64 a, Checked64 b) { return a.v_ == b.v_; }
    friend auto operator<=>(Checked64 a, Checked64 b) { return a.v_ <=> b.v_; }

private:
    std::int64_t v_ = 0;
};

template <class Z>
Z floor_div(const Z& a, const Z& b) {
    Z q = a / b;
    if (!(a % b == Z(0)) && ((a < Z(0)) != (b < Z(0)))) q = q - Z(1);
    return q;
}

// g = gcd(a, b) > 0 with s*a + t*b = g; requires (a, b) != (0, 0).
template <class Z>
void xgcd(const Z& a, const Z& b, Z& g, Z& s, Z& t) {
    Z r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (!(r1 == Z(0))) {
        Z qq = r0 / r1;
        Z r2 = r0 - qq * r1;
        Z s2 = s0 - qq * s1;
        Z t2 = t0 - qq * t1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 < Z(0)) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    g = r0;
    s = s0;
    t = t0;
}

// ca * a + cb * b over sorted sparse vectors.
template <class Z>
SparseVec<Z> combine(const std::type_identity_t<Z>& ca, const SparseVec<Z>& a, const std::type_identity_t<Z>& cb,
                     const SparseVec<Z>& b) {
    SparseVec<Z> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    const bool a_live = !(ca == Z(0));
    const bool b_live = !(cb == Z(0));
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            if (a_live) out.emplace_back(i->first, ca * i->second);
            ++i;
        } else if (i == a.end() || j->first < i->first) {
            if (b_live) out.emplace_back(j->first, cb * j->second);
            ++j;
        } else {
            Z v = ca * i->second + cb * j->second;
            if (!(v == Z(0))) out.emplace_back(i->first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

template <class Z>
const Z* lookup(const SparseVec<Z>& v, std::uint32_t idx) {
    std::size_t lo = 0, hi = v.size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (v[mid].first < idx) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < v.size() && v[lo].first == idx) return &v[lo].second;
    return nullptr;
}

template <class Z>
class EchelonKernel {
public:
    EchelonKernel(std::size_t dim, HnfOptions opts) : slot_(dim, -1), opts_(opts) {}

    void insert(SparseVec<Z> v, SparseVec<Z> combo) {
        while (!v.empty()) {
            const std::uint32_t lead = v.front().first;
            const long s = slot_[lead];
            if (s < 0) {
                if (v.front().second < Z(0)) {
                    negate(v);
                    negate(combo);
                }
                Entry e{std::move(v), std::move(combo)};
                reduce_tail(e);
                slot_[lead] = static_cast<long>(entries_.size());
                entries_.push_back(std::move(e));
                return;
            }
            Entry& b = entries_[static_cast<std::size_t>(s)];
            const Z a = b.vec.front().second;
            const Z c = v.front().second;
            if (c % a == Z(0)) {
                const Z f = c / a;
                v = combine(Z(1), v, Z(-f), b.vec);
                if (opts_.track_combos || opts_.track_kernel) combo = combine(Z(1), combo, Z(-f), b.combo);
            } else {
                Z g, sa, tc;
                xgcd(a, c, g, sa, tc);
                const Z ag = a / g;
                const Z cg = c / g;
                SparseVec<Z> nb = combine(sa, b.vec, tc, v);
                SparseVec<Z> nv = combine(ag, v, Z(-cg), b.vec);
                if (opts_.track_combos || opts_.track_kernel) {
                    SparseVec<Z> nbc = combine(sa, b.combo, tc, combo);
                    combo = combine(ag, combo, Z(-cg), b.combo);
                    b.combo = std::move(nbc);
                }
                b.vec = std::move(nb);
                reduce_tail(b);
                v = std::move(nv);
            }
            reduce_tail_vec(v, combo);
        }
        if (opts_.track_kernel) kernel_.push_back(std::move(combo));
    }

    // Reduce every entry in a pivot row into [0, pivot).
    void finish() {
        order_.clear();
        for (std::size_t r = 0; r < slot_.size(); ++r) {
            if (slot_[r] >= 0) order_.push_back(static_cast<std::uint32_t>(r));
        }
        for (std::size_t jj = 0; jj < order_.size(); ++jj) {
            const std::uint32_t row = order_[jj];
            const Entry& pj = entries_[static_cast<std::size_t>(slot_[row])];
            const Z p = pj.vec.front().second;
            for (std::size_t ii = 0; ii < jj; ++ii) {
                Entry& e = entries_[static_cast<std::size_t>(slot_[order_[ii]])];
                const Z* x = lookup(e.vec, row);
                if (x == nullptr) continue;
                if (!(*x < Z(0)) && *x < p) continue;
                const Z f = floor_div(*x, p);
                e.vec = combine(Z(1), e.vec, Z(-f), pj.vec);
                if (opts_.track_combos) e.combo = combine(Z(1), e.combo, Z(-f), pj.combo);
            }
        }
    }

    template <class Out>
    void export_to(EchelonBasis& out, Out convert) const {
        out.dim = slot_.size();
        for (std::uint32_t row : order_) {
            const Entry& e = entries_[static_cast<std::size_t>(slot_[row])];
            out.pivots.push_back(row);
            out.vectors.push_back(convert_vec(e.vec, convert));
            if (opts_.track_combos) out.combos.push_back(convert_vec(e.combo, convert));
        }
        for (const auto& k : kernel_) out.kernel.push_back(convert_vec(k, convert));
    }

private:
    struct Entry {
        SparseVec<Z> vec;
        SparseVec<Z> combo;
    };

    // Bring entries sitting in other pivot rows into [0, pivot).
    void reduce_tail_vec(SparseVec<Z>& v, SparseVec<Z>& combo) const {
        if (v.empty()) return;
        std::uint32_t from = v.front().first + 1;
        std::size_t pos = 1;
        while (pos < v.size()) {
            const auto [idx, x] = v[pos];
            const long s = idx < from ? -1 : slot_[idx];
            if (s < 0) {
                ++pos;
                continue;
            }
            const Entry& pe = entries_[static_cast<std::size_t>(s)];
            const Z p = pe.vec.front().second;
            if (!(x < Z(0)) && x < p) {
                ++pos;
                continue;
            }
            const Z f = floor_div(x, p);
            v = combine(Z(1), v, Z(-f), pe.vec);
            if (opts_.track_combos || opts_.track_kernel) combo = combine(Z(1), combo, Z(-f), pe.combo);
            from = idx + 1;
            pos = 1;
            while (pos < v.size() && v[pos].first < from) ++pos;
        }
    }

    void reduce_tail(Entry& e) const { reduce_tail_vec(e.vec, e.combo); }

    static void negate(SparseVec<Z>& v) {
        for (auto& [i, x] : v) x = -x;
    }

    template <class Out>
    static SparseVec<Integer> convert_vec(const SparseVec<Z>& v, Out convert) {
        SparseVec<Integer> r;
        r.reserve(v.size());
        for (const auto& [i, x] : v) r.emplace_back(i, convert(x));
        return r;
    }

    std::vector<long> slot_;
    std::vector<Entry> entries_;
    std::vector<SparseVec<Z>> kernel_;
    std::vector<std::uint32_t> order_;
    HnfOptions opts_;
};

}  // namespace detail

}  // namespace bf
