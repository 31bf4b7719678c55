#include "bf/hnf.hpp"

#include <limits>

namespace bf {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    data.reserve(rows * cols);
    for (const auto& row : init) {
        if (row.size() != cols) throw DomainError("ragged matrix literal");
        for (long long v : row) data.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols != o.rows) throw DomainError("matrix dimension mismatch");
    IntMatrix r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < cols; ++k) {
            const Integer& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += a * o.at(k, j);
        }
    }
    return r;
}

long EchelonBasis::find_pivot(std::uint32_t row) const {
    std::size_t lo = 0, hi = pivots.size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (pivots[mid] < row) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < pivots.size() && pivots[lo] == row) return static_cast<long>(lo);
    return -1;
}

namespace {

detail::Checked64 narrow(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw detail::Overflow();
    }
    return detail::Checked64(static_cast<std::int64_t>(v));
}

template <class Z, class In>
EchelonBasis run_kernel(std::size_t dim, const std::vector<SparseVec<Integer>>& columns, HnfOptions opts,
                        In convert_in) {
    detail::EchelonKernel<Z> kernel(dim, opts);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        SparseVec<Z> v;
        v.reserve(columns[j].size());
        for (const auto& [i, x] : columns[j]) {
            if (i >= dim) throw DomainError("column entry outside the lattice dimension");
            if (x != 0) v.emplace_back(i, convert_in(x));
        }
        SparseVec<Z> combo;
        if (opts.track_combos || opts.track_kernel) combo.emplace_back(static_cast<std::uint32_t>(j), Z(1));
        kernel.insert(std::move(v), std::move(combo));
    }
    kernel.finish();
    EchelonBasis out;
    if constexpr (std::is_same_v<Z, Integer>) {
        kernel.export_to(out, [](const Integer& x) { return x; });
    } else {
        kernel.export_to(out, [](const Z& x) { return Integer(x.value()); });
    }
    return out;
}

}  // namespace

EchelonBasis echelon_hnf(std::size_t dim, const std::vector<SparseVec<Integer>>& columns, HnfOptions opts) {
    for (const auto& c : columns) {
        for (std::size_t i = 1; i < c.size(); ++i) {
            if (c[i - 1].first >= c[i].first) throw DomainError("sparse column not sorted");
        }
    }
    try {
        return run_kernel<detail::Checked64>(dim, columns, opts, narrow);
    } catch (const detail::Overflow&) {
        return run_kernel<Integer>(dim, columns, opts, [](const Integer& x) { return x; });
    }
}

bool is_hnf(const EchelonBasis& b) {
    if (b.vectors.size() != b.pivots.size()) return false;
    for (std::size_t i = 0; i < b.vectors.size(); ++i) {
        const auto& v = b.vectors[i];
        if (v.empty() || v.front().first != b.pivots[i] || v.front().second <= 0) return false;
        if (i > 0 && b.pivots[i - 1] >= b.pivots[i]) return false;
        for (std::size_t k = 1; k < v.size(); ++k) {
            if (v[k - 1].first >= v[k].first || v[k].second == 0) return false;
        }
        if (v.back().first >= b.dim) return false;
    }
    for (std::size_t j = 0; j < b.vectors.size(); ++j) {
        const Integer& p = b.vectors[j].front().second;
        for (std::size_t i = 0; i < j; ++i) {
            const Integer* x = detail::lookup(b.vectors[i], b.pivots[j]);
            if (x != nullptr && (*x < 0 || *x >= p)) return false;
        }
    }
    return true;
}

std::optional<std::vector<Integer>> solve_in_basis(const EchelonBasis& b, const SparseVec<Integer>& v) {
    std::vector<Integer> coeffs(b.rank(), 0);
    SparseVec<Integer> rest = v;
    while (!rest.empty()) {
        if (rest.front().first >= b.dim) throw DomainError("vector index outside the lattice dimension");
        const long s = b.find_pivot(rest.front().first);
        if (s < 0) return std::nullopt;
        const auto& bv = b.vectors[static_cast<std::size_t>(s)];
        const Integer& p = bv.front().second;
        if (rest.front().second % p != 0) return std::nullopt;
        const Integer f = rest.front().second / p;
        coeffs[static_cast<std::size_t>(s)] = f;
        rest = detail::combine(Integer(1), rest, Integer(-f), bv);
    }
    return coeffs;
}

SparseVec<Integer> to_sparse(const std::vector<Integer>& dense) {
    SparseVec<Integer> v;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] != 0) v.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
    }
    return v;
}

std::vector<Integer> to_dense(const SparseVec<Integer>& v, std::size_t dim) {
    std::vector<Integer> d(dim, 0);
    for (const auto& [i, x] : v) {
        if (i >= dim) throw DomainError("vector index outside the dimension");
        d[i] = x;
    }
    return d;
}

HnfResult hnf(const IntMatrix& m) {
    std::vector<SparseVec<Integer>> columns(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (m.at(i, j) != 0) columns[j].emplace_back(static_cast<std::uint32_t>(i), m.at(i, j));
        }
    }
    const EchelonBasis b = echelon_hnf(m.rows, columns, HnfOptions{true, true});
    HnfResult r;
    r.rank = b.rank();
    r.h = IntMatrix(m.rows, m.cols);
    r.u = IntMatrix(m.cols, m.cols);
    std::size_t col = 0;
    for (std::size_t i = 0; i < b.rank(); ++i, ++col) {
        for (const auto& [row, x] : b.vectors[i]) r.h.at(row, col) = x;
        for (const auto& [j, x] : b.combos[i]) r.u.at(j, col) = x;
    }
    for (const auto& k : b.kernel) {
        for (const auto& [j, x] : k) r.u.at(j, col) = x;
        ++col;
    }
    return r;
}

}  // namespace bf
