#pragma once

#include "tvdef/rational.hpp"

#include <functional>
#include <optional>
#include <utility>

namespace tvdef {

/// Dense rational matrix stored by rows.
using Matrix = std::vector<LVec>;

struct EchelonForm {
    Matrix rows;                      // nonzero rows of the reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each row
};

inline EchelonForm rref(Matrix m, std::size_t ncols)
{
    EchelonForm out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        Rat inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t k = c; k < ncols; ++k) m[i][k] -= f * m[r][k];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m, std::size_t ncols)
{
    return rref(m, ncols).pivots.size();
}

/// Basis of {x : m x = 0}, each vector primitive and integral.
inline std::vector<LVec> nullspace(const Matrix& m, std::size_t ncols)
{
    auto e = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<LVec> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        LVec v = zero_vec(ncols);
        v[f] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
        basis.push_back(primitive(v));
    }
    return basis;
}

/// Canonical basis of the row space: reduced echelon rows scaled to primitive integers.
inline std::vector<LVec> canonical_span(const std::vector<LVec>& vs, std::size_t n)
{
    auto e = rref(vs, n);
    std::vector<LVec> out;
    for (auto& r : e.rows) out.push_back(primitive(r));
    return out;
}

inline Rat determinant(Matrix m)
{
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Solves a x = b for a square invertible a; nullopt if singular.
inline std::optional<LVec> solve(const Matrix& a, const LVec& b)
{
    const std::size_t n = a.size();
    Matrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    auto e = rref(aug, n + 1);
    if (e.pivots.size() != n || e.pivots.back() != n - 1) return std::nullopt;
    LVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = e.rows[i][n];
    return x;
}

inline Matrix transpose(const Matrix& m, std::size_t ncols)
{
    Matrix t(ncols, LVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j) t[j][i] = m[i][j];
    return t;
}

/// Orthogonal projection of v onto the complement of span(basis).
inline LVec project_off(const LVec& v, const std::vector<LVec>& basis)
{
    if (basis.empty()) return v;
    const std::size_t k = basis.size();
    Matrix gram(k, LVec(k));
    LVec rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
        rhs[i] = dot(basis[i], v);
    }
    auto coef = solve(gram, rhs);
    LVec out = v;
    for (std::size_t i = 0; i < k; ++i) out = out - (*coef)[i] * basis[i];
    return out;
}

/// Calls f on every k-element subset of {0..n-1}, in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f)
{
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// gcd of all k x k minors of the k x n matrix formed by vs (0 if rank < k).
inline Int maximal_minor_gcd(const std::vector<LVec>& vs)
{
    if (vs.empty()) return 1;
    const std::size_t k = vs.size(), n = vs[0].size();
    Int g = 0;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        Matrix sub(k, LVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = vs[i][cols[j]];
        Rat d = determinant(sub);
        g = gcd(g, Int(d.get_num()));
    });
    return g;
}

} // namespace tvdef
