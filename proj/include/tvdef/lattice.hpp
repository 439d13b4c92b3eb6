#pragma once

#include "tvdef/linalg.hpp"

namespace tvdef {

namespace detail {

inline Int floor_div(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::vector<Int> to_ints(const LVec& v)
{
    std::vector<Int> out;
    for (const auto& x : v) {
        if (!is_integer(x)) throw DomainError("expected an integer vector, got " + to_string(v));
        out.push_back(x.get_num());
    }
    return out;
}

inline LVec to_lvec(const std::vector<Int>& v)
{
    LVec out;
    for (const auto& x : v) out.push_back(Rat(x));
    return out;
}

} // namespace detail

/// Row Hermite normal form of an integer matrix; zero rows are dropped.
inline std::vector<LVec> hermite_rows(const std::vector<LVec>& rows, std::size_t n)
{
    std::vector<std::vector<Int>> m;
    for (const auto& r : rows) m.push_back(detail::to_ints(r));
    std::size_t top = 0;
    for (std::size_t c = 0; c < n && top < m.size(); ++c) {
        while (true) {
            std::size_t best = m.size();
            for (std::size_t i = top; i < m.size(); ++i)
                if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
            if (best == m.size()) break;
            std::swap(m[top], m[best]);
            bool done = true;
            for (std::size_t i = top + 1; i < m.size(); ++i) {
                if (m[i][c] == 0) continue;
                Int q = detail::floor_div(m[i][c], m[top][c]);
                for (std::size_t k = 0; k < n; ++k) m[i][k] -= q * m[top][k];
                if (m[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (top < m.size() && m[top][c] != 0) {
            if (m[top][c] < 0)
                for (auto& x : m[top]) x = -x;
            for (std::size_t i = 0; i < top; ++i) {
                Int q = detail::floor_div(m[i][c], m[top][c]);
                for (std::size_t k = 0; k < n; ++k) m[i][k] -= q * m[top][k];
            }
            ++top;
        }
    }
    std::vector<LVec> out;
    for (std::size_t i = 0; i < top; ++i) out.push_back(detail::to_lvec(m[i]));
    return out;
}

/// Lattice basis of ker(R) in Hermite form together with some z with <z,R> = 1.
/// R must be a primitive integer vector.
inline std::pair<std::vector<LVec>, LVec> kernel_and_section(const LVec& r)
{
    const std::size_t n = r.size();
    auto v = detail::to_ints(r);
    std::vector<std::vector<Int>> cols(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) cols[i][i] = 1;
    while (true) {
        std::size_t p = n;
        for (std::size_t j = 0; j < n; ++j)
            if (v[j] != 0 && (p == n || abs(v[j]) < abs(v[p]))) p = j;
        if (p == n) throw DomainError("degree vector must be nonzero");
        bool single = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == p || v[j] == 0) continue;
            Int q = detail::floor_div(v[j], v[p]);
            v[j] -= q * v[p];
            for (std::size_t k = 0; k < n; ++k) cols[j][k] -= q * cols[p][k];
            if (v[j] != 0) single = false;
        }
        if (!single) continue;
        if (abs(v[p]) != 1) throw DomainError("degree vector " + to_string(r) + " is not primitive");
        LVec z = detail::to_lvec(cols[p]);
        if (v[p] < 0) z = -z;
        std::vector<LVec> ker;
        for (std::size_t j = 0; j < n; ++j)
            if (j != p) ker.push_back(detail::to_lvec(cols[j]));
        return {hermite_rows(ker, n), z};
    }
}

/// Identification N' = ker(R) + Z z with coordinates (s(v), <v,R>).
class SectionData {
public:
    SectionData() = default;

    /// Kernel basis from the Hermite form; z defaults to a short solution of <z,R> = 1.
    SectionData(const LVec& r, const std::optional<LVec>& z = std::nullopt) : r_(r)
    {
        auto [ker, z0] = kernel_and_section(r);
        basis_ = ker;
        if (z) {
            if (z->size() != r.size() || !is_lattice_point(*z)) throw DomainError("section vector must be an integer vector of matching rank");
            if (dot(*z, r) != 1) throw DomainError("section vector z must satisfy <z,R> = 1");
            z_ = *z;
        } else {
            z_ = short_section(z0);
        }
        Matrix b;
        for (std::size_t i = 0; i < r.size(); ++i) {
            LVec row;
            for (const auto& k : basis_) row.push_back(k[i]);
            row.push_back(z_[i]);
            b.push_back(row);
        }
        inverse_ = invert(b);
    }

    const LVec& degree() const { return r_; }
    const LVec& z() const { return z_; }
    const std::vector<LVec>& basis() const { return basis_; }
    std::size_t rank_n() const { return basis_.size(); }
    std::size_t rank_nprime() const { return r_.size(); }

    LVec coords(const LVec& v) const
    {
        LVec c;
        for (const auto& row : inverse_) c.push_back(dot(row, v));
        return c;
    }

    /// Cosection s(v) = v - <v,R> z in kernel coordinates.
    LVec s(const LVec& v) const
    {
        auto c = coords(v);
        c.pop_back();
        return c;
    }

    /// alpha(c, h) = sum c_i k_i + h z.
    LVec alpha(const LVec& c, const Rat& h) const
    {
        LVec out = h * z_;
        for (std::size_t i = 0; i < basis_.size(); ++i) out = out + c[i] * basis_[i];
        return out;
    }

private:
    LVec short_section(const LVec& z0) const
    {
        LVec z = z0;
        for (const auto& b : basis_) {
            std::size_t c = 0;
            while (b[c] == 0) ++c;
            Int q = detail::floor_div(z[c].get_num(), b[c].get_num());
            z = z - Rat(q) * b;
        }
        if (basis_.size() > 6) return z;
        LVec best = z;
        auto norm = [](const LVec& v) {
            Rat m = 0, l1 = 0;
            for (const auto& x : v) {
                m = std::max(m, Rat(abs(x)));
                l1 += abs(x);
            }
            return std::make_pair(m, l1);
        };
        std::vector<int> eps(basis_.size(), -1);
        while (true) {
            LVec cand = z;
            for (std::size_t i = 0; i < eps.size(); ++i) cand = cand + Rat(eps[i]) * basis_[i];
            if (norm(cand) < norm(best) || (norm(cand) == norm(best) && lex_less(cand, best))) best = cand;
            std::size_t i = 0;
            while (i < eps.size() && eps[i] == 1) eps[i++] = -1;
            if (i == eps.size()) break;
            ++eps[i];
        }
        return best;
    }

    static Matrix invert(const Matrix& b)
    {
        const std::size_t n = b.size();
        Matrix inv(n, LVec(n));
        for (std::size_t j = 0; j < n; ++j) {
            auto col = solve(b, unit_vec(n, j));
            if (!col) throw DomainError("section data is not a lattice basis");
            for (std::size_t i = 0; i < n; ++i) inv[i][j] = (*col)[i];
        }
        return inv;
    }

    LVec r_;
    LVec z_;
    std::vector<LVec> basis_;
    Matrix inverse_;
};

} // namespace tvdef
