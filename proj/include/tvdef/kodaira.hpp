#pragma once

#include "tvdef/deformation_graph.hpp"
#include "tvdef/minkowski.hpp"

namespace tvdef {

enum class ChartTag { NearP, Complete, AwayP };

inline std::string to_string(ChartTag t)
{
    switch (t) {
    case ChartTag::NearP:
        return "NEAR_P";
    case ChartTag::Complete:
        return "COMPLETE";
    case ChartTag::AwayP:
        return "AWAY_P";
    }
    return {};
}

struct Chart {
    std::size_t pdiv = 0;  // index into the divisorial fan
    ChartTag tag = ChartTag::Complete;
};

/// Affine cover: affine-locus pdivs near P, complete-locus pdivs, then affine-locus pdivs away from P.
struct ChartCover {
    PointP1 point;
    std::vector<Chart> charts;
    std::size_t l0 = 0;
    std::size_t l1 = 0;
};

namespace detail {

inline bool has_full_dim_slice(const PolyDivisor& d)
{
    if (d.tail().dim() == d.rank()) return true;
    for (const auto& [p, c] : d.coeffs())
        if (dimension(c) == static_cast<int>(d.rank())) return true;
    return false;
}

/// The second point allowed to carry non-trivial coefficients of complete-locus pdivs.
inline PointP1 partner_point(const PointP1& p) { return p ? kInfinity : PointP1(Rat(0)); }

} // namespace detail

inline ChartCover build_cover(const DivisorialFan& xi, const PointP1& p)
{
    ChartCover cover{p, {}, 0, 0};
    std::vector<std::size_t> affine, complete;
    for (auto i : xi.maximal_indices()) {
        const auto& d = xi.pdivs[i];
        if (!detail::has_full_dim_slice(d))
            throw DomainError("AssumptionViolated: maximal polyhedral divisor " + std::to_string(i) + " has no full-dimensional slice");
        if (d.complete_locus()) {
            for (const auto& [q, c] : d.coeffs())
                if (q != p && q != detail::partner_point(p))
                    throw DomainError("AssumptionViolated: polyhedral divisor " + std::to_string(i) +
                                      " has complete locus and a non-trivial coefficient at " + point_key(q));
            complete.push_back(i);
        } else {
            affine.push_back(i);
        }
    }
    for (auto i : affine) cover.charts.push_back({i, ChartTag::NearP});
    for (auto i : complete) cover.charts.push_back({i, ChartTag::Complete});
    for (auto i : affine) cover.charts.push_back({i, ChartTag::AwayP});
    cover.l0 = affine.size();
    cover.l1 = affine.size() + complete.size();
    return cover;
}

/// The polyhedral divisor of a chart: near P the other special points are removed, away from P the point P is.
inline PolyDivisor chart_divisor(const DivisorialFan& xi, const ChartCover& cover, std::size_t k)
{
    const auto& ch = cover.charts.at(k);
    const auto& d = xi.pdivs.at(ch.pdiv);
    PolyDivisor::Coeffs coeffs(d.coeffs().begin(), d.coeffs().end());
    if (ch.tag == ChartTag::NearP) {
        for (auto& [q, c] : coeffs)
            if (q != cover.point) c = Polyhedron::empty(d.rank());
    } else if (ch.tag == ChartTag::AwayP) {
        coeffs[cover.point] = Polyhedron::empty(d.rank());
    }
    return PolyDivisor(d.tail(), std::move(coeffs));
}

struct Translation {
    int a = 1;
    LVec lambda;
};

using TranslationData = std::vector<Translation>;

/// (a, lambda) for one row of a one-parameter decomposition.
inline Translation row_translation(const SliceDecomposition& sd, std::size_t row, const PolyDivisor& d)
{
    const std::size_t n = d.rank();
    if (sd.columns != 2) throw DomainError("translation data needs a one-parameter decomposition (two columns)");
    if (d.coeff(sd.point).is_empty()) return {1, zero_vec(n)};
    const auto& tail = d.tail();
    const auto& e0 = sd.entries.at(row)[0];
    const auto& e1 = sd.entries.at(row)[1];
    auto t1 = is_lattice_translate_of(e1, tail);
    if (t1 && is_zero(*t1)) return {1, *t1};
    if (auto t0 = is_lattice_translate_of(e0, tail)) return {-1, *t0};
    if (t1) return {1, *t1};
    throw DomainError("NoTrivialSummand(" + std::to_string(row) + "): neither summand is a lattice translate of the tail cone");
}

inline TranslationData translation_data(const DivisorialFan& xi, const SliceDecomposition& sd, const ChartCover& cover)
{
    if (sd.point != cover.point) throw DomainError("decomposition and cover live at different points");
    if (sd.entries.size() != xi.pdivs.size()) throw DomainError("decomposition does not match the divisorial fan");
    TranslationData out;
    for (const auto& ch : cover.charts) {
        if (ch.tag == ChartTag::AwayP) out.push_back({1, zero_vec(xi.rank)});
        else out.push_back(row_translation(sd, ch.pdiv, xi.pdivs[ch.pdiv]));
    }
    return out;
}

/// Full antisymmetric table of a Cech 1-cocycle.
/// General: d_ij = b_ij d/dy_P + y_P^-1 sum_k <c_ij, e_k*> chi^e_k* d/dchi^e_k*.
/// Toric: d_ij(chi^v) = <c_ij, v> chi^(v - R).
struct CechCocycle {
    enum class Kind { General, Toric };
    Kind kind = Kind::General;
    PointP1 point;  // general only
    LVec degree;    // toric only, equals -R
    std::vector<std::string> charts;
    std::vector<std::vector<Rat>> b;  // general only
    std::vector<std::vector<LVec>> c;

    std::size_t size() const { return charts.size(); }

    bool antisymmetric() const
    {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) {
                if (c[i][j] != -c[j][i]) return false;
                if (kind == Kind::General && b[i][j] != -b[j][i]) return false;
            }
        return true;
    }

    bool cocycle_identity() const
    {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                for (std::size_t k = 0; k < size(); ++k) {
                    if (c[i][j] + c[j][k] != c[i][k]) return false;
                    if (kind == Kind::General && b[i][j] + b[j][k] != b[i][k]) return false;
                }
        return true;
    }

    bool is_zero() const
    {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) {
                if (!is_zero_vec(c[i][j])) return false;
                if (kind == Kind::General && b[i][j] != 0) return false;
            }
        return true;
    }

private:
    static bool is_zero_vec(const LVec& v) { return tvdef::is_zero(v); }
};

inline std::string chart_label(const ChartCover& cover, std::size_t k)
{
    return "D" + std::to_string(cover.charts[k].pdiv) + ":" + to_string(cover.charts[k].tag);
}

inline CechCocycle ks_cocycle_tvar(const DivisorialFan& xi, const SliceDecomposition& sd)
{
    auto cover = build_cover(xi, sd.point);
    auto td = translation_data(xi, sd, cover);
    const std::size_t m = cover.charts.size();
    CechCocycle cc;
    cc.kind = CechCocycle::Kind::General;
    cc.point = sd.point;
    for (std::size_t k = 0; k < m; ++k) cc.charts.push_back(chart_label(cover, k));
    cc.b.assign(m, std::vector<Rat>(m, Rat(0)));
    cc.c.assign(m, std::vector<LVec>(m, zero_vec(xi.rank)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            cc.b[i][j] = Rat(td[i].a - td[j].a) / 2;
            cc.c[i][j] = Rat(td[i].a) * td[i].lambda - Rat(td[j].a) * td[j].lambda;
        }
    return cc;
}

/// Charts are the maximal cones of the fan in their given order; entries in the lattice of the fan.
inline CechCocycle ks_cocycle_toric(const Downgrade& dg, const SliceDecomposition& sd)
{
    if (sd.point != PointP1(Rat(0))) throw DomainError("the toric cocycle needs a decomposition of the slice at 0");
    const auto& sec = dg.section;
    const std::size_t m = dg.per_cone.size();
    std::vector<LVec> lifted;
    std::vector<int> a;
    for (std::size_t k = 0; k < m; ++k) {
        auto row = dg.dfan.index_of(dg.per_cone[k]);
        if (!row) throw DomainError("cone " + std::to_string(k) + " is missing from the divisorial fan");
        auto t = row_translation(sd, *row, dg.per_cone[k]);
        a.push_back(t.a);
        lifted.push_back(sec.alpha(t.lambda, make_rat(1, 2)));
    }
    CechCocycle cc;
    cc.kind = CechCocycle::Kind::Toric;
    cc.degree = -sec.degree();
    for (std::size_t k = 0; k < m; ++k) cc.charts.push_back("cone " + std::to_string(k));
    cc.c.assign(m, std::vector<LVec>(m, zero_vec(sec.rank_nprime())));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) cc.c[i][j] = Rat(a[i]) * lifted[i] - Rat(a[j]) * lifted[j];
    return cc;
}

/// Phi(f)_ij = (f(sigma_i) - f(sigma_j))/2 rho with f(sigma) = 1 when sigma misses the graph.
inline CechCocycle phi(const Fan& f, const LVec& r, std::size_t rho, const std::vector<Rat>& values)
{
    auto g = build_graph(f, rho, r);
    if (values.size() != g.components.size())
        throw DomainError("expected " + std::to_string(g.components.size()) + " component values, got " + std::to_string(values.size()));
    const std::size_t m = f.max_cones().size();
    std::vector<Rat> fv;
    for (std::size_t k = 0; k < m; ++k) {
        std::optional<std::size_t> comp;
        for (auto t : f.max_cones()[k]) {
            auto c = g.component_of(t);
            if (!c) continue;
            if (comp && *comp != *c) throw DomainError("cone " + std::to_string(k) + " meets two components of the graph");
            comp = c;
        }
        fv.push_back(comp ? values[*comp] : Rat(1));
    }
    CechCocycle cc;
    cc.kind = CechCocycle::Kind::Toric;
    cc.degree = -r;
    for (std::size_t k = 0; k < m; ++k) cc.charts.push_back("cone " + std::to_string(k));
    cc.c.assign(m, std::vector<LVec>(m, zero_vec(f.rank())));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) cc.c[i][j] = ((fv[i] - fv[j]) / 2) * f.rays()[rho];
    return cc;
}

/// -1 on the component, +1 on the others.
inline std::vector<Rat> indicator_values(std::size_t components, std::size_t c)
{
    std::vector<Rat> v(components, Rat(1));
    v.at(c) = -1;
    return v;
}

} // namespace tvdef
