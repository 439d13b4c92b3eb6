#pragma once

#include "tvdef/kodaira.hpp"

namespace tvdef {

/// Rays rho with <rho,R> = 1 and non-empty Gamma_rho(-R).
inline std::vector<std::size_t> omega(const Fan& f, const LVec& r)
{
    if (r.size() != f.rank()) throw DomainError("degree has wrong rank");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.rays().size(); ++i)
        if (dot(f.rays()[i], r) == 1 && !build_graph(f, i, r).vertices.empty()) out.push_back(i);
    return out;
}

namespace detail {

inline void require_smooth_complete(const Fan& f)
{
    if (!is_smooth(f)) throw DomainError("NotSmooth: the fan is not smooth");
    if (!is_complete(f)) throw DomainError("NotComplete: the fan is not complete");
}

} // namespace detail

/// dim T^1(-R) = sum over Omega(-R) of (#components - 1).
inline std::size_t t1_dimension(const Fan& f, const LVec& r)
{
    detail::require_smooth_complete(f);
    std::size_t dim = 0;
    for (auto rho : omega(f, r)) dim += build_graph(f, rho, r).components.size() - 1;
    return dim;
}

struct T1Summary {
    LVec degree;
    std::vector<std::size_t> omega;
    std::vector<DeformationGraph> graphs;  // one per ray of omega
    std::size_t dim = 0;
};

inline T1Summary t1_summary(const Fan& f, const LVec& r)
{
    T1Summary out{r, {}, {}, t1_dimension(f, r)};
    out.omega = omega(f, r);
    for (auto rho : out.omega) out.graphs.push_back(build_graph(f, rho, r));
    return out;
}

struct SpanDecomposition {
    DeformationGraph graph;
    std::size_t component = 0;
    Downgrade downgrade;       // taken with section z = rho
    SliceDecomposition slice;  // at the point 0
};

/// pi(C, rho, R): rows whose slice at 0 meets C become (tail, Delta), the others (Delta, tail).
inline SpanDecomposition span_decomposition(const Fan& f, const LVec& r, std::size_t rho, std::size_t component)
{
    auto g = build_graph(f, rho, r);
    if (g.vertices.empty()) throw DomainError("ray " + std::to_string(rho) + " is not in Omega(-R)");
    if (component >= g.components.size()) throw DomainError("component index " + std::to_string(component) + " out of range");
    auto dg = downgrade(f, r, f.rays()[rho]);
    std::vector<LVec> pts;
    for (auto t : g.components[component]) {
        const auto& tau = f.rays()[t];
        pts.push_back((1 / dot(tau, r)) * dg.section.s(tau));
    }
    const PointP1 zero = Rat(0);
    SliceDecomposition sd{zero, 2, {}, {}};
    for (const auto& d : dg.dfan.pdivs) {
        auto c = d.coeff(zero);
        auto tail = Polyhedron::from_cone(d.tail());
        bool touch = false;
        for (const auto& x : pts) touch = touch || (!c.is_empty() && c.contains(x));
        sd.entries.push_back(touch ? std::vector<Polyhedron>{tail, c} : std::vector<Polyhedron>{c, tail});
    }
    return {std::move(g), component, std::move(dg), std::move(sd)};
}

struct SpanGenerator {
    std::size_t rho = 0;
    std::size_t component = 0;
    SpanDecomposition decomposition;
    CechCocycle cocycle;
};

struct SpanReport {
    LVec degree;
    std::vector<SpanGenerator> generators;
    std::size_t rank = 0;  // dimension spanned in T^1(-R)
};

/// Every pi(C, rho, R) with its toric cocycle. Per rho the indicator functions of the components
/// span H^0(Gamma_rho(-R)) and the constants are the one relation, so the rank counts
/// rank(indicators + constants) - 1 for each rho.
inline SpanReport span_report(const Fan& f, const LVec& r)
{
    detail::require_smooth_complete(f);
    SpanReport rep;
    rep.degree = r;
    for (auto rho : omega(f, r)) {
        auto g = build_graph(f, rho, r);
        Matrix rows;
        for (std::size_t c = 0; c < g.components.size(); ++c) {
            auto sd = span_decomposition(f, r, rho, c);
            auto cc = ks_cocycle_toric(sd.downgrade, sd.slice);
            rep.generators.push_back({rho, c, std::move(sd), std::move(cc)});
            LVec fv;
            for (auto v : g.vertices) fv.push_back(g.component_of(v) == c ? Rat(-1) : Rat(1));
            rows.push_back(fv);
        }
        rows.push_back(LVec(g.vertices.size(), Rat(1)));
        rep.rank += rank(rows, g.vertices.size()) - 1;
    }
    return rep;
}

} // namespace tvdef
