#pragma once

#include "tvdef/fan.hpp"
#include "tvdef/union_find.hpp"

namespace tvdef {

/// Gamma_rho(-R): rays tau != rho with <tau,R> > 0, joined when they lie in a common cone.
struct DeformationGraph {
    std::size_t rho = 0;  // ray index
    LVec degree;          // R
    std::vector<std::size_t> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> components;  // sorted, ordered by smallest ray index

    /// Component index of a vertex ray, nullopt for rays outside the graph.
    std::optional<std::size_t> component_of(std::size_t ray) const
    {
        for (std::size_t c = 0; c < components.size(); ++c)
            if (std::binary_search(components[c].begin(), components[c].end(), ray)) return c;
        return std::nullopt;
    }
};

inline DeformationGraph build_graph(const Fan& f, std::size_t rho, const LVec& r)
{
    if (r.size() != f.rank()) throw DomainError("degree has wrong rank");
    if (rho >= f.rays().size()) throw DomainError("ray index " + std::to_string(rho) + " out of range");
    if (dot(f.rays()[rho], r) != 1) throw DomainError("ray " + std::to_string(rho) + " does not pair to 1 with the degree");
    DeformationGraph g;
    g.rho = rho;
    g.degree = r;
    std::vector<bool> in(f.rays().size(), false);
    for (std::size_t t = 0; t < f.rays().size(); ++t) {
        if (t != rho && dot(f.rays()[t], r) > 0) {
            in[t] = true;
            g.vertices.push_back(t);
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& c : f.max_cones())
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b)
                if (in[c[a]] && in[c[b]]) edges.insert({std::min(c[a], c[b]), std::max(c[a], c[b])});
    g.edges.assign(edges.begin(), edges.end());

    UnionFind uf(f.rays().size());
    for (const auto& [a, b] : g.edges) uf.unite(a, b);
    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (auto v : g.vertices) by_root[uf.find(v)].push_back(v);
    for (auto& [root, comp] : by_root) g.components.push_back(std::move(comp));
    std::sort(g.components.begin(), g.components.end());
    return g;
}

} // namespace tvdef
