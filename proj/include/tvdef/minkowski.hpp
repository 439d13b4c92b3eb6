#pragma once

#include "tvdef/tdata.hpp"

namespace tvdef {

/// Delta = Delta^0 + ... + Delta^r. With exponent k_s > 1 the stored summand is the
/// lattice polyhedron Delta'^s and the actual summand is k_s Delta'^s.
struct CoeffDecomposition {
    Polyhedron target;
    std::vector<Polyhedron> summands;
    std::vector<int> exponents;

    int exponent(std::size_t s) const { return exponents.empty() ? 1 : exponents.at(s); }

    Polyhedron actual(std::size_t s) const
    {
        int k = exponent(s);
        return k == 1 ? summands[s] : summands[s].scale(k);
    }
};

inline Polyhedron minkowski_sum_all(const std::vector<Polyhedron>& ps, std::size_t n)
{
    if (ps.empty()) return Polyhedron::point(zero_vec(n));
    Polyhedron s = ps.front();
    for (std::size_t i = 1; i < ps.size(); ++i) s = minkowski_sum(s, ps[i]);
    return s;
}

/// Throws DomainError describing the first structural defect.
inline void validate_decomposition(const CoeffDecomposition& cd)
{
    const std::size_t n = cd.target.rank();
    if (cd.summands.empty()) throw DomainError("decomposition has no summands");
    if (!cd.exponents.empty() && cd.exponents.size() != cd.summands.size())
        throw DomainError("exponent list does not match the number of summands");
    std::vector<Polyhedron> act;
    for (std::size_t s = 0; s < cd.summands.size(); ++s) {
        const auto& p = cd.summands[s];
        if (p.rank() != n) throw DomainError("summand " + std::to_string(s) + " has wrong rank");
        if (cd.exponent(s) < 1) throw DomainError("exponents must be positive");
        if (cd.exponent(s) > 1 && !p.is_empty() && !p.is_lattice())
            throw DomainError("summand " + std::to_string(s) + " with exponent > 1 must be a lattice polyhedron");
        if (!cd.target.is_empty() && !p.is_empty() && !(p.tail() == cd.target.tail()))
            throw DomainError("summand " + std::to_string(s) + " does not have the tail cone of the target");
        act.push_back(cd.actual(s));
    }
    if (!(minkowski_sum_all(act, n) == cd.target)) throw DomainError("summands do not add up to the target");
}

struct AdmissibilityResult {
    bool admissible = true;
    std::optional<LVec> witness;  // vertex of the target with two non-lattice summand vertices
};

/// Vertex form: each vertex of the target has at most one non-lattice summand vertex.
inline AdmissibilityResult check_admissible(const CoeffDecomposition& cd)
{
    validate_decomposition(cd);
    AdmissibilityResult res;
    if (cd.target.is_empty()) return res;
    for (const auto& v : cd.target.vertices()) {
        auto u = normal_cone_generic_point(cd.target, v);
        int bad = 0;
        for (std::size_t s = 0; s < cd.summands.size(); ++s) {
            auto f = face(cd.actual(s), u);
            if (f.vertices().size() != 1) throw DomainError("summand face is not a vertex; decomposition malformed");
            if (!is_lattice_point(f.vertices().front())) ++bad;
        }
        if (bad > 1) {
            res.admissible = false;
            res.witness = v;
            return res;
        }
    }
    return res;
}

/// Evaluation form on all lattice u in the dual of the tail with |u|_inf <= bound.
inline bool check_admissible_sampled(const CoeffDecomposition& cd, int bound)
{
    validate_decomposition(cd);
    if (cd.target.is_empty()) return true;
    const std::size_t n = cd.target.rank();
    std::vector<Polyhedron> act;
    for (std::size_t s = 0; s < cd.summands.size(); ++s) act.push_back(cd.actual(s));
    std::vector<long> u(n, -bound);
    while (true) {
        LVec lu;
        for (auto x : u) lu.push_back(Rat(x));
        bool in_dual = true;
        for (const auto& r : cd.target.tail().rays()) in_dual = in_dual && dot(r, lu) >= 0;
        if (in_dual) {
            int bad = 0;
            for (const auto& p : act)
                if (!is_integer(eval_min(p, lu))) ++bad;
            if (bad > 1) return false;
        }
        std::size_t i = 0;
        while (i < n && u[i] == bound) u[i++] = -bound;
        if (i == n) break;
        ++u[i];
    }
    return true;
}

/// Entries Delta_P^{i,s} for every pdiv i of a divisorial fan and column s.
struct SliceDecomposition {
    PointP1 point;
    std::size_t columns = 0;
    std::vector<std::vector<Polyhedron>> entries;
    std::vector<int> exponents;  // per column, empty means all 1

    int exponent(std::size_t s) const { return exponents.empty() ? 1 : exponents.at(s); }

    Polyhedron actual(std::size_t i, std::size_t s) const
    {
        int k = exponent(s);
        const auto& p = entries[i][s];
        return k == 1 || p.is_empty() ? p : p.scale(k);
    }

    CoeffDecomposition row(std::size_t i, const Polyhedron& target) const
    {
        return {target, entries[i], exponents};
    }
};

/// Column 0 carries the slice, the other columns the tail cones (empty rows: empty then tails).
inline SliceDecomposition trivial_slice_decomposition(const DivisorialFan& xi, const PointP1& p, std::size_t columns)
{
    if (columns == 0) throw DomainError("a decomposition needs at least one column");
    SliceDecomposition sd{p, columns, {}, {}};
    for (const auto& d : xi.pdivs) {
        std::vector<Polyhedron> row{d.coeff(p)};
        for (std::size_t s = 1; s < columns; ++s) row.push_back(Polyhedron::from_cone(d.tail()));
        sd.entries.push_back(row);
    }
    return sd;
}

struct SliceReport {
    bool valid = true;       // conditions 1-3
    bool admissible = true;  // every non-empty row admissible
    std::vector<std::string> violations;
};

inline SliceReport check_slice_decomposition(const SliceDecomposition& sd, const DivisorialFan& xi)
{
    SliceReport rep;
    auto fail = [&](std::string msg) {
        rep.valid = false;
        rep.violations.push_back(std::move(msg));
    };
    const std::size_t m = xi.pdivs.size();
    if (sd.entries.size() != m) {
        fail("decomposition has " + std::to_string(sd.entries.size()) + " rows but the fan has " + std::to_string(m) + " polyhedral divisors");
        rep.admissible = false;
        return rep;
    }
    if (!sd.exponents.empty() && sd.exponents.size() != sd.columns) {
        fail("exponent list does not match the number of columns");
        rep.admissible = false;
        return rep;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (sd.entries[i].size() != sd.columns) {
            fail("row " + std::to_string(i) + " has the wrong number of columns");
            rep.admissible = false;
            return rep;
        }
    }

    std::vector<Polyhedron> targets;
    for (const auto& d : xi.pdivs) targets.push_back(d.coeff(sd.point));

    for (std::size_t i = 0; i < m; ++i) {
        try {
            validate_decomposition(sd.row(i, targets[i]));
        } catch (const DomainError& e) {
            fail("condition 1 fails for row " + std::to_string(i) + ": " + e.what());
        }
    }
    // rows with an empty coefficient drop out of the locus and carry no cell
    for (std::size_t s = 0; s < sd.columns; ++s) {
        std::vector<Polyhedron> col;
        for (std::size_t i = 0; i < m; ++i)
            if (!targets[i].is_empty()) col.push_back(sd.actual(i, s));
        if (!is_polyhedral_complex(col)) fail("condition 2 fails for column " + std::to_string(s));
    }
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            auto meet = intersect(targets[a], targets[b]);
            if (meet.is_empty()) continue;
            for (std::size_t i = 0; i < m; ++i) {
                if (!(targets[i] == meet)) continue;
                for (std::size_t s = 0; s < sd.columns; ++s) {
                    if (!(sd.entries[i][s] == intersect(sd.entries[a][s], sd.entries[b][s]))) {
                        fail("condition 3 fails for rows " + std::to_string(i) + " = " + std::to_string(a) + " cap " +
                             std::to_string(b) + " in column " + std::to_string(s));
                        break;
                    }
                }
            }
        }
    }
    if (!rep.valid) {
        rep.admissible = false;
        return rep;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (targets[i].is_empty()) continue;
        auto a = check_admissible(sd.row(i, targets[i]));
        if (!a.admissible) {
            rep.admissible = false;
            rep.violations.push_back("row " + std::to_string(i) + " is not admissible at vertex " + to_string(*a.witness));
        }
    }
    return rep;
}

} // namespace tvdef
