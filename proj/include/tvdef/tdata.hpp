#pragma once

#include "tvdef/fan.hpp"
#include "tvdef/lattice.hpp"
#include "tvdef/polyhedron.hpp"

#include <map>
#include <numeric>

namespace tvdef {

/// Point of P^1: a rational coordinate, or infinity (nullopt).
using PointP1 = std::optional<Rat>;

struct PointOrder {
    bool operator()(const PointP1& a, const PointP1& b) const
    {
        if (!a) return false;
        if (!b) return true;
        return *a < *b;
    }
};

inline const PointP1 kInfinity = std::nullopt;

inline std::string point_key(const PointP1& p) { return p ? to_string(*p) : "inf"; }

inline PointP1 parse_point(std::string_view s)
{
    if (s == "inf" || s == "infinity" || s == "oo") return std::nullopt;
    return parse_rat(s);
}

using QDivisor = std::map<PointP1, Rat, PointOrder>;

inline Rat degree(const QDivisor& d)
{
    Rat s = 0;
    for (const auto& [p, c] : d) s += c;
    return s;
}

inline std::string to_string(const QDivisor& d)
{
    if (d.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : d) out += (out.empty() ? "" : " + ") + to_string(c) + "*{" + point_key(p) + "}";
    return out;
}

/// Polyhedral divisor on P^1: tail cone and coefficients; absent points carry the tail itself.
class PolyDivisor {
public:
    using Coeffs = std::map<PointP1, Polyhedron, PointOrder>;

    PolyDivisor() = default;

    PolyDivisor(Cone tail, Coeffs coeffs) : tail_(std::move(tail))
    {
        if (!tail_.pointed()) throw DomainError("tail cone of a polyhedral divisor must be pointed");
        auto trivial = Polyhedron::from_cone(tail_);
        for (auto& [p, c] : coeffs) {
            if (c.rank() != tail_.rank()) throw DomainError("coefficient at " + point_key(p) + " has wrong rank");
            if (!c.is_empty() && !(c.tail() == tail_))
                throw DomainError("coefficient at " + point_key(p) + " does not have the common tail cone");
            if (!(c == trivial)) coeffs_.emplace(p, std::move(c));
        }
    }

    std::size_t rank() const { return tail_.rank(); }
    const Cone& tail() const { return tail_; }
    const Coeffs& coeffs() const { return coeffs_; }

    Polyhedron coeff(const PointP1& p) const
    {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? Polyhedron::from_cone(tail_) : it->second;
    }

    bool complete_locus() const
    {
        for (const auto& [p, c] : coeffs_)
            if (c.is_empty()) return false;
        return true;
    }

    bool operator==(const PolyDivisor& o) const { return tail_ == o.tail_ && coeffs_ == o.coeffs_; }

private:
    Cone tail_;
    Coeffs coeffs_;
};

inline std::string to_string(const PolyDivisor& d)
{
    std::string s = "tail{";
    for (std::size_t i = 0; i < d.tail().rays().size(); ++i) s += (i ? "," : "") + to_string(d.tail().rays()[i]);
    s += "}";
    for (const auto& [p, c] : d.coeffs()) s += " " + point_key(p) + ":" + to_string(c);
    return s;
}

/// D(u) = sum_P min<Delta_P, u> P over points with non-empty coefficient.
inline QDivisor evaluate(const PolyDivisor& d, const LVec& u)
{
    if (u.size() != d.rank()) throw DomainError("rank mismatch for evaluation");
    for (const auto& r : d.tail().rays())
        if (dot(r, u) < 0) throw DomainError("evaluation point " + to_string(u) + " is not in the dual of the tail cone");
    QDivisor out;
    for (const auto& [p, c] : d.coeffs()) {
        if (c.is_empty()) continue;
        Rat v = eval_min(c, u);
        if (v != 0) out[p] = v;
    }
    return out;
}

/// Minkowski sum of all coefficients; the tail itself when there are none.
inline Polyhedron degree(const PolyDivisor& d)
{
    if (!d.complete_locus()) throw DomainError("AffineLocus: degree undefined for a divisor with an empty coefficient");
    Polyhedron s = Polyhedron::from_cone(d.tail());
    for (const auto& [p, c] : d.coeffs()) s = minkowski_sum(s, c);
    return s;
}

inline bool is_proper(const PolyDivisor& d)
{
    if (!d.complete_locus()) return true;
    auto deg = degree(d);
    if (!Polyhedron::from_cone(d.tail()).contains(deg)) return false;
    if (deg.contains(zero_vec(d.rank()))) return false;
    auto dual = d.tail().dual();
    for (const auto& v : deg.vertices()) {
        auto f = dual.face(v);
        auto gens = f.rays();
        for (const auto& l : f.lineality()) {
            gens.push_back(l);
            gens.push_back(-l);
        }
        for (const auto& u : gens)
            if (degree(evaluate(d, u)) != 0) return false;
    }
    return true;
}

/// True iff small is a face of big.
inline bool is_face(const PolyDivisor& small, const PolyDivisor& big)
{
    if (small.rank() != big.rank()) return false;
    if (!is_face_of(Polyhedron::from_cone(small.tail()), Polyhedron::from_cone(big.tail()))) return false;
    std::set<PointP1, PointOrder> keys;
    for (const auto& [p, c] : small.coeffs()) keys.insert(p);
    for (const auto& [p, c] : big.coeffs()) keys.insert(p);
    for (const auto& p : keys)
        if (!is_face_of(small.coeff(p), big.coeff(p))) return false;
    if (small.complete_locus() && big.complete_locus())
        return intersect(degree(big), Polyhedron::from_cone(small.tail())) == degree(small);
    return true;
}

/// Coefficientwise intersection with tail the intersection of the tails.
inline PolyDivisor intersect(const PolyDivisor& a, const PolyDivisor& b)
{
    if (a.rank() != b.rank()) throw DomainError("rank mismatch in intersection");
    std::set<PointP1, PointOrder> keys;
    for (const auto& [p, c] : a.coeffs()) keys.insert(p);
    for (const auto& [p, c] : b.coeffs()) keys.insert(p);
    PolyDivisor::Coeffs coeffs;
    for (const auto& p : keys) coeffs.emplace(p, intersect(a.coeff(p), b.coeff(p)));
    return PolyDivisor(a.tail().intersect(b.tail()), std::move(coeffs));
}

struct FaceViolation {
    std::size_t i, j;
};

/// Finite set of polyhedral divisors closed under intersection, stored in canonical order.
struct DivisorialFan {
    std::size_t rank = 0;
    std::vector<PolyDivisor> pdivs;
    std::vector<bool> maximal;
    std::vector<FaceViolation> violations;

    bool valid() const { return violations.empty(); }

    std::vector<std::size_t> maximal_indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < pdivs.size(); ++i)
            if (maximal[i]) out.push_back(i);
        return out;
    }

    std::optional<std::size_t> index_of(const PolyDivisor& d) const
    {
        for (std::size_t i = 0; i < pdivs.size(); ++i)
            if (pdivs[i] == d) return i;
        return std::nullopt;
    }

    /// Points with a coefficient different from the tail in some pdiv.
    std::vector<PointP1> special_points() const
    {
        std::set<PointP1, PointOrder> keys;
        for (const auto& d : pdivs)
            for (const auto& [p, c] : d.coeffs()) keys.insert(p);
        return {keys.begin(), keys.end()};
    }
};

/// Closure under pairwise intersection; face conditions are recorded as violations.
inline DivisorialFan build_dfan_report(const std::vector<PolyDivisor>& generators)
{
    if (generators.empty()) throw DomainError("a divisorial fan needs at least one polyhedral divisor");
    std::vector<PolyDivisor> all;
    std::vector<std::string> keys;
    std::map<std::string, std::size_t> index;
    auto add = [&](PolyDivisor d) {
        auto key = to_string(d);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        index.emplace(key, all.size());
        keys.push_back(std::move(key));
        all.push_back(std::move(d));
        return all.size() - 1;
    };
    for (const auto& g : generators) {
        if (g.rank() != generators.front().rank()) throw DomainError("generators have different ranks");
        add(g);
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> meet;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) meet[{j, i}] = add(intersect(all[i], all[j]));

    std::vector<std::size_t> order(all.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (all[a].tail().dim() != all[b].tail().dim()) return all[a].tail().dim() > all[b].tail().dim();
        return keys[a] < keys[b];
    });

    std::map<std::pair<std::size_t, std::size_t>, bool> face_memo;
    auto face = [&](std::size_t small, std::size_t big) {
        if (small == big) return true;
        auto [it, fresh] = face_memo.try_emplace({small, big}, false);
        if (fresh) it->second = is_face(all[small], all[big]);
        return it->second;
    };
    auto meet_of = [&](std::size_t a, std::size_t b) { return a == b ? a : meet.at({std::min(a, b), std::max(a, b)}); };

    DivisorialFan f;
    f.rank = generators.front().rank();
    for (auto i : order) f.pdivs.push_back(all[i]);
    for (auto i : order) {
        bool is_max = true;
        for (std::size_t j = 0; j < all.size() && is_max; ++j)
            if (i != j && meet_of(i, j) == i && face(i, j)) is_max = false;
        f.maximal.push_back(is_max);
    }
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            auto m = meet_of(order[a], order[b]);
            if (!face(m, order[a]) || !face(m, order[b])) f.violations.push_back({a, b});
        }
    }
    return f;
}

inline DivisorialFan build_dfan(const std::vector<PolyDivisor>& generators)
{
    auto f = build_dfan_report(generators);
    if (!f.valid()) {
        std::string msg = "FaceConditionViolation";
        for (const auto& v : f.violations) msg += " (" + std::to_string(v.i) + ", " + std::to_string(v.j) + ")";
        throw DomainError(msg);
    }
    return f;
}

struct SliceEntry {
    std::size_t label;  // index into DivisorialFan::pdivs
    Polyhedron poly;
};

struct Slice {
    std::vector<SliceEntry> entries;
    bool is_complex = true;
};

/// True iff the non-empty polyhedra pairwise meet in common faces.
inline bool is_polyhedral_complex(const std::vector<Polyhedron>& ps)
{
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            if (ps[i].is_empty() || ps[j].is_empty()) continue;
            auto m = intersect(ps[i], ps[j]);
            if (!is_face_of(m, ps[i]) || !is_face_of(m, ps[j])) return false;
        }
    }
    return true;
}

inline Slice slice(const DivisorialFan& xi, const PointP1& p)
{
    Slice s;
    std::vector<Polyhedron> ps;
    for (std::size_t i = 0; i < xi.pdivs.size(); ++i) {
        auto c = xi.pdivs[i].coeff(p);
        s.entries.push_back({i, c});
        ps.push_back(c);
    }
    s.is_complex = is_polyhedral_complex(ps);
    return s;
}

/// Vertices of the bounded part of a slice (union of vertex sets of non-empty entries).
inline std::vector<LVec> slice_vertices(const Slice& s)
{
    std::vector<LVec> out;
    for (const auto& e : s.entries)
        if (!e.poly.is_empty()) out.insert(out.end(), e.poly.vertices().begin(), e.poly.vertices().end());
    sort_unique(out);
    return out;
}

struct Downgrade {
    DivisorialFan dfan;
    SectionData section;
    std::vector<PolyDivisor> per_cone;  // one pdiv per maximal cone, in fan order
};

/// Polyhedral divisor s(sigma cap [R=1]) {0} + s(sigma cap [R=-1]) {inf}.
inline PolyDivisor downgrade_cone(const Cone& sigma, const SectionData& sd)
{
    const auto& r = sd.degree();
    const std::size_t n = sd.rank_n();
    auto flat = sigma.intersect(Cone::from_inequalities(r.size(), {}, {r}));
    std::vector<LVec> tail_rays;
    for (const auto& t : flat.rays()) tail_rays.push_back(sd.s(t));
    auto tail = Cone::from_generators(n, tail_rays);
    std::vector<LVec> pos, neg;
    for (const auto& t : sigma.rays()) {
        Rat h = dot(t, r);
        if (h > 0) pos.push_back(sd.s((1 / h) * t));
        if (h < 0) neg.push_back(sd.s((-1 / h) * t));
    }
    PolyDivisor::Coeffs coeffs;
    coeffs.emplace(PointP1(Rat(0)), Polyhedron::from_generators(n, pos, tail.rays()));
    coeffs.emplace(kInfinity, Polyhedron::from_generators(n, neg, tail.rays()));
    return PolyDivisor(tail, std::move(coeffs));
}

inline Downgrade downgrade(const Fan& f, const LVec& r, const std::optional<LVec>& z = std::nullopt)
{
    if (r.size() != f.rank()) throw DomainError("degree vector has wrong rank");
    if (f.rank() < 2) throw DomainError("downgrade needs rank at least 2");
    if (!is_lattice_point(r) || is_zero(r) || primitive(r) != r)
        throw DomainError("degree vector " + to_string(r) + " is not primitive");
    Downgrade out{{}, SectionData(r, z), {}};
    for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
        if (!f.cone(i).pointed()) throw DomainError("cone " + std::to_string(i) + " is not pointed");
        out.per_cone.push_back(downgrade_cone(f.cone(i), out.section));
    }
    out.dfan = build_dfan(out.per_cone);
    return out;
}

/// Polyhedral divisor on P^1 in N' for the one-parameter family from D_0 = d00 + d01.
inline PolyDivisor upgrade_total_space(const Cone& sigma, const SectionData& sd, const Polyhedron& d00,
                                       const Polyhedron& d01)
{
    const auto& r = sd.degree();
    if (sigma.rank() != r.size()) throw DomainError("cone and degree have different ranks");
    if (!sigma.pointed() || sigma.dim() != sigma.rank()) throw DomainError("cone must be full-dimensional and pointed");
    auto d = downgrade_cone(sigma, sd);
    auto d0 = d.coeff(Rat(0)), dinf = d.coeff(kInfinity);
    if (d0.is_empty()) throw DomainError("coefficient at 0 is empty; nothing to decompose");
    if (d00.rank() != sd.rank_n() || d01.rank() != sd.rank_n()) throw DomainError("summand has wrong rank");
    if (!(minkowski_sum(d00, d01) == d0)) throw DomainError("summands do not add up to the coefficient at 0");

    const std::size_t n = r.size();
    auto sigma_plus = sigma.intersect(Cone::from_inequalities(n, {r}));
    auto lift_poly = [&](const Polyhedron& p, const Rat& h, std::vector<LVec>& pts, std::vector<LVec>& rays) {
        if (p.is_empty()) return;
        for (const auto& v : p.vertices()) pts.push_back(sd.alpha(v, h));
        for (const auto& t : p.tail().rays()) rays.push_back(sd.alpha(t, 0));
    };
    auto build = [&](std::vector<LVec> pts, std::vector<LVec> rays) {
        rays.insert(rays.end(), sigma_plus.rays().begin(), sigma_plus.rays().end());
        return Polyhedron::from_generators(n, pts, rays);
    };
    std::vector<LVec> p0, r0, p1, r1, pi, ri;
    lift_poly(d00, 1, p0, r0);
    lift_poly(d01, 0, p1, r1);
    lift_poly(dinf, -1, pi, ri);
    lift_poly(Polyhedron::from_cone(d.tail()), 0, pi, ri);

    PolyDivisor::Coeffs coeffs;
    coeffs.emplace(PointP1(Rat(0)), build(p0, r0));
    coeffs.emplace(PointP1(Rat(1)), build(p1, r1));
    coeffs.emplace(kInfinity, build(pi, ri));
    return PolyDivisor(sigma_plus, std::move(coeffs));
}

} // namespace tvdef
