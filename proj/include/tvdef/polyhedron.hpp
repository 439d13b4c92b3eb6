#pragma once

#include "tvdef/cone.hpp"

#include <memory>
#include <optional>

namespace tvdef {

/// Rational polyhedron conv(vertices) + tail with pointed tailcone, or the empty set.
///
/// Stored canonically: irredundant vertices sorted lexicographically, so two
/// polyhedra are equal iff their representations are equal.
class Polyhedron {
public:
    Polyhedron() = default;

    static Polyhedron empty(std::size_t n)
    {
        Polyhedron p;
        p.rank_ = n;
        p.empty_ = true;
        p.tail_ = Cone::zero(n);
        return p;
    }

    static Polyhedron point(const LVec& v) { return from_generators(v.size(), {v}, {}); }

    /// Polyhedron equal to the cone itself (vertex 0).
    static Polyhedron from_cone(const Cone& c)
    {
        if (!c.pointed()) throw DomainError("tailcone must be pointed");
        Polyhedron p;
        p.rank_ = c.rank();
        p.empty_ = false;
        p.vertices_ = {zero_vec(c.rank())};
        p.tail_ = c;
        return p;
    }

    /// conv(points) + cone(rays). Empty point list gives the empty polyhedron.
    static Polyhedron from_generators(std::size_t n, const std::vector<LVec>& points,
                                      const std::vector<LVec>& rays)
    {
        if (points.empty()) return empty(n);
        std::vector<LVec> gens;
        for (const auto& v : points) gens.push_back(lift(v, 1));
        for (const auto& r : rays) gens.push_back(lift(r, 0));
        return from_homogenized(n, Cone::from_generators(n + 1, gens));
    }

    /// {x : <a_i, x> >= b_i} intersected with {x : <e_j, x> = c_j}.
    static Polyhedron from_inequalities(std::size_t n, const std::vector<std::pair<LVec, Rat>>& ineqs,
                                        const std::vector<std::pair<LVec, Rat>>& eqs = {})
    {
        std::vector<LVec> hi{unit_vec(n + 1, n)}, he;
        for (const auto& [a, b] : ineqs) hi.push_back(lift(a, -b));
        for (const auto& [a, b] : eqs) he.push_back(lift(a, -b));
        return from_homogenized(n, Cone::from_inequalities(n + 1, hi, he));
    }

    std::size_t rank() const { return rank_; }
    bool is_empty() const { return empty_; }
    const std::vector<LVec>& vertices() const { return vertices_; }
    const Cone& tail() const { return tail_; }

    bool is_bounded() const { return tail_.is_zero_cone(); }
    bool is_lattice() const
    {
        for (const auto& v : vertices_)
            if (!is_lattice_point(v)) return false;
        return true;
    }

    /// Homogenization cone(P x {1}) in rank n+1.
    const Cone& homogenized() const
    {
        if (!hom_) {
            std::vector<LVec> gens;
            for (const auto& v : vertices_) gens.push_back(lift(v, 1));
            for (const auto& r : tail_.rays()) gens.push_back(lift(r, 0));
            hom_ = std::make_shared<const Cone>(Cone::from_generators(rank_ + 1, gens));
        }
        return *hom_;
    }

    bool contains(const LVec& x) const
    {
        if (empty_) return false;
        return homogenized().contains(lift(x, 1));
    }

    bool contains(const Polyhedron& q) const
    {
        if (q.empty_) return true;
        if (empty_) return false;
        const auto& h = homogenized();
        for (const auto& v : q.vertices_)
            if (!h.contains(lift(v, 1))) return false;
        for (const auto& r : q.tail_.rays())
            if (!h.contains(lift(r, 0))) return false;
        return true;
    }

    Polyhedron translate(const LVec& t) const
    {
        if (empty_) return *this;
        Polyhedron p = *this;
        for (auto& v : p.vertices_) v = v + t;
        sort_unique(p.vertices_);
        p.hom_.reset();
        return p;
    }

    /// k * P for k > 0.
    Polyhedron scale(const Rat& k) const
    {
        if (k <= 0) throw DomainError("scale factor must be positive");
        if (empty_) return *this;
        Polyhedron p = *this;
        for (auto& v : p.vertices_) v = k * v;
        sort_unique(p.vertices_);
        p.hom_.reset();
        return p;
    }

    bool operator==(const Polyhedron& o) const
    {
        if (rank_ != o.rank_ || empty_ != o.empty_) return false;
        if (empty_) return true;
        return vertices_ == o.vertices_ && tail_ == o.tail_;
    }

    static LVec lift(const LVec& v, const Rat& last)
    {
        LVec w = v;
        w.push_back(last);
        return w;
    }

    /// h must be the homogenization of a polyhedron (pointed, inside x_{n+1} >= 0).
    static Polyhedron from_homogenized(std::size_t n, Cone h)
    {
        auto p = from_homogenized_raw(n, h);
        if (!p.empty_) p.hom_ = std::make_shared<const Cone>(std::move(h));
        return p;
    }

private:
    static Polyhedron from_homogenized_raw(std::size_t n, const Cone& h)
    {
        if (!h.pointed()) throw DomainError("tailcone must be pointed");
        std::vector<LVec> verts, rays;
        for (const auto& r : h.rays()) {
            const Rat& t = r[n];
            LVec head(r.begin(), r.end() - 1);
            if (t > 0)
                verts.push_back((1 / t) * head);
            else
                rays.push_back(head);
        }
        if (verts.empty()) return empty(n);
        Polyhedron p;
        p.rank_ = n;
        p.empty_ = false;
        sort_unique(verts);
        p.vertices_ = std::move(verts);
        p.tail_ = Cone::from_generators(n, rays);
        return p;
    }

    std::size_t rank_ = 0;
    bool empty_ = true;
    std::vector<LVec> vertices_;
    Cone tail_;
    mutable std::shared_ptr<const Cone> hom_;
};

inline Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q)
{
    if (p.rank() != q.rank()) throw DomainError("rank mismatch in Minkowski sum");
    if (p.is_empty() || q.is_empty()) return Polyhedron::empty(p.rank());
    std::vector<LVec> pts;
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) pts.push_back(a + b);
    auto rays = p.tail().rays();
    rays.insert(rays.end(), q.tail().rays().begin(), q.tail().rays().end());
    return Polyhedron::from_generators(p.rank(), pts, rays);
}

inline Polyhedron intersect(const Polyhedron& p, const Polyhedron& q)
{
    if (p.rank() != q.rank()) throw DomainError("rank mismatch in intersection");
    if (p.is_empty() || q.is_empty()) return Polyhedron::empty(p.rank());
    if (p == q || q.contains(p)) return p;
    if (p.contains(q)) return q;
    const auto& hp = p.homogenized();
    const auto& hq = q.homogenized();
    const std::size_t n = p.rank();
    auto ineqs = hp.facets();
    ineqs.insert(ineqs.end(), hq.facets().begin(), hq.facets().end());
    ineqs.push_back(unit_vec(n + 1, n));
    auto eqs = hp.equations();
    eqs.insert(eqs.end(), hq.equations().begin(), hq.equations().end());
    return Polyhedron::from_homogenized(n, Cone::from_inequalities(n + 1, ineqs, eqs));
}

namespace detail {
inline void require_in_tail_dual(const Polyhedron& p, const LVec& u)
{
    if (p.is_empty()) throw DomainError("EmptyInput: polyhedron is empty");
    if (u.size() != p.rank()) throw DomainError("rank mismatch for functional");
    for (const auto& r : p.tail().rays())
        if (dot(r, u) < 0) throw DomainError("UnboundedBelow: functional not in the dual of the tailcone");
}
} // namespace detail

/// min over p of <., u>; requires u in the dual of the tailcone.
inline Rat eval_min(const Polyhedron& p, const LVec& u)
{
    detail::require_in_tail_dual(p, u);
    Rat m = dot(p.vertices().front(), u);
    for (const auto& v : p.vertices()) m = std::min(m, Rat(dot(v, u)));
    return m;
}

/// The face of p on which u attains its minimum.
inline Polyhedron face(const Polyhedron& p, const LVec& u)
{
    Rat m = eval_min(p, u);
    std::vector<LVec> verts, rays;
    for (const auto& v : p.vertices())
        if (dot(v, u) == m) verts.push_back(v);
    for (const auto& r : p.tail().rays())
        if (dot(r, u) == 0) rays.push_back(r);
    return Polyhedron::from_generators(p.rank(), verts, rays);
}

/// Normal cone of p at the vertex v: {u : face(p,u) contains v}.
inline Cone normal_cone(const Polyhedron& p, const LVec& v)
{
    if (p.is_empty() || std::find(p.vertices().begin(), p.vertices().end(), v) == p.vertices().end())
        throw DomainError("NotAVertex: " + to_string(v));
    std::vector<LVec> ineqs;
    for (const auto& w : p.vertices())
        if (w != v) ineqs.push_back(w - v);
    for (const auto& r : p.tail().rays()) ineqs.push_back(r);
    return Cone::from_inequalities(p.rank(), ineqs);
}

/// A functional u with face(p, u) = {v}.
inline LVec normal_cone_generic_point(const Polyhedron& p, const LVec& v)
{
    return relint_point(normal_cone(p, v));
}

/// lambda with p = lambda + c, if p is a lattice translate of the cone c.
inline std::optional<LVec> is_lattice_translate_of(const Polyhedron& p, const Cone& c)
{
    if (p.is_empty() || p.vertices().size() != 1) return std::nullopt;
    if (!(p.tail() == c)) return std::nullopt;
    if (!is_lattice_point(p.vertices().front())) return std::nullopt;
    return p.vertices().front();
}

/// True iff p is a face of q (the empty set is a face of everything).
inline bool is_face_of(const Polyhedron& p, const Polyhedron& q)
{
    if (p.is_empty()) return true;
    if (q.is_empty()) return false;
    if (!q.contains(p)) return false;
    const auto& hq = q.homogenized();
    std::vector<LVec> gens;
    for (const auto& v : p.vertices()) gens.push_back(Polyhedron::lift(v, 1));
    for (const auto& r : p.tail().rays()) gens.push_back(Polyhedron::lift(r, 0));
    std::vector<LVec> tight;
    for (const auto& f : hq.facets()) {
        bool all = true;
        for (const auto& g : gens) all = all && dot(f, g) == 0;
        if (all) tight.push_back(f);
    }
    std::vector<LVec> verts, rays;
    for (const auto& v : q.vertices()) {
        auto lv = Polyhedron::lift(v, 1);
        bool on = true;
        for (const auto& f : tight) on = on && dot(f, lv) == 0;
        if (on) verts.push_back(v);
    }
    for (const auto& r : q.tail().rays()) {
        auto lr = Polyhedron::lift(r, 0);
        bool on = true;
        for (const auto& f : tight) on = on && dot(f, lr) == 0;
        if (on) rays.push_back(r);
    }
    // extreme rays of a face of a pointed cone are extreme rays of the cone
    auto tail_rays = p.tail().rays();
    std::sort(tail_rays.begin(), tail_rays.end());
    std::sort(rays.begin(), rays.end());
    return verts == p.vertices() && rays == tail_rays;
}

/// Dimension of the affine hull (-1 for the empty set).
inline int dimension(const Polyhedron& p)
{
    if (p.is_empty()) return -1;
    Matrix m;
    for (const auto& v : p.vertices()) m.push_back(v - p.vertices().front());
    for (const auto& r : p.tail().rays()) m.push_back(r);
    return static_cast<int>(rank(m, p.rank()));
}

inline std::string to_string(const Polyhedron& p)
{
    if (p.is_empty()) return "empty";
    std::string s = "conv{";
    for (std::size_t i = 0; i < p.vertices().size(); ++i) s += (i ? "," : "") + to_string(p.vertices()[i]);
    s += "}";
    if (!p.tail().rays().empty()) {
        s += "+cone{";
        for (std::size_t i = 0; i < p.tail().rays().size(); ++i)
            s += (i ? "," : "") + to_string(p.tail().rays()[i]);
        s += "}";
    }
    return s;
}

} // namespace tvdef
