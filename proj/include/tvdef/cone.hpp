#pragma once

#include "tvdef/linalg.hpp"

#include <map>

namespace tvdef {

namespace detail {

struct ConeGenerators {
    std::vector<LVec> rays;
    std::vector<LVec> lineality;
};

/// Incremental double description: generators of {x : <a,x> >= 0 for a in ineqs, <e,x> = 0 for e in eqs}.
inline ConeGenerators double_description(std::size_t n, const std::vector<LVec>& ineqs,
                                         const std::vector<LVec>& eqs)
{
    std::vector<LVec> constraints;
    for (const auto& e : eqs) {
        constraints.push_back(e);
        constraints.push_back(-e);
    }
    constraints.insert(constraints.end(), ineqs.begin(), ineqs.end());

    std::vector<LVec> lin;
    for (std::size_t i = 0; i < n; ++i) lin.push_back(unit_vec(n, i));
    std::vector<LVec> rays;
    std::vector<LVec> processed;

    for (const auto& a : constraints) {
        if (a.size() != n) throw DomainError("constraint has wrong rank");
        std::size_t hit = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) {
                hit = i;
                break;
            }
        if (hit != lin.size()) {
            LVec l = lin[hit];
            Rat al = dot(a, l);
            if (al < 0) {
                l = -l;
                al = -al;
            }
            std::vector<LVec> next_lin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == hit) continue;
                next_lin.push_back(primitive(lin[i] - (dot(a, lin[i]) / al) * l));
            }
            for (auto& r : rays) r = primitive(r - (dot(a, r) / al) * l);
            rays.push_back(primitive(l));
            lin = std::move(next_lin);
            processed.push_back(a);
            continue;
        }

        std::vector<LVec> pos, neg, zero;
        std::vector<Rat> pos_val, neg_val;
        for (const auto& r : rays) {
            Rat v = dot(a, r);
            if (v > 0) {
                pos.push_back(r);
                pos_val.push_back(v);
            } else if (v < 0) {
                neg.push_back(r);
                neg_val.push_back(v);
            } else {
                zero.push_back(r);
            }
        }
        if (neg.empty()) {
            processed.push_back(a);
            continue;
        }
        std::vector<LVec> next = pos;
        next.insert(next.end(), zero.begin(), zero.end());
        const std::size_t target = n - lin.size();
        if (target >= 2) {
            for (std::size_t i = 0; i < pos.size(); ++i) {
                for (std::size_t j = 0; j < neg.size(); ++j) {
                    Matrix tight;
                    for (const auto& c : processed)
                        if (dot(c, pos[i]) == 0 && dot(c, neg[j]) == 0) tight.push_back(c);
                    if (tight.size() + 2 < target) continue;
                    if (rank(tight, n) != target - 2) continue;
                    next.push_back(primitive(pos_val[i] * neg[j] - neg_val[j] * pos[i]));
                }
            }
        }
        rays = std::move(next);
        processed.push_back(a);
    }

    ConeGenerators out;
    out.lineality = canonical_span(lin, n);
    for (const auto& r : rays) {
        LVec p = primitive(project_off(r, out.lineality));
        if (!is_zero(p)) out.rays.push_back(p);
    }
    sort_unique(out.rays);
    return out;
}

} // namespace detail

/// Rational polyhedral cone with both generator and inequality descriptions.
///
/// Rays are the extreme rays of the pointed part, projected off the lineality
/// space; facets are projected off the equation space. Both lists are primitive
/// and sorted, so equal cones compare equal structurally.
class Cone {
public:
    Cone() = default;

    static Cone from_generators(std::size_t n, const std::vector<LVec>& rays,
                                const std::vector<LVec>& lineality = {})
    {
        auto dual = detail::double_description(n, rays, lineality);
        auto primal = detail::double_description(n, dual.rays, dual.lineality);
        return Cone(n, std::move(primal), std::move(dual));
    }

    static Cone from_inequalities(std::size_t n, const std::vector<LVec>& ineqs,
                                  const std::vector<LVec>& eqs = {})
    {
        auto primal = detail::double_description(n, ineqs, eqs);
        auto dual = detail::double_description(n, primal.rays, primal.lineality);
        return Cone(n, std::move(primal), std::move(dual));
    }

    static Cone zero(std::size_t n)
    {
        thread_local std::map<std::size_t, Cone> cache;
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, from_generators(n, {})).first;
        return it->second;
    }
    static Cone full(std::size_t n)
    {
        thread_local std::map<std::size_t, Cone> cache;
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, from_inequalities(n, {})).first;
        return it->second;
    }

    std::size_t rank() const { return rank_; }
    const std::vector<LVec>& rays() const { return rays_; }
    const std::vector<LVec>& lineality() const { return lineality_; }
    const std::vector<LVec>& facets() const { return facets_; }
    const std::vector<LVec>& equations() const { return equations_; }

    bool pointed() const { return lineality_.empty(); }
    std::size_t dim() const { return rank_ - equations_.size(); }
    bool is_zero_cone() const { return rays_.empty() && lineality_.empty(); }

    bool contains(const LVec& v) const
    {
        for (const auto& e : equations_)
            if (dot(e, v) != 0) return false;
        for (const auto& f : facets_)
            if (dot(f, v) < 0) return false;
        return true;
    }

    bool contains(const Cone& other) const
    {
        for (const auto& r : other.rays_)
            if (!contains(r)) return false;
        for (const auto& l : other.lineality_)
            if (!contains(l) || !contains(-l)) return false;
        return true;
    }

    /// True iff v lies in the relative interior.
    bool relint_contains(const LVec& v) const
    {
        if (!contains(v)) return false;
        for (const auto& f : facets_)
            if (dot(f, v) == 0) return false;
        return true;
    }

    /// {u : <v,u> >= 0 for all v in this cone}.
    Cone dual() const { return from_generators(rank_, facets_, equations_); }

    Cone intersect(const Cone& other) const
    {
        if (other.rank_ != rank_) throw DomainError("rank mismatch in cone intersection");
        auto ineqs = facets_;
        ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
        auto eqs = equations_;
        eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
        return from_inequalities(rank_, ineqs, eqs);
    }

    Cone sum(const Cone& other) const
    {
        if (other.rank_ != rank_) throw DomainError("rank mismatch in cone sum");
        auto r = rays_;
        r.insert(r.end(), other.rays_.begin(), other.rays_.end());
        auto l = lineality_;
        l.insert(l.end(), other.lineality_.begin(), other.lineality_.end());
        return from_generators(rank_, r, l);
    }

    /// Face on which u (from the dual cone) vanishes.
    Cone face(const LVec& u) const
    {
        std::vector<LVec> keep;
        for (const auto& r : rays_) {
            Rat v = dot(r, u);
            if (v < 0) throw DomainError("functional not in the dual cone");
            if (v == 0) keep.push_back(r);
        }
        for (const auto& l : lineality_)
            if (dot(l, u) != 0) throw DomainError("functional not in the dual cone");
        return from_generators(rank_, keep, lineality_);
    }

    /// Faces are exactly the sets cut out by facets tight on a subset; test via the tight generators.
    bool is_face_of(const Cone& bigger) const
    {
        if (!bigger.contains(*this)) return false;
        std::vector<LVec> tight;
        for (const auto& f : bigger.facets_) {
            bool all = true;
            for (const auto& r : rays_) all = all && dot(f, r) == 0;
            for (const auto& l : lineality_) all = all && dot(f, l) == 0;
            if (all) tight.push_back(f);
        }
        std::vector<LVec> gens;
        for (const auto& r : bigger.rays_) {
            bool on = true;
            for (const auto& f : tight) on = on && dot(f, r) == 0;
            if (on) gens.push_back(r);
        }
        return from_generators(rank_, gens, bigger.lineality_) == *this;
    }

    bool operator==(const Cone& o) const
    {
        return rank_ == o.rank_ && rays_ == o.rays_ && lineality_ == o.lineality_;
    }

private:
    Cone(std::size_t n, detail::ConeGenerators primal, detail::ConeGenerators dual)
        : rank_(n),
          rays_(std::move(primal.rays)),
          lineality_(std::move(primal.lineality)),
          facets_(std::move(dual.rays)),
          equations_(std::move(dual.lineality))
    {
    }

    std::size_t rank_ = 0;
    std::vector<LVec> rays_;
    std::vector<LVec> lineality_;
    std::vector<LVec> facets_;
    std::vector<LVec> equations_;
};

/// Element of the relative interior: the sum of the extreme rays (zero if there are none).
inline LVec relint_point(const Cone& c)
{
    LVec s = zero_vec(c.rank());
    for (const auto& r : c.rays()) s = s + r;
    return s;
}

} // namespace tvdef
