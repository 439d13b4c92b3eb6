#pragma once

#include "tvdef/cone.hpp"

#include <map>
#include <set>

namespace tvdef {

using RaySet = std::vector<std::size_t>;  // sorted ray indices

/// Fan in N'_Q given by primitive rays and maximal cones (ray index sets).
/// All faces are computed at construction, keyed by sorted ray index sets.
class Fan {
public:
    Fan() = default;

    Fan(std::size_t rank, std::vector<LVec> rays, std::vector<RaySet> max_cones)
        : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones))
    {
        if (rank_ == 0) throw DomainError("fan rank must be positive");
        for (auto& r : rays_) {
            if (r.size() != rank_) throw DomainError("ray " + to_string(r) + " has wrong rank");
            if (!is_lattice_point(r) || is_zero(r)) throw DomainError("ray " + to_string(r) + " is not a nonzero lattice vector");
            if (primitive(r) != r) throw DomainError("ray " + to_string(r) + " is not primitive");
        }
        for (std::size_t i = 0; i < rays_.size(); ++i)
            for (std::size_t j = i + 1; j < rays_.size(); ++j)
                if (rays_[i] == rays_[j]) throw DomainError("duplicate ray " + to_string(rays_[i]));
        for (auto& c : max_cones_) {
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
            for (auto idx : c)
                if (idx >= rays_.size()) throw DomainError("cone refers to unknown ray index " + std::to_string(idx));
            cones_.push_back(make_cone(c));
        }
        for (const auto& c : max_cones_) collect_faces(c);
    }

    std::size_t rank() const { return rank_; }
    const std::vector<LVec>& rays() const { return rays_; }
    const std::vector<RaySet>& max_cones() const { return max_cones_; }
    const Cone& cone(std::size_t i) const { return cones_.at(i); }
    const std::set<RaySet>& faces() const { return faces_; }

    Cone make_cone(const RaySet& idx) const
    {
        std::vector<LVec> gens;
        for (auto i : idx) gens.push_back(rays_.at(i));
        return Cone::from_generators(rank_, gens);
    }

    /// Ray index sets of the facets of a cone spanned by idx.
    std::vector<RaySet> facets_of(const RaySet& idx) const
    {
        auto c = make_cone(idx);
        std::vector<RaySet> out;
        for (const auto& f : c.facets()) {
            RaySet tight;
            for (auto i : idx)
                if (dot(f, rays_[i]) == 0) tight.push_back(i);
            out.push_back(tight);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Index of a maximal cone containing v, if any.
    std::optional<std::size_t> locate(const LVec& v) const
    {
        for (std::size_t i = 0; i < cones_.size(); ++i)
            if (cones_[i].contains(v)) return i;
        return std::nullopt;
    }

private:
    void collect_faces(const RaySet& idx)
    {
        if (!faces_.insert(idx).second) return;
        if (idx.empty()) return;
        for (const auto& f : facets_of(idx)) collect_faces(f);
    }

    std::size_t rank_ = 0;
    std::vector<LVec> rays_;
    std::vector<RaySet> max_cones_;
    std::vector<Cone> cones_;
    std::set<RaySet> faces_;
};

struct FanReport {
    bool valid = true;
    std::vector<std::string> problems;
    std::vector<std::pair<std::size_t, std::size_t>> offending_pairs;
};

/// Checks pointedness, that listed rays are extreme, and that cones meet in common faces.
inline FanReport validate_fan(const Fan& f)
{
    FanReport rep;
    const auto& mc = f.max_cones();
    for (std::size_t i = 0; i < mc.size(); ++i) {
        const auto& c = f.cone(i);
        if (!c.pointed()) {
            rep.valid = false;
            rep.problems.push_back("cone " + std::to_string(i) + " is not pointed");
            continue;
        }
        if (c.rays().size() != mc[i].size()) {
            rep.valid = false;
            rep.problems.push_back("cone " + std::to_string(i) + " lists a ray that is not extreme");
        }
    }
    for (std::size_t i = 0; i < mc.size(); ++i) {
        for (std::size_t j = i + 1; j < mc.size(); ++j) {
            const auto &a = f.cone(i), &b = f.cone(j);
            if (!a.pointed() || !b.pointed()) continue;
            auto meet = a.intersect(b);
            RaySet common;
            std::set_intersection(mc[i].begin(), mc[i].end(), mc[j].begin(), mc[j].end(),
                                  std::back_inserter(common));
            bool ok = meet.is_face_of(a) && meet.is_face_of(b) && meet == f.make_cone(common);
            if (!ok) {
                rep.valid = false;
                rep.offending_pairs.emplace_back(i, j);
            }
        }
    }
    return rep;
}

/// Every maximal cone simplicial with ray matrix extendable to a lattice basis.
inline bool is_smooth(const Fan& f)
{
    for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
        const auto& idx = f.max_cones()[i];
        if (f.cone(i).dim() != idx.size()) return false;
        std::vector<LVec> gens;
        for (auto r : idx) gens.push_back(f.rays()[r]);
        if (abs(maximal_minor_gcd(gens)) != 1) return false;
    }
    return true;
}

/// Pure full-dimensional fan whose every facet is shared by exactly two maximal cones.
inline bool is_complete(const Fan& f)
{
    if (f.max_cones().empty()) return false;
    std::map<RaySet, int> count;
    for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
        if (f.cone(i).dim() != f.rank()) return false;
        for (const auto& fac : f.facets_of(f.max_cones()[i])) ++count[fac];
    }
    for (const auto& [fac, k] : count)
        if (k != 2) return false;
    return true;
}

/// True iff some cone of the fan contains both rays.
inline bool common_cone(const Fan& f, std::size_t a, std::size_t b)
{
    if (a >= f.rays().size() || b >= f.rays().size()) throw DomainError("unknown ray index");
    for (const auto& c : f.max_cones())
        if (std::binary_search(c.begin(), c.end(), a) && std::binary_search(c.begin(), c.end(), b)) return true;
    return false;
}

} // namespace tvdef
