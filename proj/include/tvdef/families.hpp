#pragma once

#include "tvdef/minkowski.hpp"

namespace tvdef {

/// Parameter t_{P,s}; column 0 is the undeformed divisor with t = 0.
struct ParamKey {
    PointP1 point;
    std::size_t column = 0;

    bool operator<(const ParamKey& o) const
    {
        PointOrder lt;
        if (lt(point, o.point)) return true;
        if (lt(o.point, point)) return false;
        return column < o.column;
    }
    bool operator==(const ParamKey& o) const { return point == o.point && column == o.column; }
};

inline std::string to_string(const ParamKey& k) { return point_key(k.point) + "," + std::to_string(k.column); }

inline ParamKey parse_param_key(std::string_view s)
{
    auto comma = s.find(',');
    if (comma == std::string_view::npos) throw ParseError("parameter key must look like \"P,s\": " + std::string(s));
    std::string col(s.substr(comma + 1));
    if (col.empty() || col.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad column in parameter key " + std::string(s));
    return {parse_point(s.substr(0, comma)), static_cast<std::size_t>(std::stoul(col))};
}

using Assignment = std::map<ParamKey, Rat>;

/// Prime divisor V(y_P^k - t_{P,s}) on P^1 x S.
struct DivisorRecord {
    ParamKey key;
    int exponent = 1;
};

namespace detail {

using Poly = std::vector<Rat>;  // coefficients, lowest degree first

inline void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Rat binomial(int n, int k)
{
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

inline Rat power(const Rat& x, int k)
{
    Rat r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

/// Polynomial in y whose roots are the finite points of the divisor at parameter value t;
/// nullopt when the divisor is the point at infinity.
inline std::optional<Poly> divisor_poly(const DivisorRecord& d, const Rat& t)
{
    const int k = d.exponent;
    Poly f(static_cast<std::size_t>(k) + 1, Rat(0));
    if (d.key.point) {
        // (y - p)^k - t
        const Rat& p = *d.key.point;
        for (int i = 0; i <= k; ++i) f[static_cast<std::size_t>(i)] = binomial(k, i) * power(-p, k - i);
        f[0] -= t;
    } else {
        // t y^k - 1
        if (t == 0) return std::nullopt;
        f[static_cast<std::size_t>(k)] = t;
        f[0] = -1;
    }
    trim(f);
    return f;
}

inline Rat resultant(const Poly& f, const Poly& g)
{
    const std::size_t m = f.size() - 1, n = g.size() - 1;
    const std::size_t size = m + n;
    if (size == 0) return 1;
    Matrix s(size, LVec(size, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
    return determinant(s);
}

} // namespace detail

/// True iff the two divisors share a point of P^1 at the given parameter values.
inline bool divisors_collide(const DivisorRecord& a, const Rat& ta, const DivisorRecord& b, const Rat& tb)
{
    auto fa = detail::divisor_poly(a, ta), fb = detail::divisor_poly(b, tb);
    if (!fa && !fb) return true;
    if (!fa || !fb) return false;
    if (fa->size() < 2 || fb->size() < 2) return false;
    return detail::resultant(*fa, *fb) == 0;
}

/// One component of the collision locus Z between divisors at distinct points.
struct LocusConstraint {
    enum class Kind { Linear, Hyperbolic, Resultant };
    Kind kind = Kind::Linear;
    DivisorRecord a, b;  // for Hyperbolic, a is finite and b sits at infinity
    Rat rhs;             // Linear: t_a - t_b = rhs; Hyperbolic: (p + t_a) t_b = 1 with p = rhs

    bool satisfied(const Rat& ta, const Rat& tb) const
    {
        switch (kind) {
        case Kind::Linear:
            return ta - tb == rhs;
        case Kind::Hyperbolic:
            return (rhs + ta) * tb == 1;
        case Kind::Resultant:
            return divisors_collide(a, ta, b, tb);
        }
        return false;
    }

    std::string describe() const
    {
        auto t = [](const DivisorRecord& d) { return "t[" + to_string(d.key) + "]"; };
        switch (kind) {
        case Kind::Linear:
            return t(a) + " - " + t(b) + " = " + to_string(rhs);
        case Kind::Hyperbolic:
            return rhs == 0 ? t(a) + " * " + t(b) + " = 1" : "(" + to_string(rhs) + " + " + t(a) + ") * " + t(b) + " = 1";
        case Kind::Resultant:
            return "Res_y(" + t(a) + "^" + std::to_string(a.exponent) + ", " + t(b) + "^" + std::to_string(b.exponent) + ") = 0";
        }
        return {};
    }
};

namespace detail {

inline std::optional<LocusConstraint> constraint_between(const DivisorRecord& a, const DivisorRecord& b)
{
    if (a.key.column == 0 && b.key.column == 0) return std::nullopt;
    const bool af = a.key.point.has_value(), bf = b.key.point.has_value();
    if (!af && !bf) return std::nullopt;
    if (af && bf) {
        if (a.exponent == 1 && b.exponent == 1)
            return LocusConstraint{LocusConstraint::Kind::Linear, a, b, *b.key.point - *a.key.point};
        return LocusConstraint{LocusConstraint::Kind::Resultant, a, b, 0};
    }
    const auto& fin = af ? a : b;
    const auto& inf = af ? b : a;
    // the divisor at infinity is the point itself, or the finite divisor is the point 0
    if (inf.key.column == 0) return std::nullopt;
    if (fin.key.column == 0 && *fin.key.point == 0) return std::nullopt;
    if (fin.exponent == 1 && inf.exponent == 1)
        return LocusConstraint{LocusConstraint::Kind::Hyperbolic, fin, inf, *fin.key.point};
    return LocusConstraint{LocusConstraint::Kind::Resultant, fin, inf, 0};
}

} // namespace detail

struct FamilyData {
    DivisorialFan xi;
    std::vector<SliceDecomposition> decomps;  // one per point of the family, in point order
    std::vector<DivisorRecord> divisors;      // all (P,s) including columns 0
    std::vector<ParamKey> params;             // (P,s) with s >= 1
    std::vector<LocusConstraint> constraints;

    const SliceDecomposition& decomposition_at(const PointP1& p) const
    {
        for (const auto& d : decomps)
            if (d.point == p) return d;
        throw DomainError("no decomposition at point " + point_key(p));
    }
};

/// Points with a non-trivial slice get a one-column decomposition unless one is supplied.
inline FamilyData build_family(const DivisorialFan& xi, std::vector<SliceDecomposition> decomps)
{
    FamilyData fd;
    fd.xi = xi;
    std::set<PointP1, PointOrder> seen;
    for (const auto& d : decomps)
        if (!seen.insert(d.point).second) throw DomainError("two decompositions given for point " + point_key(d.point));
    for (const auto& p : xi.special_points())
        if (!seen.count(p)) decomps.push_back(trivial_slice_decomposition(xi, p, 1));
    std::sort(decomps.begin(), decomps.end(),
              [](const SliceDecomposition& a, const SliceDecomposition& b) { return PointOrder{}(a.point, b.point); });
    for (const auto& d : decomps) {
        auto rep = check_slice_decomposition(d, xi);
        if (!rep.valid || !rep.admissible) {
            std::string msg = "invalid decomposition at " + point_key(d.point);
            for (const auto& v : rep.violations) msg += "; " + v;
            throw DomainError(msg);
        }
        for (std::size_t s = 0; s < d.columns; ++s) {
            fd.divisors.push_back({{d.point, s}, d.exponent(s)});
            if (s > 0) fd.params.push_back({d.point, s});
        }
    }
    fd.decomps = std::move(decomps);
    for (std::size_t i = 0; i < fd.divisors.size(); ++i) {
        for (std::size_t j = i + 1; j < fd.divisors.size(); ++j) {
            if (fd.divisors[i].key.point == fd.divisors[j].key.point) continue;
            if (auto c = detail::constraint_between(fd.divisors[i], fd.divisors[j])) fd.constraints.push_back(*c);
        }
    }
    return fd;
}

namespace detail {

inline void require_assignment(const FamilyData& fd, const Assignment& lambda)
{
    for (const auto& k : fd.params)
        if (!lambda.count(k)) throw DomainError("missing assignment for t[" + to_string(k) + "]");
    for (const auto& [k, v] : lambda)
        if (std::find(fd.params.begin(), fd.params.end(), k) == fd.params.end())
            throw DomainError("unknown parameter t[" + to_string(k) + "]");
}

inline Rat param_value(const Assignment& lambda, const ParamKey& k)
{
    if (k.column == 0) return 0;
    return lambda.at(k);
}

} // namespace detail

/// True iff lambda avoids every collision constraint.
inline bool in_base(const FamilyData& fd, const Assignment& lambda)
{
    detail::require_assignment(fd, lambda);
    for (const auto& c : fd.constraints)
        if (c.satisfied(detail::param_value(lambda, c.a.key), detail::param_value(lambda, c.b.key))) return false;
    return true;
}

/// Contribution of a divisor with exponent k > 1 at lambda != 0 whose points are not rational.
struct FormalCoefficient {
    DivisorRecord divisor;
    Rat lambda;
    std::vector<std::pair<std::size_t, Polyhedron>> per_pdiv;  // stored summand at each root

    std::string describe() const
    {
        std::string y = divisor.key.point ? "(y - " + to_string(*divisor.key.point) + ")" : "(1/y)";
        return "roots of " + y + "^" + std::to_string(divisor.exponent) + " = " + to_string(lambda);
    }
};

struct FiberResult {
    DivisorialFan dfan;
    std::vector<FormalCoefficient> formal;
};

struct FiberGenerators {
    std::vector<PolyDivisor> gens;  // F^{i,lambda}, indexed like the pdivs of the base fan
    std::vector<FormalCoefficient> formal;
};

/// The polyhedral divisors F^{i,lambda} before closure under intersection.
inline FiberGenerators fiber_generators(const FamilyData& fd, const Assignment& lambda, const Assignment& roots = {})
{
    if (!in_base(fd, lambda)) throw DomainError("parameter value lies outside the base (forbidden locus)");
    const std::size_t m = fd.xi.pdivs.size();
    // landing point -> per pdiv list of polyhedra to add
    std::map<PointP1, std::vector<std::vector<Polyhedron>>, PointOrder> landing;
    FiberGenerators out;
    auto land = [&](const PointP1& y, std::size_t i, const Polyhedron& p) {
        auto& slot = landing[y];
        if (slot.empty()) slot.resize(m);
        slot[i].push_back(p);
    };
    for (const auto& sd : fd.decomps) {
        for (std::size_t s = 0; s < sd.columns; ++s) {
            const int k = sd.exponent(s);
            const ParamKey key{sd.point, s};
            const Rat t = detail::param_value(lambda, key);
            std::vector<PointP1> ys;
            bool scaled = false;
            if (t == 0) {
                ys.push_back(sd.point);
                scaled = true;
            } else if (k == 1) {
                ys.push_back(sd.point ? PointP1(*sd.point + t) : PointP1(1 / t));
            } else {
                auto it = roots.find(key);
                if (it != roots.end() && detail::power(it->second, k) != t)
                    throw DomainError("supplied root for t[" + to_string(key) + "] does not satisfy mu^k = lambda");
                if (it != roots.end() && k == 2) {
                    for (const Rat& mu : {it->second, Rat(-it->second)})
                        ys.push_back(sd.point ? PointP1(*sd.point + mu) : PointP1(1 / mu));
                } else {
                    FormalCoefficient fc{{key, k}, t, {}};
                    for (std::size_t i = 0; i < m; ++i) fc.per_pdiv.emplace_back(i, sd.entries[i][s]);
                    out.formal.push_back(std::move(fc));
                    continue;
                }
            }
            for (const auto& y : ys) {
                for (std::size_t i = 0; i < m; ++i) {
                    if (fd.xi.pdivs[i].coeff(sd.point).is_empty()) land(y, i, Polyhedron::empty(fd.xi.rank));
                    else land(y, i, scaled ? sd.actual(i, s) : sd.entries[i][s]);
                }
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        const auto& d = fd.xi.pdivs[i];
        PolyDivisor::Coeffs coeffs;
        for (const auto& sd : fd.decomps) coeffs.emplace(sd.point, Polyhedron::from_cone(d.tail()));
        for (const auto& [y, per] : landing) coeffs[y] = minkowski_sum_all(per[i], d.rank());
        out.gens.emplace_back(d.tail(), std::move(coeffs));
    }
    return out;
}

/// Fiber X(Xi^lambda). roots optionally supplies mu with mu^k = lambda for exponent-k parameters.
inline FiberResult fiber(const FamilyData& fd, const Assignment& lambda, const Assignment& roots = {},
                         bool verify_proper = false)
{
    auto g = fiber_generators(fd, lambda, roots);
    // with formal contributions the rational part alone need not satisfy the face conditions
    FiberResult out{g.formal.empty() ? build_dfan(g.gens) : build_dfan_report(g.gens), std::move(g.formal)};
    if (verify_proper && out.formal.empty()) {
        for (auto i : out.dfan.maximal_indices())
            if (!is_proper(out.dfan.pdivs[i])) throw DomainError("fiber polyhedral divisor " + std::to_string(i) + " is not proper");
    }
    return out;
}

struct Singularity {
    PointP1 point;
    std::size_t column = 0;
    Cone cone;
    bool smooth = false;
    Int index = 0;  // |det| of a full-dimensional simplicial cone, 0 otherwise
};

/// Cones over Delta_P^s x {1} for every point of the locus and every summand.
inline std::vector<Singularity> general_fiber_singularities(const PolyDivisor& d,
                                                            const std::map<PointP1, CoeffDecomposition, PointOrder>& cds)
{
    if (d.complete_locus()) throw DomainError("divisor has complete locus; the general fiber description needs an affine locus");
    std::map<PointP1, CoeffDecomposition, PointOrder> all = cds;
    for (const auto& [p, c] : d.coeffs())
        if (!c.is_empty() && !all.count(p)) all.emplace(p, CoeffDecomposition{c, {c}, {}});
    std::vector<Singularity> out;
    const std::size_t n = d.rank();
    for (const auto& [p, cd] : all) {
        if (!(cd.target == d.coeff(p))) throw DomainError("decomposition at " + point_key(p) + " does not match the coefficient");
        if (cd.target.is_empty()) throw DomainError("point " + point_key(p) + " is outside the locus");
        if (!check_admissible(cd).admissible) throw DomainError("decomposition at " + point_key(p) + " is not admissible");
        for (std::size_t s = 0; s < cd.summands.size(); ++s) {
            auto q = cd.actual(s);
            std::vector<LVec> gens;
            for (const auto& v : q.vertices()) gens.push_back(Polyhedron::lift(v, 1));
            for (const auto& r : q.tail().rays()) gens.push_back(Polyhedron::lift(r, 0));
            auto c = Cone::from_generators(n + 1, gens);
            Singularity sg{p, s, c, false, 0};
            if (c.rays().size() == c.dim()) {
                sg.smooth = abs(maximal_minor_gcd(c.rays())) == 1;
                if (c.dim() == n + 1) sg.index = abs(determinant(c.rays()).get_num());
            }
            out.push_back(std::move(sg));
        }
    }
    return out;
}

} // namespace tvdef
