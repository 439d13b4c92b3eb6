#pragma once

#include "tvdef/families.hpp"
#include "tvdef/t1span.hpp"

#include <json.hpp>

namespace tvdef::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key)
{
    if (!j.is_object()) throw ParseError(std::string("expected an object with key \"") + key + "\", got " + j.dump());
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

inline const Json& array_field(const Json& j, const char* key)
{
    const auto& a = field(j, key);
    if (!a.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    return a;
}

inline std::size_t index_from(const Json& j, const std::string& what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(what + " must be a non-negative integer, got " + j.dump());
    return j.get<std::size_t>();
}

inline int int_from(const Json& j, const std::string& what)
{
    if (!j.is_number_integer()) throw ParseError(what + " must be an integer, got " + j.dump());
    return j.get<int>();
}

inline std::string string_from(const Json& j, const std::string& what)
{
    if (!j.is_string()) throw ParseError(what + " must be a string, got " + j.dump());
    return j.get<std::string>();
}

} // namespace detail

// ---- scalars and vectors

inline Rat rat_from_json(const Json& j)
{
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_unsigned()) return Rat(Int(std::to_string(j.get<unsigned long long>())));
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
    throw ParseError("expected a rational as a \"p/q\" string or an integer, got " + j.dump());
}

inline Json rat_to_json(const Rat& r) { return to_string(r); }

/// Integers that fit a machine word become numbers, everything else a string.
inline Json int_to_json(const Rat& r)
{
    if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return to_string(r);
}

inline LVec vec_from_json(const Json& j, std::optional<std::size_t> n = std::nullopt)
{
    if (!j.is_array()) throw ParseError("expected a vector, got " + j.dump());
    LVec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    if (n && v.size() != *n)
        throw ParseError("vector " + j.dump() + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(*n));
    return v;
}

inline Json vec_to_json(const LVec& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

/// Lattice vectors (rays, degrees) as plain integers.
inline Json lattice_to_json(const LVec& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(int_to_json(x));
    return a;
}

inline Json lattice_list_to_json(const std::vector<LVec>& vs)
{
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(lattice_to_json(v));
    return a;
}

inline PointP1 point_from_json(const Json& j)
{
    if (j.is_number_integer()) return rat_from_json(j);
    return parse_point(detail::string_from(j, "point"));
}

// ---- polyhedra

/// Rank of a polyhedron fragment from its first vertex or ray, or from an explicit "rank".
inline std::optional<std::size_t> polyhedron_rank(const Json& j)
{
    if (!j.is_object()) return std::nullopt;
    if (j.contains("rank")) return detail::index_from(j["rank"], "rank");
    for (const char* key : {"vertices", "rays"})
        if (j.contains(key) && j[key].is_array() && !j[key].empty() && j[key][0].is_array()) return j[key][0].size();
    return std::nullopt;
}

inline Polyhedron polyhedron_from_json(const Json& j, std::size_t n)
{
    if (!j.is_object()) throw ParseError("polyhedron must be an object, got " + j.dump());
    if (j.contains("empty")) {
        if (!j["empty"].is_boolean() || !j["empty"].get<bool>()) throw ParseError("\"empty\" must be true when present");
        return Polyhedron::empty(n);
    }
    std::vector<LVec> pts, rays;
    for (const auto& v : detail::array_field(j, "vertices")) pts.push_back(vec_from_json(v, n));
    if (j.contains("rays")) {
        if (!j["rays"].is_array()) throw ParseError("\"rays\" must be an array");
        for (const auto& r : j["rays"]) rays.push_back(vec_from_json(r, n));
    }
    if (pts.empty()) throw ParseError("a non-empty polyhedron needs at least one vertex; use {\"empty\": true}");
    return Polyhedron::from_generators(n, pts, rays);
}

inline Polyhedron polyhedron_from_json(const Json& j)
{
    auto n = polyhedron_rank(j);
    if (!n) throw ParseError("cannot infer the rank of polyhedron " + j.dump());
    return polyhedron_from_json(j, *n);
}

inline Json polyhedron_to_json(const Polyhedron& p)
{
    if (p.is_empty()) return Json{{"empty", true}};
    Json v = Json::array();
    for (const auto& x : p.vertices()) v.push_back(vec_to_json(x));
    return Json{{"vertices", v}, {"rays", lattice_list_to_json(p.tail().rays())}};
}

// ---- fans

inline Fan fan_from_json(const Json& j)
{
    const std::size_t n = detail::index_from(detail::field(j, "rank"), "rank");
    std::vector<LVec> rays;
    for (const auto& r : detail::array_field(j, "rays")) rays.push_back(vec_from_json(r, n));
    std::vector<RaySet> cones;
    for (const auto& c : detail::array_field(j, "max_cones")) {
        if (!c.is_array()) throw ParseError("each maximal cone must be an array of ray indices");
        RaySet s;
        for (const auto& i : c) s.push_back(detail::index_from(i, "ray index"));
        cones.push_back(std::move(s));
    }
    return Fan(n, std::move(rays), std::move(cones));
}

inline Json fan_to_json(const Fan& f)
{
    Json cones = Json::array();
    for (const auto& c : f.max_cones()) cones.push_back(c);
    return Json{{"rank", f.rank()}, {"rays", lattice_list_to_json(f.rays())}, {"max_cones", cones}};
}

inline Json fan_report_to_json(const Fan& f, const FanReport& rep)
{
    Json pairs = Json::array();
    for (const auto& [a, b] : rep.offending_pairs) pairs.push_back({a, b});
    return Json{{"valid", rep.valid},
                {"smooth", is_smooth(f)},
                {"complete", is_complete(f)},
                {"problems", rep.problems},
                {"offending_pairs", pairs}};
}

// ---- polyhedral divisors and divisorial fans

inline PolyDivisor pdiv_from_json(const Json& j, std::size_t n)
{
    std::vector<LVec> tr;
    if (j.contains("tail_rays"))
        for (const auto& r : detail::array_field(j, "tail_rays")) tr.push_back(vec_from_json(r, n));
    Cone tail = tr.empty() ? Cone::zero(n) : Cone::from_generators(n, tr);
    PolyDivisor::Coeffs coeffs;
    if (j.contains("coeffs")) {
        const auto& cj = j["coeffs"];
        if (!cj.is_object()) throw ParseError("\"coeffs\" must be an object keyed by points");
        for (auto it = cj.begin(); it != cj.end(); ++it)
            if (!coeffs.emplace(parse_point(it.key()), polyhedron_from_json(it.value(), n)).second)
                throw ParseError("point " + it.key() + " is listed twice");
    }
    return PolyDivisor(std::move(tail), std::move(coeffs));
}

inline Json pdiv_to_json(const PolyDivisor& d)
{
    Json c = Json::object();
    for (const auto& [p, poly] : d.coeffs()) c[point_key(p)] = polyhedron_to_json(poly);
    return Json{{"tail_rays", lattice_list_to_json(d.tail().rays())}, {"coeffs", c}};
}

/// The polyhedral divisors as listed in a divisorial-fan file, before closure.
struct DivisorialFanInput {
    std::size_t rank = 0;
    std::vector<PolyDivisor> generators;
};

inline DivisorialFanInput dfan_input_from_json(const Json& j)
{
    DivisorialFanInput in;
    in.rank = detail::index_from(detail::field(j, "rank_N"), "rank_N");
    if (in.rank == 0) throw ParseError("rank_N must be positive");
    for (const auto& d : detail::array_field(j, "pdivs")) in.generators.push_back(pdiv_from_json(d, in.rank));
    if (in.generators.empty()) throw ParseError("a divisorial fan needs at least one polyhedral divisor");
    return in;
}

inline DivisorialFan dfan_from_json(const Json& j) { return build_dfan_report(dfan_input_from_json(j).generators); }

inline Json dfan_to_json(const DivisorialFan& xi)
{
    Json pd = Json::array();
    for (const auto& d : xi.pdivs) pd.push_back(pdiv_to_json(d));
    Json viol = Json::array();
    for (const auto& v : xi.violations) viol.push_back({v.i, v.j});
    return Json{{"rank_N", xi.rank}, {"pdivs", pd}, {"maximal", xi.maximal_indices()}, {"violations", viol}};
}

inline Json dfan_report_to_json(const DivisorialFan& xi)
{
    std::vector<std::size_t> improper;
    for (auto i : xi.maximal_indices())
        if (!is_proper(xi.pdivs[i])) improper.push_back(i);
    Json j{{"valid", xi.valid()}, {"proper", improper.empty()}, {"improper", improper}};
    j["dfan"] = dfan_to_json(xi);
    return j;
}

inline Json downgrade_to_json(const Downgrade& dg)
{
    std::vector<std::size_t> per_cone;
    for (const auto& d : dg.per_cone) per_cone.push_back(*dg.dfan.index_of(d));
    return Json{{"degree", lattice_to_json(dg.section.degree())},
                {"section", lattice_to_json(dg.section.z())},
                {"kernel_basis", lattice_list_to_json(dg.section.basis())},
                {"per_cone", per_cone},
                {"dfan", dfan_to_json(dg.dfan)}};
}

// ---- decompositions

/// "tail", {"translate": v} (v + tail) or a polyhedron.
inline Polyhedron summand_from_json(const Json& j, const Polyhedron& tail, std::size_t n)
{
    if (j.is_string()) {
        if (j.get<std::string>() == "tail") return tail;
        throw ParseError("unknown summand shorthand " + j.dump());
    }
    if (j.is_object() && j.contains("translate")) return tail.translate(vec_from_json(j["translate"], n));
    return polyhedron_from_json(j, n);
}

inline Json summand_to_json(const Polyhedron& p, const Polyhedron& tail)
{
    if (p == tail) return "tail";
    return polyhedron_to_json(p);
}

inline CoeffDecomposition coeff_decomposition_from_json(const Json& j)
{
    const auto& tj = detail::field(j, "target");
    auto n = polyhedron_rank(tj);
    if (!n && j.contains("rank")) n = detail::index_from(j["rank"], "rank");
    if (!n) throw ParseError("cannot infer the rank of the target");
    CoeffDecomposition cd{polyhedron_from_json(tj, *n), {}, {}};
    auto tail = Polyhedron::from_cone(cd.target.tail());
    for (const auto& s : detail::array_field(j, "summands")) cd.summands.push_back(summand_from_json(s, tail, *n));
    if (j.contains("exponents"))
        for (const auto& e : detail::array_field(j, "exponents")) cd.exponents.push_back(detail::int_from(e, "exponent"));
    return cd;
}

inline Json coeff_decomposition_to_json(const CoeffDecomposition& cd)
{
    auto tail = Polyhedron::from_cone(cd.target.tail());
    Json s = Json::array();
    for (const auto& p : cd.summands) s.push_back(summand_to_json(p, tail));
    Json j{{"rank", cd.target.rank()}, {"target", polyhedron_to_json(cd.target)}, {"summands", s}};
    if (!cd.exponents.empty()) j["exponents"] = cd.exponents;
    return j;
}

inline Json admissibility_to_json(const AdmissibilityResult& r)
{
    return Json{{"admissible", r.admissible}, {"witness", r.witness ? vec_to_json(*r.witness) : Json(nullptr)}};
}

/// Rows refer to the pdivs as listed in the divisorial-fan file. Listed pdivs without a row get the
/// trivial row; pdivs created by intersection get the entrywise intersection of the rows above them.
inline SliceDecomposition decomposition_from_json(const Json& j, const DivisorialFan& xi,
                                                  const std::vector<PolyDivisor>& generators)
{
    const std::size_t n = xi.rank;
    const PointP1 point = point_from_json(detail::field(j, "point"));
    const std::size_t cols = detail::index_from(detail::field(j, "columns"), "columns");
    if (cols == 0) throw ParseError("a decomposition needs at least one column");
    std::vector<int> exps;
    auto set_exps = [&](const Json& e) {
        if (!e.is_array()) throw ParseError("\"exponents\" must be an array");
        std::vector<int> v;
        for (const auto& x : e) v.push_back(detail::int_from(x, "exponent"));
        if (v.size() != cols) throw ParseError("exponent list must have one entry per column");
        if (!exps.empty() && exps != v) throw ParseError("rows disagree on the column exponents");
        exps = std::move(v);
    };
    if (j.contains("exponents")) set_exps(j["exponents"]);

    auto trivial_row = [&](const PolyDivisor& d) {
        std::vector<Polyhedron> row{d.coeff(point)};
        for (std::size_t s = 1; s < cols; ++s) row.push_back(Polyhedron::from_cone(d.tail()));
        return row;
    };
    std::vector<std::optional<std::vector<Polyhedron>>> given(generators.size());
    for (const auto& row : detail::array_field(j, "rows")) {
        const auto g = detail::index_from(detail::field(row, "pdiv"), "pdiv");
        if (g >= generators.size())
            throw ParseError("row refers to polyhedral divisor " + std::to_string(g) + " but the fan lists " +
                             std::to_string(generators.size()));
        if (given[g]) throw ParseError("two rows for polyhedral divisor " + std::to_string(g));
        const auto& sj = detail::array_field(row, "summands");
        if (sj.size() != cols) throw ParseError("row " + std::to_string(g) + " must have one summand per column");
        auto tail = Polyhedron::from_cone(generators[g].tail());
        std::vector<Polyhedron> entries;
        for (const auto& s : sj) entries.push_back(summand_from_json(s, tail, n));
        if (row.contains("exponents")) set_exps(row["exponents"]);
        given[g] = std::move(entries);
    }
    if (std::all_of(exps.begin(), exps.end(), [](int k) { return k == 1; })) exps.clear();

    SliceDecomposition sd{point, cols, {}, exps};
    for (const auto& d : xi.pdivs) {
        if (d.coeff(point).is_empty()) {
            sd.entries.push_back(trivial_row(d));
            continue;
        }
        std::optional<std::vector<Polyhedron>> acc;
        for (std::size_t g = 0; g < generators.size(); ++g) {
            if (generators[g] == d && given[g]) {
                acc = given[g];
                break;
            }
        }
        if (!acc) {
            for (std::size_t g = 0; g < generators.size(); ++g) {
                if (!(intersect(d, generators[g]) == d)) continue;
                auto e = given[g] ? *given[g] : trivial_row(generators[g]);
                if (!acc) acc = std::move(e);
                else
                    for (std::size_t s = 0; s < cols; ++s) (*acc)[s] = intersect((*acc)[s], e[s]);
            }
        }
        sd.entries.push_back(acc ? *acc : trivial_row(d));
    }
    return sd;
}

/// Rows indexed by the closed divisorial fan; re-parses against dfan_to_json of the same fan.
inline Json decomposition_to_json(const SliceDecomposition& sd, const DivisorialFan& xi)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < sd.entries.size(); ++i) {
        auto tail = Polyhedron::from_cone(xi.pdivs.at(i).tail());
        Json s = Json::array();
        for (const auto& p : sd.entries[i]) s.push_back(summand_to_json(p, tail));
        rows.push_back(Json{{"pdiv", i}, {"summands", s}});
    }
    Json j{{"point", point_key(sd.point)}, {"columns", sd.columns}};
    if (!sd.exponents.empty()) j["exponents"] = sd.exponents;
    j["rows"] = rows;
    return j;
}

inline Json slice_report_to_json(const SliceReport& rep)
{
    return Json{{"valid", rep.valid}, {"admissible", rep.admissible}, {"violations", rep.violations}};
}

// ---- families

inline Json param_to_json(const ParamKey& k) { return Json::array({point_key(k.point), k.column}); }

inline std::string kind_name(LocusConstraint::Kind k)
{
    switch (k) {
    case LocusConstraint::Kind::Linear:
        return "linear";
    case LocusConstraint::Kind::Hyperbolic:
        return "hyperbolic";
    case LocusConstraint::Kind::Resultant:
        return "resultant";
    }
    return {};
}

inline Json family_to_json(const FamilyData& fd)
{
    Json points = Json::array();
    for (const auto& sd : fd.decomps) {
        std::vector<int> e;
        for (std::size_t s = 0; s < sd.columns; ++s) e.push_back(sd.exponent(s));
        points.push_back(Json{{"point", point_key(sd.point)}, {"columns", sd.columns}, {"exponents", e}});
    }
    Json params = Json::array();
    for (const auto& k : fd.params) params.push_back(param_to_json(k));
    Json cons = Json::array();
    for (const auto& c : fd.constraints) {
        Json cj{{"kind", kind_name(c.kind)}};
        if (c.kind == LocusConstraint::Kind::Hyperbolic) cj["p"] = rat_to_json(c.rhs);
        if (c.kind == LocusConstraint::Kind::Linear) cj["rhs"] = rat_to_json(c.rhs);
        cj["terms"] = Json::array({param_to_json(c.a.key), param_to_json(c.b.key)});
        cj["exponents"] = Json::array({c.a.exponent, c.b.exponent});
        cj["equation"] = c.describe();
        cons.push_back(cj);
    }
    return Json{{"points", points}, {"params", params}, {"constraints", cons}};
}

struct FiberRequest {
    Assignment lambda;
    Assignment roots;  // optional mu with mu^k = lambda
};

inline FiberRequest fiber_request_from_json(const Json& j)
{
    auto read = [](const Json& obj, const char* what) {
        if (!obj.is_object()) throw ParseError(std::string("\"") + what + "\" must be an object keyed by \"P,s\"");
        Assignment a;
        for (auto it = obj.begin(); it != obj.end(); ++it)
            if (!a.emplace(parse_param_key(it.key()), rat_from_json(it.value())).second)
                throw ParseError("parameter " + it.key() + " is listed twice");
        return a;
    };
    FiberRequest req;
    req.lambda = read(detail::field(j, "lambda"), "lambda");
    if (j.contains("roots")) req.roots = read(j["roots"], "roots");
    return req;
}

inline Json fiber_request_to_json(const FiberRequest& req)
{
    auto write = [](const Assignment& a) {
        Json o = Json::object();
        for (const auto& [k, v] : a) o[to_string(k)] = rat_to_json(v);
        return o;
    };
    Json j{{"lambda", write(req.lambda)}};
    if (!req.roots.empty()) j["roots"] = write(req.roots);
    return j;
}

inline Json fiber_to_json(const FiberResult& fr)
{
    Json j = dfan_to_json(fr.dfan);
    Json formal = Json::array();
    for (const auto& f : fr.formal) {
        Json per = Json::array();
        for (const auto& [i, p] : f.per_pdiv) per.push_back(Json{{"pdiv", i}, {"summand", polyhedron_to_json(p)}});
        formal.push_back(Json{{"param", to_string(f.divisor.key)},
                              {"exponent", f.divisor.exponent},
                              {"lambda", rat_to_json(f.lambda)},
                              {"points", f.describe()},
                              {"per_pdiv", per}});
    }
    j["formal"] = formal;
    return j;
}

/// {"pdiv": {...}, "rank_N": n, "decompositions": {"0": {"summands": [...], "exponents": [...]}}}
struct SingularityRequest {
    PolyDivisor pdiv;
    std::map<PointP1, CoeffDecomposition, PointOrder> decompositions;
};

inline SingularityRequest singularity_request_from_json(const Json& j)
{
    const std::size_t n = detail::index_from(detail::field(j, "rank_N"), "rank_N");
    SingularityRequest req{pdiv_from_json(detail::field(j, "pdiv"), n), {}};
    if (j.contains("decompositions")) {
        const auto& dj = j["decompositions"];
        if (!dj.is_object()) throw ParseError("\"decompositions\" must be an object keyed by points");
        for (auto it = dj.begin(); it != dj.end(); ++it) {
            auto p = parse_point(it.key());
            CoeffDecomposition cd{req.pdiv.coeff(p), {}, {}};
            auto tail = Polyhedron::from_cone(req.pdiv.tail());
            for (const auto& s : detail::array_field(it.value(), "summands")) cd.summands.push_back(summand_from_json(s, tail, n));
            if (it.value().contains("exponents"))
                for (const auto& e : detail::array_field(it.value(), "exponents")) cd.exponents.push_back(detail::int_from(e, "exponent"));
            req.decompositions.emplace(p, std::move(cd));
        }
    }
    return req;
}

inline Json singularities_to_json(const std::vector<Singularity>& sing)
{
    Json a = Json::array();
    for (const auto& s : sing)
        a.push_back(Json{{"point", point_key(s.point)},
                         {"column", s.column},
                         {"rays", lattice_list_to_json(s.cone.rays())},
                         {"smooth", s.smooth},
                         {"index", int_to_json(Rat(s.index))}});
    return Json{{"singularities", a}};
}

// ---- cocycles and T^1

inline Json cocycle_to_json(const CechCocycle& cc, std::size_t rank)
{
    const bool toric = cc.kind == CechCocycle::Kind::Toric;
    Json j{{"kind", toric ? "toric" : "general"}, {"rank", rank}};
    if (toric) j["degree"] = lattice_to_json(cc.degree);
    else j["point"] = point_key(cc.point);
    j["charts"] = cc.charts;
    Json entries = Json::array();
    for (std::size_t i = 0; i < cc.size(); ++i)
        for (std::size_t k = i + 1; k < cc.size(); ++k) {
            bool zero_b = toric || cc.b[i][k] == 0;
            if (is_zero(cc.c[i][k]) && zero_b) continue;
            Json e{{"i", i}, {"j", k}, {"c", vec_to_json(cc.c[i][k])}};
            if (!toric) e["b"] = rat_to_json(cc.b[i][k]);
            entries.push_back(e);
        }
    j["entries"] = entries;
    return j;
}

/// Full antisymmetric tables; entries not listed are zero.
inline CechCocycle cocycle_from_json(const Json& j)
{
    CechCocycle cc;
    const auto kind = detail::string_from(detail::field(j, "kind"), "kind");
    if (kind != "toric" && kind != "general") throw ParseError("cocycle kind must be \"toric\" or \"general\"");
    cc.kind = kind == "toric" ? CechCocycle::Kind::Toric : CechCocycle::Kind::General;
    std::size_t n = 0;
    if (j.contains("rank")) n = detail::index_from(j["rank"], "rank");
    if (cc.kind == CechCocycle::Kind::Toric) {
        cc.degree = vec_from_json(detail::field(j, "degree"));
        if (!j.contains("rank")) n = cc.degree.size();
    } else {
        cc.point = point_from_json(detail::field(j, "point"));
        if (!j.contains("rank")) throw ParseError("a general cocycle needs \"rank\"");
    }
    for (const auto& c : detail::array_field(j, "charts")) cc.charts.push_back(detail::string_from(c, "chart label"));
    const std::size_t m = cc.charts.size();
    cc.c.assign(m, std::vector<LVec>(m, zero_vec(n)));
    if (cc.kind == CechCocycle::Kind::General) cc.b.assign(m, std::vector<Rat>(m, Rat(0)));
    for (const auto& e : detail::array_field(j, "entries")) {
        auto a = detail::index_from(detail::field(e, "i"), "i"), b = detail::index_from(detail::field(e, "j"), "j");
        if (a >= m || b >= m || a == b) throw ParseError("cocycle entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        cc.c[a][b] = vec_from_json(detail::field(e, "c"), n);
        cc.c[b][a] = -cc.c[a][b];
        if (cc.kind == CechCocycle::Kind::General && e.contains("b")) {
            cc.b[a][b] = rat_from_json(e["b"]);
            cc.b[b][a] = -cc.b[a][b];
        }
    }
    return cc;
}

inline Json graph_to_json(const DeformationGraph& g)
{
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return Json{{"rho", g.rho}, {"vertices", g.vertices}, {"edges", edges}, {"components", g.components}};
}

inline Json t1_to_json(const T1Summary& s)
{
    Json graphs = Json::array();
    for (const auto& g : s.graphs) graphs.push_back(graph_to_json(g));
    return Json{{"degree", lattice_to_json(s.degree)}, {"omega", s.omega}, {"graphs", graphs}, {"dim", s.dim}};
}

inline Json span_generator_to_json(const Fan& f, const SpanGenerator& g)
{
    const auto& sp = g.decomposition;
    std::vector<LVec> rays;
    for (auto t : sp.graph.components[g.component]) rays.push_back(f.rays()[t]);
    return Json{{"rho", g.rho},
                {"component", g.component},
                {"component_rays", sp.graph.components[g.component]},
                {"section", lattice_to_json(sp.downgrade.section.z())},
                {"dfan", dfan_to_json(sp.downgrade.dfan)},
                {"decomposition", decomposition_to_json(sp.slice, sp.downgrade.dfan)},
                {"cocycle", cocycle_to_json(g.cocycle, f.rank())}};
}

inline Json error_to_json(const std::string& kind, const std::string& message)
{
    return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

// ---- text rendering

namespace detail {

inline bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

inline std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

inline bool is_flat(const Json& j) { return j.is_array() && std::all_of(j.begin(), j.end(), is_scalar); }

inline bool is_polyhedron(const Json& j)
{
    return j.is_object() && ((j.size() == 1 && j.contains("empty")) || (j.contains("vertices") && j.size() <= 2));
}

inline std::string tuple_text(const Json& j)
{
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + scalar_text(j[i]);
    return s + ")";
}

inline std::string sorted_points(const Json& list)
{
    std::vector<LVec> pts;
    for (const auto& v : list) pts.push_back(vec_from_json(v));
    std::sort(pts.begin(), pts.end(), lex_less);
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + to_string(pts[i]);
    return s;
}

inline std::string polyhedron_text(const Json& j)
{
    if (j.contains("empty")) return "empty";
    std::string s = "conv{" + sorted_points(j["vertices"]) + "}";
    if (j.contains("rays") && !j["rays"].empty()) s += " + cone{" + sorted_points(j["rays"]) + "}";
    return s;
}

inline bool is_inline(const Json& j)
{
    if (is_scalar(j) || is_flat(j) || is_polyhedron(j)) return true;
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return is_flat(x) || is_polyhedron(x); });
}

inline std::string inline_text(const Json& j)
{
    if (is_scalar(j)) return scalar_text(j);
    if (is_polyhedron(j)) return polyhedron_text(j);
    if (is_flat(j)) return j.empty() ? "[]" : tuple_text(j);
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i)
        s += (i ? ", " : "") + (is_polyhedron(j[i]) ? polyhedron_text(j[i]) : tuple_text(j[i]));
    return s + "]";
}

inline void render(const Json& j, const std::string& indent, std::string& out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (is_inline(it.value())) {
                out += indent + it.key() + ": " + inline_text(it.value()) + "\n";
            } else {
                out += indent + it.key() + ":\n";
                render(it.value(), indent + "  ", out);
            }
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (is_inline(j[i])) {
                out += indent + "- " + inline_text(j[i]) + "\n";
            } else {
                out += indent + "- [" + std::to_string(i) + "]\n";
                render(j[i], indent + "  ", out);
            }
        }
    } else {
        out += indent + scalar_text(j) + "\n";
    }
}

} // namespace detail

/// Indented key/value text; polyhedra print as sorted vertex and ray lists.
inline std::string render_text(const Json& j)
{
    std::string out;
    detail::render(j, "", out);
    return out;
}

} // namespace tvdef::io
