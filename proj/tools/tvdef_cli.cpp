#include "tvdef/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace tvdef;
using io::Json;

namespace {

bool verbose()
{
    const char* v = std::getenv("TVDEF_VERBOSE");
    return v && *v && std::string(v) != "0";
}

void log(const std::string& msg)
{
    if (verbose()) std::clog << "[tvdef] " << msg << "\n";
}

Json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

LVec parse_vector(const std::string& text, const std::string& what)
{
    LVec v;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (part.empty()) throw ParseError(what + " \"" + text + "\" has an empty entry");
        v.push_back(parse_rat(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return v;
}

// A report plus the exit code its verdict calls for.
struct Outcome {
    Json report;
    int code = 0;
};

struct Options {
    std::string format = "text";
    std::string file;
    std::vector<std::string> files;
    std::string dfan, fan, lambda;
    std::vector<std::string> degrees;
    std::string section;
    std::optional<std::size_t> ray, component;
    bool check_proper = false;
};

Fan load_fan(const std::string& path) { return io::fan_from_json(read_json(path)); }

Outcome fan_check(const Options& o)
{
    auto f = load_fan(o.file);
    auto rep = validate_fan(f);
    log("fan with " + std::to_string(f.rays().size()) + " rays and " + std::to_string(f.max_cones().size()) + " cones");
    return {io::fan_report_to_json(f, rep), rep.valid ? 0 : 1};
}

std::optional<LVec> section_option(const Options& o)
{
    if (o.section.empty()) return std::nullopt;
    return parse_vector(o.section, "section");
}

LVec single_degree(const Options& o)
{
    if (o.degrees.size() != 1) throw ParseError("exactly one --degree is expected");
    return parse_vector(o.degrees.front(), "degree");
}

Outcome downgrade_cmd(const Options& o)
{
    auto f = load_fan(o.file);
    auto dg = downgrade(f, single_degree(o), section_option(o));
    return {io::downgrade_to_json(dg), 0};
}

Outcome dfan_check(const Options& o)
{
    auto xi = io::dfan_from_json(read_json(o.file));
    auto rep = io::dfan_report_to_json(xi);
    log("closure has " + std::to_string(xi.pdivs.size()) + " polyhedral divisors");
    return {rep, rep["valid"].get<bool>() && rep["proper"].get<bool>() ? 0 : 1};
}

struct LoadedFan {
    io::DivisorialFanInput input;
    DivisorialFan xi;
};

LoadedFan load_dfan(const std::string& path)
{
    auto in = io::dfan_input_from_json(read_json(path));
    auto xi = build_dfan(in.generators);
    return {std::move(in), std::move(xi)};
}

std::vector<SliceDecomposition> load_decomps(const LoadedFan& lf, const std::vector<std::string>& paths)
{
    std::vector<SliceDecomposition> out;
    for (const auto& p : paths) out.push_back(io::decomposition_from_json(read_json(p), lf.xi, lf.input.generators));
    return out;
}

Outcome decomp_check(const Options& o)
{
    auto j = read_json(o.file);
    if (j.is_object() && j.contains("target")) {
        auto res = check_admissible(io::coeff_decomposition_from_json(j));
        return {io::admissibility_to_json(res), res.admissible ? 0 : 1};
    }
    if (o.dfan.empty()) throw ParseError("a slice decomposition needs --dfan");
    auto lf = load_dfan(o.dfan);
    auto sd = io::decomposition_from_json(j, lf.xi, lf.input.generators);
    auto rep = check_slice_decomposition(sd, lf.xi);
    return {io::slice_report_to_json(rep), rep.valid && rep.admissible ? 0 : 1};
}

FamilyData load_family(const Options& o)
{
    auto lf = load_dfan(o.file);
    auto fd = build_family(lf.xi, load_decomps(lf, o.files));
    log(std::to_string(fd.params.size()) + " parameters, " + std::to_string(fd.constraints.size()) + " constraints");
    return fd;
}

Outcome family_build(const Options& o) { return {io::family_to_json(load_family(o)), 0}; }

Outcome family_fiber(const Options& o)
{
    auto fd = load_family(o);
    auto req = io::fiber_request_from_json(read_json(o.lambda));
    return {io::fiber_to_json(fiber(fd, req.lambda, req.roots, o.check_proper)), 0};
}

Outcome family_sing(const Options& o)
{
    auto req = io::singularity_request_from_json(read_json(o.file));
    return {io::singularities_to_json(general_fiber_singularities(req.pdiv, req.decompositions)), 0};
}

void require_admissible(const SliceDecomposition& sd, const DivisorialFan& xi)
{
    auto rep = check_slice_decomposition(sd, xi);
    if (rep.valid && rep.admissible) return;
    std::string msg = rep.valid ? "decomposition is not admissible" : "decomposition is not valid";
    for (const auto& v : rep.violations) msg += "; " + v;
    throw DomainError(msg);
}

Outcome ks(const Options& o)
{
    if (o.dfan.empty() == o.fan.empty()) throw ParseError("ks needs exactly one of --dfan or --fan");
    auto j = read_json(o.file);
    if (!o.dfan.empty()) {
        auto lf = load_dfan(o.dfan);
        auto sd = io::decomposition_from_json(j, lf.xi, lf.input.generators);
        require_admissible(sd, lf.xi);
        return {io::cocycle_to_json(ks_cocycle_tvar(lf.xi, sd), lf.xi.rank), 0};
    }
    auto f = load_fan(o.fan);
    auto dg = downgrade(f, single_degree(o), section_option(o));
    // rows follow the pdiv order printed by the downgrade command
    auto sd = io::decomposition_from_json(j, dg.dfan, dg.dfan.pdivs);
    require_admissible(sd, dg.dfan);
    return {io::cocycle_to_json(ks_cocycle_toric(dg, sd), f.rank()), 0};
}

Outcome t1(const Options& o)
{
    if (o.degrees.empty()) throw ParseError("t1 needs at least one --degree");
    auto f = load_fan(o.file);
    std::vector<Json> reports;
    for (const auto& d : o.degrees) {
        log("degree " + d);
        reports.push_back(io::t1_to_json(t1_summary(f, parse_vector(d, "degree"))));
    }
    if (reports.size() == 1) return {reports.front(), 0};
    return {Json{{"reports", reports}}, 0};
}

Outcome t1_span(const Options& o)
{
    auto f = load_fan(o.file);
    auto r = single_degree(o);
    auto rep = span_report(f, r);
    if (o.ray && (*o.ray >= f.rays().size() || build_graph(f, *o.ray, r).vertices.empty()))
        throw DomainError("ray " + std::to_string(*o.ray) + " is not in Omega(-R)");
    Json gens = Json::array();
    for (const auto& g : rep.generators) {
        if (o.ray && g.rho != *o.ray) continue;
        if (o.component && g.component != *o.component) continue;
        gens.push_back(io::span_generator_to_json(f, g));
    }
    if (o.component && gens.empty()) throw DomainError("component " + std::to_string(*o.component) + " out of range");
    return {Json{{"degree", io::lattice_to_json(r)}, {"rank", rep.rank}, {"dim", t1_dimension(f, r)}, {"generators", gens}}, 0};
}

Outcome upgrade(const Options& o)
{
    auto j = read_json(o.file);
    const auto r = io::vec_from_json(io::detail::field(j, "degree"));
    const std::size_t n = r.size();
    std::vector<LVec> rays;
    for (const auto& x : io::detail::array_field(j, "cone")) rays.push_back(io::vec_from_json(x, n));
    std::optional<LVec> z;
    if (j.contains("section")) z = io::vec_from_json(j["section"], n);
    SectionData sd(r, z);
    auto d00 = io::polyhedron_from_json(io::detail::field(j, "d00"), sd.rank_n());
    auto d01 = io::polyhedron_from_json(io::detail::field(j, "d01"), sd.rank_n());
    auto pd = upgrade_total_space(Cone::from_generators(n, rays), sd, d00, d01);
    return {Json{{"rank_N", n}, {"pdivs", Json::array({io::pdiv_to_json(pd)})}, {"proper", is_proper(pd)}}, 0};
}

void emit(const Json& j, const std::string& format, std::ostream& os)
{
    if (format == "json") os << j.dump(2) << "\n";
    else os << io::render_text(j);
}

int fail(const std::string& format, const std::string& kind, const std::string& msg, int code)
{
    auto err = io::error_to_json(kind, msg);
    if (format == "json") std::cout << err.dump(2) << "\n";
    else std::cerr << io::render_text(err);
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homogeneous deformations of complexity-one T-varieties"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));

    auto* fan_check_cmd = app.add_subcommand("fan-check", "Validate a fan and report smoothness and completeness");
    fan_check_cmd->add_option("fan", o.file, "Fan JSON")->required();

    auto* downgrade_cmd_ = app.add_subcommand("downgrade", "Divisorial fan of a toric variety in degree R");
    downgrade_cmd_->add_option("fan", o.file, "Fan JSON")->required();
    downgrade_cmd_->add_option("--degree", o.degrees, "Primitive degree R, comma separated")->allow_extra_args(false)->required();
    downgrade_cmd_->add_option("--section", o.section, "Section z with <z,R> = 1, comma separated");

    auto* dfan_cmd = app.add_subcommand("dfan-check", "Close under intersection and check face and properness conditions");
    dfan_cmd->add_option("dfan", o.file, "Divisorial fan JSON")->required();

    auto* decomp_cmd = app.add_subcommand("decomp-check", "Check a coefficient or slice decomposition");
    decomp_cmd->add_option("decomposition", o.file, "Decomposition JSON")->required();
    decomp_cmd->add_option("--dfan", o.dfan, "Divisorial fan JSON for slice decompositions");

    auto* build_cmd = app.add_subcommand("family-build", "Parameters and forbidden locus of a family");
    build_cmd->add_option("dfan", o.file, "Divisorial fan JSON")->required();
    build_cmd->add_option("decompositions", o.files, "Slice decomposition JSON files");

    auto* fiber_cmd = app.add_subcommand("family-fiber", "Fiber of a family over a parameter value");
    fiber_cmd->add_option("dfan", o.file, "Divisorial fan JSON")->required();
    fiber_cmd->add_option("decompositions", o.files, "Slice decomposition JSON files");
    fiber_cmd->add_option("--lambda", o.lambda, "Fiber request JSON")->required();
    fiber_cmd->add_flag("--check-proper", o.check_proper, "Verify properness of the fiber");

    auto* sing_cmd = app.add_subcommand("family-sing", "Singularities of the general fiber of an affine family");
    sing_cmd->add_option("request", o.file, "Singularity request JSON")->required();

    auto* ks_cmd = app.add_subcommand("ks", "Kodaira-Spencer cocycle of a one-parameter decomposition");
    ks_cmd->add_option("decomposition", o.file, "Decomposition JSON")->required();
    ks_cmd->add_option("--dfan", o.dfan, "Divisorial fan JSON (general cocycle)");
    ks_cmd->add_option("--fan", o.fan, "Fan JSON (toric cocycle)");
    ks_cmd->add_option("--degree", o.degrees, "Degree R for --fan")->allow_extra_args(false);
    ks_cmd->add_option("--section", o.section, "Section z for --fan");

    auto* t1_cmd = app.add_subcommand("t1", "dim T^1(-R) with deformation graphs");
    t1_cmd->add_option("fan", o.file, "Fan JSON");
    t1_cmd->add_option("--degree", o.degrees, "Degree R, comma separated; repeatable")->allow_extra_args(false);
    auto add_span_options = [&](CLI::App* cmd) {
        cmd->add_option("fan", o.file, "Fan JSON")->required();
        cmd->add_option("--degree", o.degrees, "Degree R, comma separated")->allow_extra_args(false)->required();
        cmd->add_option("--ray", o.ray, "Restrict to one ray of Omega(-R)");
        cmd->add_option("--component", o.component, "Restrict to one component");
    };
    auto* span_cmd = t1_cmd->add_subcommand("span", "Spanning deformations pi(C, rho, R) and their cocycles");
    add_span_options(span_cmd);
    auto* t1_span_cmd = app.add_subcommand("t1-span", "Same as t1 span");
    add_span_options(t1_span_cmd);

    auto* upgrade_cmd = app.add_subcommand("upgrade", "Total space of the family from D0 = D00 + D01");
    upgrade_cmd->add_option("request", o.file, "Upgrade request JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(o.format, "UsageError", e.what(), 2);
    }

    try {
        Outcome out;
        if (fan_check_cmd->parsed()) out = fan_check(o);
        else if (downgrade_cmd_->parsed()) out = downgrade_cmd(o);
        else if (dfan_cmd->parsed()) out = dfan_check(o);
        else if (decomp_cmd->parsed()) out = decomp_check(o);
        else if (build_cmd->parsed()) out = family_build(o);
        else if (fiber_cmd->parsed()) out = family_fiber(o);
        else if (sing_cmd->parsed()) out = family_sing(o);
        else if (ks_cmd->parsed()) out = ks(o);
        else if (span_cmd->parsed() || t1_span_cmd->parsed()) out = t1_span(o);
        else if (t1_cmd->parsed()) {
            if (o.file.empty()) throw ParseError("t1 needs a fan file");
            out = t1(o);
        } else if (upgrade_cmd->parsed()) out = upgrade(o);
        emit(out.report, o.format, std::cout);
        return out.code;
    } catch (const ParseError& e) {
        return fail(o.format, "ParseError", e.what(), 2);
    } catch (const Json::exception& e) {
        return fail(o.format, "ParseError", e.what(), 2);
    } catch (const DomainError& e) {
        return fail(o.format, "DomainError", e.what(), 1);
    }
}
