// pmc: command-line frontend for the generalized line bundle toolkit.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pmc/error.hpp"
#include "pmc/ext.hpp"
#include "pmc/moduli.hpp"
#include "pmc/normal_form.hpp"
#include "pmc/spec_file.hpp"
#include "pmc/stability.hpp"
#include "pmc/verify.hpp"

using json = nlohmann::ordered_json;
using namespace pmc;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kVerifyFailed = 2 };

std::optional<int> env_precision() {
    const char* v = std::getenv("PMC_PRECISION");
    if (!v || !*v) return std::nullopt;
    try {
        int N = std::stoi(v);
        if (N < 1) throw std::invalid_argument("");
        return N;
    } catch (const std::exception&) {
        throw ParseError(std::string("PMC_PRECISION must be a positive integer, got '") + v + "'");
    }
}

ModuleRep load(const std::string& path) { return build_module(read_module_spec(path, env_precision())); }

json report_json(const GradedReport& r) {
    json a = json::array();
    for (const auto& lv : r.levels) a.push_back({{"rank", lv.rank}, {"torsion", lv.torsion}});
    return a;
}

json params_json(const CurveParams& cp) {
    return {{"n", cp.n}, {"g1", cp.g1}, {"delta", cp.delta}, {"degree", cp.D}};
}

void emit(json j) {
    json out = {{"schema", 1}};
    for (auto& [k, v] : j.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
}

PointIndices parse_point(const std::string& text, int n) {
    std::string body = text;
    bool monomial = false;
    if (body.rfind("m:", 0) == 0) {
        monomial = true;
        body = body.substr(2);
    }
    IndexVector b;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            b.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("bad point '" + text + "'");
        }
    }
    if (static_cast<int>(b.size()) != n - 1) throw ParseError("point '" + text + "' needs n-1 entries");
    if (!is_monotone(b)) throw ParseError("point '" + text + "' is not monotone and nonnegative");
    PointIndices p;
    p.b = b;
    p.monomial = monomial;
    return p;
}

LocalConfig parse_config(const std::vector<std::string>& points, int n) {
    LocalConfig c;
    c.n = n;
    for (const auto& s : points) c.points.push_back(parse_point(s, n));
    return c;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write '" + path + "'");
    f << text;
}

json component_json(const ComponentDescriptor& c) {
    return {{"beta", c.beta},
            {"dimension", c.dimension},
            {"tangent_dim", c.tangent_dim_generic},
            {"divisibility_ok", c.divisibility_ok}};
}

struct CurveOpts {
    CurveParams cp;
    void add(CLI::App* app, bool need_delta = true) {
        app->add_option("--n", cp.n, "Multiplicity")->required();
        app->add_option("--g1", cp.g1, "Genus of the reduced curve")->default_val(2);
        auto* d = app->add_option("--delta", cp.delta, "Conormal degree");
        if (need_delta) d->required();
        app->add_option("--degree", cp.D, "Generalized degree")->default_val(0);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pmc: indices, stability, components and Ext of generalized line bundles"};
    app.require_subcommand(1);
    int status = kOk;

    // indices
    std::string file1, file2;
    auto* c_indices = app.add_subcommand("indices", "Indices of a module-spec file, by both algorithms");
    c_indices->add_option("file", file1, "Module-spec file")->required();
    c_indices->callback([&] {
        ModuleRep M = load(file1);
        IndexVector a = indices(M), b = indices_by_definition(M);
        emit({{"params", {{"n", M.params().n}, {"N", M.params().N}, {"p", M.params().p}}},
              {"beta", a},
              {"beta_by_definition", b},
              {"agree", a == b},
              {"first_filtration", report_json(graded_report(M, Filtration::first))},
              {"second_filtration", report_json(graded_report(M, Filtration::second))}});
        if (a != b) status = kVerifyFailed;
    });

    // normalize
    auto* c_norm = app.add_subcommand("normalize", "Special normal form of a single-jump ideal");
    c_norm->add_option("file", file1, "Module-spec file")->required();
    c_norm->callback([&] {
        SpecialNormalForm nf = normalize_special(load(file1));
        emit({{"n", nf.n}, {"b", nf.b}, {"j", nf.j}, {"z", nf.z}, {"beta", nf.beta()}});
    });

    // isomorphic
    IsoBudget budget;
    auto* c_iso = app.add_subcommand("isomorphic", "Decide whether two ideals are isomorphic");
    c_iso->add_option("file", file1, "First module-spec file")->required();
    c_iso->add_option("other", file2, "Second module-spec file")->required();
    c_iso->add_option("--seed", budget.seed, "Seed for randomized search")->default_val(1);
    c_iso->add_option("--samples", budget.samples, "Random samples above the exhaustive limit")->default_val(10000);
    c_iso->callback([&] {
        ModuleRep M = load(file1), Mp = load(file2);
        if (!(M.params() == Mp.params())) throw ParseError("isomorphic: both files must use the same ring header");
        emit({{"verdict", to_string(is_isomorphic_oracle(M, Mp, budget))}});
    });

    // stability / jh
    CurveOpts stab_opts, jh_opts;
    IndexVector stab_beta, jh_beta;
    auto* c_stab = app.add_subcommand("stability", "Semistability of an index vector");
    stab_opts.add(c_stab);
    c_stab->add_option("--beta", stab_beta, "Indices beta_1..beta_{n-1}")->delimiter(',')->required();
    c_stab->callback([&] {
        StabilityVerdict v = check_stability(stab_opts.cp, stab_beta);
        emit({{"params", params_json(stab_opts.cp)},
              {"beta", stab_beta},
              {"semistable", v.semistable},
              {"stable", v.stable},
              {"equality_positions", v.equality_positions}});
    });
    auto* c_jh = app.add_subcommand("jh", "Jordan-Holder filtration of a strictly semistable index vector");
    jh_opts.add(c_jh);
    c_jh->add_option("--beta", jh_beta, "Indices beta_1..beta_{n-1}")->delimiter(',')->required();
    c_jh->callback([&] {
        JHFiltration f = jh_filtration(jh_opts.cp, jh_beta);
        json graded = json::array();
        for (const auto& g : f.graded)
            graded.push_back({{"rank", g.rank},
                              {"degree", format_rational(g.degree)},
                              {"slope", format_rational(g.slope())},
                              {"indices", g.indices}});
        emit({{"params", params_json(jh_opts.cp)},
              {"beta", jh_beta},
              {"positions", f.positions},
              {"steps", f.steps},
              {"graded", graded}});
    });

    // components
    CurveOpts comp_opts;
    std::string comp_format = "json", comp_dot;
    bool conjecture = false;
    auto* c_comp = app.add_subcommand("components", "Irreducible components containing stable glbs");
    comp_opts.add(c_comp);
    c_comp->add_option("--format", comp_format, "json or table")->check(CLI::IsMember({"json", "table"}));
    c_comp->add_option("--dot", comp_dot, "Write the connectivity graph in DOT format");
    c_comp->add_flag("--conjecture", conjecture, "Add the conjectural n=3 report");
    c_comp->callback([&] {
        const CurveParams& cp = comp_opts.cp;
        auto comps = enumerate_components(cp);
        ConnectivityResult conn = connectivity(cp);
        std::optional<ConjectureReport> rep;
        if (conjecture) rep = conjecture_report_n3(cp);
        if (!comp_dot.empty()) write_file(comp_dot, to_dot(conn, cp));
        if (comp_format == "table") {
            std::cout << "n=" << cp.n << " g1=" << cp.g1 << " delta=" << cp.delta << " degree=" << cp.D << "\n";
            std::cout << "beta\tdimension\ttangent_dim\tdivisibility_ok\n";
            for (const auto& c : comps)
                std::cout << format_indices(c.beta) << "\t" << c.dimension << "\t" << c.tangent_dim_generic << "\t"
                          << (c.divisibility_ok ? "true" : "false") << "\n";
            std::cout << "connected_components\t" << conn.count << "\n";
            if (rep) {
                std::cout << "conjectural:\n";
                if (rep->bundle_component_dimension)
                    std::cout << "  bundle_component\tdimension " << *rep->bundle_component_dimension << "\n";
                for (const auto& r : rep->rigid_loci)
                    std::cout << "  rigid d0=" << r.d0 << " d1=" << r.d1 << "\tdimension " << r.dimension << "\n";
            }
            return;
        }
        json arr = json::array();
        for (const auto& c : comps) arr.push_back(component_json(c));
        json out = {{"params", params_json(cp)}, {"components", arr}, {"connected_components", conn.count}};
        if (rep) {
            json conj = json::array();
            if (rep->bundle_component_dimension)
                conj.push_back({{"kind", "vector_bundle_component"},
                                {"dimension", *rep->bundle_component_dimension},
                                {"conjectural", true}});
            for (const auto& r : rep->rigid_loci)
                conj.push_back({{"kind", "rigid_type"},
                                {"d0", r.d0},
                                {"d1", r.d1},
                                {"dimension", r.dimension},
                                {"conjectural", true}});
            out["conjectural"] = conj;
        }
        emit(out);
    });

    // connectivity
    CurveOpts conn_opts;
    std::string conn_dot;
    ConnectivityOptions copts;
    auto* c_conn = app.add_subcommand("connectivity", "Connectivity graph of the components");
    conn_opts.add(c_conn);
    c_conn->add_option("--dot", conn_dot, "Write the graph in DOT format (- for stdout, replacing the JSON)");
    c_conn->add_option("--depth", copts.depth, "Move depth bound (0: automatic)")->default_val(0);
    c_conn->callback([&] {
        ConnectivityResult r = connectivity(conn_opts.cp, copts);
        if (conn_dot == "-") {
            std::cout << to_dot(r, conn_opts.cp);
            return;
        }
        if (!conn_dot.empty()) write_file(conn_dot, to_dot(r, conn_opts.cp));
        json edges = json::array();
        for (auto [a, b] : r.edges) edges.push_back({r.labels[a], r.labels[b]});
        emit({{"params", params_json(conn_opts.cp)},
              {"labels", r.labels},
              {"edges", edges},
              {"component_of", r.component_of},
              {"connected_component_count", r.count}});
    });

    // tangent
    CurveOpts tan_opts;
    std::vector<std::string> tan_points;
    IndexVector tan_beta;
    bool vector_bundle = false;
    std::optional<long long> h0;
    auto* c_tan = app.add_subcommand("tangent", "Tangent space dimensions");
    tan_opts.add(c_tan, false);
    c_tan->add_option("--point", tan_points, "Local indices of a point, e.g. 1,2 (prefix m: for monomial)");
    c_tan->add_option("--beta", tan_beta, "Use the generic configuration of beta")->delimiter(',');
    c_tan->add_flag("--vector-bundle", vector_bundle, "Tangent dimension at a stable rank-n vector bundle");
    c_tan->add_option("--h0", h0, "h0(End E (x) C^-1) for the vector bundle case");
    c_tan->callback([&] {
        const CurveParams& cp = tan_opts.cp;
        if (vector_bundle) {
            emit({{"params", params_json(cp)}, {"tangent_dim", tangent_dimension_vector_bundle(cp, h0)}});
            return;
        }
        LocalConfig c = tan_beta.empty() ? parse_config(tan_points, cp.n) : generic_config(cp.n, tan_beta);
        json out = {{"params", params_json(cp)}, {"beta", c.global()}, {"tangent_dim", tangent_dimension(cp, c)}};
        if (c.all_special()) {
            auto z = z_locus_dimension(cp, c);
            out["z_locus_dimension"] = z ? json(*z) : json(nullptr);
            out["blowup_genus"] = blowup_genus(cp, c);
        }
        emit(out);
    });

    // ext
    CurveOpts ext_opts;
    std::string ext_file;
    std::vector<std::string> ext_points;
    bool print_resolution = false, ext_unstable = false;
    std::optional<long long> ext_h0;
    auto* c_ext = app.add_subcommand("ext", "Local Ext^1 length of an ideal, or the global Ext^1 dimension");
    c_ext->add_option("file", ext_file, "Module-spec file");
    c_ext->add_flag("--print-resolution", print_resolution, "Print the periodic resolution");
    c_ext->add_option("--n", ext_opts.cp.n, "Multiplicity (global mode)");
    c_ext->add_option("--g1", ext_opts.cp.g1, "Genus of the reduced curve")->default_val(2);
    c_ext->add_option("--delta", ext_opts.cp.delta, "Conormal degree")->default_val(0);
    c_ext->add_option("--degree", ext_opts.cp.D, "Generalized degree")->default_val(0);
    c_ext->add_option("--point", ext_points, "Local indices of a point (global mode)");
    c_ext->add_flag("--unstable", ext_unstable, "The sheaf is not stable (requires --h0)");
    c_ext->add_option("--h0", ext_h0, "h0 of the structure sheaf of the blow-up");
    c_ext->callback([&] {
        if (!ext_file.empty()) {
            ModuleRep I = load(ext_file);
            json out = {{"beta", indices(I)}, {"ext1_length", local_ext1_length(I)}};
            IndexVector beta = indices(I);
            if (auto j = single_jump(beta))
                out["closed_form"] = ext1_closed_form_special(I.params().n, *j, beta.back());
            else if (I.params().n == 3 && !beta.empty() && beta.back() > 0)
                out["closed_form"] = ext1_closed_form_n3(beta[0], beta[1]);
            if (print_resolution && beta.back() > 0) std::cerr << format_resolution(build_resolution(I));
            emit(out);
            return;
        }
        if (ext_opts.cp.n < 1) throw ParseError("ext: give a module-spec file or --n with --point");
        LocalConfig c = parse_config(ext_points, ext_opts.cp.n);
        emit({{"params", params_json(ext_opts.cp)},
              {"ext1_dimension", global_ext1_dimension(ext_opts.cp, c, !ext_unstable, ext_h0)}});
    });

    // verify
    std::string suite = "all";
    std::uint64_t seed = 1;
    auto* c_verify = app.add_subcommand("verify", "Run property suites");
    c_verify->add_option("suite", suite, "all, ring, indices, duality, stability, ext or moduli");
    c_verify->add_option("--seed", seed, "Seed for randomized suites")->default_val(1);
    c_verify->callback([&] {
        VerifyReport rep = run_verification(suite, seed);
        json suites = json::array();
        for (const auto& s : rep.suites)
            suites.push_back({{"suite", s.name},
                              {"checks", s.checks},
                              {"failures", s.failures},
                              {"witnesses", s.witnesses}});
        emit({{"seed", seed}, {"ok", rep.ok()}, {"suites", suites}});
        if (!rep.ok()) status = kVerifyFailed;
    });

    ext_opts.cp.n = 0;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    } catch (const InvariantViolation& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return status;
}
