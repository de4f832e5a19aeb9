#include "homocyl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "homocyl/parse.hpp"
#include "homocyl/pretzel.hpp"

namespace homocyl {

namespace {

using nlohmann::json;

std::string alexander_line(const std::optional<NormalizedAlexander>& a) {
    if (!a) return "degenerate (Delta = 0)";
    return a->poly.str() + " (degree " + std::to_string(a->degree) + ")";
}

json alexander_json(const std::optional<NormalizedAlexander>& a) {
    if (!a) return json{{"degenerate", true}};
    return json{{"degenerate", false}, {"poly", a->poly.str()}, {"degree", a->degree}};
}

json matrix_json(const FieldMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(json{{"num", m.at(i, j).num().str()}, {"den", m.at(i, j).den().str()}});
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            std::ostringstream os;
            os << m.at(i, j);
            row.push_back(os.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_sidecar(const std::string& path, const json& j) {
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << j.dump(2) << '\n';
}

const SeifertMatrix& as_seifert(const ParsedInput& in, const std::string& cmd) {
    if (const auto* sm = std::get_if<SeifertMatrix>(&in)) return *sm;
    throw std::domain_error(cmd + " expects a Seifert matrix file");
}

const ParsedCylinder& as_cylinder(const ParsedInput& in, const std::string& cmd) {
    if (const auto* c = std::get_if<ParsedCylinder>(&in)) return *c;
    throw std::domain_error(cmd + " expects a cylinder presentation file");
}

int census_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("HOMOCYL_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

struct Options {
    std::string input;
    std::string json_path;
    std::string mu_var = "s";
    std::string drop;
    bool strict = false;
    // census
    int strands = 3;
    int neg_count = 1;
    long long p_min = -99, p_max = -3, q_min = 3, qr_max = 99;
    std::string sort = "published";
    int threads = 0;
};

int cmd_alexander(const Options& o, std::ostream& out) {
    auto in = parse_input_file(o.input);
    auto a = alexander(as_seifert(in, "alexander"));
    out << alexander_line(a) << '\n';
    write_sidecar(o.json_path, json{{"command", "alexander"}, {"input", o.input},
                                    {"alexander", alexander_json(a)}});
    return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
    auto in = parse_input_file(o.input);
    const auto& sm = as_seifert(in, "classify");
    FiberednessReport r = classify(sm);
    out << "verdict: " << to_string(r.verdict) << '\n';
    out << "det(S): " << r.det_s << '\n';
    out << "alexander: " << alexander_line(r.alexander) << '\n';
    out << "surface: g=" << sm.g << " n=" << sm.n << " (2g+n-1 = " << sm.size() << ")\n";
    out << "note: verdict assumes a minimal genus Seifert surface\n";
    write_sidecar(o.json_path,
                  json{{"command", "classify"},
                       {"input", o.input},
                       {"verdict", to_string(r.verdict)},
                       {"det_s", r.det_s.convert_to<std::string>()},
                       {"degree_ok", r.degree_ok},
                       {"assumes_minimal_genus", r.assumes_minimal_genus},
                       {"alexander", alexander_json(r.alexander)}});
    return 0;
}

int cmd_sigma(const Options& o, std::ostream& out) {
    auto in = parse_input_file(o.input);
    const auto& sm = as_seifert(in, "sigma");
    RatMatrix m = sigma(sm);
    out << m.str();
    json j{{"command", "sigma"}, {"input", o.input}, {"sigma", matrix_json(m)}};
    SigmaBlockReport blk = sigma_block_report(sm);
    if (blk.applies) {
        out << "block form (X 0; * I): " << (blk.matches ? "matches" : "does not match")
            << " in the declared basis order\n";
        j["block_form_matches"] = blk.matches;
        j["x_preserves_form"] = blk.x_preserves_form;
    }
    write_sidecar(o.json_path, j);
    return 0;
}

int cmd_census(const Options& o, std::ostream& out) {
    CensusOptions copts;
    copts.published_order = o.sort != "lex";
    copts.threads = census_threads(o.threads);
    json summary{{"command", "pretzel-census"}, {"strands", o.strands}};
    json list = json::array();
    std::size_t count = 0;
    if (o.strands == 3) {
        auto hits = census3(o.p_min, o.p_max, o.q_min, o.qr_max, copts);
        for (const auto& k : hits) {
            out << k.str() << '\n';
            list.push_back({k.p, k.q, k.r});
        }
        count = hits.size();
    } else if (o.strands == 5) {
        if (o.neg_count != 1 && o.neg_count != 2)
            throw std::domain_error("--neg-count must be 1 or 2");
        auto hits = o.neg_count == 2
                        ? census5_two_negative(o.p_min, o.p_max, o.q_min, o.qr_max, copts)
                        : census5_one_negative(o.p_min, o.p_max, o.q_min, o.qr_max, copts);
        for (const auto& k : hits) {
            out << k.str() << '\n';
            list.push_back({k.p, k.q, k.r, k.s, k.u});
        }
        count = hits.size();
        summary["neg_count"] = o.neg_count;
    } else {
        throw std::domain_error("--strands must be 3 or 5");
    }
    summary["count"] = count;
    summary["range"] = {{"p_min", o.p_min}, {"p_max", o.p_max}, {"q_min", o.q_min},
                        {"qr_max", o.qr_max}};
    out << summary.dump() << '\n';
    summary["types"] = std::move(list);
    write_sidecar(o.json_path, summary);
    return 0;
}

int cmd_cylinder(const Options& o, std::ostream& out) {
    auto in = parse_input_file(o.input);
    const auto& [p, rho] = as_cylinder(in, "cylinder");
    CylinderInvariants inv = invariants(p, rho);
    out << "valid admissible presentation: g=" << p.g << " n=" << p.n << ", "
        << p.aux_gens.size() << " aux generators, " << p.relators.size() << " relators\n";
    out << "torsion: " << inv.torsion.str() << '\n';
    out << "magnus matrix:\n" << inv.magnus.str();
    out << "sigma (all variables -> 1):\n" << inv.sigma.str();
    write_sidecar(o.json_path, json{{"command", "cylinder"},
                                    {"input", o.input},
                                    {"torsion_num", inv.torsion.value().num().str()},
                                    {"torsion_den", inv.torsion.value().den().str()},
                                    {"magnus", matrix_json(inv.magnus)},
                                    {"sigma", matrix_json(inv.sigma)}});
    return 0;
}

int cmd_fiber_check(const Options& o, std::ostream& out) {
    auto in = parse_input_file(o.input);
    const auto& [p, rho] = as_cylinder(in, "fiber-check");
    FiberingReport r = fibering_report(p, rho);
    out << "torsion trivial: " << (r.torsion_trivial ? "yes" : "no") << '\n';
    out << "magnus integral: " << (r.magnus_integral ? "yes" : "no") << '\n';
    if (r.obstructed()) {
        out << "OBSTRUCTED: ";
        if (!r.torsion_trivial) out << "torsion nontrivial; ";
        if (!r.magnus_integral) out << "magnus entries not Laurent; ";
        out << "not fibered\n";
    } else {
        out << "UNOBSTRUCTED: no fibering obstruction found\n";
    }
    write_sidecar(o.json_path, json{{"command", "fiber-check"},
                                    {"input", o.input},
                                    {"torsion_trivial", r.torsion_trivial},
                                    {"magnus_integral", r.magnus_integral},
                                    {"obstructed", r.obstructed()}});
    return r.obstructed() && o.strict ? 1 : 0;
}

int cmd_torsion(const Options& o, std::ostream& out) {
    auto in = parse_input_file(o.input);
    const auto* q = std::get_if<ExteriorPresentation>(&in);
    if (!q) throw std::domain_error("torsion expects an exterior presentation file");
    TorsionClass tau = o.drop.empty()
                           ? torsion_exterior(*q)
                           : torsion_exterior(*q, [&] {
                                 int i = q->gen_index(o.drop);
                                 if (i < 0)
                                     throw std::domain_error("--drop names unknown generator " +
                                                             o.drop);
                                 return i;
                             }());
    out << "torsion: " << tau.str() << '\n';
    write_sidecar(o.json_path, json{{"command", "torsion"},
                                    {"input", o.input},
                                    {"num", tau.value().num().str()},
                                    {"den", tau.value().den().str()}});
    return 0;
}

int cmd_factor_check(const Options& o, std::ostream& out) {
    auto in = parse_input_file(o.input);
    const auto& [p, rho] = as_cylinder(in, "factor-check");
    FactorizationCheck fc = factorization_check(p, rho, o.mu_var);
    out << "exterior torsion: " << fc.lhs.str() << '\n';
    out << "factorized form:  " << fc.rhs.str() << '\n';
    out << (fc.ok ? "FACTORIZATION OK" : "FACTORIZATION MISMATCH") << '\n';
    write_sidecar(o.json_path, json{{"command", "factor-check"},
                                    {"input", o.input},
                                    {"mu_var", o.mu_var},
                                    {"lhs_num", fc.lhs.value().num().str()},
                                    {"lhs_den", fc.lhs.value().den().str()},
                                    {"rhs_num", fc.rhs.value().num().str()},
                                    {"rhs_den", fc.rhs.value().den().str()},
                                    {"ok", fc.ok}});
    return !fc.ok && o.strict ? 1 : 0;
}

int cmd_bound(const Options& o, std::ostream& out) {
    auto in = parse_input_file(o.input);
    BoundResult r;
    std::string source;
    if (const auto* sm = std::get_if<SeifertMatrix>(&in)) {
        r = generator_lower_bound(alexander_presentation(*sm), {"t"});
        source = "tS - S^T Alexander module presentation";
    } else if (const auto* c = std::get_if<ParsedCylinder>(&in)) {
        r = generator_lower_bound(stacked_ab(c->p, c->rho), c->rho.variables());
        source = "(A;B) relative homology presentation";
    } else {
        throw std::domain_error("bound expects a Seifert matrix or cylinder file");
    }
    out << "bound: " << r.bound << ' ' << (r.certified ? "(certified)" : "(heuristic)") << '\n';
    out << "matrix: " << source << '\n';
    write_sidecar(o.json_path, json{{"command", "bound"},
                                    {"input", o.input},
                                    {"bound", r.bound},
                                    {"certified", r.certified},
                                    {"matrix", source}});
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"homocyl: homology cylinder invariants of homologically fibered links"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "input file")->required();
        sub->add_option("--json", o.json_path, "write a machine-readable JSON report");
    };

    auto* c_alex = app.add_subcommand("alexander", "normalized Alexander polynomial from a Seifert matrix");
    add_input(c_alex);
    auto* c_classify = app.add_subcommand("classify", "homological fiberedness verdict");
    add_input(c_classify);
    auto* c_sigma = app.add_subcommand("sigma", "monodromy matrix (S^T)^-1 S");
    add_input(c_sigma);

    auto* c_census = app.add_subcommand("pretzel-census", "scan odd pretzel knots for homologically fibered types");
    c_census->add_option("--strands", o.strands, "3 or 5")->default_val(3);
    c_census->add_option("--neg-count", o.neg_count, "negative strands (5-strand scans)")->default_val(1);
    c_census->add_option("--p-min", o.p_min)->required();
    c_census->add_option("--p-max", o.p_max)->required();
    c_census->add_option("--q-min", o.q_min)->default_val(3);
    c_census->add_option("--qr-max", o.qr_max)->required();
    c_census->add_option("--sort", o.sort, "published | lex")->default_val("published");
    c_census->add_option("--threads", o.threads, "worker threads (default HOMOCYL_THREADS or 1)");
    c_census->add_option("--json", o.json_path, "write a machine-readable JSON report");

    auto* c_cyl = app.add_subcommand("cylinder", "validate a presentation and print its invariants");
    add_input(c_cyl);
    auto* c_fiber = app.add_subcommand("fiber-check", "fibering obstructions from torsion and Magnus matrix");
    add_input(c_fiber);
    c_fiber->add_flag("--strict", o.strict, "exit 1 when obstructed");
    auto* c_torsion = app.add_subcommand("torsion", "torsion of a link exterior presentation");
    add_input(c_torsion);
    c_torsion->add_option("--drop", o.drop, "generator whose Fox row is deleted");
    auto* c_factor = app.add_subcommand("factor-check", "verify the exterior torsion factorization");
    add_input(c_factor);
    c_factor->add_option("--mu-var", o.mu_var, "fresh meridian variable name")->default_val("s");
    c_factor->add_flag("--strict", o.strict, "exit 1 on mismatch");
    auto* c_bound = app.add_subcommand("bound", "generator lower bound from elementary ideals");
    add_input(c_bound);

    std::vector<const char*> argv;
    argv.push_back("homocyl");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (c_alex->parsed()) return cmd_alexander(o, out);
        if (c_classify->parsed()) return cmd_classify(o, out);
        if (c_sigma->parsed()) return cmd_sigma(o, out);
        if (c_census->parsed()) return cmd_census(o, out);
        if (c_cyl->parsed()) return cmd_cylinder(o, out);
        if (c_fiber->parsed()) return cmd_fiber_check(o, out);
        if (c_torsion->parsed()) return cmd_torsion(o, out);
        if (c_factor->parsed()) return cmd_factor_check(o, out);
        if (c_bound->parsed()) return cmd_bound(o, out);
    } catch (const parse_error& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const math_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace homocyl
