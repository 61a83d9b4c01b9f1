#include "qla/cli.hpp"

#include "qla/error.hpp"
#include "qla/parse.hpp"
#include "qla/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace qla {

namespace {

const std::map<std::string, Command> command_names{
    {"build", Command::Build}, {"verify", Command::Verify}, {"compare", Command::Compare}, {"table", Command::Table}, {"limit", Command::Limit}};

std::unique_ptr<CLI::App> make_app(RunConfig &cfg, std::string &construction, std::string &format) {
    auto app = std::make_unique<CLI::App>("Quantum Lie algebras over Q(v), v^2 = q");
    app->require_subcommand(1);
    const std::vector<std::pair<std::string, std::string>> subs{
        {"build", "construct an algebra and write its table"},
        {"verify", "run structural checks"},
        {"compare", "match the generic sl_n output with the explicit family"},
        {"table", "print the bracket table"},
        {"limit", "print and check the v = 1 table"}};
    for (const auto &[name, help] : subs) {
        CLI::App *sub = app->add_subcommand(name, help);
        sub->add_option("--algebra", cfg.algebra, "Cartan type, e.g. A2, B2, G2")->required();
        sub->add_option("--construction", construction, "generic or explicit-sln")
            ->check(CLI::IsMember({"generic", "explicit-sln"}));
        sub->add_option("--s", cfg.s, "family parameter s, a rational function in q or v");
        sub->add_option("--t", cfg.t, "family parameter t");
        sub->add_flag("--normalize", cfg.normalize, "rescale to [X_a1, X_-a1] = H, [H, X_a1] = 2 q^d X_a1");
        sub->add_option("--checks", cfg.checks, "comma-separated check names")->delimiter(',')->check(CLI::IsMember(check_names()));
        sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--budget-dim", cfg.budget_dim, "largest module dimension to build")->check(CLI::PositiveNumber);
        sub->add_flag("--fit,!--no-fit", cfg.fit, "fit (s, t) in compare; --no-fit uses --s and --t as given");
    }
    return app;
}

RunConfig finish(RunConfig cfg, const CLI::App &app, const std::string &construction, const std::string &format) {
    for (const auto *sub : app.get_subcommands()) cfg.command = command_names.at(sub->get_name());
    cfg.construction = construction == "explicit-sln" ? Construction::ExplicitSln : Construction::Generic;
    cfg.format = format == "text" ? Format::Text : Format::Json;
    return cfg;
}

SlnParams sln_params(const RunConfig &cfg) {
    const CartanDatum cd = parse_cartan(cfg.algebra);
    return SlnParams{cd.rank + 1, parse_ratfunc(cfg.s), parse_ratfunc(cfg.t)};
}

bool is_explicit(const QuantumLieAlgebra &A) { return A.provenance == Provenance::ExplicitSln; }

std::vector<std::string> default_checks(const RunConfig &cfg) {
    std::vector<std::string> names{"gradation", "antisymmetry", "classical-limit", "ad-invariance", "lr-identity"};
    if (cfg.construction == Construction::ExplicitSln) names.push_back("tau");
    return names;
}

std::string report_text(const Report &r) {
    std::ostringstream out;
    for (const auto &c : r.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed && !c.witness.empty()) out << ": " << c.witness;
        out << "\n";
    }
    return out.str();
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

std::string bracket_table(const QuantumLieAlgebra &A, Format format) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto &[ab, vec] : A.constants) {
        std::string rhs;
        for (const auto &[c, x] : vec) {
            if (!rhs.empty()) rhs += " + ";
            const std::string v = x.to_string();
            rhs += (x == RatFunc(1) ? "" : (v.find_first_of("+-/ ") == std::string::npos ? v : "(" + v + ")") + "*") + A.basis[c].name;
        }
        rows.emplace_back("[" + A.basis[ab.first].name + ", " + A.basis[ab.second].name + "]", rhs);
    }
    if (format == Format::Json) {
        Json j = Json::array();
        for (const auto &[l, r] : rows) j.push_back(Json{{"bracket", l}, {"value", r}});
        return dump(j);
    }
    std::size_t w = 0;
    for (const auto &r : rows) w = std::max(w, r.first.size());
    std::ostringstream out;
    for (const auto &[l, r] : rows) out << l << std::string(w - l.size(), ' ') << " = " << r << "\n";
    return out.str();
}

struct Outcome {
    std::string text;
    bool passed = true;
};

Outcome cmd_build(const RunConfig &cfg) {
    const QuantumLieAlgebra A = build_algebra(cfg);
    std::optional<Report> r;
    if (!cfg.checks.empty()) r = run_checks(A, cfg.checks, cfg.budget_dim);
    const bool ok = !r || r->passed();
    if (cfg.format == Format::Text) return {to_text(A), ok};
    return {dump(to_json(A, r ? &*r : nullptr)), ok};
}

Outcome cmd_verify(const RunConfig &cfg) {
    const QuantumLieAlgebra A = build_algebra(cfg);
    const Report r = run_checks(A, cfg.checks.empty() ? default_checks(cfg) : cfg.checks, cfg.budget_dim);
    if (cfg.format == Format::Text) return {report_text(r), r.passed()};
    return {dump(Json{{"algebra", cfg.algebra}, {"provenance", to_string(A.provenance)}, {"passed", r.passed()}, {"checks", to_json(r)}}),
            r.passed()};
}

Outcome cmd_compare(const RunConfig &cfg) {
    const CartanDatum cd = parse_cartan(cfg.algebra);
    const QuantumLieAlgebra G = build_generic(cd, cfg.budget_dim);
    std::optional<SlnParams> fixed;
    // n = 2 has no unique fit: only s + t enters
    if (!cfg.fit || cd.rank == 1) fixed = sln_params(cfg);
    const FitResult fit = fit_explicit(G, fixed);

    Json j{{"algebra", cfg.algebra}, {"fitted", !fixed}, {"matched", fit.matched}, {"compared", fit.compared}};
    if (fit.params) {
        j["s"] = fit.params->s.to_string();
        j["t"] = fit.params->t.to_string();
    }
    j["epsilon"] = fit.epsilon.to_string();
    j["epsilon_bar_invariant"] = fit.epsilon_bar_invariant;
    j["product_scale"] = fit.product_scale.to_string();
    Json cm = Json::array();
    for (const auto &row : fit.cartan_map) {
        Json r = Json::array();
        for (const auto &x : row) r.push_back(x.to_string());
        cm.push_back(r);
    }
    j["cartan_map"] = cm;
    Json rs = Json::object();
    for (const auto &[name, x] : fit.root_scalars) rs[name] = x.to_string();
    j["root_scalars"] = rs;
    j["mismatches"] = fit.mismatches;

    if (cfg.format == Format::Json) return {dump(j), fit.matched};
    std::ostringstream out;
    out << (fit.matched ? "MATCH" : "MISMATCH") << " " << cfg.algebra << " (" << fit.compared << " constants compared)\n";
    if (fit.params) out << "s = " << j["s"].get<std::string>() << "\nt = " << j["t"].get<std::string>() << "\n";
    out << "epsilon = " << j["epsilon"].get<std::string>() << (fit.epsilon_bar_invariant ? " (bar-invariant)" : " (not bar-invariant)") << "\n";
    if (fixed) out << "product scale = " << j["product_scale"].get<std::string>() << "\n";
    for (std::size_t k = 0; k < fit.cartan_map.size(); ++k) {
        out << "H_" << k + 1 << " ->";
        for (std::size_t m = 0; m < fit.cartan_map[k].size(); ++m) out << " " << fit.cartan_map[k][m].to_string();
        out << "\n";
    }
    for (const auto &[name, x] : fit.root_scalars) out << name << " -> " << x.to_string() << "\n";
    for (const auto &m : fit.mismatches) out << "mismatch: " << m << "\n";
    return {out.str(), fit.matched};
}

Outcome cmd_limit(const RunConfig &cfg) {
    const QuantumLieAlgebra A = build_algebra(cfg);
    const Report r = check_classical_limit(A);
    const CheckResult *reg = r.find("regular-at-1");
    const bool regular = !reg || reg->passed;
    Json constants = Json::array();
    std::ostringstream text;
    if (regular)
        for (const auto &[ab, vec] : A.constants)
            for (const auto &[c, x] : vec) {
                const Rational v = classical_limit(x);
                if (v == 0) continue;
                constants.push_back(Json{{"a", ab.first}, {"b", ab.second}, {"c", c}, {"value", rational_to_string(v)}});
                text << "f[" << A.basis[ab.first].name << "," << A.basis[ab.second].name << "]^{" << A.basis[c].name << "} = " << rational_to_string(v) << "\n";
            }
    if (cfg.format == Format::Text) return {text.str() + report_text(r), r.passed()};
    return {dump(Json{{"algebra", cfg.algebra}, {"constants", constants}, {"checks", to_json(r)}}), r.passed()};
}

}  // namespace

const std::vector<std::string> &check_names() {
    static const std::vector<std::string> names{"gradation", "antisymmetry", "classical-limit", "ad-invariance", "tau", "lr-identity"};
    return names;
}

RunConfig parse_args(const std::vector<std::string> &args) {
    RunConfig cfg;
    std::string construction = "generic", format = "json";
    auto app = make_app(cfg, construction, format);
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app->parse(rev);
    return finish(cfg, *app, construction, format);
}

void validate(const RunConfig &cfg) {
    const CartanDatum cd = parse_cartan(cfg.algebra);
    const bool explicit_sln = cfg.construction == Construction::ExplicitSln;
    if ((explicit_sln || cfg.command == Command::Compare) && cd.series != Series::A)
        throw Error(ErrorKind::InvalidType, "the explicit family needs an A-series algebra");
    if (explicit_sln || cfg.command == Command::Compare) {
        const SlnParams p = sln_params(cfg);
        const RatFunc st = p.s + p.t;
        if (!st.is_invertible_at_one()) throw Error(ErrorKind::InvalidParams, "(s + t)(1) must be finite and nonzero");
    }
    for (const auto &c : cfg.checks)
        if (c == "tau" && !explicit_sln) throw Error(ErrorKind::InvalidParams, "tau applies to the explicit family only");
    if (cfg.command == Command::Compare && cfg.normalize) throw Error(ErrorKind::InvalidParams, "compare works on the unnormalized table");
}

QuantumLieAlgebra build_algebra(const RunConfig &cfg) {
    const CartanDatum cd = parse_cartan(cfg.algebra);
    QuantumLieAlgebra A = cfg.construction == Construction::ExplicitSln ? build_sln_explicit(sln_params(cfg)) : build_generic(cd, cfg.budget_dim);
    if (cfg.normalize) A = canonical_normalize(A);
    return A;
}

Report run_checks(const QuantumLieAlgebra &A, const std::vector<std::string> &names, std::size_t budget_dim) {
    Report r;
    for (const auto &name : names) {
        if (name == "gradation") r.append(check_gradation(A));
        else if (name == "antisymmetry") r.append(check_q_antisymmetry(A));
        else if (name == "classical-limit") r.append(check_classical_limit(A));
        else if (name == "lr-identity") r.append(check_lr_identity(A));
        else if (name == "ad-invariance") {
            if (is_explicit(A) && A.action_E.empty()) {
                QuantumLieAlgebra T = with_sln_action(A.normalized ? build_sln_explicit(*A.params) : A, budget_dim);
                if (A.normalized) T = canonical_normalize(T);
                T.constants = A.constants;
                r.append(check_ad_invariance(T));
            } else {
                r.append(check_ad_invariance(A));
            }
        } else if (name == "tau") {
            if (!A.params) throw Error(ErrorKind::InvalidParams, "tau applies to the explicit family only");
            r.append(check_tau_sln(A, A.params->n));
        } else {
            throw Error(ErrorKind::InvalidParams, "unknown check '" + name + "'");
        }
    }
    return r;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    std::string construction = "generic", format = "json";
    auto app = make_app(cfg, construction, format);
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app->parse(rev);
    } catch (const CLI::ParseError &e) {
        const int code = app->exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }
    cfg = finish(cfg, *app, construction, format);

    std::unique_ptr<std::ofstream> file;
    try {
        validate(cfg);
        if (!cfg.out.empty()) {
            file = std::make_unique<std::ofstream>(cfg.out, std::ios::binary);
            if (!*file) throw Error(ErrorKind::InvalidParams, "cannot write '" + cfg.out + "'");
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    Outcome o;
    try {
        switch (cfg.command) {
        case Command::Build: o = cmd_build(cfg); break;
        case Command::Verify: o = cmd_verify(cfg); break;
        case Command::Compare: o = cmd_compare(cfg); break;
        case Command::Table: o = {bracket_table(build_algebra(cfg), cfg.format), true}; break;
        case Command::Limit: o = cmd_limit(cfg); break;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    (file ? static_cast<std::ostream &>(*file) : out) << o.text;
    return o.passed ? exit_pass : exit_failure;
}

}  // namespace qla
