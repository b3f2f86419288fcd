#include "config.hpp"
#include "expr.hpp"

#include "qcartan/classical.hpp"
#include "qcartan/coideal.hpp"
#include "qcartan/involutions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <memory>
#include <optional>

using nlohmann::json;
using namespace qc;
using namespace qc::cli;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string pair, type, config, expr, lhs, rhs, what = "all";
    int n = 0, r = -1, rank = 0;
    bool json = false, verify = false;
};

// Algebra, and coideal when a pair is selected.
struct Session {
    Config cfg;
    std::optional<Involution> inv;
    std::unique_ptr<Uq> uq;
    std::unique_ptr<Coideal> co;

    ThetaSystem theta_system() const { return gamma_theta(cfg.pair, cfg.n, cfg.r); }
};

Session open_session(const Options& o, bool need_pair) {
    Session s;
    try {
        if (!o.config.empty()) s.cfg = load_config(o.config);
        if (!o.pair.empty()) s.cfg.pair = o.pair;
        if (o.n) s.cfg.n = o.n;
        if (o.r >= 0) s.cfg.r = o.r;
        // AIII without r: pi_theta empty.
        if (s.cfg.pair == "AIII" && s.cfg.r == 0) s.cfg.r = (s.cfg.n + 1) / 2;
        if (!s.cfg.pair.empty()) {
            s.inv = build_involution(s.cfg.pair, s.cfg.n, s.cfg.r);
            s.uq = std::make_unique<Uq>(s.inv->rd);
            s.co = std::make_unique<Coideal>(*s.uq, session_params(*s.uq, *s.inv, s.cfg));
        } else if (need_pair) {
            throw UsageError("this command needs --pair (or pair= in --config)");
        } else if (!o.type.empty()) {
            if (o.type.size() != 1 || o.rank < 1) throw UsageError("--type needs a single letter and --rank >= 1");
            s.uq = std::make_unique<Uq>(RootData(o.type[0], o.rank));
        } else {
            throw UsageError("select an algebra with --pair or --type/--rank");
        }
    } catch (const UsageError&) {
        throw;
    } catch (const SyntaxError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return s;
}

json elem_json(const Uq& uq, const Element& a) { return json::parse(uq.json(a)); }
json scalar_json(const QRat& c) { return json::parse(qrat_json(c)); }

json report_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return {{"ok", r.ok()}, {"checks", checks}};
}

void print_report(const Report& r, const std::string& indent = "") {
    for (const auto& c : r.checks) {
        std::cout << indent << (c.ok ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << '\n';
    }
}

Element parse_element(const std::string& text, const Session& s) {
    return evaluate(*parse_expr(text), Context{*s.uq, s.co.get()});
}

std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v) out.push_back(x + 1);
    return out;
}

int cmd_normal_form(const Options& o) {
    Session s = open_session(o, false);
    Element a = parse_element(o.expr, s);
    if (o.json) std::cout << elem_json(*s.uq, a).dump() << '\n';
    else std::cout << s.uq->str(a) << '\n';
    return 0;
}

int cmd_equal(const Options& o) {
    Session s = open_session(o, false);
    Element a = parse_element(o.lhs, s), b = parse_element(o.rhs, s);
    Element d = a - b;
    if (o.json) {
        std::cout << json{{"equal", d.is_zero()}, {"difference", elem_json(*s.uq, d)}}.dump() << '\n';
    } else if (d.is_zero()) {
        std::cout << "equal\n";
    } else {
        std::cout << "not equal\nlhs - rhs = " << s.uq->str(d) << '\n';
    }
    return d.is_zero() ? 0 : 1;
}

int cmd_theta_system(const Options& o) {
    Session s = open_session(o, true);
    ThetaSystem ts = s.theta_system();
    Report rep = verify_theta_system(ts);
    if (o.json) {
        json roots = json::array();
        for (std::size_t j = 0; j < ts.betas.size(); ++j)
            roots.push_back({{"beta", ts.betas[j]},
                             {"alpha", ts.alpha[j] + 1},
                             {"alpha_prime", ts.alpha_prime[j] + 1},
                             {"case", ts.case_tag[j]}});
        std::cout << json{{"pair", ts.inv.label},
                          {"pi_theta", one_based(ts.inv.pi_theta)},
                          {"gamma", roots},
                          {"report", report_json(rep)}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << ts.inv.label << " rank " << ts.inv.rd.rank() << '\n';
        for (std::size_t j = 0; j < ts.betas.size(); ++j)
            std::cout << "  beta" << j + 1 << " = " << root_str(ts.betas[j]) << "  case " << ts.case_tag[j]
                      << "  alpha = a" << ts.alpha[j] + 1 << "  alpha' = a" << ts.alpha_prime[j] + 1 << '\n';
        print_report(rep, "  ");
    }
    return rep.ok() ? 0 : 1;
}

int cmd_classical_cartan(const Options& o) {
    Session s = open_session(o, true);
    ThetaSystem ts = s.theta_system();
    std::vector<std::string> gens = classical_cartan_symbolic(ts);
    std::optional<Report> rep;
    if (o.verify) rep = verify_classical_cartan(ts);
    if (o.json) {
        json j{{"pair", ts.inv.label}, {"generators", gens}};
        if (rep) j["report"] = report_json(*rep);
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& g : gens) std::cout << g << '\n';
        if (rep) print_report(*rep, "  ");
    }
    return !rep || rep->ok() ? 0 : 1;
}

json cartan_json(const Uq& uq, const CartanReport& c) {
    return {{"j", c.j + 1},
            {"beta", c.beta},
            {"H", elem_json(uq, c.H)},
            {"Y", elem_json(uq, c.parts.Y)},
            {"C", elem_json(uq, c.parts.C)},
            {"X", elem_json(uq, c.parts.X)},
            {"s", scalar_json(c.parts.s)},
            {"kappa_ratio", scalar_json(c.kappa_ratio)},
            {"order", c.order},
            {"checks", report_json(c.checks)}};
}

void print_cartan(const Uq& uq, const CartanReport& c, bool checks) {
    std::cout << "H" << c.j + 1 << "  beta = " << root_str(c.beta) << '\n';
    std::cout << "  H = " << uq.str(c.H) << '\n';
    std::cout << "  Y = " << uq.str(c.parts.Y) << '\n';
    std::cout << "  C = " << uq.str(c.parts.C) << '\n';
    std::cout << "  X = " << uq.str(c.parts.X) << '\n';
    std::cout << "  s = " << c.parts.s.str() << '\n';
    std::cout << "  kappa(Y) / X = " << c.kappa_ratio.str() << '\n';
    if (checks) print_report(c.checks, "  ");
}

bool aiii_split(const Involution& inv) { return inv.label == "AIII" && inv.pi_theta.empty(); }

int cmd_cartan(const Options& o) {
    Session s = open_session(o, true);
    ThetaSystem ts = s.theta_system();
    std::vector<CartanReport> reps;
    bool ok = true;
    for (int j = 0; j < static_cast<int>(ts.betas.size()); ++j) {
        reps.push_back(s.co->cartan_element(ts, j));
        ok = ok && reps.back().checks.ok();
    }
    std::optional<SuiteResult> suite;
    if (o.verify && aiii_split(ts.inv)) {
        suite = verify_cartan_suite(*s.co, ts);
        ok = ok && suite->report.ok();
    }
    if (o.json) {
        json arr = json::array();
        for (const auto& c : reps) arr.push_back(cartan_json(*s.uq, c));
        json j{{"pair", ts.inv.label}, {"n", ts.inv.rd.rank()}, {"cartan", arr}};
        if (suite) j["suite"] = {{"report", report_json(suite->report)}, {"hrminus1", suite->hrminus1}};
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& c : reps) print_cartan(*s.uq, c, o.verify);
        if (suite) {
            std::cout << "suite\n";
            print_report(suite->report, "  ");
            if (!suite->hrminus1.empty()) std::cout << "  H_{r-1} - H'_{r-1}: " << suite->hrminus1 << '\n';
        }
    }
    return !o.verify || ok ? 0 : 1;
}

int cmd_member(const Options& o) {
    Session s = open_session(o, true);
    Element x = parse_element(o.expr, s);
    bool m = s.co->member(x);
    if (o.json) std::cout << json{{"member", m}}.dump() << '\n';
    else std::cout << (m ? "true" : "false") << '\n';
    return m ? 0 : 1;
}

// Runs one named group of checks, turning exceptions into failed entries.
template <class F>
void run_group(Report& out, const std::string& prefix, F&& f) {
    try {
        Report r = f();
        for (auto& c : r.checks) out.add(prefix + c.name, c.ok, c.detail);
    } catch (const std::exception& e) {
        out.add(prefix + "error", false, e.what());
    }
}

int cmd_verify(const Options& o) {
    static const std::vector<std::string> groups{"all", "theta", "classical", "lifts", "cartan", "suite"};
    if (std::find(groups.begin(), groups.end(), o.what) == groups.end())
        throw UsageError("unknown verification group '" + o.what + "'");
    Session s = open_session(o, true);
    ThetaSystem ts = s.theta_system();
    auto want = [&](const char* g) { return o.what == "all" || o.what == g; };
    Report rep;
    if (want("theta")) run_group(rep, "theta.", [&] { return verify_theta_system(ts); });
    if (want("classical") && has_matrix_theta(ts.inv))
        run_group(rep, "classical.", [&] { return verify_classical_cartan(ts); });
    for (int j = 0; j < static_cast<int>(ts.betas.size()); ++j) {
        std::string tag = std::to_string(j + 1) + ".";
        if (want("lifts"))
            run_group(rep, "lift" + tag, [&] { return s.co->verify_lift(ts, j, s.co->lift_Y(ts, j)); });
        if (want("cartan")) run_group(rep, "cartan" + tag, [&] { return s.co->cartan_element(ts, j).checks; });
    }
    if (want("suite") && aiii_split(ts.inv))
        run_group(rep, "suite.", [&] { return verify_cartan_suite(*s.co, ts).report; });
    if (o.json) std::cout << report_json(rep).dump(2) << '\n';
    else {
        print_report(rep);
        std::cout << (rep.ok() ? "all checks passed" : std::to_string(rep.failures().size()) + " check(s) failed")
                  << '\n';
    }
    return rep.ok() ? 0 : 1;
}

void add_session_options(CLI::App* c, Options& o, bool pair_only) {
    c->add_option("--pair", o.pair, "symmetric pair label, e.g. AIII, BI, CII-1");
    c->add_option("--n", o.n, "rank");
    c->add_option("--r", o.r, "second parameter for AIII, BI, CII-1, DI-1");
    if (!pair_only) {
        c->add_option("--type", o.type, "Cartan type (A-G) when no pair is given");
        c->add_option("--rank", o.rank, "rank for --type");
    }
    c->add_option("--config", o.config, "key=value session file");
    c->add_flag("--json", o.json, "emit JSON");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum symmetric pairs and quantum Cartan subalgebras"};
    app.require_subcommand(1);
    Options o;

    auto* nf = app.add_subcommand("normal-form", "normal form of an expression");
    add_session_options(nf, o, false);
    nf->add_option("--expr", o.expr, "expression")->required();

    auto* eq = app.add_subcommand("equal", "compare two expressions");
    add_session_options(eq, o, false);
    eq->add_option("--lhs", o.lhs)->required();
    eq->add_option("--rhs", o.rhs)->required();

    auto* th = app.add_subcommand("theta-system", "strongly orthogonal theta-system and its checks");
    add_session_options(th, o, true);

    auto* cc = app.add_subcommand("classical-cartan", "Cartan subalgebra of g^theta");
    add_session_options(cc, o, true);
    cc->add_flag("--verify", o.verify, "check commutativity and dimension");

    auto* ca = app.add_subcommand("cartan", "quantum Cartan elements H_j");
    add_session_options(ca, o, true);
    ca->add_flag("--verify", o.verify, "print checks and fail on any failure");

    auto* me = app.add_subcommand("member", "membership in B_theta");
    add_session_options(me, o, true);
    me->add_option("--expr", o.expr, "expression")->required();

    auto* ve = app.add_subcommand("verify", "run verification groups");
    add_session_options(ve, o, true);
    ve->add_option("what", o.what, "all | theta | classical | lifts | cartan | suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*nf) return cmd_normal_form(o);
        if (*eq) return cmd_equal(o);
        if (*th) return cmd_theta_system(o);
        if (*cc) return cmd_classical_cartan(o);
        if (*ca) return cmd_cartan(o);
        if (*me) return cmd_member(o);
        if (*ve) return cmd_verify(o);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
