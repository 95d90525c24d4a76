// sumsets command-line front end
#include <chrono>
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumsets/constructions.hpp"
#include "sumsets/report.hpp"
#include "sumsets/side.hpp"

#ifndef SUMSETS_FIXTURE_DIR
#define SUMSETS_FIXTURE_DIR "fixtures"
#endif

using namespace sumsets;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kMismatch = 3 };

struct Globals {
    std::string format;
    int threads = 0;
    long long budget = 1000000000LL;
    unsigned long long seed = 0;  // reserved, exact search draws no randomness
    bool witnesses = false;
    bool timing = false;
};

SearchOptions options(const Globals& g) {
    SearchOptions o;
    o.threads = g.threads;
    o.budget = g.budget;
    return o;
}

Format fmt(const Globals& g, Format dflt) { return g.format.empty() ? dflt : parse_format(g.format); }

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string set_str(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

void put(const std::string& s) { std::fwrite(s.data(), 1, s.size(), stdout); }

// ---- subcommands ----

struct SumsetArgs {
    std::string group, set, lambda = "n0", terms = "exact:2";
};

int run_sumset(const SumsetArgs& a, const Globals& g) {
    Group grp = Group::parse(a.group);
    Subset s = parse_subset(grp, a.set);
    SumsetSpec spec{parse_lambda(a.lambda), parse_terms(a.terms)};
    Subset out = sumset(s, spec);
    Table t{"", {"group", "set", "lambda", "terms", "sumset", "size"}, {}};
    t.rows.push_back({grp.name(), s.str(), lambda_str(spec.lambda), terms_str(spec.terms), out.str(),
                      std::to_string(out.size())});
    if (fmt(g, Format::Json) == Format::Json) {
        ojson o;
        o["group"] = grp.name();
        o["set"] = s.indices();
        o["lambda"] = lambda_str(spec.lambda);
        o["terms"] = terms_str(spec.terms);
        o["sumset"] = out.indices();
        o["size"] = out.size();
        put(o.dump() + "\n");
    } else {
        put(emit(fmt(g, Format::Json), t));
    }
    return kOk;
}

struct SideArgs {
    std::string fn;
    long long n = 0, m = 0, h = 0, gg = 1, s = 0;
};

int run_side(const SideArgs& a, const Globals& g) {
    SideValue r;
    if (a.fn == "v") r = v(a.n, a.h, a.gg);
    else if (a.fn == "vpm") r = v_pm(a.n, a.h);
    else if (a.fn == "u") r = u(a.n, a.m, a.h);
    else if (a.fn == "uhat") r = u_hat(a.n, a.m, a.h);
    else if (a.fn == "vhat") r = v_hat(a.n, a.s);
    else if (a.fn == "vhatpm") r = v_hat_pm(a.n, a.s);
    else if (a.fn == "upm") r = u_pm_upto(a.n, a.m, a.s);
    else if (a.fn == "hcrit") r = {h_critical(a.n, a.h), 0};
    else throw Error("unknown side function '" + a.fn + "' (v|vpm|u|uhat|vhat|vhatpm|upm|hcrit)");
    Table t{"", {"fn", "n", "m", "h", "g", "s", "value", "divisor"}, {}};
    auto opt = [](long long x) { return x ? std::to_string(x) : std::string(); };
    t.rows.push_back({a.fn, std::to_string(a.n), opt(a.m), opt(a.h), a.fn == "v" ? std::to_string(a.gg) : "", opt(a.s),
                      std::to_string(r.value), opt(r.witness_divisor)});
    put(emit(fmt(g, Format::Json), t));
    return kOk;
}

struct QuantityArgs {
    std::string family, variant = "n0", group, terms = "exact:2";
    int m = 0, k = 0, l = 0;
    bool generating = false, exclude_zero = false;
};

int run_quantity(const QuantityArgs& a, const Globals& g) {
    QuantityQuery q;
    q.family = parse_family(a.family);
    q.lambda = parse_lambda(a.variant);
    q.group = Group::parse(a.group);
    q.terms = parse_terms(a.terms);
    q.m = a.m;
    q.k = a.k;
    q.l = a.l;
    if (q.k > 0) q.terms = TermCount::exact(q.k);
    q.generating = a.generating;
    q.exclude_zero = a.exclude_zero;

    ReportRow row;
    row.query = q;
    for (const auto& k : known_values(q)) row.citations.push_back(k.citation);
    auto t0 = std::chrono::steady_clock::now();
    SearchResult r = evaluate(q, options(g));
    row.value = r.value;
    row.nodes = r.nodes;
    if (g.witnesses && r.witness) row.witness = r.witness->indices();
    if (g.timing)
        row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    Format f = fmt(g, Format::Text);
    if (f == Format::Json) {
        put(row_to_json(row) + "\n");
    } else {
        Table t{"", {"family", "lambda", "group", "terms", "value", "witness", "citations", "nodes"}, {}};
        t.rows.push_back({family_str(q.family), lambda_str(q.lambda), q.group.name(), terms_str(q.terms),
                          r.value ? std::to_string(*r.value) : "none", row.witness ? set_str(*row.witness) : "",
                          join(row.citations, " "), std::to_string(r.nodes)});
        if (g.timing) {
            t.header.push_back("elapsed_ms");
            t.rows[0].push_back(std::to_string(*row.elapsed_ms));
        }
        put(emit(f, t));
    }
    return kOk;
}

struct ConstructArgs {
    std::string kind, params;
};

int run_construct(const ConstructArgs& a, const Globals& g) {
    Construction c = build(a.kind, parse_params(a.params));
    bool all = true;
    Format f = fmt(g, Format::Json);
    if (f == Format::Json) {
        ojson o;
        o["kind"] = c.kind;
        o["params"] = ojson::object();
        for (const auto& [k, v] : c.params) o["params"][k] = v;
        o["group"] = c.set.group().name();
        o["set"] = c.set.indices();
        o["claims"] = ojson::array();
        for (const auto& cl : c.claims) {
            bool ok = check_claim(c.set, cl);
            all = all && ok;
            o["claims"].push_back({{"claim", cl.str()}, {"citation", cl.citation}, {"holds", ok}});
        }
        put(o.dump() + "\n");
    } else {
        Table t{"", {"kind", "group", "set", "claim", "citation", "holds"}, {}};
        for (const auto& cl : c.claims) {
            bool ok = check_claim(c.set, cl);
            all = all && ok;
            t.rows.push_back({c.kind, c.set.group().name(), c.set.str(), cl.str(), cl.citation, ok ? "yes" : "no"});
        }
        put(emit(f, t));
    }
    return all ? kOk : kMismatch;
}

void emit_points(const Report& r, Format f, Table& acc) {
    for (const auto& p : r.points) {
        if (f == Format::Json) {
            put(point_to_json(r.id, p) + "\n");
            continue;
        }
        std::string params;
        for (const auto& [k, v] : p.params) params += (params.empty() ? "" : " ") + k + "=" + std::to_string(v);
        auto o = [](const std::optional<long long>& x) { return x ? std::to_string(*x) : std::string("none"); };
        acc.rows.push_back({r.id, p.group, params, o(p.predicted), o(p.computed), status_str(p.status),
                            p.witness ? p.witness->str() : "", p.note});
    }
}

Table points_table() { return {"", {"id", "group", "params", "predicted", "computed", "status", "witness", "note"}, {}}; }

struct VerifyArgs {
    std::string theorem;
    bool all = false;
    int max_n = 16;
};

int run_verify(const VerifyArgs& a, const Globals& g) {
    std::vector<std::string> ids;
    if (a.all) {
        for (const auto& t : theorem_registry())
            if (t.desk_checkable) ids.push_back(t.id);
    } else {
        if (a.theorem.empty()) throw Error("verify needs --theorem ID or --all");
        ids.push_back(find_theorem(a.theorem).id);
    }
    Format f = fmt(g, Format::Json);
    Table acc = points_table();
    bool refuted = false, skipped = false;
    for (const auto& id : ids) {
        Report r = verify_theorem(id, a.max_n, options(g));
        refuted = refuted || r.count(PointStatus::Refuted) > 0;
        skipped = skipped || r.count(PointStatus::Skipped) > 0;
        emit_points(r, f, acc);
    }
    if (f != Format::Json) put(emit(f, acc));
    return refuted ? kMismatch : skipped ? kBudget : kOk;
}

struct ConjectureArgs {
    std::string id, n, h, m, s, k;
    bool restricted = false, list = false;
};

int run_conjecture(const ConjectureArgs& a, const Globals& g) {
    Format f = fmt(g, Format::Json);
    if (a.list) {
        Table t{"", {"id", "statement"}, {}};
        for (const auto& c : conjecture_registry()) t.rows.push_back({c.id, c.statement});
        put(emit(f, t));
        return kOk;
    }
    if (a.id.empty()) throw Error("conjecture needs --id ID (or --list)");
    Grid grid;
    auto rng = [](const std::string& s) { return s.empty() ? std::vector<int>{} : parse_range(s); };
    grid.n = rng(a.n);
    grid.h = rng(a.h);
    grid.m = rng(a.m);
    grid.s = rng(a.s);
    grid.k = rng(a.k);
    grid.restricted = a.restricted;
    Report r = conjecture_check(a.id, grid, options(g));
    Table acc = points_table();
    emit_points(r, f, acc);
    if (f != Format::Json) put(emit(f, acc));
    // a refutation is a finding, not a failure of the run
    return kOk;
}

struct TableArgs {
    std::string name, range;
    bool list = false;
};

int run_table(const TableArgs& a, const Globals& g) {
    Format f = fmt(g, Format::Csv);
    if (a.list) {
        Table t{"", {"name", "fixture", "axis"}, {}};
        for (const auto& nt : named_tables()) t.rows.push_back({nt.id, nt.fixture, nt.axis});
        put(emit(f, t));
        return kOk;
    }
    const NamedTable& nt = find_table(a.name);
    auto range = a.range.empty() ? nt.default_range : parse_range(a.range);
    put(emit(f, nt.build(range, options(g))));
    return kOk;
}

struct FixturesArgs {
    std::vector<std::string> names;
    bool all = false;
    std::string dir = SUMSETS_FIXTURE_DIR;
};

int run_fixtures(const FixturesArgs& a, const Globals& g) {
    std::vector<const NamedTable*> ts;
    if (a.all || a.names.empty()) {
        for (const auto& t : named_tables()) ts.push_back(&t);
    } else {
        for (const auto& n : a.names) ts.push_back(&find_table(n));
    }
    std::vector<FixtureResult> rs;
    bool ok = true;
    for (const auto* t : ts) {
        rs.push_back(check_fixture(*t, a.dir, options(g)));
        ok = ok && rs.back().ok;
    }
    put(emit(fmt(g, Format::Text), fixture_table(rs)));
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sumsets in finite abelian groups: exact search, closed forms, tables"};
    app.set_help_flag("--help", "print help");
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "json|csv|text (default depends on subcommand)")
        ->envname("SUMSETS_FORMAT")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", g.threads, "worker threads, 0 = all cores")->envname("SUMSETS_THREADS");
    app.add_option("--budget", g.budget, "node budget per search")->envname("SUMSETS_BUDGET");
    app.add_option("--seed", g.seed, "reserved")->envname("SUMSETS_SEED");
    app.add_flag("--witnesses", g.witnesses, "include witness sets")->envname("SUMSETS_WITNESSES");
    app.add_flag("--timing", g.timing, "include elapsed time (output no longer reproducible)")->envname("SUMSETS_TIMING");

    SumsetArgs sa;
    auto* sumset_cmd = app.add_subcommand("sumset", "compute one sumset");
    sumset_cmd->add_option("--group", sa.group, "Zn, Zn^r, Zn1xZn2")->required();
    sumset_cmd->add_option("--set", sa.set, "indices 0,1,4 or tuples (0,1),(1,0)")->required();
    sumset_cmd->add_option("--lambda", sa.lambda, "n0|z|restricted|restricted-signed");
    sumset_cmd->add_option("--terms", sa.terms, "exact:h, upto:s, range1:t, N0, N");

    SideArgs sd;
    auto* side_cmd = app.add_subcommand("side", "side functions v, v_pm, u, uhat, ...");
    side_cmd->add_option("--fn", sd.fn, "v|vpm|u|uhat|vhat|vhatpm|upm|hcrit")->required();
    side_cmd->add_option("--n", sd.n)->required();
    side_cmd->add_option("--m", sd.m);
    side_cmd->add_option("--h", sd.h);
    side_cmd->add_option("--g", sd.gg);
    side_cmd->add_option("--s", sd.s);

    QuantityArgs qa;
    auto* q_cmd = app.add_subcommand("quantity", "exact value of nu, phi, sigma, rho, chi, tau, mu");
    q_cmd->add_option("--family", qa.family, "nu|phi|sigma|rho|chi|tau|mu")->required();
    q_cmd->add_option("--variant", qa.variant, "n0|z|restricted|restricted-signed");
    q_cmd->add_option("--group", qa.group)->required();
    q_cmd->add_option("--terms", qa.terms);
    q_cmd->add_option("--m", qa.m, "set size for nu and rho");
    q_cmd->add_option("--k", qa.k, "mu pair form");
    q_cmd->add_option("--l", qa.l, "mu pair form");
    q_cmd->add_flag("--generating", qa.generating, "chi over generating sets");
    q_cmd->add_flag("--exclude-zero", qa.exclude_zero, "chi over G minus 0");

    ConstructArgs ca;
    auto* c_cmd = app.add_subcommand("construct", "build a named set and check its claims");
    c_cmd->add_option("--kind", ca.kind)->required();
    c_cmd->add_option("--params", ca.params, "n=12,m=7,d=3");

    VerifyArgs va;
    auto* v_cmd = app.add_subcommand("verify", "check registry formulas against exhaustive search");
    v_cmd->add_option("--theorem", va.theorem);
    v_cmd->add_flag("--all", va.all);
    v_cmd->add_option("--max-n", va.max_n);

    ConjectureArgs cj;
    auto* cj_cmd = app.add_subcommand("conjecture", "sweep a conjecture over a grid");
    cj_cmd->add_option("--id", cj.id);
    cj_cmd->add_option("--n", cj.n, "range, e.g. 1..30");
    cj_cmd->add_option("--h", cj.h);
    cj_cmd->add_option("--m", cj.m);
    cj_cmd->add_option("--s", cj.s);
    cj_cmd->add_option("--k", cj.k);
    cj_cmd->add_flag("--restricted", cj.restricted);
    cj_cmd->add_flag("--list", cj.list);

    TableArgs ta;
    auto* t_cmd = app.add_subcommand("table", "regenerate a named table");
    t_cmd->add_option("--name", ta.name);
    t_cmd->add_option("--n", ta.range, "range over the table's axis");
    t_cmd->add_flag("--list", ta.list);

    FixturesArgs fa;
    auto* f_cmd = app.add_subcommand("fixtures", "compare named tables with committed fixtures");
    f_cmd->add_flag("--all", fa.all);
    f_cmd->add_option("--name", fa.names);
    f_cmd->add_option("--dir", fa.dir)->envname("SUMSETS_FIXTURES");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*sumset_cmd) return run_sumset(sa, g);
        if (*side_cmd) return run_side(sd, g);
        if (*q_cmd) return run_quantity(qa, g);
        if (*c_cmd) return run_construct(ca, g);
        if (*v_cmd) return run_verify(va, g);
        if (*cj_cmd) return run_conjecture(cj, g);
        if (*t_cmd) return run_table(ta, g);
        if (*f_cmd) return run_fixtures(fa, g);
    } catch (const BudgetExceeded& e) {
        std::fflush(stdout);
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        std::fflush(stdout);
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
