#include "semistar/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "semistar/errors.hpp"

#ifndef SEMISTAR_SCENARIO_DIR
#define SEMISTAR_SCENARIO_DIR "scenarios"
#endif

namespace semistar {

namespace {

const std::set<std::string>& query_kinds()
{
    static const std::set<std::string> kinds{
        "closure",  "closure_contains", "ideal_member", "axioms",        "quasi_prime",
        "compare",  "eab",              "invertible",   "almost_eab",    "principal",
        "star_overring", "monolocality", "member",      "sknc",          "dedekind_mertens",
        "content_mult",  "knc_principalization", "ring_closure"};
    return kinds;
}

/// Re-raises library errors at the position of the offending value.
template <class F>
auto at(const ConfigValue& v, const std::string& what, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(what + ": " + e.what(), v.pos);
    } catch (const Error& e) {
        throw ParseError(what + ": " + e.what(), v.pos);
    }
}

std::string who(const ConfigBlock& b) { return b.name.empty() ? b.kind : b.kind + " " + b.name; }

}  // namespace

StarOp ScenarioSpec::star(const std::string& name_or_term) const
{
    for (const auto& [n, op] : stars)
        if (n == name_or_term) return op;
    return parse_star(name_or_term, env);
}

ProbePool ScenarioSpec::pool(const std::string& name) const
{
    if (name == "default") return default_pool(env.domain, pool_bound);
    if (const ProbePool* p = env.find_pool(name)) return *p;
    throw InvalidInput("unknown pool '" + name + "'");
}

NamedOverring ScenarioSpec::overring(const std::string& name) const
{
    if (name == "D") return {"D", Overring::base(env.domain)};
    if (const NamedOverring* t = env.find_overring(name)) return *t;
    throw InvalidInput("unknown overring '" + name + "'");
}

ScenarioSpec build_scenario(ConfigDoc doc, bool require_queries)
{
    ScenarioSpec s;
    s.source = doc;
    const ConfigBlock* dom = nullptr;
    for (const auto& b : doc.blocks) {
        static const std::set<std::string> known{"scenario", "domain", "overring", "pool", "star", "certificate", "query"};
        if (!known.count(b.kind)) throw ParseError("unknown block kind '" + b.kind + "'", b.pos);
        if (b.kind == "scenario") {
            s.name = b.name;
            if (const auto* v = b.find("title")) s.title = v->scalar();
            if (const auto* v = b.find("seed")) s.seed = static_cast<std::uint64_t>(v->as_int());
        } else if (b.kind == "domain") {
            if (dom) throw ParseError("duplicate domain block", b.pos);
            dom = &b;
        }
    }
    if (!dom) throw ParseError("missing domain block", 0);

    const ConfigValue& fv = dom->require("field");
    Field const field = at(fv, "field", [&] { return parse_field(fv.scalar()); });
    std::vector<std::string> vars;
    const ConfigValue& vv = dom->require("vars");
    for (const auto& x : vv.list()) vars.push_back(x.scalar());
    std::optional<Ideal> prime;
    if (const auto* pv = dom->find("localize_at"))
        prime = at(*pv, "localize_at", [&] { return parse_ideal(pv->scalar(), make_ring(field, vars)); });
    s.env.domain = at(vv, "domain", [&] { return make_base_domain(field, vars, prime); });
    std::string zvar = "Z";
    if (const auto* zv = dom->find("function_var")) zvar = zv->scalar();
    s.fring = at(vv, "function_var", [&] { return make_function_ring(s.env.domain, zvar); });
    if (const auto* bv = dom->find("pool_bound")) {
        long const n = bv->as_int();
        if (n < 1 || n > 6) throw ParseError("pool_bound must lie in [1, 6]", bv->pos);
        s.pool_bound = static_cast<unsigned>(n);
    } else {
        s.pool_bound = at(vv, "SEMISTAR_POOL_BOUND", [] { return default_pool_bound(); });
    }
    const BaseDomain& D = s.env.domain;

    std::set<std::string> names{"D"};
    auto fresh = [&](const ConfigBlock& b) {
        if (b.name.empty()) throw ParseError(b.kind + " block needs a name", b.pos);
        if (!names.insert(b.name).second) throw ParseError("duplicate name '" + b.name + "'", b.pos);
    };

    for (const auto& b : doc.blocks) {
        if (b.kind != "overring") continue;
        fresh(b);
        if (const auto* v = b.find("adjoin")) {
            s.env.overrings.push_back({b.name, at(*v, who(b), [&] {
                                           Fraction const q = parse_fraction(v->scalar(), D.ring);
                                           return Overring::adjunction(D, q.num, q.den);
                                       })});
        } else if (const auto* v = b.find("localize_at")) {
            s.env.overrings.push_back(
                {b.name, at(*v, who(b), [&] { return Overring::localization(D, parse_ideal(v->scalar(), D.ring)); })});
        } else if (const auto* v = b.find("dvr_at")) {
            s.env.overrings.push_back(
                {b.name, at(*v, who(b), [&] { return Overring::dvr(D, parse_poly(v->scalar(), D.ring)); })});
        } else {
            throw ParseError(who(b) + ": expected adjoin, localize_at or dvr_at", b.pos);
        }
    }

    for (const auto& b : doc.blocks) {
        if (b.kind != "pool") continue;
        fresh(b);
        ProbePool p{b.name, {}};
        if (const auto* v = b.find("include_default"); v && v->as_bool()) p = default_pool(D, s.pool_bound);
        p.name = b.name;
        if (const auto* v = b.find("ideals"))
            for (const auto& x : v->list())
                p.ideals.push_back(at(x, who(b), [&] { return parse_frac_ideal(x.scalar(), D.ring); }));
        s.env.pools.push_back(with_unit_first(std::move(p), D.ring));
    }

    for (const auto& b : doc.blocks) {
        if (b.kind != "star") continue;
        fresh(b);
        const ConfigValue& t = b.require("term");
        s.stars.emplace_back(b.name, at(t, who(b), [&] { return parse_star(t.scalar(), s.env); }));
    }

    for (const auto& b : doc.blocks) {
        if (b.kind != "certificate") continue;
        if (const auto* v = b.find("na_equals_dz")) s.certs.na_equals_dz = v->as_bool();
        if (const auto* v = b.find("kn_equals_dz")) s.certs.kn_equals_dz = v->as_bool();
        if (const auto* v = b.find("lmin")) {
            std::vector<NamedOverring> list;
            for (const auto& x : v->list()) list.push_back(at(x, "lmin", [&] { return s.overring(x.scalar()); }));
            s.certs.lmin = std::move(list);
        }
        if (const auto* v = b.find("note")) s.cert_notes.push_back(v->scalar());
    }

    for (const auto& b : doc.blocks) {
        if (b.kind != "query") continue;
        fresh(b);
        QuerySpec q;
        q.name = b.name;
        q.block = b;
        const ConfigValue& k = b.require("kind");
        q.kind = k.scalar();
        if (!query_kinds().count(q.kind)) throw ParseError("unknown query kind '" + q.kind + "'", k.pos);
        q.expected = b.require("expect").scalar();
        const ConfigValue& pv = b.require("provenance");
        q.provenance = pv.scalar();
        if (q.provenance.rfind("[PAPER", 0) != 0 && q.provenance.rfind("[DERIVED", 0) != 0 &&
            q.provenance.rfind("[TRIVIAL", 0) != 0)
            throw ParseError("provenance must start with [PAPER], [DERIVED] or [TRIVIAL]", pv.pos);
        if (const auto* v = b.find("quote")) q.quote = v->scalar();
        if (q.provenance.rfind("[PAPER", 0) == 0 && q.quote.empty())
            throw ParseError(who(b) + ": a [PAPER] entry needs a quote", b.pos);
        for (const char* key : {"star", "star1", "star2"})
            if (const auto* v = b.find(key)) at(*v, who(b), [&] { return s.star(v->scalar()); });
        if (const auto* v = b.find("pool")) at(*v, who(b), [&] { return s.pool(v->scalar()); });
        s.queries.push_back(std::move(q));
    }
    if (require_queries && s.queries.empty()) throw ParseError("scenario has no queries", 0);
    return s;
}

ScenarioSpec parse_config(std::string_view text) { return build_scenario(parse_config_text(text)); }

namespace {

struct Runner {
    const ScenarioSpec& s;
    const QuerySpec& q;
    std::uint64_t seed;
    std::vector<std::string>& assumptions;
    QueryOutcome out;

    const BaseDomain& D() const { return s.domain(); }

    std::string arg(const char* key) const { return q.block.require(key).scalar(); }
    std::string arg_or(const char* key, const std::string& dflt) const
    {
        const auto* v = q.block.find(key);
        return v ? v->scalar() : dflt;
    }
    std::vector<std::string> args(const char* key) const
    {
        std::vector<std::string> r;
        if (const auto* v = q.block.find(key))
            for (const auto& x : v->list()) r.push_back(x.scalar());
        return r;
    }

    FracIdeal ideal(const char* key = "ideal") const { return parse_frac_ideal(arg(key), D().ring); }
    Fraction element(const char* key = "element") const { return parse_fraction(arg(key), D().ring); }
    StarOp star(const char* key = "star") const { return s.star(arg(key)); }
    ProbePool pool() const { return s.pool(arg_or("pool", "default")); }
    std::vector<NamedOverring> overrings(const char* key = "list") const
    {
        std::vector<NamedOverring> r;
        for (const auto& n : args(key)) r.push_back(s.overring(n));
        return r;
    }

    void assume(std::string a) { assumptions.push_back(std::move(a)); }

    void verdict(const Verdict& v)
    {
        out.actual = status_name(v.status);
        out.detail = v.detail;
        std::string w;
        for (const auto& [k, F] : v.data) w += (w.empty() ? "" : "; ") + k + " = " + F.to_string();
        out.witness = w;
    }

    static std::string boolean(bool b) { return b ? "true" : "false"; }

    void run();
};

std::vector<Fraction> default_scalars(const BaseDomain& D)
{
    std::vector<Fraction> r;
    for (const char* s : {"2", "X", "1/Y", "X/Y"}) {
        try {
            r.push_back(parse_fraction(s, D.ring));
        } catch (const Error&) {
        }
    }
    return r;
}

Poly random_poly(const RingPtr& R, std::mt19937_64& rng, std::size_t z, unsigned zdeg)
{
    std::uniform_int_distribution<int> c(-6, 6), e(0, 2), ez(0, static_cast<int>(zdeg)), nt(1, 4);
    Poly out(R);
    int const terms = nt(rng);
    for (int i = 0; i < terms; ++i) {
        Monomial m(R->nvars());
        for (std::size_t v = 0; v < R->nvars(); ++v) m[v] = static_cast<unsigned>(v == z ? ez(rng) : e(rng));
        out = out + Poly::monomial(R, m) * Poly::constant(R, c(rng));
    }
    return out;
}

void Runner::run()
{
    const std::string& k = q.kind;
    out.actual.clear();
    if (k == "closure") {
        IdealHandle const h = apply_star(star(), ideal());
        if (h.exact()) {
            out.actual = h.ideal().to_string();
            out.pass = frac_equal(h.ideal(), parse_frac_ideal(q.expected, D().ring), D().loc());
        } else {
            out.actual = exactness_name(h.exactness());
        }
        return;
    }
    if (k == "closure_contains") {
        IdealHandle const h = apply_star(star(), ideal());
        out.actual = boolean(h.contains(element()));
        if (h.exactness() == Exactness::Approximate && out.actual == "false") out.actual = "not shown";
        return;
    }
    if (k == "ideal_member") {
        out.actual = boolean(frac_member(element(), ideal(), D().loc()));
        return;
    }
    if (k == "axioms") {
        ProbePool const p = pool();
        verdict(check_axioms(star(), p.ideals, default_scalars(D())));
        assume("axioms up to pool " + p.name);
        return;
    }
    if (k == "quasi_prime") {
        out.actual = boolean(quasi_prime_check(parse_ideal(arg("prime"), D().ring), star()));
        return;
    }
    if (k == "compare") {
        ProbePool const p = pool();
        StarComparison const c = compare_stars(star("star1"), star("star2"), p.ideals);
        out.actual = relation_name(c.relation);
        out.detail = c.detail;
        if (c.op2_larger)
            out.witness += "star2 larger on " + c.op2_larger->probe.to_string() + ": " + c.op2_larger->element.to_string();
        if (c.op1_larger)
            out.witness += std::string(out.witness.empty() ? "" : "; ") + "star1 larger on " +
                           c.op1_larger->probe.to_string() + ": " + c.op1_larger->element.to_string();
        assume("comparison up to pool " + p.name);
        return;
    }
    if (k == "eab") {
        ProbePool const p = pool();
        StarOp const op = star();
        Verdict const v = is_eab_probe(ideal(), op, p);
        verdict(v);
        if (v.is_holds()) assume("eab up to pool " + p.name);
        if (v.is_fails()) {
            bool const ok = v.data.size() == 3 &&
                            replay_eab_counterexample(v.data[0].second, v.data[1].second, v.data[2].second, op);
            if (!ok) throw Error("e.a.b. counterexample does not replay");
            out.detail += "; counterexample replays";
        }
        return;
    }
    if (k == "invertible") {
        verdict(is_star_invertible(ideal(), star()));
        return;
    }
    if (k == "almost_eab") {
        Verdict const v = is_almost_eab(ideal(), overrings());
        verdict(v);
        if (out.witness.empty()) out.witness = v.detail;
        assume("almost e.a.b. " + v.scope);
        return;
    }
    if (k == "principal") {
        NamedOverring const T = s.overring(arg("overring"));
        FracIdeal const F = ideal();
        Principality const p = principality_in_overring(F, T.ring);
        if (p.generator) {
            out.actual = p.generator->to_string();
            if (q.expected != "none") {
                FracIdeal const G = FracIdeal::principal(parse_fraction(q.expected, D().ring));
                out.pass = extension_contains(T.ring, F, G) && extension_contains(T.ring, G, F);
            }
        } else {
            out.actual = p.decisive ? "none" : "undecided";
        }
        return;
    }
    if (k == "star_overring") {
        NamedOverring const T = s.overring(arg("overring"));
        ProbePool const p = pool();
        verdict(is_star_overring_probe(T.ring, star(), p.ideals));
        return;
    }
    if (k == "monolocality") {
        NamedOverring const L = s.overring(arg("overring"));
        std::vector<FracIdeal> samples;
        for (const auto& x : args("samples")) samples.push_back(parse_frac_ideal(x, D().ring));
        std::vector<Fraction> taus;
        for (const auto& x : args("taus")) taus.push_back(parse_fraction(x, D().ring));
        ProbePool const p = pool();
        verdict(monolocality_check(L.ring, star(), samples, taus, p.ideals));
        return;
    }
    if (k == "member") {
        const FunctionRing& A = s.fring;
        std::string const ring = arg("ring");
        std::vector<Poly> mults;
        for (const auto& x : args("multipliers")) mults.push_back(A.poly(x));
        Membership m;
        if (ring == "na") {
            m = na_member_search(A, A.element(arg("z")), star(), mults, s.certs);
        } else if (ring == "kr") {
            m = kr_member_search(A, A.poly(arg("f")), A.poly(arg("g")), star(), mults);
        } else if (ring == "knc") {
            ProbePool const p = pool();
            m = knc_member_search(A, A.element(arg("z")), star(), p, mults, s.certs);
        } else if (ring == "skn") {
            m = skn_member_vs_list(A, A.element(arg("z")), overrings());
            assume("skn " + m.scope);
        } else {
            throw InvalidInput("ring must be na, kr, knc or skn");
        }
        out.actual = membership_name(m.status);
        out.witness = m.witness;
        out.detail = m.scope;
        for (const auto& a : m.assumptions) assume(a);
        return;
    }
    if (k == "sknc") {
        const FunctionRing& A = s.fring;
        Verdict const v = sknc_witness_check(A, A.element(arg("z")), A.poly(arg("g")), star(), overrings());
        verdict(v);
        assume("almost e.a.b. " + v.scope);
        return;
    }
    if (k == "dedekind_mertens") {
        long const n = std::stol(arg_or("count", "200"));
        unsigned const zdeg = static_cast<unsigned>(std::stoul(arg_or("z_degree", "3")));
        FunctionRing A = s.fring;
        if (const auto* fv = q.block.find("field"))
            A = make_function_ring(make_base_domain(parse_field(fv->scalar()), D().ring->vars()),
                                   A.ring->vars()[A.z]);
        std::mt19937_64 rng(seed);
        long passed = 0, tried = 0;
        std::string first_failure;
        while (tried < n) {
            Poly const f = random_poly(A.ring, rng, A.z, zdeg), g = random_poly(A.ring, rng, A.z, zdeg);
            if (f.is_zero() || g.is_zero()) continue;
            ++tried;
            if (dedekind_mertens_check(A, f, g)) {
                ++passed;
            } else if (first_failure.empty()) {
                first_failure = f.to_string() + " ; " + g.to_string();
            }
        }
        out.actual = boolean(passed == tried);
        out.detail = std::to_string(passed) + "/" + std::to_string(tried) + " pairs over " +
                     A.base.ring->field().name();
        out.witness = first_failure;
        return;
    }
    if (k == "content_mult") {
        const FunctionRing& A = s.fring;
        verdict(content_star_multiplicativity(A, A.poly(arg("g")), A.poly(arg("h")), star(), pool()));
        return;
    }
    if (k == "knc_principalization") {
        const FunctionRing& A = s.fring;
        StarOp const op = star();
        Ideal const J = parse_ideal(arg("ideal"), D().ring);
        std::vector<Poly> alphas;
        for (const auto& x : args("alphas")) alphas.push_back(parse_poly(x, D().ring));
        if (const auto* v = q.block.find("alphas_from_closure"); v && v->as_bool()) {
            IdealHandle const h = apply_star(op, FracIdeal(J));
            for (const auto& g : h.ideal().generators())
                if (g.den.is_constant()) alphas.push_back(*divide_exact(g.num, g.den));
        }
        ProbePool const p = pool();
        Verdict const v = knc_principalization_check(A, J, op, alphas, p);
        verdict(v);
        if (v.is_holds()) assume(v.scope);
        return;
    }
    if (k == "ring_closure") {
        const FunctionRing& A = s.fring;
        std::vector<std::pair<Poly, Poly>> members;
        for (const auto& x : args("members")) {
            Fraction const z = A.element(x);
            members.emplace_back(z.num, z.den);
        }
        ProbePool const p = pool();
        Verdict const v = ring_closure_fuzz(A, members, star(), p);
        verdict(v);
        if (v.is_holds()) assume(v.scope);
        return;
    }
    throw InvalidInput("unknown query kind " + k);
}

}  // namespace

int Report::exit_code() const
{
    bool mismatch = false;
    for (const auto& o : outcomes) {
        if (o.error) return 2;
        if (!o.pass) mismatch = true;
    }
    return mismatch ? 1 : 0;
}

Report run_scenario(const ScenarioSpec& spec, std::optional<std::uint64_t> seed)
{
    auto const t0 = std::chrono::steady_clock::now();
    Report r;
    r.scenario = spec.name;
    r.title = spec.title;
    r.seed = seed.value_or(spec.seed);
    r.pools.push_back("default-" + std::to_string(spec.pool_bound) + ": " +
                      std::to_string(spec.pool("default").ideals.size()));
    for (const auto& p : spec.env.pools) r.pools.push_back(p.name + ": " + std::to_string(p.ideals.size()));

    std::vector<std::string> assumptions = spec.cert_notes;
    for (const auto& q : spec.queries) {
        Runner run{spec, q, r.seed, assumptions, {}};
        run.out.name = q.name;
        run.out.kind = q.kind;
        run.out.expected = q.expected;
        run.out.provenance = q.provenance;
        run.out.quote = q.quote;
        try {
            run.run();
            // closure and principal queries compare algebraically
            if (q.kind != "closure" && q.kind != "principal") run.out.pass = run.out.actual == q.expected;
            if (q.kind == "closure" && !run.out.pass) run.out.pass = run.out.actual == q.expected;
            if (q.kind == "principal" && q.expected == "none") run.out.pass = run.out.actual == "none";
        } catch (const std::exception& e) {
            run.out.error = true;
            run.out.pass = false;
            run.out.actual = "error";
            run.out.detail = e.what();
        }
        r.outcomes.push_back(std::move(run.out));
    }
    std::sort(assumptions.begin(), assumptions.end());
    assumptions.erase(std::unique(assumptions.begin(), assumptions.end()), assumptions.end());
    r.assumptions = std::move(assumptions);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string emit_report(const Report& r, ReportFormat format)
{
    std::size_t passed = 0, errors = 0;
    for (const auto& o : r.outcomes) {
        passed += o.pass;
        errors += o.error;
    }
    std::size_t const failed = r.outcomes.size() - passed - errors;

    if (format == ReportFormat::Json) {
        nlohmann::ordered_json j;
        j["scenario"] = r.scenario;
        j["title"] = r.title;
        j["seed"] = r.seed;
        j["pools"] = r.pools;
        j["assumptions"] = r.assumptions;
        nlohmann::ordered_json qs = nlohmann::ordered_json::array();
        for (const auto& o : r.outcomes) {
            nlohmann::ordered_json x;
            x["name"] = o.name;
            x["kind"] = o.kind;
            x["status"] = o.error ? "ERROR" : o.pass ? "PASS" : "FAIL";
            x["expected"] = o.expected;
            x["actual"] = o.actual;
            x["witness"] = o.witness;
            x["detail"] = o.detail;
            x["provenance"] = o.provenance;
            x["quote"] = o.quote;
            qs.push_back(std::move(x));
        }
        j["queries"] = std::move(qs);
        j["summary"] = {{"total", r.outcomes.size()}, {"passed", passed}, {"failed", failed}, {"errors", errors}};
        j["exit_code"] = r.exit_code();
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "scenario " << r.scenario;
    if (!r.title.empty()) os << ": " << r.title;
    os << "\nseed " << r.seed << "; pools:";
    for (const auto& p : r.pools) os << " [" << p << "]";
    os << "\n\n";
    std::size_t wname = 4;
    for (const auto& o : r.outcomes) wname = std::max(wname, o.name.size());
    for (const auto& o : r.outcomes) {
        os << (o.error ? "ERROR " : o.pass ? "PASS  " : "FAIL  ") << o.name << std::string(wname - o.name.size() + 2, ' ')
           << o.kind << ": expected " << o.expected << ", got " << o.actual << "\n";
        if (!o.witness.empty()) os << "      witness: " << o.witness << "\n";
        if (!o.detail.empty() && (!o.pass || o.error)) os << "      detail: " << o.detail << "\n";
    }
    os << "\nassumptions:\n";
    if (r.assumptions.empty()) os << "  (none)\n";
    for (const auto& a : r.assumptions) os << "  - " << a << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", r.wall_ms);
    os << "\n" << r.outcomes.size() << " queries: " << passed << " passed, " << failed << " failed, " << errors
       << " errors; wall time " << buf << " ms\n";
    return os.str();
}

std::filesystem::path scenario_dir()
{
    if (const char* env = std::getenv("SEMISTAR_SCENARIO_DIR"); env && *env) return env;
    return SEMISTAR_SCENARIO_DIR;
}

std::filesystem::path resolve_scenario(const std::string& name_or_path)
{
    std::filesystem::path const direct(name_or_path);
    if (std::filesystem::is_regular_file(direct)) return direct;
    std::filesystem::path const bundled = scenario_dir() / (name_or_path + ".cfg");
    if (std::filesystem::is_regular_file(bundled)) return bundled;
    throw InvalidInput("no scenario named '" + name_or_path + "' in " + scenario_dir().string());
}

std::vector<std::string> list_scenarios()
{
    std::vector<std::string> out;
    std::error_code ec;
    for (const auto& e : std::filesystem::directory_iterator(scenario_dir(), ec))
        if (e.is_regular_file() && e.path().extension() == ".cfg") out.push_back(e.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

ScenarioSpec load_scenario(const std::string& name_or_path)
{
    std::filesystem::path const p = resolve_scenario(name_or_path);
    std::ifstream in(p, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    ScenarioSpec s = parse_config(ss.str());
    if (s.name.empty()) s.name = p.stem().string();
    return s;
}

}  // namespace semistar
