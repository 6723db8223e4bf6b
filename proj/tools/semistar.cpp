// semistar: command line front end for the semistar library.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "semistar/errors.hpp"
#include "semistar/scenario.hpp"

using namespace semistar;
using json = nlohmann::ordered_json;

namespace {

constexpr int kHolds = 0, kFails = 1, kEngine = 2, kParse = 3;

struct Context {
    std::string scenario;
    std::string field = "Q";
    std::vector<std::string> vars{"X", "Y"};
    std::string localize = "(X, Y)";
    std::vector<std::string> overrings;  ///< NAME:KIND=VALUE
    std::string format = "text";
    std::uint64_t seed = 1;
    bool seed_given = false;

    ScenarioSpec build() const
    {
        if (!scenario.empty()) return load_scenario(scenario);
        ConfigDoc doc;
        ConfigBlock dom{"domain", "", {}, 0};
        auto str = [](std::string t) { return ConfigValue{ConfigValue::Kind::String, std::move(t), {}, 0}; };
        dom.entries.push_back({"field", str(field), 0});
        ConfigValue vs{ConfigValue::Kind::List, "", {}, 0};
        for (const auto& v : vars) vs.items.push_back({ConfigValue::Kind::Atom, v, {}, 0});
        dom.entries.push_back({"vars", vs, 0});
        if (localize != "none") dom.entries.push_back({"localize_at", str(localize), 0});
        doc.blocks.push_back(dom);
        for (const auto& o : overrings) {
            auto colon = o.find(':'), eq = o.find('=');
            if (colon == std::string::npos || eq == std::string::npos || eq < colon)
                throw InvalidInput("overring must look like NAME:adjoin=X/Y, NAME:localize_at=(X) or NAME:dvr_at=X");
            ConfigBlock b{"overring", o.substr(0, colon), {}, 0};
            b.entries.push_back({o.substr(colon + 1, eq - colon - 1), str(o.substr(eq + 1)), 0});
            doc.blocks.push_back(b);
        }
        return build_scenario(doc, false);
    }

    bool as_json() const { return format == "json"; }
};

void print(const Context& c, const json& j, const std::string& text)
{
    if (c.as_json())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int verdict_code(const Verdict& v) { return v.is_holds() ? kHolds : v.is_fails() ? kFails : kEngine; }

json verdict_json(const Verdict& v)
{
    json j;
    j["verdict"] = status_name(v.status);
    j["scope"] = v.scope;
    j["detail"] = v.detail;
    json data = json::object();
    for (const auto& [k, F] : v.data) data[k] = F.to_string();
    j["data"] = data;
    return j;
}

std::string verdict_text(const Verdict& v)
{
    std::string s = std::string(status_name(v.status));
    if (!v.scope.empty()) s += " (" + v.scope + ")";
    s += "\n";
    if (!v.detail.empty()) s += "  " + v.detail + "\n";
    for (const auto& [k, F] : v.data) s += "  " + k + " = " + F.to_string() + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Semistar operations, e.a.b. probes and function ring membership"};
    app.require_subcommand(1);
    Context ctx;

    auto context_opts = [&](CLI::App* sub) {
        sub->add_option("--scenario", ctx.scenario, "take domain, overrings, stars and certificates from a scenario");
        sub->add_option("--field", ctx.field, "Q or Fp");
        sub->add_option("--vars", ctx.vars, "base variables")->delimiter(',');
        sub->add_option("--localize", ctx.localize, "prime to localize at, or 'none'");
        sub->add_option("--overring", ctx.overrings, "NAME:adjoin=a/b | NAME:localize_at=(..) | NAME:dvr_at=p");
        sub->add_option("--format", ctx.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    // ideal
    auto* ideal_cmd = app.add_subcommand("ideal", "ideal arithmetic in the base domain");
    std::string ideal_op, ideal_a, ideal_b, element;
    ideal_cmd->add_option("op", ideal_op, "gb | member | sum | product | intersect | colon | equal | closure")
        ->required()
        ->check(CLI::IsMember({"gb", "member", "sum", "product", "intersect", "colon", "equal", "closure"}));
    ideal_cmd->add_option("ideal", ideal_a, "first ideal, e.g. \"(X^2 - Y, X*Y)\"")->required();
    ideal_cmd->add_option("other", ideal_b, "second ideal or element");
    context_opts(ideal_cmd);

    // star
    auto* star_cmd = app.add_subcommand("star", "semistar closures");
    star_cmd->require_subcommand(1);
    std::string star1, star2, pool_name = "default";
    auto* apply_cmd = star_cmd->add_subcommand("apply", "closure of an ideal");
    apply_cmd->add_option("--star", star1, "star term or scenario name")->required();
    apply_cmd->add_option("--ideal", ideal_a, "fractional ideal")->required();
    context_opts(apply_cmd);
    auto* compare_cmd = star_cmd->add_subcommand("compare", "pointwise comparison on a probe pool");
    compare_cmd->add_option("--star1", star1)->required();
    compare_cmd->add_option("--star2", star2)->required();
    compare_cmd->add_option("--pool", pool_name);
    context_opts(compare_cmd);
    auto* axioms_cmd = star_cmd->add_subcommand("axioms", "check the semistar axioms on a probe pool");
    axioms_cmd->add_option("--star", star1)->required();
    axioms_cmd->add_option("--pool", pool_name);
    context_opts(axioms_cmd);

    // eab
    auto* eab_cmd = app.add_subcommand("eab", "e.a.b. probe (exit 0 Holds, 1 Fails, 2 Unknown)");
    bool invertible = false;
    eab_cmd->add_option("--ideal", ideal_a)->required();
    eab_cmd->add_option("--star", star1)->required();
    eab_cmd->add_option("--pool", pool_name);
    eab_cmd->add_flag("--invertible", invertible, "test star-invertibility instead");
    context_opts(eab_cmd);

    // member
    auto* member_cmd = app.add_subcommand("member", "function ring membership");
    std::string ring, zt, ft, gt;
    std::vector<std::string> list, multipliers;
    member_cmd->add_option("--ring", ring)->required()->check(CLI::IsMember({"na", "kr", "knc", "skn"}));
    member_cmd->add_option("--z", zt, "rational function in the base variables and Z");
    member_cmd->add_option("--f", ft, "numerator (kr)");
    member_cmd->add_option("--g", gt, "denominator (kr)");
    member_cmd->add_option("--star", star1);
    member_cmd->add_option("--pool", pool_name);
    member_cmd->add_option("--list", list, "overring names (skn)")->delimiter(',');
    member_cmd->add_option("--multipliers", multipliers, "multiplier or h pool")->delimiter(',');
    context_opts(member_cmd);

    // scenario
    auto* scen_cmd = app.add_subcommand("scenario", "bundled scenarios");
    scen_cmd->require_subcommand(1);
    auto* run_cmd = scen_cmd->add_subcommand("run", "run a scenario and compare with its expected table");
    std::string scen_name;
    run_cmd->add_option("name", scen_name, "scenario name or path")->required();
    run_cmd->add_option("--seed", ctx.seed, "seed for randomized queries")->each([&](const std::string&) {
        ctx.seed_given = true;
    });
    run_cmd->add_option("--format", ctx.format)->check(CLI::IsMember({"text", "json"}));
    auto* list_cmd = scen_cmd->add_subcommand("list", "list bundled scenarios");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list_cmd) {
            for (const auto& n : list_scenarios()) std::cout << n << "\n";
            return 0;
        }
        if (*run_cmd) {
            ScenarioSpec const spec = load_scenario(scen_name);
            Report const r = run_scenario(spec, ctx.seed_given ? std::optional<std::uint64_t>(ctx.seed) : std::nullopt);
            std::cout << emit_report(r, ctx.as_json() ? ReportFormat::Json : ReportFormat::Text);
            return r.exit_code();
        }

        ScenarioSpec const s = ctx.build();
        const BaseDomain& D = s.domain();

        if (*ideal_cmd) {
            Ideal const I = parse_ideal(ideal_a, D.ring);
            auto other = [&] {
                if (ideal_b.empty()) throw InvalidInput("this operation needs a second argument");
                return parse_ideal(ideal_b, D.ring);
            };
            json j;
            j["op"] = ideal_op;
            std::string text;
            if (ideal_op == "gb") {
                json gens = json::array();
                for (const auto& g : groebner(I, MonomialOrder::grevlex())) {
                    gens.push_back(g.to_string());
                    text += g.to_string() + "\n";
                }
                j["basis"] = gens;
            } else if (ideal_op == "member" || ideal_op == "equal") {
                bool r;
                if (ideal_op == "member") {
                    if (ideal_b.empty()) throw InvalidInput("member needs an element");
                    r = D.loc().member(parse_poly(ideal_b, D.ring), I);
                } else {
                    r = D.loc().equal(I, other());
                }
                j["result"] = r;
                text = r ? "true\n" : "false\n";
            } else {
                Ideal r = I;
                if (ideal_op == "sum") r = ideal_sum(I, other());
                if (ideal_op == "product") r = ideal_product(I, other());
                if (ideal_op == "intersect") r = ideal_intersect(I, other());
                if (ideal_op == "colon") r = ideal_colon(I, other());
                if (ideal_op == "closure") r = monomial_integral_closure(I);
                j["result"] = r.to_string();
                text = r.to_string() + "\n";
            }
            print(ctx, j, text);
            return 0;
        }

        if (*apply_cmd) {
            StarOp const op = s.star(star1);
            IdealHandle const h = apply_star(op, parse_frac_ideal(ideal_a, D.ring));
            json j{{"star", op.to_string()}, {"input", h.input().to_string()}, {"exactness", exactness_name(h.exactness())}};
            std::string text = std::string(exactness_name(h.exactness()));
            if (h.exact()) {
                j["result"] = h.ideal().to_string();
                text = h.ideal().to_string();
            }
            print(ctx, j, text + "\n");
            return 0;
        }
        if (*compare_cmd) {
            ProbePool const p = s.pool(pool_name);
            StarComparison const c = compare_stars(s.star(star1), s.star(star2), p.ideals);
            json j{{"relation", relation_name(c.relation)}, {"pool", p.name}, {"detail", c.detail}};
            std::string text = std::string(relation_name(c.relation)) + " (up to pool " + p.name + ")\n";
            if (c.op2_larger) {
                j["star2_larger"] = {{"probe", c.op2_larger->probe.to_string()}, {"element", c.op2_larger->element.to_string()}};
                text += "  star2 larger on " + c.op2_larger->probe.to_string() + ": " + c.op2_larger->element.to_string() + "\n";
            }
            if (c.op1_larger) {
                j["star1_larger"] = {{"probe", c.op1_larger->probe.to_string()}, {"element", c.op1_larger->element.to_string()}};
                text += "  star1 larger on " + c.op1_larger->probe.to_string() + ": " + c.op1_larger->element.to_string() + "\n";
            }
            print(ctx, j, text);
            return c.relation == StarComparison::Relation::UNKNOWN ? kEngine : 0;
        }
        if (*axioms_cmd) {
            ProbePool const p = s.pool(pool_name);
            std::vector<Fraction> scalars;
            for (const char* t : {"2", "X", "1/X", "X/Y"}) {
                try {
                    scalars.push_back(parse_fraction(t, D.ring));
                } catch (const Error&) {
                }
            }
            Verdict const v = check_axioms(s.star(star1), p.ideals, scalars);
            print(ctx, verdict_json(v), verdict_text(v));
            return verdict_code(v);
        }
        if (*eab_cmd) {
            FracIdeal const F = parse_frac_ideal(ideal_a, D.ring);
            StarOp const op = s.star(star1);
            Verdict const v = invertible ? is_star_invertible(F, op) : is_eab_probe(F, op, s.pool(pool_name));
            json j = verdict_json(v);
            j["pool"] = invertible ? "" : s.pool(pool_name).name;
            print(ctx, j, verdict_text(v));
            return verdict_code(v);
        }
        if (*member_cmd) {
            const FunctionRing& A = s.fring;
            std::vector<Poly> mults;
            for (const auto& m : multipliers) mults.push_back(A.poly(m));
            auto need = [](const std::string& v, const char* what) {
                if (v.empty()) throw InvalidInput(std::string("missing --") + what);
                return v;
            };
            Membership m;
            std::string pool_used;
            if (ring == "na") {
                m = na_member_search(A, A.element(need(zt, "z")), s.star(need(star1, "star")), mults, s.certs);
            } else if (ring == "kr") {
                m = kr_member_search(A, A.poly(need(ft, "f")), A.poly(need(gt, "g")), s.star(need(star1, "star")), mults);
            } else if (ring == "knc") {
                ProbePool const p = s.pool(pool_name);
                pool_used = p.name;
                m = knc_member_search(A, A.element(need(zt, "z")), s.star(need(star1, "star")), p, mults, s.certs);
            } else {
                std::vector<NamedOverring> L;
                for (const auto& n : list) L.push_back(s.overring(n));
                m = skn_member_vs_list(A, A.element(need(zt, "z")), L);
            }
            json j{{"ring", ring}, {"verdict", membership_name(m.status)}, {"witness", m.witness},
                   {"assumptions", m.assumptions}, {"pool", pool_used}, {"scope", m.scope}};
            std::string text = std::string(membership_name(m.status)) + "\n";
            if (!m.witness.empty()) text += "  witness: " + m.witness + "\n";
            if (!m.scope.empty()) text += "  scope: " + m.scope + "\n";
            for (const auto& a : m.assumptions) text += "  assumes: " + a + "\n";
            print(ctx, j, text);
            return m.status == Membership::Status::Member ? 0 : m.status == Membership::Status::NonMember ? 1 : kEngine;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kEngine;
    }
    return 0;
}
