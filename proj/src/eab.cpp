#include "semistar/eab.hpp"

#include "semistar/errors.hpp"
#include "semistar/poly_gcd.hpp"

namespace semistar {

std::vector<FracIdeal> eab_probe_sequence(const FracIdeal& F, const ProbePool& pool)
{
    const RingPtr& R = F.ring();
    Localization const global{R, std::nullopt};
    std::vector<Poly> squares;
    for (const auto& g : F.num().generators()) squares.push_back(g * g);
    std::vector<FracIdeal> seq{FracIdeal::unit(R), F, FracIdeal(Ideal(R, std::move(squares)), F.den() * F.den())};
    for (const auto& H : pool.ideals) seq.push_back(FracIdeal(H.num().embed(R), H.den().embed(R)));
    std::vector<FracIdeal> out;
    for (auto& H : seq) {
        bool dup = false;
        for (const auto& K : out)
            if (frac_equal(H, K, global)) dup = true;
        if (!dup) out.push_back(std::move(H));
    }
    return out;
}

Verdict is_eab_probe(const FracIdeal& F, const StarOp& op, const ProbePool& pool)
{
    const Localization L = op.domain().loc();
    std::string const scope = "up to pool " + pool.name;
    for (const auto& H : eab_probe_sequence(F, pool)) {
        IdealHandle const FH = apply_star(op, frac_product(F, H));
        IdealHandle const Hs = apply_star(op, H);
        if (!FH.exact() || !Hs.exact())
            return Verdict::unknown(scope, op.to_string() + " has no generators on the probe " + H.to_string());
        FracIdeal const colon = frac_colon(FH.ideal(), F);
        for (const auto& x : colon.generators()) {
            if (frac_member(x, Hs.ideal(), L)) continue;
            auto [n, d] = reduce_rational(x.num, x.den);
            Fraction const xr(n, d);
            FracIdeal const G = FracIdeal::principal(xr);
            return Verdict::fails("(FG)^* ⊆ (FH)^* but G^* ⊄ H^*: " + xr.to_string() + " ∈ ((FH)^* : F) \\ H^*",
                                  {{"F", F}, {"G", G}, {"H", H}});
        }
    }
    return Verdict::holds(scope);
}

bool replay_eab_counterexample(const FracIdeal& F, const FracIdeal& G, const FracIdeal& H, const StarOp& op)
{
    const Localization L = op.domain().loc();
    FracIdeal const FG = apply_star(op, frac_product(F, G)).ideal();
    FracIdeal const FH = apply_star(op, frac_product(F, H)).ideal();
    FracIdeal const Gs = apply_star(op, G).ideal();
    FracIdeal const Hs = apply_star(op, H).ideal();
    return frac_contains(FH, FG, L) && !frac_contains(Hs, Gs, L);
}

Verdict is_star_invertible(const FracIdeal& F, const StarOp& op)
{
    const BaseDomain& D = op.domain();
    FracIdeal const prod = frac_product(F, frac_inverse(F));
    IdealHandle const lhs = apply_star(op, prod);
    IdealHandle const rhs = apply_star(op, FracIdeal::unit(D.ring));
    if (!lhs.exact() || !rhs.exact())
        return Verdict::unknown("exact", op.to_string() + " has no generators on F·F^-1 or D");
    if (frac_equal(lhs.ideal(), rhs.ideal(), D.loc())) return Verdict::holds("exact", "(F F^-1)^* = " + rhs.to_string());
    return Verdict::fails("(F F^-1)^* = " + lhs.to_string() + " != D^* = " + rhs.to_string(),
                          {{"F", F}, {"(F F^-1)^*", lhs.ideal()}});
}

Verdict is_almost_eab(const FracIdeal& F, const std::vector<NamedOverring>& overrings)
{
    if (overrings.empty()) throw InvalidInput("is_almost_eab needs a nonempty overring list");
    std::string scope = "against [";
    for (std::size_t i = 0; i < overrings.size(); ++i) scope += (i ? ", " : "") + overrings[i].name;
    scope += "]";
    std::string witnesses;
    for (const auto& T : overrings) {
        Principality const p = principality_in_overring(F, T.ring);
        if (!p.generator) {
            if (!p.decisive) return Verdict::unknown(scope, "no single-generator witness in " + T.name);
            return Verdict::fails(F.to_string() + " is not principal in " + T.name, {{"F", F}});
        }
        witnesses += (witnesses.empty() ? "" : ", ") + T.name + ": " + p.generator->to_string();
    }
    return Verdict::holds(scope, witnesses);
}

Verdict monolocality_check(const Overring& L, const StarOp& op, const std::vector<FracIdeal>& samples,
                           const std::vector<Fraction>& taus, const std::vector<FracIdeal>& probes)
{
    if (!L.quasilocal()) throw InvalidInput(L.describe() + " is not quasilocal");
    const RingPtr& R = op.domain().ring;
    std::vector<Fraction> ts{Fraction(Poly::constant(R, 1))};
    for (const auto& t : taus) {
        if (!overring_contains_element(L, t)) throw InvalidInput(t.to_string() + " is not in " + L.describe());
        ts.push_back(t);
    }
    std::string const scope = "on " + std::to_string(probes.size()) + " probes and " + std::to_string(samples.size()) +
                              " samples";
    for (const auto& t : ts)
        for (const auto& E : probes) {
            FracIdeal const F = frac_scale(E, t);
            IdealHandle const h = apply_star(op, F);
            if (!h.exact()) return Verdict::unknown(scope, op.to_string() + " has no generators on " + F.to_string());
            for (const auto& g : h.ideal().generators())
                if (!overring_contains_element(L, g))
                    return Verdict::fails(g.to_string() + " ∈ (" + F.to_string() + ")^* lies outside " + L.describe(),
                                          {{"F", F}});
        }
    for (const auto& S : samples) {
        Principality const p = principality_in_overring(S, L);
        if (!p.generator) return Verdict::fails(S.to_string() + " does not extend principally to " + L.describe(), {{"F", S}});
    }
    return Verdict::holds(scope);
}

}  // namespace semistar
