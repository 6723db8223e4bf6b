#include "semistar/function_rings.hpp"

#include "semistar/errors.hpp"
#include "semistar/poly_gcd.hpp"

namespace semistar {

Ideal FunctionRing::content(const Poly& p) const { return content_ideal(p, z, base.ring); }

FunctionRing make_function_ring(const BaseDomain& D, const std::string& var)
{
    if (D.ring->index_of(var)) throw InvalidInput("function variable " + var + " clashes with a base variable");
    RingPtr S = append_vars(D.ring, {var});
    std::size_t const z = S->require_index(var);
    return {D, std::move(S), z};
}

const char* membership_name(Membership::Status s)
{
    switch (s) {
    case Membership::Status::Member:
        return "Member";
    case Membership::Status::NonMember:
        return "NonMember";
    default:
        return "UnknownAtBound";
    }
}

namespace {

bool base_like(const Overring& T)
{
    if (T.kind() == Overring::Kind::Base) return true;
    const auto& P = T.domain().prime;
    return T.kind() == Overring::Kind::Localization && P && ideal_equal(*P, *T.inverted_prime());
}

/// Operations whose closures are exactly the identity.
bool acts_as_d(const StarOp& op)
{
    const BaseDomain& D = op.domain();
    switch (op.kind()) {
    case StarOp::Kind::D:
        return true;
    case StarOp::Kind::Tilde:
        for (const auto& Q : op.primes())
            if (D.prime && ideal_equal(Q, *D.prime)) return true;
        return false;
    case StarOp::Kind::Wedge:
    case StarOp::Kind::Induced:
        for (const auto& T : op.overrings())
            if (base_like(T.ring)) return true;
        return false;
    default:
        return false;
    }
}

std::pair<Poly, Poly> reduced(const FunctionRing& A, const Fraction& z)
{
    Fraction const x = z.embed(A.ring);
    if (x.is_zero()) throw DomainError("membership of zero is not tested");
    return reduce_rational(x.num, x.den);
}

/// z·g as a polynomial of D[Z] (up to a unit of D), if it is one.
std::optional<Poly> times_as_poly(const FunctionRing& A, const Fraction& z, const Poly& g)
{
    Fraction const x = z.embed(A.ring);
    auto [p, q] = reduce_rational(x.num * g, x.den);
    if (q.degree_in(A.z) > 0) return std::nullopt;
    if (!A.base.loc().is_unit(q.embed(A.base.ring))) return std::nullopt;
    return p;
}

/// Unit-content certificate: the reduced denominator has content in P.
std::optional<std::string> unit_content_certificate(const FunctionRing& A, const Poly& g0)
{
    if (!A.base.prime) return std::nullopt;
    Ideal const c = A.content(g0);
    if (!ideal_contains(*A.base.prime, c)) return std::nullopt;
    return "reduced denominator " + g0.to_string() + " has content " + c.to_string() + " ⊆ " +
           A.base.prime->to_string();
}

bool content_inside(const FunctionRing& A, const Poly& f, const IdealHandle& h)
{
    if (f.is_zero()) return true;
    Ideal const cf = A.content(f);
    for (const auto& c : cf.generators())
        if (!h.contains(Fraction(c))) return false;
    return true;
}

std::string rep(const Poly& f, const Poly& g) { return "(" + f.to_string() + ")/(" + g.to_string() + ")"; }

}  // namespace

Verdict na_witness_check(const FunctionRing& A, const Poly& f, const Poly& g, const StarOp& op)
{
    if (g.is_zero()) throw DomainError("zero denominator");
    FracIdeal const cg(A.content(g));
    IdealHandle const cgs = apply_star(op, cg);
    if (!f.is_zero()) {
        IdealHandle const cfs = apply_star(op, FracIdeal(A.content(f)));
        if (!cfs.exact()) return Verdict::unknown("exact", op.to_string() + " has no generators on c(f)");
        for (const auto& x : cfs.ideal().generators())
            if (!cgs.contains(x))
                return Verdict::fails(x.to_string() + " ∈ c(f)^* but not in c(g)^*", {{"c(g)", cg}});
    }
    Verdict inv = is_star_invertible(cg, op);
    if (inv.is_holds()) return Verdict::holds("exact", "c(g) = " + cg.to_string() + " is invertible");
    if (inv.is_fails()) inv.detail = "c(g) not invertible: " + inv.detail;
    return inv;
}

Membership na_member_search(const FunctionRing& A, const Fraction& z, const StarOp& op,
                            const std::vector<Poly>& multipliers, const Certificates& certs)
{
    auto [f0, g0] = reduced(A, z);
    std::vector<Poly> ms{Poly::constant(A.ring, 1)};
    for (const auto& m : multipliers) ms.push_back(m.embed(A.ring));
    for (const auto& m : ms) {
        Poly const f = f0 * m, g = g0 * m;
        if (na_witness_check(A, f, g, op).is_holds()) {
            Membership out{Membership::Status::Member, rep(f, g), "multipliers: " + std::to_string(ms.size()), {}, f, g, {}};
            return out;
        }
    }
    bool const d_like = acts_as_d(op) || certs.na_equals_dz;
    if (d_like) {
        if (auto cert = unit_content_certificate(A, g0)) {
            Membership out{Membership::Status::NonMember, *cert, "certificate", {}, f0, g0, {}};
            if (!acts_as_d(op)) out.assumptions.push_back("Na(D,*) = D(Z) certified by scenario");
            return out;
        }
    }
    return {Membership::Status::Unknown, {}, "multipliers: " + std::to_string(ms.size()), {}, f0, g0, {}};
}

Membership kr_member_search(const FunctionRing& A, const Poly& f0, const Poly& g0, const StarOp& op,
                            const std::vector<Poly>& h_pool)
{
    Poly const f = f0.embed(A.ring), g = g0.embed(A.ring);
    if (g.is_zero()) throw DomainError("zero denominator");
    std::vector<Poly> hs{Poly::constant(A.ring, 1)};
    for (const auto& h : h_pool) hs.push_back(h.embed(A.ring));
    std::string const scope = "h pool: " + std::to_string(hs.size());
    std::vector<std::string> notes;
    for (const auto& h : hs) {
        if (h.is_zero()) continue;
        IdealHandle const cgh = apply_star(op, FracIdeal(A.content(g * h)));
        if (content_inside(A, f * h, cgh))
            return {Membership::Status::Member, "h = " + h.to_string(), scope, {}, f, g, h};
        if (h.is_one())
            notes.push_back(A.content(f).to_string() + " ⊄ " + cgh.to_string());
    }
    return {Membership::Status::Unknown, notes.empty() ? "" : notes.front(), scope, {}, f, g, {}};
}

Verdict knc_witness_check(const FunctionRing& A, const Fraction& z, const Poly& g0, const StarOp& op,
                          const ProbePool& pool)
{
    Poly const g = g0.embed(A.ring);
    if (g.is_zero()) throw DomainError("zero denominator");
    auto zg = times_as_poly(A, z, g);
    if (!zg) return Verdict::fails("structural: z*g is not in D[Z]");
    FracIdeal const cg(A.content(g));
    IdealHandle const cgs = apply_star(op, cg);
    if (!content_inside(A, *zg, cgs))
        return Verdict::fails("c(zg) = " + A.content(*zg).to_string() + " ⊄ c(g)^* = " + cgs.to_string(), {{"c(g)", cg}});
    Verdict eab = is_eab_probe(cg, op, pool);
    if (eab.is_fails()) {
        eab.detail = "c(g) = " + cg.to_string() + " fails the e.a.b. probe: " + eab.detail;
        return eab;
    }
    if (eab.is_unknown()) return eab;
    return Verdict::holds("eab " + eab.scope, "g = " + g.to_string());
}

Verdict sknc_witness_check(const FunctionRing& A, const Fraction& z, const Poly& g0, const StarOp& op,
                           const std::vector<NamedOverring>& strong_list)
{
    Poly const g = g0.embed(A.ring);
    if (g.is_zero()) throw DomainError("zero denominator");
    auto zg = times_as_poly(A, z, g);
    if (!zg) return Verdict::fails("structural: z*g is not in D[Z]");
    FracIdeal const cg(A.content(g));
    IdealHandle const cgs = apply_star(op, cg);
    if (!content_inside(A, *zg, cgs))
        return Verdict::fails("c(zg) = " + A.content(*zg).to_string() + " ⊄ c(g)^*", {{"c(g)", cg}});
    Verdict ae = is_almost_eab(cg, strong_list);
    if (ae.is_holds()) return Verdict::holds(ae.scope, "g = " + g.to_string());
    ae.detail = "c(g) = " + cg.to_string() + " not almost e.a.b.: " + ae.detail;
    return ae;
}

Membership knc_member_search(const FunctionRing& A, const Fraction& z, const StarOp& op, const ProbePool& pool,
                             const std::vector<Poly>& multipliers, const Certificates& certs)
{
    auto [f0, g0] = reduced(A, z);
    std::vector<Poly> gs{g0};
    for (const auto& m : multipliers) gs.push_back(g0 * m.embed(A.ring));
    std::string const scope = "denominators: " + std::to_string(gs.size());
    for (const auto& g : gs) {
        Verdict const v = knc_witness_check(A, z, g, op, pool);
        if (v.is_holds()) {
            Membership out{Membership::Status::Member, "g = " + g.to_string(), scope, {v.scope}, std::nullopt, g, {}};
            return out;
        }
    }
    if (certs.kn_equals_dz) {
        if (auto cert = unit_content_certificate(A, g0))
            return {Membership::Status::NonMember, "KN(D,*) = D(Z); " + *cert, "certificate",
                    {"KN(D,*) = D(Z) certified by scenario"}, f0, g0, {}};
    }
    if (certs.lmin) {
        Membership const s = skn_member_vs_list(A, z, *certs.lmin);
        if (s.status == Membership::Status::NonMember)
            return {Membership::Status::NonMember, "KN = ⋂ L(Z) over the certified minimal list; " + s.witness,
                    "certificate", {"minimal monolocality list certified by scenario"}, f0, g0, {}};
    }
    return {Membership::Status::Unknown, {}, scope, {}, f0, g0, {}};
}

Membership skn_member_vs_list(const FunctionRing& A, const Fraction& z, const std::vector<NamedOverring>& list)
{
    if (list.empty()) throw InvalidInput("skn membership needs a nonempty overring list");
    auto [f0, g0] = reduced(A, z);
    Ideal const c = A.content(g0);
    std::string scope = "list ⊆ L': [";
    for (std::size_t i = 0; i < list.size(); ++i) scope += (i ? ", " : "") + list[i].name;
    scope += "]";
    bool unknown = false;
    std::string unknown_at;
    for (const auto& T : list) {
        if (T.ring.kind() == Overring::Kind::Adjunction) {
            unknown = true;
            unknown_at = T.name;
            continue;
        }
        const auto& Q = T.ring.inverted_prime();
        bool const unit = Q ? !ideal_contains(*Q, c) : c.is_unit_ideal();
        if (!unit)
            return {Membership::Status::NonMember,
                    "rejected by " + T.name + ": content " + c.to_string() + " of the reduced denominator is not a unit",
                    scope, {}, f0, g0, {}};
    }
    if (unknown)
        return {Membership::Status::Unknown, "no content criterion for " + unknown_at, scope, {}, f0, g0, {}};
    return {Membership::Status::Member, rep(f0, g0), scope, {}, f0, g0, {}};
}

bool dedekind_mertens_check(const FunctionRing& A, const Poly& f0, const Poly& g0)
{
    Poly const f = f0.embed(A.ring), g = g0.embed(A.ring);
    if (f.is_zero() || g.is_zero()) throw DomainError("Dedekind-Mertens needs nonzero polynomials");
    unsigned const m = g.degree_in(A.z);
    Ideal const cf = A.content(f);
    Ideal const cfm = ideal_power(cf, m);
    Ideal const lhs = ideal_product(ideal_product(cfm, cf), A.content(g));
    Ideal const rhs = ideal_product(cfm, A.content(f * g));
    return ideal_equal(lhs, rhs);
}

Verdict content_star_multiplicativity(const FunctionRing& A, const Poly& g0, const Poly& h0, const StarOp& op,
                                      const ProbePool& pool)
{
    Poly const g = g0.embed(A.ring), h = h0.embed(A.ring);
    Ideal const cg = A.content(g);
    IdealHandle const lhs = apply_star(op, FracIdeal(ideal_product(cg, A.content(h))));
    IdealHandle const rhs = apply_star(op, FracIdeal(A.content(g * h)));
    if (!lhs.exact() || !rhs.exact()) return Verdict::unknown("exact", op.to_string() + " has no generators here");
    if (frac_equal(lhs.ideal(), rhs.ideal(), op.domain().loc()))
        return Verdict::holds("exact", "(c(g)c(h))^* = c(gh)^* = " + rhs.to_string());
    Verdict const pre = is_eab_probe(FracIdeal(cg), op, pool);
    return Verdict::fails("(c(g)c(h))^* = " + lhs.to_string() + " != c(gh)^* = " + rhs.to_string() +
                              "; e.a.b. probe on c(g): " + status_name(pre.status),
                          {{"c(g)", FracIdeal(cg)}});
}

Verdict knc_principalization_check(const FunctionRing& A, const Ideal& J0, const StarOp& op,
                                   const std::vector<Poly>& alpha_probes, const ProbePool& pool)
{
    Ideal const J = J0.embed(A.base.ring);
    FracIdeal const JF(J);
    Verdict const pre = is_eab_probe(JF, op, pool);
    if (pre.is_fails()) return Verdict::unknown("precondition", "J = " + J.to_string() + " is not e.a.b.: " + pre.detail);
    if (pre.is_unknown()) return pre;
    Poly g(A.ring);
    const auto& as = J.generators();
    for (std::size_t k = 0; k < as.size(); ++k) g = g + as[k].embed(A.ring) * Poly::variable(A.ring, A.ring->vars()[A.z], k);
    for (const auto& a : as) {
        Verdict const v = knc_witness_check(A, Fraction(a.embed(A.ring), g), g, op, pool);
        if (!v.is_holds()) return Verdict::fails(a.to_string() + "/g: " + v.detail);
    }
    IdealHandle const Js = apply_star(op, JF);
    std::size_t used = 0;
    for (const auto& alpha : alpha_probes) {
        Poly const al = alpha.embed(A.base.ring);
        if (!Js.contains(Fraction(al))) continue;
        ++used;
        Verdict const v = knc_witness_check(A, Fraction(al.embed(A.ring), g), g, op, pool);
        if (!v.is_holds()) return Verdict::fails(al.to_string() + "/g: " + v.detail);
    }
    return Verdict::holds("eab " + pre.scope, "g = " + g.to_string() + "; " + std::to_string(used) + " alpha probes in J^*");
}

Verdict ring_closure_fuzz(const FunctionRing& A, const std::vector<std::pair<Poly, Poly>>& members, const StarOp& op,
                          const ProbePool& pool)
{
    std::vector<std::pair<Poly, Poly>> ms;
    for (const auto& [f, g] : members) {
        Poly const fe = f.embed(A.ring), ge = g.embed(A.ring);
        Verdict const v = knc_witness_check(A, Fraction(fe, ge), ge, op, pool);
        if (!v.is_holds()) return Verdict::unknown("precondition", rep(fe, ge) + ": " + v.detail);
        ms.emplace_back(fe, ge);
    }
    std::size_t checked = 0;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i; j < ms.size(); ++j) {
            const auto& [f, g] = ms[i];
            const auto& [f2, g2] = ms[j];
            Poly const gg = g * g2;
            for (const Poly& num : {f * g2 - f2 * g, f * f2}) {
                if (num.is_zero()) continue;
                Verdict const v = knc_witness_check(A, Fraction(num, gg), gg, op, pool);
                if (!v.is_holds()) return Verdict::fails(rep(num, gg) + ": " + v.detail);
                ++checked;
            }
        }
    return Verdict::holds("eab up to pool " + pool.name, std::to_string(checked) + " witnesses");
}

}  // namespace semistar
