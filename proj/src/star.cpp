#include "semistar/star.hpp"

#include <algorithm>
#include <cctype>

#include "semistar/errors.hpp"
#include "semistar/poly_gcd.hpp"

namespace semistar {

struct StarOp::Node {
    Kind kind;
    BaseDomain domain;
    std::vector<StarOp> children;
    std::vector<NamedOverring> overrings;
    std::vector<Ideal> primes;
    ProbePool pool;
    unsigned bound = 0;
    Rule rule;
    std::string name;
};

namespace {

bool same_domain(const BaseDomain& a, const BaseDomain& b)
{
    if (!same_ring(a.ring, b.ring)) return false;
    if (a.prime.has_value() != b.prime.has_value()) return false;
    return !a.prime || ideal_equal(*a.prime, *b.prime);
}

void require_domain(const BaseDomain& D, const BaseDomain& other, const std::string& what)
{
    if (!same_domain(D, other)) throw InvalidInput(what + " is over a different base domain");
}

}  // namespace

#define SEMISTAR_NODE(...) StarOp(std::make_shared<const Node>(Node{__VA_ARGS__}))

StarOp StarOp::d(const BaseDomain& D) { return SEMISTAR_NODE(Kind::D, D, {}, {}, {}, {}, 0, {}, {}); }
StarOp StarOp::v(const BaseDomain& D) { return SEMISTAR_NODE(Kind::V, D, {}, {}, {}, {}, 0, {}, {}); }
StarOp StarOp::t(const BaseDomain& D) { return SEMISTAR_NODE(Kind::T, D, {}, {}, {}, {}, 0, {}, {}); }
StarOp StarOp::b(const BaseDomain& D) { return SEMISTAR_NODE(Kind::B, D, {}, {}, {}, {}, 0, {}, {}); }

StarOp StarOp::custom_gcd(const BaseDomain& D)
{
    if (!D.is_local()) throw InvalidInput("custom_gcd_star needs a local base domain");
    return SEMISTAR_NODE(Kind::CustomGcd, D, {}, {}, {}, {}, 0, {}, {});
}

StarOp StarOp::wedge(const BaseDomain& D, std::vector<NamedOverring> family)
{
    if (family.empty()) throw InvalidInput("wedge needs a nonempty overring list");
    for (const auto& T : family) require_domain(D, T.ring.domain(), "overring " + T.name);
    return SEMISTAR_NODE(Kind::Wedge, D, {}, std::move(family), {}, {}, 0, {}, {});
}

StarOp StarOp::tilde(const StarOp& inner, std::vector<Ideal> primes)
{
    if (primes.empty()) throw InvalidInput("tilde needs a nonempty prime list");
    const BaseDomain& D = inner.domain();
    for (auto& Q : primes) {
        Q = Q.embed(D.ring);
        Overring::localization(D, Q);  // validates primality and Q ⊆ P
        if (!quasi_prime_check(Q, inner))
            throw InvalidInput(Q.to_string() + " is not a quasi-prime of " + inner.to_string());
    }
    return SEMISTAR_NODE(Kind::Tilde, D, {inner}, {}, std::move(primes), {}, 0, {}, {});
}

StarOp StarOp::a_approx(const StarOp& inner, ProbePool pool, unsigned bound)
{
    if (bound < 1) throw InvalidInput("a_approx bound must be at least 1");
    if (pool.ideals.empty()) throw InvalidInput("a_approx needs a nonempty pool");
    pool = with_unit_first(std::move(pool), inner.domain().ring);
    return SEMISTAR_NODE(Kind::AApprox, inner.domain(), {inner}, {}, {}, std::move(pool), bound, {}, {});
}

StarOp StarOp::induced(NamedOverring T)
{
    BaseDomain D = T.ring.domain();
    return SEMISTAR_NODE(Kind::Induced, std::move(D), {}, {std::move(T)}, {}, {}, 0, {}, {});
}

StarOp StarOp::meet(std::vector<StarOp> ops)
{
    if (ops.empty()) throw InvalidInput("meet needs a nonempty list");
    for (const auto& o : ops) require_domain(ops.front().domain(), o.domain(), o.to_string());
    BaseDomain D = ops.front().domain();
    return SEMISTAR_NODE(Kind::Meet, std::move(D), std::move(ops), {}, {}, {}, 0, {}, {});
}

StarOp StarOp::custom(const BaseDomain& D, std::string name, Rule rule)
{
    return SEMISTAR_NODE(Kind::Custom, D, {}, {}, {}, {}, 0, std::move(rule), std::move(name));
}

#undef SEMISTAR_NODE

StarOp::Kind StarOp::kind() const { return n_->kind; }
const BaseDomain& StarOp::domain() const { return n_->domain; }
const std::vector<StarOp>& StarOp::children() const { return n_->children; }
const std::vector<NamedOverring>& StarOp::overrings() const { return n_->overrings; }
const std::vector<Ideal>& StarOp::primes() const { return n_->primes; }
const ProbePool& StarOp::pool() const { return n_->pool; }
unsigned StarOp::bound() const { return n_->bound; }
const StarOp::Rule& StarOp::rule() const { return n_->rule; }

std::string StarOp::to_string() const
{
    auto join_ops = [](const std::vector<StarOp>& ops) {
        std::string s;
        for (std::size_t i = 0; i < ops.size(); ++i) s += (i ? ", " : "") + ops[i].to_string();
        return s;
    };
    switch (n_->kind) {
    case Kind::D:
        return "d";
    case Kind::V:
        return "v";
    case Kind::T:
        return "t";
    case Kind::B:
        return "b";
    case Kind::CustomGcd:
        return "custom_gcd_star";
    case Kind::Wedge: {
        std::string s = "wedge(";
        for (std::size_t i = 0; i < n_->overrings.size(); ++i) s += (i ? ", " : "") + n_->overrings[i].name;
        return s + ")";
    }
    case Kind::Tilde: {
        std::string s = "tilde(" + n_->children.front().to_string() + ", [";
        for (std::size_t i = 0; i < n_->primes.size(); ++i) s += (i ? ", " : "") + n_->primes[i].to_string();
        return s + "])";
    }
    case Kind::AApprox:
        return "a_approx(" + n_->children.front().to_string() + ", pool=" + n_->pool.name +
               ", bound=" + std::to_string(n_->bound) + ")";
    case Kind::Induced:
        return "induced(" + n_->overrings.front().name + ")";
    case Kind::Meet:
        return "meet(" + join_ops(n_->children) + ")";
    case Kind::Custom:
        return n_->name;
    }
    return "?";
}

// ------------------------------------------------------------------ env

const NamedOverring* StarEnv::find_overring(const std::string& name) const
{
    for (const auto& T : overrings)
        if (T.name == name) return &T;
    return nullptr;
}

const ProbePool* StarEnv::find_pool(const std::string& name) const
{
    for (const auto& p : pools)
        if (p.name == name) return &p;
    return nullptr;
}

// ------------------------------------------------------------------ parser

namespace {

class StarParser {
  public:
    StarParser(std::string_view s, const StarEnv& env) : s_(s), env_(env) {}

    StarOp parse()
    {
        StarOp op = term();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return op;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError("star term: " + what, i_); }

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident()
    {
        skip();
        std::size_t const start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '-'))
            ++i_;
        if (start == i_) fail("expected a name");
        return std::string(s_.substr(start, i_ - start));
    }

    /// Raw text of a balanced parenthesized group starting at '('.
    std::string group()
    {
        skip();
        if (i_ >= s_.size() || s_[i_] != '(') fail("expected '('");
        std::size_t const start = i_;
        int depth = 0;
        do {
            if (s_[i_] == '(') ++depth;
            if (s_[i_] == ')') --depth;
            ++i_;
        } while (i_ < s_.size() && depth > 0);
        if (depth != 0) fail("unbalanced parentheses");
        return std::string(s_.substr(start, i_ - start));
    }

    NamedOverring overring()
    {
        std::size_t const at = i_;
        std::string name = ident();
        if (name == "D") return {"D", Overring::base(env_.domain)};
        const NamedOverring* T = env_.find_overring(name);
        if (!T) {
            i_ = at;
            fail("unknown overring '" + name + "'");
        }
        return *T;
    }

    StarOp term()
    {
        std::size_t const at = i_;
        std::string const name = ident();
        const BaseDomain& D = env_.domain;
        if (name == "d") return StarOp::d(D);
        if (name == "v") return StarOp::v(D);
        if (name == "t") return StarOp::t(D);
        if (name == "b" || name == "b_monomial") return StarOp::b(D);
        if (name == "custom_gcd_star") return StarOp::custom_gcd(D);
        if (name == "wedge") {
            expect('(');
            std::vector<NamedOverring> family{overring()};
            while (eat(',')) family.push_back(overring());
            expect(')');
            return StarOp::wedge(D, std::move(family));
        }
        if (name == "induced" || name == "induced_single") {
            expect('(');
            NamedOverring T = overring();
            expect(')');
            return StarOp::induced(std::move(T));
        }
        if (name == "meet") {
            expect('(');
            std::vector<StarOp> ops{term()};
            while (eat(',')) ops.push_back(term());
            expect(')');
            return StarOp::meet(std::move(ops));
        }
        if (name == "tilde") {
            expect('(');
            StarOp inner = term();
            expect(',');
            expect('[');
            std::vector<Ideal> primes;
            do {
                std::size_t const pat = i_;
                std::string text = group();
                try {
                    primes.push_back(parse_ideal(text, D.ring));
                } catch (const ParseError& e) {
                    throw ParseError(std::string("star term: bad prime: ") + e.what(), pat);
                }
            } while (eat(','));
            expect(']');
            expect(')');
            return StarOp::tilde(inner, std::move(primes));
        }
        if (name == "a_approx") {
            expect('(');
            StarOp inner = term();
            std::string pool_name = "default";
            long bound = static_cast<long>(default_pool_bound());
            while (eat(',')) {
                std::string key = ident();
                expect('=');
                if (key == "pool") {
                    pool_name = ident();
                } else if (key == "bound") {
                    skip();
                    std::size_t const start = i_;
                    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
                    if (start == i_) fail("expected a number");
                    bound = std::stol(std::string(s_.substr(start, i_ - start)));
                    if (bound < 1 || bound > 6) fail("bound must be in [1, 6]");
                } else {
                    fail("unknown a_approx key '" + key + "'");
                }
            }
            expect(')');
            ProbePool pool;
            if (pool_name == "default") {
                pool = default_pool(D, static_cast<unsigned>(bound));
            } else if (const ProbePool* p = env_.find_pool(pool_name)) {
                pool = *p;
            } else {
                fail("unknown pool '" + pool_name + "'");
            }
            return StarOp::a_approx(inner, std::move(pool), static_cast<unsigned>(bound));
        }
        i_ = at;
        fail("unknown constructor '" + name + "'");
    }

    std::string_view s_;
    const StarEnv& env_;
    std::size_t i_ = 0;
};

}  // namespace

StarOp parse_star(std::string_view text, const StarEnv& env) { return StarParser(text, env).parse(); }

// ------------------------------------------------------------------ handles

const char* exactness_name(Exactness e)
{
    switch (e) {
    case Exactness::Generators:
        return "generators";
    case Exactness::Decidable:
        return "decidable";
    default:
        return "approximate";
    }
}

IdealHandle::IdealHandle(FracIdeal input, FracIdeal result, const BaseDomain& D)
    : input_(std::move(input)), result_(std::move(result)), exactness_(Exactness::Generators)
{
    oracle_ = [r = *result_, L = D.loc()](const Fraction& k) { return frac_member(k, r, L); };
}

IdealHandle::IdealHandle(FracIdeal input, Exactness e, Oracle oracle)
    : input_(std::move(input)), exactness_(e), oracle_(std::move(oracle))
{
}

const FracIdeal& IdealHandle::ideal() const
{
    if (!result_) throw Unsupported("closure of " + input_.to_string() + " has no finite generating set here");
    return *result_;
}

bool IdealHandle::contains(const FracIdeal& G) const
{
    for (const auto& g : G.generators())
        if (!contains(g)) return false;
    return true;
}

std::string IdealHandle::to_string() const
{
    if (result_) return result_->to_string();
    return std::string("<") + exactness_name(exactness_) + " closure of " + input_.to_string() + ">";
}

// ------------------------------------------------------------------ evaluation

namespace {

FracIdeal simplified(const FracIdeal& A, const BaseDomain& D) { return frac_simplify(A, D.loc()); }

FracIdeal custom_gcd_rule(const FracIdeal& F, const BaseDomain& D)
{
    const RingPtr& R = D.ring;
    const auto& gens = F.num().generators();
    Poly const alpha = poly_gcd(gens);
    bool unit_cofactor = false;
    for (const auto& g : gens)
        if (!D.prime->contains(*divide_exact(g, alpha))) unit_cofactor = true;
    Ideal num = unit_cofactor ? Ideal(R, {alpha}) : ideal_scale(*D.prime, alpha);
    return FracIdeal(std::move(num), F.den());
}

/// A monomial m with g = u·m for a unit u of D, if any.
std::optional<Poly> associated_monomial(const Poly& g, const BaseDomain& D)
{
    std::size_t const n = D.ring->nvars();
    Monomial m = g.terms().front().mono;
    for (const auto& t : g.terms())
        for (std::size_t j = 0; j < n; ++j) m[j] = std::min(m[j], t.mono[j]);
    Poly const mono = Poly::monomial(D.ring, m);
    Poly const u = *divide_exact(g, mono);
    if (!D.loc().is_unit(u)) return std::nullopt;
    return mono;
}

FracIdeal b_rule(const FracIdeal& F, const BaseDomain& D)
{
    std::vector<Poly> gens;
    for (const auto& g : F.num().generators()) {
        auto m = associated_monomial(g, D);
        if (!m) throw Unsupported("b is only available for monomial ideals; got " + F.to_string());
        gens.push_back(std::move(*m));
    }
    return FracIdeal(monomial_integral_closure(Ideal(D.ring, std::move(gens))), F.den());
}

bool is_base_like(const Overring& T)
{
    if (T.kind() == Overring::Kind::Base) return true;
    if (T.kind() == Overring::Kind::Localization) {
        const auto& P = T.domain().prime;
        return P && ideal_equal(*P, *T.inverted_prime());
    }
    return false;
}

std::optional<FracIdeal> wedge_generators(const FracIdeal& F, const std::vector<NamedOverring>& family,
                                          const BaseDomain& D)
{
    for (const auto& T : family)
        if (is_base_like(T.ring)) return F;
    std::vector<Poly> dens;
    for (const auto& T : family) {
        if (T.ring.kind() != Overring::Kind::Adjunction) return std::nullopt;
        dens.push_back(T.ring.adj_den());
    }
    // ⋂ D[a/b] = D when the b's have no common nonunit factor
    if (!D.loc().is_unit(poly_gcd(dens))) return std::nullopt;
    std::optional<Ideal> acc;
    for (const auto& T : family) {
        Ideal C = *T.ring.contraction(F.num());
        acc = acc ? ideal_intersect(*acc, C) : C;
    }
    return FracIdeal(*acc, F.den());
}

}  // namespace

IdealHandle apply_star(const StarOp& op, const FracIdeal& F0)
{
    const BaseDomain& D = op.domain();
    FracIdeal const F(F0.num().embed(D.ring), F0.den().embed(D.ring));
    auto exact = [&](const FracIdeal& r) { return IdealHandle(F, simplified(r, D), D); };

    switch (op.kind()) {
    case StarOp::Kind::D:
        return exact(F);
    case StarOp::Kind::V:
    case StarOp::Kind::T:
        return exact(frac_inverse(frac_inverse(F)));
    case StarOp::Kind::B:
        return exact(b_rule(F, D));
    case StarOp::Kind::CustomGcd:
        return exact(custom_gcd_rule(F, D));
    case StarOp::Kind::Custom:
        return exact(op.rule()(F));
    case StarOp::Kind::Wedge: {
        if (auto g = wedge_generators(F, op.overrings(), D)) return exact(*g);
        auto family = op.overrings();
        return IdealHandle(F, Exactness::Decidable, [F, family](const Fraction& k) {
            for (const auto& T : family)
                if (!extend_and_test(F, T.ring, k)) return false;
            return true;
        });
    }
    case StarOp::Kind::Induced: {
        const Overring& T = op.overrings().front().ring;
        if (is_base_like(T)) return exact(F);
        return IdealHandle(F, Exactness::Decidable, [F, T](const Fraction& k) { return extend_and_test(F, T, k); });
    }
    case StarOp::Kind::Tilde: {
        std::vector<Overring> locs;
        for (const auto& Q : op.primes()) locs.push_back(Overring::localization(D, Q));
        for (const auto& T : locs)
            if (is_base_like(T)) return exact(F);
        return IdealHandle(F, Exactness::Decidable, [F, locs](const Fraction& k) {
            for (const auto& T : locs)
                if (!extend_and_test(F, T, k)) return false;
            return true;
        });
    }
    case StarOp::Kind::AApprox: {
        const StarOp& inner = op.children().front();
        struct Probe {
            FracIdeal H;
            IdealHandle closure;
        };
        std::vector<Probe> probes;
        for (const auto& H : op.pool().ideals) probes.push_back({H, apply_star(inner, frac_product(F, H))});
        return IdealHandle(F, Exactness::Approximate, [probes](const Fraction& k) {
            for (const auto& p : probes) {
                bool all = true;
                for (const auto& h : p.H.generators())
                    if (!(all = p.closure.contains(k * h))) break;
                if (all) return true;
            }
            return false;
        });
    }
    case StarOp::Kind::Meet: {
        std::vector<IdealHandle> parts;
        for (const auto& c : op.children()) parts.push_back(apply_star(c, F));
        bool all_gens = std::all_of(parts.begin(), parts.end(), [](const IdealHandle& h) { return h.exact(); });
        if (all_gens) {
            FracIdeal acc = parts.front().ideal();
            for (std::size_t i = 1; i < parts.size(); ++i) acc = frac_intersect(acc, parts[i].ideal());
            return exact(acc);
        }
        Exactness e = Exactness::Decidable;
        for (const auto& p : parts)
            if (p.exactness() == Exactness::Approximate) e = Exactness::Approximate;
        return IdealHandle(F, e, [parts](const Fraction& k) {
            for (const auto& p : parts)
                if (!p.contains(k)) return false;
            return true;
        });
    }
    }
    throw Unsupported("unknown star constructor");
}

// ------------------------------------------------------------------ axioms

Verdict check_axioms(const StarOp& op, const std::vector<FracIdeal>& probes, const std::vector<Fraction>& scalars)
{
    const Localization L = op.domain().loc();
    std::string const scope = "on " + std::to_string(probes.size()) + " probes";
    std::vector<FracIdeal> closed;
    for (const auto& F : probes) {
        IdealHandle h = apply_star(op, F);
        if (!h.exact()) return Verdict::unknown(scope, op.to_string() + " has no generators on " + F.to_string());
        closed.push_back(h.ideal());
    }
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const FracIdeal& F = probes[i];
        const FracIdeal& Fs = closed[i];
        if (!frac_contains(Fs, F, L))
            return Verdict::fails("(⋆₃) not extensive on " + F.to_string(), {{"E", F}, {"E*", Fs}});
        FracIdeal const Fss = apply_star(op, Fs).ideal();
        if (!frac_equal(Fss, Fs, L))
            return Verdict::fails("(⋆₃) not idempotent on " + F.to_string(), {{"E", F}, {"E*", Fs}, {"E**", Fss}});
        for (const auto& z : scalars) {
            if (z.is_zero()) continue;
            FracIdeal const lhs = apply_star(op, frac_scale(F, z)).ideal();
            FracIdeal const rhs = frac_scale(Fs, z);
            if (!frac_equal(lhs, rhs, L))
                return Verdict::fails("(⋆₁) (zE)* != zE* on " + F.to_string() + " with z = " + z.to_string(),
                                      {{"E", F}, {"(zE)*", lhs}, {"zE*", rhs}});
        }
    }
    for (std::size_t i = 0; i < probes.size(); ++i)
        for (std::size_t j = 0; j < probes.size(); ++j) {
            if (i == j || !frac_contains(probes[j], probes[i], L)) continue;
            if (!frac_contains(closed[j], closed[i], L))
                return Verdict::fails("(⋆₂) not monotone: " + probes[i].to_string() + " ⊆ " + probes[j].to_string(),
                                      {{"E", probes[i]}, {"F", probes[j]}});
        }
    return Verdict::holds(scope);
}

// ------------------------------------------------------------------ comparison

const char* relation_name(StarComparison::Relation r)
{
    switch (r) {
    case StarComparison::Relation::EQ:
        return "EQ";
    case StarComparison::Relation::LEQ:
        return "LEQ";
    case StarComparison::Relation::GEQ:
        return "GEQ";
    case StarComparison::Relation::INCOMPARABLE:
        return "INCOMPARABLE";
    default:
        return "UNKNOWN";
    }
}

namespace {

/// Some generator of `small` outside `big`: nullopt if small ⊆ big, throws
/// when undecidable.
std::optional<std::optional<Fraction>> escaping_generator(const IdealHandle& small, const IdealHandle& big)
{
    if (!small.exact() || big.exactness() == Exactness::Approximate) return std::nullopt;
    for (const auto& g : small.ideal().generators())
        if (!big.contains(g)) return std::optional<Fraction>(g);
    return std::optional<Fraction>();
}

}  // namespace

StarComparison compare_stars(const StarOp& op1, const StarOp& op2, const std::vector<FracIdeal>& probes)
{
    StarComparison out;
    bool decided = true;
    for (const auto& F : probes) {
        IdealHandle const h1 = apply_star(op1, F);
        IdealHandle const h2 = apply_star(op2, F);
        auto e12 = escaping_generator(h1, h2);  // h1 ⊄ h2 witness
        auto e21 = escaping_generator(h2, h1);
        if (!e12 || !e21) {
            decided = false;
            out.detail = "undecidable containment on " + F.to_string();
            break;
        }
        if (*e12 && !out.op1_larger) out.op1_larger = StarComparison::Witness{F, **e12};
        if (*e21 && !out.op2_larger) out.op2_larger = StarComparison::Witness{F, **e21};
    }
    using R = StarComparison::Relation;
    if (!decided) {
        out.relation = R::UNKNOWN;
    } else if (out.op1_larger && out.op2_larger) {
        out.relation = R::INCOMPARABLE;
    } else if (out.op2_larger) {
        out.relation = R::LEQ;
    } else if (out.op1_larger) {
        out.relation = R::GEQ;
    } else {
        out.relation = R::EQ;
    }
    return out;
}

bool quasi_prime_check(const Ideal& P0, const StarOp& op)
{
    const BaseDomain& D = op.domain();
    Ideal const P = P0.embed(D.ring);
    IdealHandle const h = apply_star(op, FracIdeal(P));
    Ideal const c = frac_contract(h.ideal());
    return D.loc().equal(c, P);
}

Verdict is_star_overring_probe(const Overring& T, const StarOp& op, const std::vector<FracIdeal>& probes)
{
    std::string const scope = "up to " + std::to_string(probes.size()) + " probes";
    for (const auto& F : probes) {
        IdealHandle const h = apply_star(op, F);
        if (!h.exact()) return Verdict::unknown(scope, op.to_string() + " has no generators on " + F.to_string());
        for (const auto& g : h.ideal().generators())
            if (!extend_and_test(F, T, g))
                return Verdict::fails(g.to_string() + " in " + F.to_string() + "^* but not in F·" + T.describe(),
                                      {{"F", F}});
    }
    return Verdict::holds(scope);
}

}  // namespace semistar
