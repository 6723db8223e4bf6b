#include "semistar/domain.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "semistar/errors.hpp"
#include "semistar/poly_gcd.hpp"

namespace semistar {

namespace {

std::string wrap(const Poly& p)
{
    std::string s = p.to_string();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
}

std::vector<std::size_t> occurring_vars(const Poly& p)
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < p.ring()->nvars(); ++v)
        if (p.degree_in(v) > 0) out.push_back(v);
    return out;
}

std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    if (n > 1000000) throw Unsupported("unsupported prime presentation: coefficient too large for the root test");
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

// Whether the univariate p (in variable v) has a root in the field.
bool has_root(const Poly& p, std::size_t v)
{
    const Field& f = p.field();
    std::vector<Scalar> c(p.degree_in(v) + 1);
    for (const auto& t : p.terms()) c[t.mono[v]] = t.coeff;
    auto eval = [&](const Scalar& x) {
        Scalar acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c[i]);
        return acc;
    };
    if (!f.is_rationals()) {
        unsigned long const q = f.characteristic();
        if (q > 100000) throw Unsupported("unsupported prime presentation: field too large for the root test");
        for (unsigned long x = 0; x < q; ++x)
            if (eval(Scalar(x)) == 0) return true;
        return false;
    }
    if (c[0] == 0) return true;
    // clear denominators, then rational root test
    mpz_class l = 1;
    for (const auto& x : c) l = lcm(l, x.get_den());
    std::vector<mpz_class> ic;
    for (const auto& x : c) ic.push_back(mpz_class(x * l));
    for (const auto& num : divisors(ic.front()))
        for (const auto& den : divisors(ic.back()))
            for (int sgn : {1, -1}) {
                Scalar x(num * sgn, den);
                x.canonicalize();
                if (eval(x) == 0) return true;
            }
    return false;
}

void validate_principal(const Poly& p)
{
    auto vars = occurring_vars(p);
    if (vars.empty()) throw InvalidInput("not a proper prime: generator " + p.to_string() + " is a unit");
    // a variable dividing every term splits off unless p is that variable
    for (auto v : vars) {
        bool all = std::all_of(p.terms().begin(), p.terms().end(), [&](const Term& t) { return t.mono[v] > 0; });
        if (all && p.total_degree() > 1) throw InvalidInput("reducible generator " + p.to_string());
    }
    for (auto v : vars) {
        if (p.degree_in(v) != 1) continue;
        auto cs = coefficients_same_ring(p, v);
        std::vector<Poly> nz;
        for (auto& c : cs)
            if (!c.is_zero()) nz.push_back(c);
        if (nz.size() == 1 || poly_gcd(nz).is_constant()) {
            if (nz.size() == 1 && !nz.front().is_constant())
                throw InvalidInput("reducible generator " + p.to_string());
            return;
        }
        throw InvalidInput("reducible generator " + p.to_string() + " (nonunit content in " + p.ring()->vars()[v] + ")");
    }
    if (vars.size() == 1 && p.degree_in(vars.front()) <= 3) {
        if (has_root(p, vars.front())) throw InvalidInput("reducible generator " + p.to_string());
        return;
    }
    throw Unsupported("unsupported prime presentation: " + p.to_string());
}

}  // namespace

std::string BaseDomain::describe() const
{
    return ring->describe() + (prime ? "_" + prime->to_string() : "");
}

void validate_prime(const Ideal& P)
{
    if (P.is_zero()) throw InvalidInput("the zero ideal is not accepted as a localization prime");
    if (P.is_unit_ideal()) throw InvalidInput("not a proper prime: " + P.to_string());
    const auto& gens = P.generators();
    if (std::all_of(gens.begin(), gens.end(), [](const Poly& g) { return g.total_degree() == 1; })) return;
    const auto& basis = P.basis();
    if (basis.size() == 1) return validate_principal(basis.front());
    throw Unsupported("unsupported prime presentation: " + P.to_string());
}

BaseDomain make_base_domain(const Field& field, std::vector<std::string> vars, std::optional<Ideal> prime)
{
    if (vars.empty()) throw InvalidInput("a base domain needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars)
        if (!seen.insert(v).second) throw InvalidInput("duplicate variable " + v);
    BaseDomain D{make_ring(field, std::move(vars)), std::nullopt};
    if (prime) {
        Ideal P = prime->embed(D.ring);
        validate_prime(P);
        D.prime = std::move(P);
    }
    return D;
}

// ------------------------------------------------------------------ Overring

Overring::Overring(BaseDomain D, Kind k)
    : base_(std::move(D)),
      kind_(k),
      a_(base_.ring),
      b_(base_.ring),
      pres_ring_(base_.ring),
      relation_(Ideal::zero(base_.ring)),
      inv_prime_(base_.prime)
{
}

Overring Overring::base(const BaseDomain& D) { return Overring(D, Kind::Base); }

Overring Overring::adjunction(const BaseDomain& D, const Poly& a0, const Poly& b0)
{
    Poly a = a0.embed(D.ring), b = b0.embed(D.ring);
    if (b.is_zero()) throw DomainError("adjunction with zero denominator");
    if (a.is_zero()) throw DomainError("adjunction of zero");
    Poly g = poly_gcd(a, b);
    if (!g.is_constant()) {
        if (!D.loc().is_unit(g))
            throw DomainError("ill-presented adjunction: gcd(" + a.to_string() + ", " + b.to_string() + ") = " +
                              g.to_string() + " is not a unit");
        a = *divide_exact(a, g);
        b = *divide_exact(b, g);
    }
    Overring T(D, Kind::Adjunction);
    std::string aux = "W";
    for (int i = 1; D.ring->index_of(aux); ++i) aux = "W" + std::to_string(i);
    T.aux_ = aux;
    T.pres_ring_ = prepend_vars(D.ring, {aux});
    Poly const w = Poly::variable(T.pres_ring_, aux);
    Poly const ae = a.embed(T.pres_ring_), be = b.embed(T.pres_ring_);
    T.relation_ = Ideal(T.pres_ring_, {be * w - ae});
    if (!ideal_equal(ideal_colon(T.relation_, be), T.relation_))
        throw DomainError("relation ideal " + T.relation_.to_string() + " is not saturated");
    T.a_ = std::move(a);
    T.b_ = std::move(b);
    return T;
}

Overring Overring::localization(const BaseDomain& D, const Ideal& Q0)
{
    Ideal Q = Q0.embed(D.ring);
    validate_prime(Q);
    if (D.prime && !ideal_contains(*D.prime, Q))
        throw DomainError("D_Q is not an overring: " + Q.to_string() + " is not contained in " + D.prime->to_string());
    Overring T(D, Kind::Localization);
    T.inv_prime_ = std::move(Q);
    return T;
}

Overring Overring::dvr(const BaseDomain& D, const Poly& p0)
{
    Poly const p = p0.embed(D.ring);
    Overring T = localization(D, Ideal(D.ring, {p}));
    T.kind_ = Kind::Dvr;
    return T;
}

std::optional<Ideal> Overring::contraction(const Ideal& I) const
{
    switch (kind_) {
    case Kind::Base:
        return I;
    case Kind::Adjunction:
        if (I.is_zero()) return I;
        return eliminate(ideal_sum(I.embed(pres_ring_), relation_), {aux_}, base_.ring);
    default:
        return std::nullopt;
    }
}

bool Overring::member(const Poly& r, const Ideal& I) const
{
    if (r.is_zero()) return true;
    if (I.is_zero()) return false;
    switch (kind_) {
    case Kind::Base:
        return base_.loc().member(r, I);
    case Kind::Adjunction: {
        Ideal const C = *contraction(I);
        return inv_prime_ ? localized_member(r, C, *inv_prime_) : ideal_member(r, C);
    }
    default:
        return localized_member(r, I, *inv_prime_);
    }
}

std::string Overring::describe() const
{
    switch (kind_) {
    case Kind::Base:
        return "D";
    case Kind::Adjunction:
        return "D[" + wrap(a_) + "/" + wrap(b_) + "]";
    case Kind::Dvr:
        return "D_(" + inv_prime_->generators().front().to_string() + ")";
    default:
        return "D_" + inv_prime_->to_string();
    }
}

// ------------------------------------------------------------------ queries

bool overring_contains_element(const Overring& T, const Fraction& k)
{
    const RingPtr& R = T.domain().ring;
    Fraction const x = k.embed(R);
    return T.member(x.num, Ideal(R, {x.den}));
}

bool is_unit(const Overring& T, const Fraction& k)
{
    if (k.is_zero()) throw DomainError("is_unit of zero");
    const RingPtr& R = T.domain().ring;
    Fraction const x = k.embed(R);
    return T.member(x.num, Ideal(R, {x.den})) && T.member(x.den, Ideal(R, {x.num}));
}

bool is_unit(const BaseDomain& D, const Fraction& k) { return is_unit(Overring::base(D), k); }

bool extend_and_test(const FracIdeal& F, const Overring& T, const Fraction& k)
{
    const RingPtr& R = T.domain().ring;
    Fraction const x = k.embed(R);
    if (x.is_zero()) return true;
    return T.member(x.num * F.den(), ideal_scale(F.num(), x.den));
}

bool extension_contains(const Overring& T, const FracIdeal& A, const FracIdeal& B)
{
    for (const auto& g : B.generators())
        if (!extend_and_test(A, T, g)) return false;
    return true;
}

Principality principality_in_overring(const FracIdeal& F, const Overring& T)
{
    const auto& gens = F.num().generators();
    const RingPtr& R = T.domain().ring;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Ideal const gi(R, {gens[i]});
        bool ok = true;
        for (std::size_t j = 0; j < gens.size() && ok; ++j)
            if (j != i) ok = T.member(gens[j], gi);
        if (ok) return {Fraction(gens[i], F.den()), true};
    }
    return {std::nullopt, T.quasilocal()};
}

}  // namespace semistar
