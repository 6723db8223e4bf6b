#include "semistar/poly_gcd.hpp"

#include "semistar/errors.hpp"

namespace semistar {

namespace {

std::optional<std::size_t> main_variable(const Poly& a, const Poly& b)
{
    std::size_t const n = a.ring()->nvars();
    for (std::size_t v = n; v-- > 0;)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return std::nullopt;
}

Poly exact_quotient(const Poly& a, const Poly& b)
{
    auto q = divide_exact(a, b);
    if (!q) throw Error("internal: inexact division in gcd");
    return *q;
}

Poly content_in(const Poly& p, std::size_t v)
{
    Poly g(p.ring());
    for (const auto& c : coefficients_same_ring(p, v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Poly primitive_part(const Poly& p, std::size_t v)
{
    if (p.is_zero()) return p;
    return exact_quotient(p, content_in(p, v));
}

/// Pseudo-remainder of a by b with respect to v.
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t v)
{
    std::uint32_t const db = b.degree_in(v);
    std::vector<Poly> bc = coefficients_same_ring(b, v);
    Poly const lcb = bc.back();
    while (!a.is_zero() && a.degree_in(v) >= db) {
        std::uint32_t const da = a.degree_in(v);
        Poly const lca = coefficients_same_ring(a, v).back();
        Monomial shift(a.ring()->nvars());
        shift[v] = da - db;
        a = lcb * a - (lca * b).times_monomial(shift, 1);
    }
    return a;
}

}  // namespace

std::vector<Poly> coefficients_same_ring(const Poly& p, std::size_t var)
{
    std::vector<std::vector<Term>> buckets(p.degree_in(var) + 1);
    for (const auto& t : p.terms()) {
        Monomial m = t.mono;
        std::uint32_t const e = m[var];
        m[var] = 0;
        buckets[e].push_back({std::move(m), t.coeff});
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.emplace_back(p.ring(), std::move(b));
    return out;
}

Poly poly_gcd(const Poly& a, const Poly& b)
{
    require_same_ring(a, b);
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_monomial() && b.is_monomial())
        return Poly::monomial(a.ring(), gcd(a.leading().mono, b.leading().mono));
    auto v = main_variable(a, b);
    if (!v) return Poly::constant(a.ring(), 1);
    // a monomial divisor can only share monomial factors
    if (a.is_monomial() || b.is_monomial()) {
        const Poly& m = a.is_monomial() ? a : b;
        const Poly& p = a.is_monomial() ? b : a;
        Monomial g = m.leading().mono;
        for (const auto& t : p.terms()) g = gcd(g, t.mono);
        return Poly::monomial(a.ring(), g);
    }

    Poly const ca = content_in(a, *v);
    Poly const cb = content_in(b, *v);
    Poly const c = poly_gcd(ca, cb);
    Poly pa = exact_quotient(a, ca);
    Poly pb = exact_quotient(b, cb);
    if (pa.degree_in(*v) < pb.degree_in(*v)) std::swap(pa, pb);
    while (!pb.is_zero() && pb.degree_in(*v) > 0) {
        Poly r = pseudo_remainder(pa, pb, *v);
        pa = std::move(pb);
        pb = primitive_part(r, *v);
    }
    // pb == 0: pa is the primitive gcd; otherwise the primitive parts are coprime
    Poly const g = pb.is_zero() ? pa : Poly::constant(a.ring(), 1);
    return (c * g).monic();
}

Poly poly_gcd(const std::vector<Poly>& polys)
{
    if (polys.empty()) throw DomainError("gcd of an empty list");
    Poly g(polys.front().ring());
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p.monic() : poly_gcd(g, p);
        if (g.is_one()) break;
    }
    if (g.is_zero()) throw DomainError("gcd of zero polynomials");
    return g;
}

std::pair<Poly, Poly> reduce_rational(const Poly& f, const Poly& g)
{
    require_same_ring(f, g);
    if (g.is_zero()) throw DomainError("zero denominator");
    if (f.is_zero()) return {f, Poly::constant(g.ring(), 1)};
    Poly const h = poly_gcd(f, g);
    Poly f0 = exact_quotient(f, h);
    Poly g0 = exact_quotient(g, h);
    Scalar const lc = g0.leading().coeff;
    return {f0.scaled(f.field().inv(lc)), g0.monic()};
}

std::vector<Poly> content_generators(const Poly& p, std::size_t var, const RingPtr& base)
{
    if (p.is_zero()) throw DomainError("content of the zero polynomial");
    std::vector<Poly> out;
    for (auto& c : p.coefficients_in(var, base))
        if (!c.is_zero()) out.push_back(std::move(c));
    return out;
}

}  // namespace semistar
