#include "semistar/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "semistar/errors.hpp"

namespace semistar {

namespace {

/// Polynomial whose terms are kept in descending `order`.
struct OPoly {
    std::vector<Term> t;
    bool zero() const { return t.empty(); }
    const Term& lt() const { return t.front(); }
};

struct Ctx {
    const Field& f;
    const MonomialOrder& ord;
};

OPoly to_ordered(const Poly& p, const MonomialOrder& ord)
{
    OPoly r{p.terms()};
    std::sort(r.t.begin(), r.t.end(), [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    return r;
}

Poly to_poly(const OPoly& p, const RingPtr& ring) { return Poly(ring, p.t); }

/// a - c*m*b, all terms merged in order.
OPoly sub_mul(const Ctx& cx, const OPoly& a, const Scalar& c, const Monomial& m, const OPoly& b)
{
    OPoly out;
    out.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size()) {
            out.t.push_back(a.t[i++]);
            continue;
        }
        Monomial bm = b.t[j].mono * m;
        int cmp = i == a.t.size() ? -1 : cx.ord.compare(a.t[i].mono, bm);
        if (cmp > 0) {
            out.t.push_back(a.t[i++]);
        } else if (cmp < 0) {
            out.t.push_back({std::move(bm), cx.f.neg(cx.f.mul(c, b.t[j].coeff))});
            ++j;
        } else {
            Scalar s = cx.f.sub(a.t[i].coeff, cx.f.mul(c, b.t[j].coeff));
            if (s != 0) out.t.push_back({std::move(bm), std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

void make_monic(const Ctx& cx, OPoly& p)
{
    if (p.zero() || p.lt().coeff == 1) return;
    Scalar const inv = cx.f.inv(p.lt().coeff);
    for (auto& t : p.t) t.coeff = cx.f.mul(t.coeff, inv);
}

/// Full reduction of p by the (monic) polynomials in `basis`.
OPoly reduce(const Ctx& cx, OPoly p, const std::vector<OPoly>& basis)
{
    OPoly rem;
    while (!p.zero()) {
        const Term& lt = p.lt();
        const OPoly* div = nullptr;
        for (const auto& g : basis) {
            if (g.lt().mono.divides(lt.mono)) {
                div = &g;
                break;
            }
        }
        if (div) {
            Monomial const m = lt.mono / div->lt().mono;
            Scalar const c = cx.f.div(lt.coeff, div->lt().coeff);
            p = sub_mul(cx, p, c, m, *div);
        } else {
            rem.t.push_back(lt);
            p.t.erase(p.t.begin());
        }
    }
    return rem;
}

OPoly spoly(const Ctx& cx, const OPoly& f, const OPoly& g)
{
    Monomial const l = lcm(f.lt().mono, g.lt().mono);
    // (l/lt f)/lc f * f - (l/lt g)/lc g * g
    OPoly a;
    Scalar const cf = cx.f.inv(f.lt().coeff);
    Monomial const mf = l / f.lt().mono;
    a.t.reserve(f.t.size());
    for (const auto& t : f.t) a.t.push_back({t.mono * mf, cx.f.mul(t.coeff, cf)});
    return sub_mul(cx, a, cx.f.inv(g.lt().coeff), l / g.lt().mono, g);
}

bool coprime(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

}  // namespace

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order)
{
    require_same_ring(f, g);
    Ctx const cx{f.field(), order};
    return to_poly(spoly(cx, to_ordered(f, order), to_ordered(g, order)), f.ring());
}

std::vector<Poly> groebner_basis(std::span<const Poly> gens, const MonomialOrder& order)
{
    if (gens.empty()) return {};
    const RingPtr& ring = gens.front().ring();
    for (const auto& g : gens) require_same_ring(g, gens.front());
    Ctx const cx{ring->field(), order};

    std::vector<OPoly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        OPoly p = to_ordered(g, order);
        make_monic(cx, p);
        p = reduce(cx, std::move(p), basis);
        if (p.zero()) continue;
        make_monic(cx, p);
        if (p.lt().mono.is_one()) return {Poly::constant(ring, 1)};
        basis.push_back(std::move(p));
    }
    if (basis.empty()) return {};

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

    auto pair_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) != 0; };

    while (!pending.empty()) {
        // normal strategy: smallest lcm first
        auto best = pending.begin();
        Monomial best_l = lcm(basis[best->first].lt().mono, basis[best->second].lt().mono);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = lcm(basis[it->first].lt().mono, basis[it->second].lt().mono);
            if (order.compare(l, best_l) < 0) {
                best = it;
                best_l = std::move(l);
            }
        }
        auto const [i, j] = *best;
        pending.erase(best);

        const Monomial& mi = basis[i].lt().mono;
        const Monomial& mj = basis[j].lt().mono;
        if (coprime(mi, mj)) continue;
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (basis[k].lt().mono.divides(best_l) && !pair_pending(i, k) && !pair_pending(j, k)) chain = true;
        }
        if (chain) continue;

        OPoly s = reduce(cx, spoly(cx, basis[i], basis[j]), basis);
        if (s.zero()) continue;
        make_monic(cx, s);
        if (s.lt().mono.is_one()) return {Poly::constant(ring, 1)};
        basis.push_back(std::move(s));
        std::size_t const n = basis.size() - 1;
        for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
    }

    // minimalize
    std::vector<OPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == i) continue;
            const Monomial& a = basis[k].lt().mono;
            const Monomial& b = basis[i].lt().mono;
            // ties (equal leading monomials) keep the lower index
            if (a.divides(b) && (a != b || k < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // interreduce tails
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OPoly> others;
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        OPoly head;
        head.t.push_back(minimal[i].lt());
        OPoly tail;
        tail.t.assign(minimal[i].t.begin() + 1, minimal[i].t.end());
        OPoly red = reduce(cx, std::move(tail), others);
        head.t.insert(head.t.end(), red.t.begin(), red.t.end());
        minimal[i] = std::move(head);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const OPoly& a, const OPoly& b) { return order.compare(a.lt().mono, b.lt().mono) > 0; });
    std::vector<Poly> out;
    out.reserve(minimal.size());
    for (const auto& p : minimal) out.push_back(to_poly(p, ring));
    return out;
}

Poly normal_form(const Poly& p, std::span<const Poly> basis, const MonomialOrder& order)
{
    if (basis.empty()) return p;
    Ctx const cx{p.field(), order};
    std::vector<OPoly> b;
    b.reserve(basis.size());
    for (const auto& g : basis) {
        require_same_ring(p, g);
        OPoly o = to_ordered(g, order);
        make_monic(cx, o);
        b.push_back(std::move(o));
    }
    return to_poly(reduce(cx, to_ordered(p, order), b), p.ring());
}

}  // namespace semistar
