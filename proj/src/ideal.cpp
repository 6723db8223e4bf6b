#include "semistar/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

#include "semistar/errors.hpp"
#include "semistar/poly_gcd.hpp"

namespace semistar {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

std::string fresh_name(const RingPtr& ring, const std::string& stem)
{
    std::string name = stem;
    while (ring->index_of(name)) name += "_";
    return name;
}

}  // namespace

// ---------------------------------------------------------------- Ideal

struct Ideal::Cache {
    std::once_flag once;
    std::vector<Poly> basis;
};

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>())
{
    for (auto& g : gens) {
        if (!same_ring(g.ring(), ring_)) throw RingMismatch("ideal generator in " + g.ring()->describe() + ", expected " + ring_->describe());
        if (!g.is_zero()) gens_.push_back(g.monic());
    }
}

Ideal Ideal::unit(RingPtr ring)
{
    Poly one = Poly::constant(ring, 1);
    return Ideal(std::move(ring), {std::move(one)});
}

bool Ideal::is_monomial() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_monomial(); });
}

const std::vector<Poly>& Ideal::basis() const
{
    std::call_once(cache_->once, [this] { cache_->basis = groebner_basis(gens_, kGrevlex); });
    return cache_->basis;
}

bool Ideal::contains(const Poly& p) const
{
    if (p.is_zero()) return true;
    if (is_zero()) return false;
    return normal_form(p, basis(), kGrevlex).is_zero();
}

bool Ideal::is_unit_ideal() const
{
    if (is_zero()) return false;
    const auto& b = basis();
    return b.size() == 1 && b.front().is_constant();
}

Poly Ideal::reduce(const Poly& p) const { return normal_form(p, basis(), kGrevlex); }

Ideal Ideal::embed(const RingPtr& target) const
{
    std::vector<Poly> g;
    g.reserve(gens_.size());
    for (const auto& p : gens_) g.push_back(p.embed(target));
    return Ideal(target, std::move(g));
}

std::string Ideal::to_string() const
{
    if (gens_.empty()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string();
    }
    return s + ")";
}

namespace {

/// Splits `a, b, (c, d)` at top-level commas.
std::vector<std::pair<std::string, std::size_t>> split_top_level(std::string_view s, std::size_t offset)
{
    std::vector<std::pair<std::string, std::size_t>> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            parts.emplace_back(std::string(s.substr(start, i - start)), offset + start);
            start = i + 1;
            continue;
        }
        if (s[i] == '(' || s[i] == '[') ++depth;
        if (s[i] == ')' || s[i] == ']') --depth;
        if (depth < 0) throw ParseError("unbalanced ')'", offset + i);
    }
    if (depth != 0) throw ParseError("unbalanced '('", offset + s.size());
    return parts;
}

std::string_view trim(std::string_view s, std::size_t& offset)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Content between the outer parentheses of `head(...)` or `(...)`.
std::optional<std::string_view> unwrap(std::string_view s, std::string_view head, std::size_t& offset)
{
    if (s.substr(0, head.size()) != head) return std::nullopt;
    std::string_view rest = s.substr(head.size());
    std::size_t off = offset + head.size();
    rest = trim(rest, off);
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') return std::nullopt;
    // the opening paren must match the final one
    int depth = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == '(') ++depth;
        if (rest[i] == ')') --depth;
        if (depth == 0 && i + 1 != rest.size()) return std::nullopt;
    }
    offset = off + 1;
    return rest.substr(1, rest.size() - 2);
}

std::vector<Fraction> parse_element_list(std::string_view body, std::size_t offset, const RingPtr& ring)
{
    std::vector<Fraction> out;
    for (auto& [part, at] : split_top_level(body, offset)) {
        std::size_t off = at;
        std::string_view p = trim(part, off);
        if (p.empty()) throw ParseError("empty generator", off);
        try {
            out.push_back(parse_fraction(p, ring));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()), off + e.position());
        }
    }
    return out;
}

}  // namespace

Ideal parse_ideal(std::string_view text, const RingPtr& ring)
{
    std::size_t off = 0;
    std::string_view s = trim(text, off);
    auto body = unwrap(s, "ideal", off);
    if (!body) body = unwrap(s, "", off);
    if (!body) throw ParseError("expected ideal(...) or (...)", off);
    std::vector<Poly> gens;
    for (auto& f : parse_element_list(*body, off, ring)) {
        if (!f.den.is_constant()) {
            auto q = divide_exact(f.num, f.den);
            if (!q) throw ParseError("ideal generator " + f.to_string() + " is not a polynomial", off);
            gens.push_back(*q);
        } else {
            gens.push_back(f.num);
        }
    }
    return Ideal(ring, std::move(gens));
}

// ---------------------------------------------------------------- calculus

std::vector<Poly> groebner(const Ideal& I, const MonomialOrder& order)
{
    if (I.is_zero()) throw DomainError("Groebner basis of the zero ideal");
    if (order == kGrevlex) return I.basis();
    return groebner_basis(I.generators(), order);
}

bool ideal_member(const Poly& p, const Ideal& I)
{
    require_same_ring(p, Poly(I.ring()));
    if (I.is_zero()) throw DomainError("membership in the zero ideal");
    return I.contains(p);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J)
{
    std::vector<Poly> g = I.generators();
    g.insert(g.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J)
{
    std::vector<Poly> g;
    for (const auto& a : I.generators())
        for (const auto& b : J.generators()) g.push_back(a * b);
    Ideal P(I.ring(), std::move(g));
    // keep generator lists short
    if (P.generators().size() > 4 && P.basis().size() < P.generators().size()) return P.canonical();
    return P;
}

Ideal ideal_power(const Ideal& I, unsigned n)
{
    Ideal r = Ideal::unit(I.ring());
    for (unsigned i = 0; i < n; ++i) r = ideal_product(r, I);
    return r;
}

Ideal ideal_scale(const Ideal& I, const Poly& p)
{
    std::vector<Poly> g;
    for (const auto& a : I.generators()) g.push_back(a * p);
    return Ideal(I.ring(), std::move(g));
}

bool ideal_contains(const Ideal& I, const Ideal& J)
{
    return std::all_of(J.generators().begin(), J.generators().end(), [&](const Poly& g) { return I.contains(g); });
}

bool ideal_equal(const Ideal& I, const Ideal& J)
{
    if (I.is_zero() || J.is_zero()) return I.is_zero() == J.is_zero();
    return I.basis() == J.basis();
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& names, const RingPtr& target)
{
    if (I.is_zero()) return Ideal::zero(target);
    // reorder so eliminated variables come first
    std::vector<std::string> order_vars = names;
    for (const auto& v : I.ring()->vars())
        if (std::find(names.begin(), names.end(), v) == names.end()) order_vars.push_back(v);
    RingPtr work = make_ring(I.ring()->field(), order_vars);
    std::vector<Poly> gens;
    for (const auto& g : I.generators()) gens.push_back(g.embed(work));
    auto gb = groebner_basis(gens, MonomialOrder::elimination(names.size()));
    std::vector<Poly> kept;
    for (const auto& g : gb) {
        bool free = true;
        for (std::size_t i = 0; i < names.size() && free; ++i)
            if (g.degree_in(i) > 0) free = false;
        if (free) kept.push_back(g.embed(target));
    }
    return Ideal(target, std::move(kept));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J)
{
    require_same_ring(Poly(I.ring()), Poly(J.ring()));
    if (I.is_zero() || J.is_zero()) throw DomainError("intersection with the zero ideal");
    if (I.is_unit_ideal()) return J;
    if (J.is_unit_ideal()) return I;
    std::string const t = fresh_name(I.ring(), "t");
    RingPtr ext = prepend_vars(I.ring(), {t});
    Poly const tv = Poly::variable(ext, t);
    Poly const one_minus_t = Poly::constant(ext, 1) - tv;
    std::vector<Poly> gens;
    for (const auto& g : I.generators()) gens.push_back(tv * g.embed(ext));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.embed(ext));
    return eliminate(Ideal(ext, std::move(gens)), {t}, I.ring());
}

Ideal ideal_colon(const Ideal& I, const Poly& p)
{
    if (p.is_zero()) throw DomainError("colon by zero");
    if (I.is_zero()) return I;
    if (I.contains(p)) return Ideal::unit(I.ring());
    if (p.is_constant()) return I;
    Ideal const cap = ideal_intersect(I, Ideal(I.ring(), {p}));
    std::vector<Poly> q;
    for (const auto& g : cap.generators()) {
        auto d = divide_exact(g, p);
        if (!d) throw Error("internal: intersection element not divisible");
        q.push_back(*d);
    }
    return Ideal(I.ring(), std::move(q));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J)
{
    if (J.is_zero()) throw DomainError("colon by the zero ideal");
    std::optional<Ideal> acc;
    for (const auto& j : J.generators()) {
        Ideal c = ideal_colon(I, j);
        acc = acc ? ideal_intersect(*acc, c) : c;
        if (acc->is_zero()) break;
    }
    return *acc;
}

bool localized_member(const Poly& p, const Ideal& I, const Ideal& P)
{
    if (I.is_zero()) throw DomainError("localized membership in the zero ideal");
    if (I.contains(p)) return true;
    Ideal const c = ideal_colon(I, p);
    return std::any_of(c.generators().begin(), c.generators().end(), [&](const Poly& g) { return !P.contains(g); });
}

Ideal content_ideal(const Poly& p, std::size_t var, const RingPtr& base)
{
    return Ideal(base, content_generators(p, var, base));
}

// ---------------------------------------------------------------- Localization

bool Localization::member(const Poly& p, const Ideal& I) const
{
    if (p.is_zero()) return true;
    if (I.is_zero()) return false;
    if (!prime) return I.contains(p);
    return localized_member(p, I, *prime);
}

bool Localization::contains(const Ideal& I, const Ideal& J) const
{
    return std::all_of(J.generators().begin(), J.generators().end(), [&](const Poly& g) { return member(g, I); });
}

bool Localization::is_unit(const Poly& p) const
{
    if (p.is_zero()) throw DomainError("unit test on zero");
    if (!prime) return p.is_constant();
    return !prime->contains(p);
}

// ---------------------------------------------------------------- FracIdeal

FracIdeal::FracIdeal(Ideal num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (num_.is_zero()) throw DomainError("zero fractional ideal");
    if (den_.is_zero()) throw DomainError("zero denominator");
    require_same_ring(Poly(num_.ring()), den_);
    Scalar const lc = den_.leading().coeff;
    if (lc != 1) den_ = den_.monic();
}

FracIdeal::FracIdeal(Ideal num) : FracIdeal(num, Poly::constant(num.ring(), 1)) {}

FracIdeal FracIdeal::principal(const Fraction& x)
{
    if (x.is_zero()) throw DomainError("zero fractional ideal");
    return FracIdeal(Ideal(x.ring(), {x.num}), x.den);
}

std::vector<Fraction> FracIdeal::generators() const
{
    std::vector<Fraction> out;
    for (const auto& g : num_.generators()) out.emplace_back(g, den_);
    return out;
}

std::string FracIdeal::to_string() const
{
    if (den_.is_one()) return num_.to_string();
    return "frac(" + num_.to_string() + ", " + den_.to_string() + ")";
}

FracIdeal parse_frac_ideal(std::string_view text, const RingPtr& ring)
{
    std::size_t off = 0;
    std::string_view s = trim(text, off);
    if (auto body = unwrap(s, "frac", off)) {
        auto parts = split_top_level(*body, off);
        if (parts.size() != 2) throw ParseError("frac(...) takes an ideal and a denominator", off);
        Ideal num = parse_ideal(parts[0].first, ring);
        std::size_t doff = parts[1].second;
        Poly den = parse_poly(trim(parts[1].first, doff), ring);
        if (den.is_zero()) throw ParseError("zero denominator", doff);
        if (num.is_zero()) throw DomainError("zero fractional ideal");
        return FracIdeal(std::move(num), std::move(den));
    }
    auto body = unwrap(s, "ideal", off);
    if (!body) body = unwrap(s, "", off);
    if (!body) throw ParseError("expected frac(...), ideal(...) or (...)", off);
    auto elems = parse_element_list(*body, off, ring);
    // common denominator
    Poly den = Poly::constant(ring, 1);
    for (const auto& e : elems)
        if (!e.den.is_constant()) {
            Poly g = poly_gcd(den, e.den);
            den = den * *divide_exact(e.den, g);
        }
    std::vector<Poly> nums;
    for (const auto& e : elems) nums.push_back(e.num * *divide_exact(den, e.den));
    Ideal num(ring, std::move(nums));
    if (num.is_zero()) throw DomainError("zero fractional ideal");
    return FracIdeal(std::move(num), std::move(den));
}

FracIdeal frac_product(const FracIdeal& A, const FracIdeal& B)
{
    return FracIdeal(ideal_product(A.num(), B.num()), A.den() * B.den());
}

FracIdeal frac_sum(const FracIdeal& A, const FracIdeal& B)
{
    if (A.den() == B.den()) return FracIdeal(ideal_sum(A.num(), B.num()), A.den());
    return FracIdeal(ideal_sum(ideal_scale(A.num(), B.den()), ideal_scale(B.num(), A.den())), A.den() * B.den());
}

FracIdeal frac_scale(const FracIdeal& A, const Fraction& z)
{
    if (z.is_zero()) throw DomainError("scaling by zero");
    return FracIdeal(ideal_scale(A.num(), z.num), A.den() * z.den);
}

FracIdeal frac_intersect(const FracIdeal& A, const FracIdeal& B)
{
    if (A.den() == B.den()) return FracIdeal(ideal_intersect(A.num(), B.num()), A.den());
    return FracIdeal(ideal_intersect(ideal_scale(A.num(), B.den()), ideal_scale(B.num(), A.den())), A.den() * B.den());
}

bool frac_member(const Fraction& x, const FracIdeal& A, const Localization& L)
{
    if (x.is_zero()) return true;
    // a/b ∈ (1/d)N  iff  a·d ∈ b·N
    if (x.den.is_one()) return L.member(x.num * A.den(), A.num());
    return L.member(x.num * A.den(), ideal_scale(A.num(), x.den));
}

bool frac_contains(const FracIdeal& A, const FracIdeal& B, const Localization& L)
{
    Ideal const target = B.den().is_constant() ? A.num() : ideal_scale(A.num(), B.den());
    for (const auto& g : B.num().generators())
        if (!L.member(g * A.den(), target)) return false;
    return true;
}

bool frac_equal(const FracIdeal& A, const FracIdeal& B, const Localization& L)
{
    return frac_contains(A, B, L) && frac_contains(B, A, L);
}

FracIdeal frac_colon(const FracIdeal& A, const FracIdeal& B)
{
    // (N/d : M/e) = (e/d)·(N :_K M) and (N :_K M) = (1/m)((mN) :_R M), m ∈ M
    const Poly& m = B.num().generators().front();
    Ideal const c = ideal_colon(ideal_scale(A.num(), m), B.num());
    return FracIdeal(ideal_scale(c, B.den()), A.den() * m);
}

FracIdeal frac_inverse(const FracIdeal& F) { return frac_colon(FracIdeal::unit(F.ring()), F); }

Ideal frac_contract(const FracIdeal& A)
{
    if (A.den().is_constant()) return A.num();
    Ideal const cap = ideal_intersect(A.num(), Ideal(A.ring(), {A.den()}));
    std::vector<Poly> g;
    for (const auto& p : cap.generators()) g.push_back(*divide_exact(p, A.den()));
    return Ideal(A.ring(), std::move(g));
}

FracIdeal frac_simplify(const FracIdeal& A, const Localization& L)
{
    std::vector<Poly> gens = A.num().generators();
    Poly den = A.den();
    if (!den.is_constant()) {
        std::vector<Poly> all = gens;
        all.push_back(den);
        Poly const g = poly_gcd(all);
        if (!g.is_constant()) {
            for (auto& p : gens) p = *divide_exact(p, g);
            den = *divide_exact(den, g);
        }
    }
    Ideal num(A.ring(), gens);
    if (num.basis().size() <= num.generators().size()) num = num.canonical();
    gens = num.generators();
    // drop generators that are redundant in the localization
    for (std::size_t i = gens.size(); i-- > 0 && gens.size() > 1;) {
        std::vector<Poly> others;
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (k != i) others.push_back(gens[k]);
        if (L.member(gens[i], Ideal(A.ring(), others))) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    }
    if (gens.size() == 1 && L.is_unit(gens.front())) gens = {Poly::constant(A.ring(), 1)};
    return FracIdeal(Ideal(A.ring(), std::move(gens)), std::move(den));
}

}  // namespace semistar
