#include "semistar/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "semistar/errors.hpp"

namespace semistar {

// ---------------------------------------------------------------- Ring

Ring::Ring(Field field, std::vector<std::string> vars) : field_(field), vars_(std::move(vars))
{
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty()) throw InvalidInput("empty variable name");
        for (std::size_t j = 0; j < i; ++j)
            if (vars_[i] == vars_[j]) throw InvalidInput("duplicate variable '" + vars_[i] + "'");
    }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

std::size_t Ring::require_index(std::string_view name) const
{
    auto i = index_of(name);
    if (!i) throw InvalidInput("unknown variable '" + std::string(name) + "' in " + describe());
    return *i;
}

std::string Ring::describe() const
{
    std::string s = field_.name() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    return s + "]";
}

RingPtr make_ring(Field field, std::vector<std::string> vars)
{
    return std::make_shared<const Ring>(field, std::move(vars));
}

RingPtr prepend_vars(const RingPtr& ring, const std::vector<std::string>& extra)
{
    std::vector<std::string> v = extra;
    v.insert(v.end(), ring->vars().begin(), ring->vars().end());
    return make_ring(ring->field(), std::move(v));
}

RingPtr append_vars(const RingPtr& ring, const std::vector<std::string>& extra)
{
    std::vector<std::string> v = ring->vars();
    v.insert(v.end(), extra.begin(), extra.end());
    return make_ring(ring->field(), std::move(v));
}

RingPtr drop_vars(const RingPtr& ring, const std::vector<std::string>& names)
{
    std::vector<std::string> v;
    for (const auto& x : ring->vars())
        if (std::find(names.begin(), names.end(), x) == names.end()) v.push_back(x);
    return make_ring(ring->field(), std::move(v));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------- Monomial

std::uint64_t Monomial::degree() const
{
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
}

bool Monomial::is_one() const
{
    return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
}

// ---------------------------------------------------------------- orders

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi)
{
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const
{
    switch (kind_) {
    case Kind::lex:
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    case Kind::grevlex:
        return grevlex_range(a, b, 0, a.size());
    case Kind::elimination: {
        std::size_t const k = std::min(block_, a.size());
        int c = grevlex_range(a, b, 0, k);
        if (c != 0) return c;
        return grevlex_range(a, b, k, a.size());
    }
    }
    return 0;
}

// ---------------------------------------------------------------- Poly

void require_same_ring(const Poly& a, const Poly& b)
{
    if (!same_ring(a.ring(), b.ring()))
        throw RingMismatch("ring mismatch: " + a.ring()->describe() + " vs " + b.ring()->describe());
}

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms))
{
    for (const auto& t : terms_)
        if (t.mono.size() != ring_->nvars()) throw InvalidInput("monomial length does not match ring");
    canonicalize();
}

void Poly::canonicalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return kGrevlex.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    const Field& f = ring_->field();
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = f.add(out.back().coeff, t.coeff);
        } else {
            out.push_back({std::move(t.mono), f.normalize(t.coeff)});
        }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(out);
}

Poly Poly::constant(RingPtr ring, const Scalar& c)
{
    std::size_t const n = ring->nvars();
    return Poly(std::move(ring), {Term{Monomial(n), c}});
}

Poly Poly::variable(RingPtr ring, std::string_view name, std::uint32_t power)
{
    Monomial m(ring->nvars());
    m[ring->require_index(name)] = power;
    return Poly(std::move(ring), {Term{std::move(m), 1}});
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Scalar& c)
{
    return Poly(std::move(ring), {Term{m, c}});
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

std::uint64_t Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

std::uint32_t Poly::degree_in(std::size_t var) const
{
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

const Term& Poly::leading(const MonomialOrder& order) const
{
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    if (order == kGrevlex) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (order.compare(t.mono, best->mono) > 0) best = &t;
    return *best;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
}

namespace {

Poly merge_add(const Poly& a, const Poly& b, bool subtract)
{
    require_same_ring(a, b);
    const Field& f = a.field();
    std::vector<Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        int c;
        if (ia == ea) c = -1;
        else if (ib == eb) c = 1;
        else c = kGrevlex.compare(ia->mono, ib->mono);
        if (c > 0) {
            out.push_back(*ia++);
        } else if (c < 0) {
            out.push_back({ib->mono, subtract ? f.neg(ib->coeff) : ib->coeff});
            ++ib;
        } else {
            Scalar s = subtract ? f.sub(ia->coeff, ib->coeff) : f.add(ia->coeff, ib->coeff);
            if (s != 0) out.push_back({ia->mono, std::move(s)});
            ++ia;
            ++ib;
        }
    }
    Poly r(a.ring());
    return Poly(a.ring(), std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) { return merge_add(a, b, false); }
Poly operator-(const Poly& a, const Poly& b) { return merge_add(a, b, true); }

Poly operator*(const Poly& a, const Poly& b)
{
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring());
    const Field& f = a.field();
    std::map<Monomial, Scalar> acc;
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) {
            auto [it, inserted] = acc.try_emplace(s.mono * t.mono, 0);
            it->second = f.add(it->second, f.mul(s.coeff, t.coeff));
        }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) terms.push_back({m, c});
    return Poly(a.ring(), std::move(terms));
}

Poly Poly::scaled(const Scalar& c) const
{
    Scalar const n = field().normalize(c);
    if (n == 0) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, n);
    return r;
}

Poly Poly::times_monomial(const Monomial& m, const Scalar& c) const
{
    Scalar const n = field().normalize(c);
    if (n == 0) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) {
        t.mono = t.mono * m;
        t.coeff = field().mul(t.coeff, n);
    }
    // multiplication by a monomial preserves any monomial order
    return r;
}

Poly Poly::pow(unsigned n) const
{
    Poly r = constant(ring_, 1);
    Poly base = *this;
    while (n) {
        if (n & 1u) r = r * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return r;
}

Poly Poly::monic() const
{
    if (is_zero()) return *this;
    return scaled(field().inv(terms_.front().coeff));
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b)
{
    require_same_ring(a, b);
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    const Field& f = a.field();
    const Term& lb = b.leading();
    Scalar const inv_lb = f.inv(lb.coeff);
    Poly rem = a;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (!lb.mono.divides(lr.mono)) return std::nullopt;
        Monomial m = lr.mono / lb.mono;
        Scalar c = f.mul(lr.coeff, inv_lb);
        rem = rem - b.times_monomial(m, c);
        quot.push_back({std::move(m), std::move(c)});
    }
    return Poly(a.ring(), std::move(quot));
}

std::vector<Poly> Poly::coefficients_in(std::size_t var, const RingPtr& target) const
{
    std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
    // map remaining variables into target by name
    std::vector<std::size_t> idx(ring_->nvars(), SIZE_MAX);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (i == var) continue;
        auto j = target->index_of(ring_->vars()[i]);
        if (j) idx[i] = *j;
    }
    if (target->index_of(ring_->vars()[var])) throw InvalidInput("target ring still contains the coefficient variable");
    for (const auto& t : terms_) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            if (i == var || t.mono[i] == 0) continue;
            if (idx[i] == SIZE_MAX) throw RingMismatch("variable '" + ring_->vars()[i] + "' missing from target ring");
            m[idx[i]] = t.mono[i];
        }
        buckets[t.mono[var]].push_back({std::move(m), t.coeff});
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.emplace_back(target, std::move(b));
    return out;
}

Poly Poly::embed(const RingPtr& target) const
{
    if (same_ring(ring_, target)) {
        Poly r = *this;
        r.ring_ = target;
        return r;
    }
    if (!(ring_->field() == target->field())) throw RingMismatch("cannot embed across fields");
    std::vector<std::size_t> idx(ring_->nvars(), SIZE_MAX);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        auto j = target->index_of(ring_->vars()[i]);
        if (j) idx[i] = *j;
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (idx[i] == SIZE_MAX)
                throw RingMismatch("variable '" + ring_->vars()[i] + "' missing from " + target->describe());
            m[idx[i]] = t.mono[i];
        }
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly(target, std::move(terms));
}

Poly Poly::substitute(std::size_t var, const Poly& value) const
{
    require_same_ring(*this, value);
    std::vector<Poly> powers{constant(ring_, 1)};
    Poly out(ring_);
    for (const auto& t : terms_) {
        while (powers.size() <= t.mono[var]) powers.push_back(powers.back() * value);
        Monomial m = t.mono;
        std::uint32_t const e = m[var];
        m[var] = 0;
        out = out + powers[e].times_monomial(m, t.coeff);
    }
    return out;
}

namespace {

std::string scalar_string(const Scalar& c)
{
    return c.get_den() == 1 ? c.get_num().get_str() : c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace

std::string Poly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        bool negative = false;
        // print F_p residues above p/2 as negatives for readability
        if (field().is_rationals()) {
            negative = c < 0;
        } else {
            unsigned long const p = field().characteristic();
            if (c.get_num() > p / 2) negative = true, c = c - p;
        }
        if (negative) c = -c;
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        bool const one = t.mono.is_one();
        std::string mono;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars()[i];
            if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
        }
        if (one) {
            os << scalar_string(c);
        } else if (c == 1) {
            os << mono;
        } else {
            os << scalar_string(c) << "*" << mono;
        }
    }
    return os.str();
}

bool operator==(const Poly& a, const Poly& b)
{
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

// ---------------------------------------------------------------- Fraction

Fraction::Fraction(Poly n, Poly d) : num(std::move(n)), den(std::move(d))
{
    require_same_ring(num, den);
    if (den.is_zero()) throw DomainError("zero denominator");
    if (den.is_constant()) {
        num = num.scaled(num.field().inv(den.leading().coeff));
        den = Poly::constant(num.ring(), 1);
    }
}

Fraction::Fraction(Poly n) : Fraction(n, Poly::constant(n.ring(), 1)) {}

bool Fraction::equals(const Fraction& o) const { return num * o.den == o.num * den; }

std::string Fraction::to_string() const
{
    if (den.is_one()) return num.to_string();
    auto wrap = [](const Poly& p) {
        std::string s = p.to_string();
        return p.terms().size() > 1 || s.find('/') != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num) + "/" + wrap(den);
}

Fraction operator+(const Fraction& a, const Fraction& b)
{
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

Fraction operator-(const Fraction& a, const Fraction& b)
{
    if (a.den == b.den) return {a.num - b.num, a.den};
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}

Fraction operator*(const Fraction& a, const Fraction& b) { return {a.num * b.num, a.den * b.den}; }

Fraction operator/(const Fraction& a, const Fraction& b)
{
    if (b.num.is_zero()) throw DomainError("division by zero");
    return {a.num * b.den, a.den * b.num};
}

// ---------------------------------------------------------------- parser

namespace {

class ExprParser {
  public:
    ExprParser(std::string_view text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

    Fraction parse()
    {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
        Fraction f = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return f;
    }

  private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Fraction expr()
    {
        Fraction acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    Fraction term()
    {
        Fraction acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                std::size_t const at = pos_;
                Fraction d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    Fraction unary()
    {
        if (eat('-')) {
            Fraction f = unary();
            return {-f.num, f.den};
        }
        if (eat('+')) return unary();
        return power();
    }

    Fraction power()
    {
        Fraction base = atom();
        if (eat('^')) {
            skip();
            std::size_t const start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected exponent", pos_);
            unsigned long const e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (e > 1000) throw ParseError("exponent too large", start);
            return {base.num.pow(static_cast<unsigned>(e)), base.den.pow(static_cast<unsigned>(e))};
        }
        return base;
    }

    Fraction atom()
    {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
        char const c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Fraction f = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t const start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class v(std::string(s_.substr(start, pos_ - start)));
            return Fraction(Poly::constant(ring_, Scalar(v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t const start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string const name(s_.substr(start, pos_ - start));
            if (!ring_->index_of(name))
                throw ParseError("unknown variable '" + name + "' for ring " + ring_->describe(), start);
            return Fraction(Poly::variable(ring_, name));
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    std::string_view s_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Fraction parse_fraction(std::string_view text, const RingPtr& ring) { return ExprParser(text, ring).parse(); }

Poly parse_poly(std::string_view text, const RingPtr& ring)
{
    Fraction f = parse_fraction(text, ring);
    if (!f.den.is_constant()) {
        auto q = divide_exact(f.num, f.den);
        if (!q) throw ParseError("'" + std::string(text) + "' is not a polynomial", 0);
        return *q;
    }
    return f.num;
}

}  // namespace semistar
