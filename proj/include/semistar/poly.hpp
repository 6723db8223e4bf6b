#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semistar/field.hpp"

namespace semistar {

/// Coefficient field plus an ordered list of variable names.
class Ring {
  public:
    Ring(Field field, std::vector<std::string> vars);

    const Field& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    /// Index of a variable, or nullopt.
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require_index(std::string_view name) const;

    std::string describe() const;

    friend bool operator==(const Ring& a, const Ring& b)
    {
        return a.field_ == b.field_ && a.vars_ == b.vars_;
    }

  private:
    Field field_;
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> vars);

/// Same field, `extra` prepended to the variable list.
RingPtr prepend_vars(const RingPtr& ring, const std::vector<std::string>& extra);
/// Same field, `extra` appended to the variable list.
RingPtr append_vars(const RingPtr& ring, const std::vector<std::string>& extra);
/// Same field, the named variables removed.
RingPtr drop_vars(const RingPtr& ring, const std::vector<std::string>& names);

bool same_ring(const RingPtr& a, const RingPtr& b);

class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

    std::size_t size() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint64_t degree() const;
    bool is_one() const;
    bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// a / b; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

  private:
    std::vector<std::uint32_t> e_;
};

/// Total multiplicative order on monomials.
class MonomialOrder {
  public:
    enum class Kind { lex, grevlex, elimination };

    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    /// Block order: grevlex on the first `block` variables, ties broken by
    /// grevlex on the rest.  Eliminates the first block.
    static MonomialOrder elimination(std::size_t block) { return MonomialOrder(Kind::elimination, block); }

    Kind kind() const { return kind_; }
    std::size_t block() const { return block_; }

    /// Negative, zero, positive as a <, ==, > b.
    int compare(const Monomial& a, const Monomial& b) const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

  private:
    MonomialOrder(Kind k, std::size_t block) : kind_(k), block_(block) {}
    Kind kind_;
    std::size_t block_;
};

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Sparse polynomial with exact coefficients.  Terms are stored in
/// descending grevlex order without zero coefficients, so equality is
/// structural.
class Poly {
  public:
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, std::vector<Term> terms);

    static Poly constant(RingPtr ring, const Scalar& c);
    static Poly variable(RingPtr ring, std::string_view name, std::uint32_t power = 1);
    static Poly monomial(RingPtr ring, const Monomial& m, const Scalar& c = 1);

    const RingPtr& ring() const { return ring_; }
    const Field& field() const { return ring_->field(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// A single term.
    bool is_monomial() const { return terms_.size() == 1; }
    std::uint64_t total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;

    /// Leading term under `order`; the polynomial must be nonzero.
    const Term& leading(const MonomialOrder& order) const;
    const Term& leading() const { return terms_.front(); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Scalar& c) const;
    Poly times_monomial(const Monomial& m, const Scalar& c) const;
    Poly pow(unsigned n) const;

    /// Divides by the grevlex-leading coefficient (zero stays zero).
    Poly monic() const;

    /// Exact quotient a/b, or nullopt when b does not divide a.
    friend std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

    /// Coefficients of successive powers of variable `var`, each mapped into
    /// `target` (which must not contain `var`).
    std::vector<Poly> coefficients_in(std::size_t var, const RingPtr& target) const;

    /// Same polynomial read in `target`, matching variables by name.  Throws
    /// RingMismatch if a variable that occurs is missing from `target`.
    Poly embed(const RingPtr& target) const;

    /// Substitutes variable `var` by `value` (a polynomial in the same ring).
    Poly substitute(std::size_t var, const Poly& value) const;

    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b);

  private:
    void canonicalize();

    RingPtr ring_;
    std::vector<Term> terms_;
};

void require_same_ring(const Poly& a, const Poly& b);

/// Quotient of two polynomials; an element of the fraction field.
struct Fraction {
    Poly num;
    Poly den;

    Fraction(Poly n, Poly d);
    explicit Fraction(Poly n);

    const RingPtr& ring() const { return num.ring(); }
    bool is_zero() const { return num.is_zero(); }
    /// Representation-independent equality (cross-multiplication).
    bool equals(const Fraction& other) const;
    Fraction embed(const RingPtr& target) const { return {num.embed(target), den.embed(target)}; }
    std::string to_string() const;
};

Fraction operator+(const Fraction& a, const Fraction& b);
Fraction operator-(const Fraction& a, const Fraction& b);
Fraction operator*(const Fraction& a, const Fraction& b);
Fraction operator/(const Fraction& a, const Fraction& b);

/// Parses a rational expression such as `3*X^2*Y - 1/2*Z + 5` or
/// `Y/(X+Y*Z)` over `ring`.
Fraction parse_fraction(std::string_view text, const RingPtr& ring);
/// Parses a polynomial; a constant denominator is absorbed.
Poly parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace semistar
