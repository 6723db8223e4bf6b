#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semistar/groebner.hpp"
#include "semistar/poly.hpp"

namespace semistar {

/// Finitely generated ideal of a polynomial ring.  Immutable; copies share a
/// lazily filled grevlex Groebner basis cache.
class Ideal {
  public:
    /// Zero generators are dropped; an empty list is the zero ideal.
    Ideal(RingPtr ring, std::vector<Poly> gens);

    static Ideal unit(RingPtr ring);
    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    /// True iff every generator is a single term.
    bool is_monomial() const;

    /// Reduced grevlex basis (cached).
    const std::vector<Poly>& basis() const;
    bool contains(const Poly& p) const;
    bool is_unit_ideal() const;
    Poly reduce(const Poly& p) const;

    Ideal embed(const RingPtr& target) const;
    /// Ideal generated by the reduced basis.
    Ideal canonical() const { return Ideal(ring_, basis()); }

    /// `(g1, g2, ...)`.
    std::string to_string() const;

  private:
    struct Cache;
    RingPtr ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Parses `ideal(X^2 - Y, X*Y)` or `(X, Y)`.
Ideal parse_ideal(std::string_view text, const RingPtr& ring);

/// Reduced Groebner basis under `order`; throws DomainError for the zero ideal.
std::vector<Poly> groebner(const Ideal& I, const MonomialOrder& order);

/// Membership by normal form; throws DomainError for the zero ideal.
bool ideal_member(const Poly& p, const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned n);
Ideal ideal_scale(const Ideal& I, const Poly& p);

/// J ⊆ I.
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);

/// I ∩ J via elimination of an auxiliary variable from t·I + (1-t)·J.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
/// (I : p) = (I ∩ (p)) / p.
Ideal ideal_colon(const Ideal& I, const Poly& p);
/// (I : J) = ⋂ (I : j).  Throws DomainError when J is zero.
Ideal ideal_colon(const Ideal& I, const Ideal& J);

/// I ∩ k[remaining vars], returned in `target`, which must contain every
/// variable not listed in `names`.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& names, const RingPtr& target);

/// p ∈ I·R_P, decided by (I : p) ⊄ P.  P must be a (validated) prime.
bool localized_member(const Poly& p, const Ideal& I, const Ideal& P);

/// Integral closure of a monomial ideal: the lattice points of its Newton
/// polyhedron, returned by minimal monomial generators.  Throws Unsupported
/// on a non-monomial generator.
Ideal monomial_integral_closure(const Ideal& I);

/// Whether the lattice point `m` lies in conv(points) + R_{>=0}^n.
/// Decided exactly by a rational simplex.
bool in_newton_polyhedron(const std::vector<std::vector<long>>& points, const std::vector<long>& m);

/// Content ideal in `base` of a polynomial in `var`.
Ideal content_ideal(const Poly& p, std::size_t var, const RingPtr& base);

// ------------------------------------------------------------- localization

/// A polynomial ring R or its localization R_P at a prime P.  Ideal
/// statements are made in this ring; all computations happen in R.
struct Localization {
    RingPtr ring;
    std::optional<Ideal> prime;

    /// p ∈ I·R_P (plain membership without a prime).
    bool member(const Poly& p, const Ideal& I) const;
    /// J·R_P ⊆ I·R_P.
    bool contains(const Ideal& I, const Ideal& J) const;
    bool equal(const Ideal& I, const Ideal& J) const { return contains(I, J) && contains(J, I); }
    /// Invertible in R_P.
    bool is_unit(const Poly& p) const;
};

// ------------------------------------------------------------- FracIdeal

/// (1/den)·num, a nonzero finitely generated fractional ideal.
class FracIdeal {
  public:
    FracIdeal(Ideal num, Poly den);
    explicit FracIdeal(Ideal num);

    static FracIdeal principal(const Fraction& x);
    static FracIdeal unit(const RingPtr& ring) { return FracIdeal(Ideal::unit(ring)); }

    const Ideal& num() const { return num_; }
    const Poly& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }
    bool is_integral() const { return den_.is_constant(); }

    /// Generators as elements of the fraction field.
    std::vector<Fraction> generators() const;

    std::string to_string() const;

  private:
    Ideal num_;
    Poly den_;
};

/// Parses `frac(ideal(...), den)`, `ideal(...)`, `(a, b/c, ...)`.
FracIdeal parse_frac_ideal(std::string_view text, const RingPtr& ring);

FracIdeal frac_product(const FracIdeal& A, const FracIdeal& B);
FracIdeal frac_sum(const FracIdeal& A, const FracIdeal& B);
FracIdeal frac_scale(const FracIdeal& A, const Fraction& z);
FracIdeal frac_intersect(const FracIdeal& A, const FracIdeal& B);

/// κ ∈ A (in the localization).
bool frac_member(const Fraction& x, const FracIdeal& A, const Localization& L);
/// B ⊆ A.
bool frac_contains(const FracIdeal& A, const FracIdeal& B, const Localization& L);
bool frac_equal(const FracIdeal& A, const FracIdeal& B, const Localization& L);
/// (A :_K B) = {x ∈ K : xB ⊆ A}.
FracIdeal frac_colon(const FracIdeal& A, const FracIdeal& B);
/// (D : F), computed as den·(1/m)((m) : num) for a nonzero m ∈ num.
FracIdeal frac_inverse(const FracIdeal& F);
/// A ∩ D as an integral ideal.
Ideal frac_contract(const FracIdeal& A);

/// Removes common factors of numerator generators and denominator and
/// drops generators that are redundant in the localization.
FracIdeal frac_simplify(const FracIdeal& A, const Localization& L);

}  // namespace semistar
