#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semistar/ideal.hpp"

namespace semistar {

/// D = k[vars], optionally localized at a validated prime P.
struct BaseDomain {
    RingPtr ring;
    std::optional<Ideal> prime;

    Localization loc() const { return {ring, prime}; }
    bool is_local() const { return prime.has_value(); }
    /// `Q[X,Y]_(X, Y)` style.
    std::string describe() const;
};

/// Throws InvalidInput for a reducible or improper generator and
/// Unsupported for presentations the validator cannot decide.  Accepted:
/// ideals generated by linear forms, and principal ideals whose generator
/// is linear in some variable with unit content there, or univariate of
/// degree at most 3 without roots in the field.
void validate_prime(const Ideal& P);

BaseDomain make_base_domain(const Field& field, std::vector<std::string> vars, std::optional<Ideal> prime = {});

/// An overring of D with an explicit presentation (R[W]/(bW - a))_S or R_Q.
class Overring {
  public:
    enum class Kind { Base, Adjunction, Localization, Dvr };

    /// D itself.
    static Overring base(const BaseDomain& D);
    /// D[a/b]; gcd(a, b) must be a unit of D.
    static Overring adjunction(const BaseDomain& D, const Poly& a, const Poly& b);
    /// D_Q for a validated prime Q contained in the localization prime of D.
    static Overring localization(const BaseDomain& D, const Ideal& Q);
    /// D_(p) for an irreducible p.
    static Overring dvr(const BaseDomain& D, const Poly& p);

    Kind kind() const { return kind_; }
    const BaseDomain& domain() const { return base_; }
    bool quasilocal() const { return kind_ != Kind::Adjunction && (kind_ != Kind::Base || base_.is_local()); }
    /// The prime whose complement is inverted (R_P's prime for D and D[a/b]).
    const std::optional<Ideal>& inverted_prime() const { return inv_prime_; }

    /// Adjoined element a/b (adjunctions only).
    const Poly& adj_num() const { return a_; }
    const Poly& adj_den() const { return b_; }
    /// Presentation ring R[W] and relation ideal (bW - a); empty relation
    /// for the other kinds.
    const RingPtr& presentation_ring() const { return pres_ring_; }
    const Ideal& relation() const { return relation_; }

    /// r ∈ I·T for r, I in R.
    bool member(const Poly& r, const Ideal& I) const;
    /// (I·R[a/b]) ∩ R for adjunctions, I for D itself; nullopt for the
    /// localization kinds.  I·T ∩ D is the localization of this at the
    /// inverted prime.
    std::optional<Ideal> contraction(const Ideal& I) const;

    std::string describe() const;

  private:
    Overring(BaseDomain D, Kind k);

    BaseDomain base_;
    Kind kind_;
    Poly a_, b_;
    RingPtr pres_ring_;
    std::string aux_;
    Ideal relation_;
    std::optional<Ideal> inv_prime_;
};

/// κ ∈ T.
bool overring_contains_element(const Overring& T, const Fraction& k);
/// κ invertible in T.  Throws DomainError for κ = 0.
bool is_unit(const Overring& T, const Fraction& k);
bool is_unit(const BaseDomain& D, const Fraction& k);

/// κ ∈ F·T.
bool extend_and_test(const FracIdeal& F, const Overring& T, const Fraction& k);
/// B·T ⊆ A·T.
bool extension_contains(const Overring& T, const FracIdeal& A, const FracIdeal& B);

struct Principality {
    std::optional<Fraction> generator;
    /// A missing generator is a proof of non-principality only for
    /// quasilocal T; otherwise it means "no single-generator witness".
    bool decisive;
};

/// A generator a_i of F with F·T = a_i·T, if one exists among F's generators.
Principality principality_in_overring(const FracIdeal& F, const Overring& T);

}  // namespace semistar
