#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semistar/domain.hpp"
#include "semistar/pool.hpp"
#include "semistar/verdict.hpp"

namespace semistar {

struct NamedOverring {
    std::string name;
    Overring ring;
};

/// A semistar operation on a fixed base domain, as a term tree.
class StarOp {
  public:
    enum class Kind { D, V, T, B, CustomGcd, Wedge, Tilde, AApprox, Induced, Meet, Custom };
    using Rule = std::function<FracIdeal(const FracIdeal&)>;

    static StarOp d(const BaseDomain& D);
    static StarOp v(const BaseDomain& D);
    /// Finite-type v; identical to v on finitely generated input.
    static StarOp t(const BaseDomain& D);
    /// Integral closure (monomial input only).
    static StarOp b(const BaseDomain& D);
    /// The gcd rule table on a local UFD base: principal ideals are closed,
    /// otherwise J = αI with I ⊆ M gives αM.  Requires a local base.
    static StarOp custom_gcd(const BaseDomain& D);
    /// E ↦ ⋂ E·T over the family.  Nonempty; all members over D.
    static StarOp wedge(const BaseDomain& D, std::vector<NamedOverring> family);
    /// E ↦ ⋂ E·D_Q.  Each Q must be a quasi-prime of `inner`.
    static StarOp tilde(const StarOp& inner, std::vector<Ideal> primes);
    /// G ↦ ⋃_H ((GH)^inner : H) over the pool (unit ideal always included).
    static StarOp a_approx(const StarOp& inner, ProbePool pool, unsigned bound);
    /// E ↦ E·T.
    static StarOp induced(NamedOverring T);
    static StarOp meet(std::vector<StarOp> ops);
    /// Arbitrary rule on generators; used for negative controls.
    static StarOp custom(const BaseDomain& D, std::string name, Rule rule);

    Kind kind() const;
    const BaseDomain& domain() const;
    const std::vector<StarOp>& children() const;
    const std::vector<NamedOverring>& overrings() const;
    const std::vector<Ideal>& primes() const;
    const ProbePool& pool() const;
    unsigned bound() const;
    const Rule& rule() const;

    /// Canonical term text, e.g. `tilde(custom_gcd_star, [(X, Y)])`.
    std::string to_string() const;

  private:
    struct Node;
    explicit StarOp(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

/// Names visible to the star grammar.  The overring `D` is builtin.
struct StarEnv {
    BaseDomain domain;
    std::vector<NamedOverring> overrings;
    std::vector<ProbePool> pools;

    const NamedOverring* find_overring(const std::string& name) const;
    const ProbePool* find_pool(const std::string& name) const;
};

/// Grammar: d | v | t | b | custom_gcd_star | wedge(T, ...) | induced(T)
/// | tilde(op, [(..), ...]) | a_approx(op, pool=NAME, bound=N) | meet(op, ...).
/// `pool=default` uses the default pool with the given bound.
StarOp parse_star(std::string_view text, const StarEnv& env);

/// How much is known about E^⋆.
enum class Exactness {
    Generators,   ///< finite generating set
    Decidable,    ///< exact membership, no generators
    Approximate,  ///< positive membership answers only
};

const char* exactness_name(Exactness e);

class IdealHandle {
  public:
    using Oracle = std::function<bool(const Fraction&)>;

    IdealHandle(FracIdeal input, FracIdeal result, const BaseDomain& D);
    IdealHandle(FracIdeal input, Exactness e, Oracle oracle);

    Exactness exactness() const { return exactness_; }
    bool exact() const { return result_.has_value(); }
    /// Throws Unsupported when no generators are known.
    const FracIdeal& ideal() const;
    const FracIdeal& input() const { return input_; }

    /// κ ∈ E^⋆.  For Approximate handles false means "not shown".
    bool contains(const Fraction& k) const { return oracle_(k); }
    /// G ⊆ E^⋆.
    bool contains(const FracIdeal& G) const;

    std::string to_string() const;

  private:
    FracIdeal input_;
    std::optional<FracIdeal> result_;
    Exactness exactness_;
    Oracle oracle_;
};

IdealHandle apply_star(const StarOp& op, const FracIdeal& F);

/// Scaling, monotonicity on comparable pairs, extensivity and idempotence.
/// Fails carries the label (⋆₁), (⋆₂) or (⋆₃).
Verdict check_axioms(const StarOp& op, const std::vector<FracIdeal>& probes, const std::vector<Fraction>& scalars);

struct StarComparison {
    enum class Relation { EQ, LEQ, GEQ, INCOMPARABLE, UNKNOWN };
    struct Witness {
        FracIdeal probe;
        Fraction element;  ///< in the larger closure, not in the smaller
    };

    Relation relation = Relation::UNKNOWN;
    /// Probe where op2 is strictly larger, and where op1 is.
    std::optional<Witness> op2_larger;
    std::optional<Witness> op1_larger;
    std::string detail;
};

const char* relation_name(StarComparison::Relation r);

/// Pointwise comparison of F^op1 and F^op2 on the probes.
StarComparison compare_stars(const StarOp& op1, const StarOp& op2, const std::vector<FracIdeal>& probes);

/// P^⋆ ∩ D = P.  Throws Unsupported if the closure has no generators.
bool quasi_prime_check(const Ideal& P, const StarOp& op);

/// Necessary condition for T to be a ⋆-overring: F^⋆ ⊆ F·T on the probes.
Verdict is_star_overring_probe(const Overring& T, const StarOp& op, const std::vector<FracIdeal>& probes);

}  // namespace semistar
