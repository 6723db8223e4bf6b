#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semistar/eab.hpp"

namespace semistar {

/// D[Z] and K(Z) over a base domain; Z is appended to the base variables.
struct FunctionRing {
    BaseDomain base;
    RingPtr ring;  ///< R[Z]
    std::size_t z;

    /// c(p) as an ideal of R.
    Ideal content(const Poly& p) const;
    Poly poly(std::string_view text) const { return parse_poly(text, ring); }
    Fraction element(std::string_view text) const { return parse_fraction(text, ring); }
};

FunctionRing make_function_ring(const BaseDomain& D, const std::string& var = "Z");

struct Membership {
    enum class Status { Member, NonMember, Unknown };

    Status status = Status::Unknown;
    /// Member: the representation used.  NonMember: the certificate rule.
    std::string witness;
    std::string scope;
    std::vector<std::string> assumptions;
    std::optional<Poly> f, g, h;
};

const char* membership_name(Membership::Status s);

/// Ring equalities known for a scenario; enable the certificate rules.
struct Certificates {
    bool na_equals_dz = false;  ///< Na(D,⋆) = D(Z)
    bool kn_equals_dz = false;  ///< KN(D,⋆) = D(Z)
    /// A finite list equal to ℒ_min, so KN = ⋂ L(Z) over it.
    std::optional<std::vector<NamedOverring>> lmin;
};

/// c(f)^⋆ ⊆ c(g)^⋆ and c(g) ⋆-invertible.
Verdict na_witness_check(const FunctionRing& A, const Poly& f, const Poly& g, const StarOp& op);

/// Searches f0·m / g0·m over the reduced form and the multipliers.  The
/// unit-content certificate applies for d (or a certified Na = D(Z)) over a
/// local base.
Membership na_member_search(const FunctionRing& A, const Fraction& z, const StarOp& op,
                            const std::vector<Poly>& multipliers = {}, const Certificates& certs = {});

/// c(fh) ⊆ c(gh)^⋆ for h = 1, then each h of the pool.  Never NonMember.
Membership kr_member_search(const FunctionRing& A, const Poly& f, const Poly& g, const StarOp& op,
                            const std::vector<Poly>& h_pool = {});

/// zg ∈ D[Z], c(zg) ⊆ c(g)^⋆ and c(g) passes the e.a.b. probe.
Verdict knc_witness_check(const FunctionRing& A, const Fraction& z, const Poly& g, const StarOp& op,
                          const ProbePool& pool);

/// As knc_witness_check with c(g) almost ⋆-e.a.b. against the list.
Verdict sknc_witness_check(const FunctionRing& A, const Fraction& z, const Poly& g, const StarOp& op,
                           const std::vector<NamedOverring>& strong_list);

Membership knc_member_search(const FunctionRing& A, const Fraction& z, const StarOp& op, const ProbePool& pool,
                             const std::vector<Poly>& multipliers = {}, const Certificates& certs = {});

/// z ∈ L(Z) for each listed localization, by the unit-content criterion on
/// the reduced representation.  Adjunctions give Unknown.
Membership skn_member_vs_list(const FunctionRing& A, const Fraction& z, const std::vector<NamedOverring>& list);

/// c(f)^{m+1} c(g) = c(f)^m c(fg), m = deg_Z g.
bool dedekind_mertens_check(const FunctionRing& A, const Poly& f, const Poly& g);

/// (c(g) c(h))^⋆ = c(gh)^⋆.  A failure notes whether c(g) passed the
/// e.a.b. probe.
Verdict content_star_multiplicativity(const FunctionRing& A, const Poly& g, const Poly& h, const StarOp& op,
                                      const ProbePool& pool);

/// With g = a0 + a1 Z + ... : each a_k/g and each α/g (α in J^⋆) passes
/// knc_witness_check.  An ideal failing the e.a.b. probe gives Unknown with
/// scope "precondition".
Verdict knc_principalization_check(const FunctionRing& A, const Ideal& J, const StarOp& op,
                                   const std::vector<Poly>& alpha_probes, const ProbePool& pool);

/// Difference and product witnesses of every pair pass knc_witness_check.
Verdict ring_closure_fuzz(const FunctionRing& A, const std::vector<std::pair<Poly, Poly>>& members, const StarOp& op,
                          const ProbePool& pool);

}  // namespace semistar
