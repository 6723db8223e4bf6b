#pragma once

#include <vector>

#include "semistar/star.hpp"

namespace semistar {

/// The probe sequence used for F: (1), F, the ideal of squared generators
/// of F, then the pool (duplicates dropped).
std::vector<FracIdeal> eab_probe_sequence(const FracIdeal& F, const ProbePool& pool);

/// Checks ((F·H)^⋆ :_K F) = H^⋆ for each probe H.  A failure is reported as
/// G = (x), H with (FG)^⋆ ⊆ (FH)^⋆ but G^⋆ ⊄ H^⋆.
Verdict is_eab_probe(const FracIdeal& F, const StarOp& op, const ProbePool& pool);

/// Re-evaluates a cancellation counterexample: true iff (FG)^⋆ ⊆ (FH)^⋆ and
/// G^⋆ ⊄ H^⋆.
bool replay_eab_counterexample(const FracIdeal& F, const FracIdeal& G, const FracIdeal& H, const StarOp& op);

/// (F·F⁻¹)^⋆ = D^⋆.
Verdict is_star_invertible(const FracIdeal& F, const StarOp& op);

/// F·L principal for every listed (quasilocal) overring.
Verdict is_almost_eab(const FracIdeal& F, const std::vector<NamedOverring>& overrings);

/// Necessary conditions for L to be a ⋆-monolocality: (τE)^⋆ ⊆ L for τ in
/// {1} ∪ taus and E in the probes, and every sample extends principally.
Verdict monolocality_check(const Overring& L, const StarOp& op, const std::vector<FracIdeal>& samples,
                           const std::vector<Fraction>& taus, const std::vector<FracIdeal>& probes);

}  // namespace semistar
