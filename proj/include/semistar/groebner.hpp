#pragma once

#include <span>
#include <vector>

#include "semistar/poly.hpp"

namespace semistar {

/// Reduced Groebner basis (monic, auto-reduced, sorted by descending leading
/// monomial) of the ideal generated by `gens`.  Buchberger's algorithm with
/// the product and chain criteria.  Zero generators are ignored; an empty
/// result means the zero ideal.
std::vector<Poly> groebner_basis(std::span<const Poly> gens, const MonomialOrder& order);

/// Fully reduced remainder of `p` modulo a Groebner basis.
Poly normal_form(const Poly& p, std::span<const Poly> basis, const MonomialOrder& order);

/// S-polynomial of f and g under `order`.
Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);

}  // namespace semistar
