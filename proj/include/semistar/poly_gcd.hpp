#pragma once

#include <utility>
#include <vector>

#include "semistar/poly.hpp"

namespace semistar {

/// Monic (grevlex) gcd over the coefficient field.  Uses content /
/// primitive-part recursion on one variable at a time with a primitive
/// pseudo-remainder sequence.  Throws DomainError if both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// gcd of a list (empty or all-zero lists throw).
Poly poly_gcd(const std::vector<Poly>& polys);

/// f/g in lowest terms: common factors removed, denominator monic.
std::pair<Poly, Poly> reduce_rational(const Poly& f, const Poly& g);

/// Coefficients of the powers of variable `var`, kept in the same ring.
std::vector<Poly> coefficients_same_ring(const Poly& p, std::size_t var);

/// Nonzero coefficients of p viewed as a polynomial in `var`, mapped into
/// `base` (the ring without `var`).  These generate the content ideal.
std::vector<Poly> content_generators(const Poly& p, std::size_t var, const RingPtr& base);

}  // namespace semistar
