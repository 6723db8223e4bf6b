#pragma once

#include <string>
#include <vector>

#include "semistar/domain.hpp"

namespace semistar {

struct ProbePool {
    std::string name;
    std::vector<FracIdeal> ideals;
};

/// Bound from SEMISTAR_POOL_BOUND, else 2.
unsigned default_pool_bound();

/// All nonzero monomial ideals whose minimal generators have every exponent
/// at most `bound`, the unit ideal first.  Ordered by number of generators,
/// then total degree, then text.  At most `limit` ideals are kept.
ProbePool default_pool(const BaseDomain& D, unsigned bound, std::size_t limit = 400);

/// The pool with the unit ideal moved (or added) to the front.
ProbePool with_unit_first(ProbePool pool, const RingPtr& ring);

}  // namespace semistar
