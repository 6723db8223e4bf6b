#pragma once

#include <gmpxx.h>

#include <string>

namespace semistar {

using Scalar = mpq_class;

/// Exact coefficient field: the rationals or a prime field F_p.
///
/// Elements of F_p are carried as integer-valued Scalars in [0, p).  Every
/// arithmetic helper returns a normalized value, so two coefficients are
/// equal iff their Scalars compare equal.
class Field {
  public:
    static Field rationals();
    /// Throws std::invalid_argument unless p is prime.
    static Field prime(unsigned long p);

    bool is_rationals() const { return p_ == 0; }
    unsigned long characteristic() const { return p_; }

    Scalar normalize(const Scalar& a) const;
    Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
    Scalar neg(const Scalar& a) const { return normalize(-a); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

  private:
    explicit Field(unsigned long p) : p_(p) {}
    unsigned long p_ = 0;
};

/// Parses "Q" or "F7" / "GF(7)" / "Fp(7)".
Field parse_field(const std::string& text);

}  // namespace semistar
