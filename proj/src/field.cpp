#include "semistar/field.hpp"

#include <cctype>
#include <stdexcept>

#include "semistar/errors.hpp"

namespace semistar {

namespace {

bool is_prime(unsigned long n)
{
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Field Field::rationals() { return Field(0); }

Field Field::prime(unsigned long p)
{
    if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
    return Field(p);
}

Scalar Field::normalize(const Scalar& a) const
{
    if (p_ == 0) {
        Scalar r = a;
        r.canonicalize();
        return r;
    }
    mpz_class const p(p_);
    mpz_class num = a.get_num() % p;
    mpz_class den = a.get_den() % p;
    if (den == 0) throw DomainError("division by zero in F_" + std::to_string(p_));
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * den_inv) % p;
    if (r < 0) r += p;
    return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const
{
    Scalar const n = normalize(a);
    if (n == 0) throw DomainError("inverse of zero");
    if (p_ == 0) return Scalar(1) / n;
    return normalize(Scalar(1, 1) / n);
}

std::string Field::name() const
{
    if (p_ == 0) return "Q";
    return "F" + std::to_string(p_);
}

Field parse_field(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "Q" || t == "QQ") return Field::rationals();
    std::string digits;
    if (t.rfind("GF(", 0) == 0 || t.rfind("Fp(", 0) == 0) {
        if (t.back() != ')') throw ParseError("malformed field '" + text + "'", 0);
        digits = t.substr(3, t.size() - 4);
    } else if (!t.empty() && t[0] == 'F') {
        digits = t.substr(1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("unknown field '" + text + "'", 0);
    return Field::prime(std::stoul(digits));
}

}  // namespace semistar
