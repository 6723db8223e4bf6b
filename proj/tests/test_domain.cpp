#include <doctest.h>

#include "semistar/domain.hpp"
#include "semistar/errors.hpp"

using namespace semistar;

namespace {

BaseDomain local_qxy()
{
    auto R = make_ring(Field::rationals(), {"X", "Y"});
    return make_base_domain(Field::rationals(), {"X", "Y"}, parse_ideal("(X, Y)", R));
}

Fraction fr(const char* s, const BaseDomain& D) { return parse_fraction(s, D.ring); }
FracIdeal fi(const char* s, const BaseDomain& D) { return parse_frac_ideal(s, D.ring); }
Poly P(const char* s, const BaseDomain& D) { return parse_poly(s, D.ring); }

}  // namespace

TEST_CASE("make_base_domain examples")
{
    BaseDomain D = local_qxy();
    CHECK(D.is_local());
    CHECK(D.describe() == "Q[X,Y]_(X, Y)");
    BaseDomain G = make_base_domain(Field::rationals(), {"X", "Y"});
    CHECK_FALSE(G.is_local());
    auto F7 = make_ring(Field::prime(7), {"X", "Y"});
    BaseDomain H = make_base_domain(Field::prime(7), {"X", "Y"}, parse_ideal("(X)", F7));
    CHECK(H.describe() == "F7[X,Y]_(X)");
}

TEST_CASE("prime validation")
{
    auto R = make_ring(Field::rationals(), {"X", "Y"});
    CHECK_NOTHROW(validate_prime(parse_ideal("(X - 1, Y + 2)", R)));
    CHECK_NOTHROW(validate_prime(parse_ideal("(X^2 + Y)", R)));  // linear in Y
    CHECK_NOTHROW(validate_prime(parse_ideal("(X^2 - 2)", R)));  // no rational root
    CHECK_NOTHROW(validate_prime(parse_ideal("(X*Y + 1)", R)));
    CHECK_THROWS_AS(validate_prime(parse_ideal("(X^2 - 1)", R)), InvalidInput);
    CHECK_THROWS_AS(validate_prime(parse_ideal("(X*Y)", R)), InvalidInput);
    CHECK_THROWS_AS(validate_prime(parse_ideal("(X^2*Y + X)", R)), InvalidInput);
    CHECK_THROWS_AS(validate_prime(parse_ideal("(1)", R)), InvalidInput);
    CHECK_THROWS_AS(validate_prime(parse_ideal("(X^2 + Y^2)", R)), Unsupported);
    CHECK_THROWS_AS(validate_prime(parse_ideal("(X^2, Y)", R)), Unsupported);
    auto F7 = make_ring(Field::prime(7), {"X"});
    CHECK_NOTHROW(validate_prime(parse_ideal("(X^2 + 1)", F7)));  // -1 is not a square mod 7
    CHECK_THROWS_AS(validate_prime(parse_ideal("(X^2 + 5)", F7)), InvalidInput);  // 3^2 = 2 = -5
}

TEST_CASE("make_overring examples")
{
    BaseDomain D = local_qxy();
    Overring T1 = Overring::adjunction(D, P("X", D), P("Y", D));
    CHECK(T1.relation().to_string() == "(W*Y - X)");
    CHECK(T1.describe() == "D[X/Y]");
    CHECK_FALSE(T1.quasilocal());
    Overring L = Overring::localization(make_base_domain(Field::rationals(), {"X", "Y"}), parse_ideal("(X, Y)", D.ring));
    CHECK(L.quasilocal());
    Overring W = Overring::dvr(D, P("X", D));
    CHECK(W.describe() == "D_(X)");
    CHECK_THROWS_AS(Overring::adjunction(D, P("X^2", D), P("X*Y", D)), DomainError);
    // a unit common factor is divided out
    Overring T2 = Overring::adjunction(D, P("X*(1+X)", D), P("Y*(1+X)", D));
    CHECK(T2.describe() == "D[X/Y]");
    CHECK_THROWS_AS(Overring::localization(D, parse_ideal("(X - 1)", D.ring)), DomainError);
}

TEST_CASE("is_unit examples")
{
    BaseDomain D = local_qxy();
    CHECK(is_unit(D, fr("1+X", D)));
    CHECK_FALSE(is_unit(D, fr("X", D)));
    CHECK(is_unit(D, fr("(1+X)/(1-Y)", D)));
    Overring T1 = Overring::adjunction(D, P("X", D), P("Y", D));
    CHECK_FALSE(is_unit(T1, fr("Y", D)));
    CHECK(is_unit(T1, fr("1 + X/Y", D)) == false);  // 1+W lies in the maximal ideal (W+1, Y)
    Overring Wx = Overring::dvr(D, P("X", D));
    CHECK(is_unit(Wx, fr("Y", D)));
    CHECK_FALSE(is_unit(Wx, fr("X", D)));
    CHECK_THROWS_AS(is_unit(D, fr("0", D)), DomainError);
}

TEST_CASE("extend_and_test examples")
{
    BaseDomain D = local_qxy();
    Overring T1 = Overring::adjunction(D, P("X", D), P("Y", D));
    CHECK(extend_and_test(fi("(X, Y)", D), T1, fr("X", D)));
    CHECK(extend_and_test(fi("(X^2, Y^2)", D), T1, fr("X*Y", D)));
    Overring G = Overring::base(make_base_domain(Field::rationals(), {"X", "Y"}));
    CHECK_FALSE(extend_and_test(fi("(X^2, Y^2)", D), G, fr("X*Y", D)));
    CHECK_FALSE(extend_and_test(fi("(X^2, Y^2)", D), Overring::base(D), fr("X*Y", D)));
    // X/Y ∈ T1 but Y/X ∉ T1
    CHECK(overring_contains_element(T1, fr("X/Y", D)));
    CHECK_FALSE(overring_contains_element(T1, fr("Y/X", D)));
}

TEST_CASE("principality_in_overring examples")
{
    BaseDomain D = local_qxy();
    Overring T1 = Overring::adjunction(D, P("X", D), P("Y", D));
    Overring T2 = Overring::adjunction(D, P("Y", D), P("X", D));
    auto p1 = principality_in_overring(fi("(X, Y)", D), T1);
    REQUIRE(p1.generator);
    CHECK(p1.generator->equals(fr("Y", D)));
    auto p2 = principality_in_overring(fi("(X, Y)", D), T2);
    REQUIRE(p2.generator);
    CHECK(p2.generator->equals(fr("X", D)));
    auto p3 = principality_in_overring(fi("(X)", D), T1);
    REQUIRE(p3.generator);
    CHECK(p3.generator->equals(fr("X", D)));
    auto p4 = principality_in_overring(fi("(X, Y)", D), Overring::base(D));
    CHECK_FALSE(p4.generator);
    CHECK(p4.decisive);
    // (X, Y^2)·T1 = Y·(W, Y) is not principal; no witness, not decisive
    auto p5 = principality_in_overring(fi("(X, Y^2)", D), T1);
    CHECK_FALSE(p5.generator);
    CHECK_FALSE(p5.decisive);
    CHECK(extension_contains(T1, fi("(Y)", D), fi("(X, Y)", D)));
    CHECK(extension_contains(T1, fi("(X, Y)", D), fi("(Y)", D)));
}

TEST_CASE("overring invariants")
{
    BaseDomain D = local_qxy();
    std::vector<Overring> Ts{Overring::base(D), Overring::adjunction(D, P("X", D), P("Y", D)),
                             Overring::adjunction(D, P("Y", D), P("X", D)), Overring::dvr(D, P("X", D)),
                             Overring::dvr(D, P("Y", D)), Overring::localization(D, parse_ideal("(X, Y)", D.ring))};
    const char* elems[] = {"X", "Y", "1", "X*Y + 3", "(1+X)/(1-Y)", "X^2/(2 + Y)"};
    const char* units[] = {"1+X", "2", "1/(1-Y)"};
    const char* ideals[] = {"(X, Y)", "(X^2, Y)", "(X^2, X*Y)", "frac((X, Y), X)"};
    for (const auto& T : Ts) {
        for (const char* e : elems) CHECK(extend_and_test(FracIdeal::unit(D.ring), T, fr(e, D)));
        for (const char* a : ideals)
            for (const char* e : elems) {
                FracIdeal F = fi(a, D);
                if (!extend_and_test(F, T, fr(e, D))) continue;
                for (const char* u : units) CHECK(extend_and_test(F, T, fr(e, D) * fr(u, D)));
            }
    }
    // localization overrings agree with localized_member
    const char* ps[] = {"X", "Y", "X*Y", "X + Y", "Y^2"};
    for (const char* a : {"(X^2, Y)", "(X*Y)", "(X + X*Y, Y^3)"})
        for (const char* p : ps)
            for (const char* q : {"(X)", "(Y)", "(X, Y)"}) {
                Ideal Q = parse_ideal(q, D.ring);
                Overring T = Overring::localization(D, Q);
                CHECK(T.member(P(p, D), parse_ideal(a, D.ring)) == localized_member(P(p, D), parse_ideal(a, D.ring), Q));
            }
}

TEST_CASE("ex1143 overring identities")
{
    BaseDomain D = local_qxy();
    Overring T1 = Overring::adjunction(D, P("X", D), P("Y", D));
    // (X,Y)T = (Y)T and (X,Y^2)T = Y·(X/Y, Y)T
    CHECK(extension_contains(T1, fi("(X, Y)", D), fi("(Y)", D)));
    CHECK(extension_contains(T1, fi("(Y)", D), fi("(X, Y)", D)));
    FracIdeal const rhs = fi("(X, Y^2)", D);
    FracIdeal const lhs = frac_scale(fi("(X/Y, Y)", D), fr("Y", D));
    CHECK(extension_contains(T1, rhs, lhs));
    CHECK(extension_contains(T1, lhs, rhs));
}
