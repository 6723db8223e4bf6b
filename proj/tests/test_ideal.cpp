#include <doctest.h>

#include <random>
#include <set>

#include "semistar/errors.hpp"
#include "semistar/ideal.hpp"

using namespace semistar;

namespace {

RingPtr qxy() { return make_ring(Field::rationals(), {"X", "Y"}); }

Ideal I(const char* s, const RingPtr& r) { return parse_ideal(s, r); }
Poly P(const char* s, const RingPtr& r) { return parse_poly(s, r); }

}  // namespace

TEST_CASE("groebner examples")
{
    auto R = qxy();
    auto lex = MonomialOrder::lex();
    auto gb = groebner(I("(X, Y)", R), lex);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == P("X", R));
    CHECK(gb[1] == P("Y", R));

    // by hand: X^3 - X(X^2-Y) = XY; S(X^2-Y, XY) = -Y^2
    gb = groebner(I("(X^2 - Y, X^3)", R), lex);
    REQUIRE(gb.size() == 3);
    CHECK(gb[0] == P("X^2 - Y", R));
    CHECK(gb[1] == P("X*Y", R));
    CHECK(gb[2] == P("Y^2", R));

    gb = groebner(I("(X^2 + Y^2, X^2 - Y^2)", R), MonomialOrder::grevlex());
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == P("X^2", R));
    CHECK(gb[1] == P("Y^2", R));

    CHECK_THROWS_AS(groebner(Ideal::zero(R), lex), DomainError);
}

TEST_CASE("groebner bases are sound and canonical on random ideals")
{
    std::mt19937 rng(3);
    auto R = make_ring(Field::rationals(), {"X", "Y", "Z"});
    std::uniform_int_distribution<int> c(-2, 2), e(0, 2);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Poly> gens;
        for (int g = 0; g < 3; ++g) {
            std::vector<Term> t;
            for (int k = 0; k < 3; ++k) {
                Monomial m(3);
                for (std::size_t j = 0; j < 3; ++j) m[j] = static_cast<std::uint32_t>(e(rng));
                t.push_back({m, c(rng)});
            }
            gens.emplace_back(R, t);
        }
        Ideal id(R, gens);
        if (id.is_zero()) continue;
        for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
            auto gb = groebner(id, ord);
            for (const auto& g : id.generators()) CHECK(normal_form(g, gb, ord).is_zero());
            // every S-polynomial reduces to zero
            for (std::size_t i = 0; i < gb.size(); ++i)
                for (std::size_t j = i + 1; j < gb.size(); ++j)
                    CHECK(normal_form(s_polynomial(gb[i], gb[j], ord), gb, ord).is_zero());
            // basis elements lie in the ideal: they generate the same ideal
            Ideal back(R, gb);
            for (const auto& g : gb) CHECK(id.contains(g));
            auto shuffled = id.generators();
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            CHECK(groebner_basis(shuffled, ord) == gb);
            CHECK(groebner_basis(gb, ord) == gb);
        }
    }
}

TEST_CASE("ideal_member examples")
{
    auto R = qxy();
    CHECK(ideal_member(P("X^2", R), I("(X)", R)));
    CHECK_FALSE(ideal_member(P("X*Y", R), I("(X^2, Y^2)", R)));
    CHECK(ideal_member(P("X+Y", R), I("(X-Y, 2*Y)", R)));
    CHECK_THROWS_AS(ideal_member(P("X", R), Ideal::zero(R)), DomainError);
}

TEST_CASE("ideal_colon examples")
{
    auto R = qxy();
    CHECK(ideal_equal(ideal_colon(I("(X*Y)", R), I("(X)", R)), I("(Y)", R)));
    // oracle: (X):(X) ∩ (X):(Y) = (1) ∩ (X)
    Ideal oracle = ideal_intersect(ideal_colon(I("(X)", R), P("X", R)), ideal_colon(I("(X)", R), P("Y", R)));
    CHECK(ideal_equal(oracle, I("(X)", R)));
    CHECK(ideal_equal(ideal_colon(I("(X)", R), I("(X, Y)", R)), I("(X)", R)));
    CHECK(ideal_equal(ideal_colon(I("(X^2, X*Y)", R), I("(X)", R)), I("(X, Y)", R)));
    CHECK_THROWS_AS(ideal_colon(I("(X)", R), Ideal::zero(R)), DomainError);
}

TEST_CASE("colon adjunction property")
{
    std::mt19937 rng(8);
    auto R = qxy();
    const char* ideals[] = {"(X^2, Y)", "(X*Y, Y^3)", "(X^2 - Y, X*Y)", "(X + Y, Y^2)", "(X^3, X*Y, Y^2)"};
    const char* polys[] = {"X", "Y", "X*Y", "X - Y", "X^2 + Y", "1", "Y^2"};
    for (const char* a : ideals)
        for (const char* b : ideals) {
            Ideal const Ii = I(a, R), J = I(b, R);
            Ideal const C = ideal_colon(Ii, J);
            for (const char* p : polys) {
                Poly const f = P(p, R);
                bool all = true;
                for (const auto& j : J.generators()) all = all && Ii.contains(f * j);
                CHECK(C.contains(f) == all);
            }
        }
}

TEST_CASE("ideal_intersect examples")
{
    auto R = qxy();
    CHECK(ideal_equal(ideal_intersect(I("(X)", R), I("(Y)", R)), I("(X*Y)", R)));
    CHECK(ideal_equal(ideal_intersect(I("(X, Y)", R), I("(X)", R)), I("(X)", R)));
    CHECK(ideal_equal(ideal_intersect(I("(X^2)", R), I("(Y^2)", R)), I("(X^2*Y^2)", R)));
    CHECK_THROWS_AS(ideal_intersect(I("(X)", R), Ideal::zero(R)), DomainError);
}

TEST_CASE("frac_inverse examples")
{
    auto R = qxy();
    Localization const L{R, std::nullopt};
    FracIdeal inv = frac_inverse(FracIdeal(I("(X)", R)));
    CHECK(frac_equal(inv, FracIdeal(I("(1)", R), P("X", R)), L));
    inv = frac_inverse(FracIdeal(I("(X, Y)", R)));
    CHECK(frac_equal(inv, FracIdeal::unit(R), L));
    inv = frac_inverse(FracIdeal(I("(2)", R)));
    CHECK(frac_equal(inv, FracIdeal::principal(parse_fraction("1/2", R)), L));
    CHECK_THROWS_AS(FracIdeal(Ideal::zero(R)), DomainError);
}

TEST_CASE("localized_member examples")
{
    auto R = qxy();
    Ideal const M = I("(X, Y)", R);
    CHECK(localized_member(P("(1+X)*Y", R), I("(Y)", R), M));
    CHECK_FALSE(localized_member(P("X", R), I("(X^2)", R), M));
    CHECK_FALSE(localized_member(P("Y", R), I("(X, Y^2)", R), M));
    // X ∈ (X*(1+Y)) after inverting 1+Y
    CHECK(localized_member(P("X", R), I("(X + X*Y)", R), M));
    CHECK_FALSE(ideal_member(P("X", R), I("(X + X*Y)", R)));
}

TEST_CASE("localization consistency")
{
    auto R = qxy();
    Ideal const M = I("(X, Y)", R);
    const char* ideals[] = {"(X^2, Y)", "(X*Y, Y^3, X^3)", "(X^2 - Y, X*Y)", "(X + Y, Y^2)", "(X*(1+X), Y*(1-Y))"};
    const char* polys[] = {"X", "Y", "X*Y", "X - Y", "X^2 + Y", "1", "Y^2", "X + X^2"};
    for (const char* a : ideals)
        for (const char* p : polys) {
            Ideal const J = I(a, R);
            if (ideal_member(P(p, R), J)) CHECK(localized_member(P(p, R), J, M));
        }
    // M-primary ideals: localization at M changes nothing
    const char* primary[] = {"(X^2, Y)", "(X^3, X*Y, Y^2)", "(X^2, Y^2)"};
    for (const char* a : primary)
        for (const char* p : polys) {
            Ideal const J = I(a, R);
            CHECK(localized_member(P(p, R), J, M) == ideal_member(P(p, R), J));
        }
}

TEST_CASE("fractional ideal parsing and equality")
{
    auto R = qxy();
    Localization const L{R, I("(X, Y)", R)};
    FracIdeal const a = parse_frac_ideal("frac(ideal(X, Y), X)", R);
    FracIdeal const b = parse_frac_ideal("(1, Y/X)", R);
    CHECK(frac_equal(a, b, L));
    CHECK(frac_member(parse_fraction("Y/X", R), a, L));
    CHECK_FALSE(frac_member(parse_fraction("1/Y", R), a, L));
    // (X*(1+Y)) = (X) in the local ring but not globally
    CHECK(frac_equal(FracIdeal(I("(X + X*Y)", R)), FracIdeal(I("(X)", R)), L));
    CHECK_FALSE(frac_equal(FracIdeal(I("(X + X*Y)", R)), FracIdeal(I("(X)", R)), Localization{R, std::nullopt}));
}

TEST_CASE("monomial_integral_closure examples")
{
    auto R = qxy();
    CHECK(ideal_equal(monomial_integral_closure(I("(X^2, Y^2)", R)), I("(X^2, X*Y, Y^2)", R)));
    CHECK(ideal_equal(monomial_integral_closure(I("(X, Y)", R)), I("(X, Y)", R)));
    CHECK(ideal_equal(monomial_integral_closure(I("(X^3, Y^2)", R)), I("(X^3, X^2*Y, Y^2)", R)));
    CHECK_THROWS_AS(monomial_integral_closure(I("(X + Y)", R)), Unsupported);
}

TEST_CASE("integral closure is extensive and idempotent")
{
    auto R = make_ring(Field::rationals(), {"X", "Y", "Z"});
    const char* ideals[] = {"(X^3, Y^3, Z^3)", "(X^2*Y, Y^3, X*Z^2)", "(X^4, Y)", "(X*Y*Z, X^3)", "(X^5, Y^2, Z^3)"};
    for (const char* a : ideals) {
        Ideal const J = I(a, R);
        Ideal const c = monomial_integral_closure(J);
        CHECK(ideal_contains(c, J));
        CHECK(ideal_equal(monomial_integral_closure(c), c));
    }
}

TEST_CASE("newton polyhedron membership")
{
    std::vector<std::vector<long>> pts{{3, 0}, {0, 2}};
    CHECK(in_newton_polyhedron(pts, {2, 1}));   // 2/3 + 1/2 >= 1
    CHECK_FALSE(in_newton_polyhedron(pts, {1, 1}));  // 1/3 + 1/2 < 1
    CHECK(in_newton_polyhedron(pts, {3, 0}));
    CHECK(in_newton_polyhedron(pts, {5, 7}));
}
