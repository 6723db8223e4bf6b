#include <doctest.h>

#include "semistar/errors.hpp"
#include "semistar/star.hpp"

using namespace semistar;

namespace {

struct Fixture {
    BaseDomain D;
    StarEnv env;
    Fixture()
        : D(make_base_domain(Field::rationals(), {"X", "Y"},
                             parse_ideal("(X, Y)", make_ring(Field::rationals(), {"X", "Y"})))),
          env{D, {}, {}}
    {
        env.overrings.push_back({"D1", Overring::adjunction(D, P("X"), P("Y"))});
        env.overrings.push_back({"D2", Overring::adjunction(D, P("Y"), P("X"))});
        env.overrings.push_back({"WX", Overring::dvr(D, P("X"))});
        env.overrings.push_back({"WY", Overring::dvr(D, P("Y"))});
    }
    Poly P(const char* s) const { return parse_poly(s, D.ring); }
    Fraction fr(const char* s) const { return parse_fraction(s, D.ring); }
    FracIdeal fi(const char* s) const { return parse_frac_ideal(s, D.ring); }
    StarOp op(const char* s) const { return parse_star(s, env); }
    bool eq(const FracIdeal& a, const FracIdeal& b) const { return frac_equal(a, b, D.loc()); }
};

}  // namespace

TEST_CASE("parse_star round trip")
{
    Fixture f;
    for (const char* s : {"d", "v", "t", "b", "custom_gcd_star", "wedge(D1, D2)", "tilde(custom_gcd_star, [(X, Y)])",
                          "a_approx(wedge(D1, D2), pool=default-2, bound=2)", "meet(d, b)", "induced(D1)",
                          "wedge(WX, WY)"}) {
        std::string text = s;
        // the default pool is named after its bound
        if (text.find("default-2") != std::string::npos) text = "a_approx(wedge(D1, D2), pool=default, bound=2)";
        CHECK(f.op(text.c_str()).to_string() == s);
    }
    CHECK_THROWS_AS(f.op("wedge()"), ParseError);
    CHECK_THROWS_AS(f.op("wedge(T9)"), ParseError);
    CHECK_THROWS_AS(f.op("frob"), ParseError);
    CHECK_THROWS_AS(f.op("d d"), ParseError);
    CHECK_THROWS_AS(f.op("a_approx(d, bound=0)"), ParseError);
    CHECK_THROWS_AS(f.op("tilde(t, [(X, Y)])"), InvalidInput);  // M^t = D
    CHECK_THROWS_AS(f.op("tilde(d, [(X^2, Y)])"), Unsupported);
}

TEST_CASE("apply_star examples")
{
    Fixture f;
    StarOp const star = f.op("custom_gcd_star");
    CHECK(f.eq(apply_star(star, f.fi("(X, Y)")).ideal(), f.fi("(X, Y)")));
    CHECK(f.eq(apply_star(star, f.fi("(X^3, X^2*Y)")).ideal(), f.fi("(X^3, X^2*Y)")));
    CHECK(f.eq(apply_star(star, f.fi("(X, Y^3)")).ideal(), f.fi("(X, Y)")));
    CHECK(f.eq(apply_star(star, f.fi("(X^2, X*Y^3)")).ideal(), f.fi("(X^2, X*Y)")));
    CHECK(f.eq(apply_star(star, f.fi("(X*(1+Y), X^2)")).ideal(), f.fi("(X)")));  // principal in D
    CHECK(f.eq(apply_star(star, f.fi("(1, Y^3/X)")).ideal(), f.fi("(1, Y/X)")));  // rule 4

    BaseDomain G = make_base_domain(Field::rationals(), {"X", "Y"});
    CHECK(frac_equal(apply_star(StarOp::v(G), f.fi("(X, Y)")).ideal(), FracIdeal::unit(G.ring), G.loc()));
    CHECK(f.eq(apply_star(f.op("b"), f.fi("(X^2, Y^2)")).ideal(), f.fi("(X^2, X*Y, Y^2)")));
    CHECK_THROWS_AS(apply_star(f.op("b"), f.fi("(X + Y^2, Y^3)")), Unsupported);

    IdealHandle const w = apply_star(f.op("wedge(D1, D2)"), f.fi("(X^2, Y^2)"));
    CHECK(w.exact());
    CHECK(w.contains(f.fr("X*Y")));
    CHECK_FALSE(w.contains(f.fr("X")));
    CHECK_FALSE(apply_star(f.op("d"), f.fi("(X^2, Y^2)")).contains(f.fr("X*Y")));

    IdealHandle const dv = apply_star(f.op("wedge(WX, WY)"), f.fi("(X, Y)"));
    CHECK(dv.exactness() == Exactness::Decidable);
    CHECK(dv.contains(f.fr("1")));
    CHECK_THROWS_AS(dv.ideal(), Unsupported);

    IdealHandle const ind = apply_star(f.op("induced(D1)"), f.fi("(X, Y)"));
    CHECK_FALSE(ind.exact());
    CHECK(ind.contains(f.fr("X^2/Y")));
}

TEST_CASE("check_axioms examples")
{
    Fixture f;
    std::vector<FracIdeal> pool{f.fi("(X, Y)"), f.fi("(X^2, X*Y)"), f.fi("(X^3)"), f.fi("(X^2, Y^2)")};
    std::vector<Fraction> scalars{f.fr("X"), f.fr("1+X")};
    CHECK(check_axioms(f.op("d"), pool, scalars).is_holds());
    CHECK(check_axioms(f.op("custom_gcd_star"), pool, scalars).is_holds());
    StarOp broken = StarOp::custom(f.D, "broken", [&](const FracIdeal& F) {
        return frac_sum(F, frac_scale(F, f.fr("1/X")));
    });
    Verdict v = check_axioms(broken, pool, scalars);
    REQUIRE(v.is_fails());
    CHECK(v.detail.rfind("(⋆₃)", 0) == 0);
    StarOp unscaled = StarOp::custom(f.D, "unscaled", [&](const FracIdeal& F) {
        return F.is_integral() ? F : FracIdeal::unit(f.D.ring);
    });
    v = check_axioms(unscaled, pool, {f.fr("1/X")});
    REQUIRE(v.is_fails());
    CHECK(v.detail.rfind("(⋆₁)", 0) == 0);
    CHECK(check_axioms(f.op("wedge(WX, WY)"), pool, scalars).is_unknown());
}

TEST_CASE("check_axioms fuzz over bundled exact ops")
{
    Fixture f;
    ProbePool const pool = default_pool(f.D, 2);
    std::vector<Fraction> scalars{f.fr("X"), f.fr("1+Y"), f.fr("Y/X")};
    for (const char* s : {"d", "v", "t", "b", "custom_gcd_star", "wedge(D1, D2)", "tilde(custom_gcd_star, [(X, Y)])",
                          "meet(b, custom_gcd_star)"}) {
        Verdict const v = check_axioms(f.op(s), pool.ideals, scalars);
        INFO(s << ": " << v.detail);
        CHECK(v.is_holds());
    }
}

TEST_CASE("compare_stars examples")
{
    Fixture f;
    StarComparison c = compare_stars(f.op("d"), f.op("custom_gcd_star"), {f.fi("(X, Y)")});
    CHECK(c.relation == StarComparison::Relation::EQ);
    c = compare_stars(f.op("d"), f.op("custom_gcd_star"), {f.fi("(X, Y)"), f.fi("(X^2, X*Y)"), f.fi("(X, Y^3)")});
    CHECK(c.relation == StarComparison::Relation::LEQ);
    REQUIRE(c.op2_larger);
    CHECK(f.eq(c.op2_larger->probe, f.fi("(X, Y^3)")));
    CHECK(c.op2_larger->element.equals(f.fr("Y")));
    c = compare_stars(f.op("b"), f.op("t"), {f.fi("(X, Y)")});
    CHECK(c.relation == StarComparison::Relation::LEQ);
    c = compare_stars(f.op("t"), f.op("b"), {f.fi("(X, Y)")});
    CHECK(c.relation == StarComparison::Relation::GEQ);
    c = compare_stars(f.op("custom_gcd_star"), f.op("custom_gcd_star"), default_pool(f.D, 2).ideals);
    CHECK(c.relation == StarComparison::Relation::EQ);
    c = compare_stars(f.op("custom_gcd_star"), f.op("b"), {f.fi("(X, Y^3)"), f.fi("(X^2, Y^2)")});
    CHECK(c.relation == StarComparison::Relation::GEQ);
    // not star operations; only the comparison logic is exercised
    StarOp const up = StarOp::custom(f.D, "up", [&](const FracIdeal& F) { return frac_sum(F, frac_scale(F, f.fr("X/Y"))); });
    StarOp const down = StarOp::custom(f.D, "down", [&](const FracIdeal& F) { return frac_sum(F, frac_scale(F, f.fr("Y/X"))); });
    c = compare_stars(up, down, {f.fi("(X^2)")});
    CHECK(c.relation == StarComparison::Relation::INCOMPARABLE);
    REQUIRE(c.op1_larger);
    CHECK(c.op1_larger->element.equals(f.fr("X^3/Y")));
}

TEST_CASE("quasi_prime_check examples")
{
    Fixture f;
    CHECK(quasi_prime_check(parse_ideal("(X, Y)", f.D.ring), f.op("custom_gcd_star")));
    BaseDomain G = make_base_domain(Field::rationals(), {"X", "Y"});
    CHECK(quasi_prime_check(parse_ideal("(X)", G.ring), StarOp::v(G)));
    CHECK_FALSE(quasi_prime_check(parse_ideal("(X, Y)", f.D.ring), f.op("t")));
    CHECK(quasi_prime_check(parse_ideal("(X, Y)", f.D.ring), f.op("b")));
    CHECK(quasi_prime_check(parse_ideal("(X, Y)", f.D.ring), f.op("wedge(D1, D2)")));
}

TEST_CASE("tilde over the maximal ideal is d")
{
    Fixture f;
    StarOp const tl = f.op("tilde(custom_gcd_star, [(X, Y)])");
    for (const auto& F : default_pool(f.D, 2).ideals) CHECK(f.eq(apply_star(tl, F).ideal(), F));
    CHECK(compare_stars(tl, f.op("d"), default_pool(f.D, 2).ideals).relation == StarComparison::Relation::EQ);
}

TEST_CASE("is_star_overring_probe examples")
{
    Fixture f;
    std::vector<FracIdeal> probes{f.fi("(X, Y)"), f.fi("(X^2, Y^2)"), f.fi("(X)")};
    CHECK(is_star_overring_probe(f.env.overrings[0].ring, f.op("wedge(D1, D2)"), probes).is_holds());
    CHECK(is_star_overring_probe(Overring::base(f.D), f.op("custom_gcd_star"), {f.fi("(X, Y)"), f.fi("(X^2, X*Y)")})
              .is_holds());
    CHECK(is_star_overring_probe(f.env.overrings[2].ring, f.op("d"), probes).is_holds());
    // M^t = D is not inside M·D
    CHECK(is_star_overring_probe(Overring::base(f.D), f.op("t"), probes).is_fails());
}

TEST_CASE("star invariants")
{
    Fixture f;
    ProbePool const pool = default_pool(f.D, 2);
    // v and t agree on finitely generated input
    for (const auto& F : pool.ideals)
        CHECK(f.eq(apply_star(f.op("v"), F).ideal(), apply_star(f.op("t"), F).ideal()));
    // scaling on fractional inputs
    for (const char* s : {"v", "b", "custom_gcd_star", "wedge(D1, D2)"}) {
        StarOp const op = f.op(s);
        for (const char* z : {"X/Y", "(1+X)/Y^2"})
            for (std::size_t i = 0; i < pool.ideals.size(); i += 3) {
                const FracIdeal& F = pool.ideals[i];
                CHECK(f.eq(apply_star(op, frac_scale(F, f.fr(z))).ideal(), frac_scale(apply_star(op, F).ideal(), f.fr(z))));
            }
    }
    // wedge distribution: E^∧·T = E·T for each member
    StarOp const w = f.op("wedge(D1, D2)");
    for (const auto& E : pool.ideals) {
        FracIdeal const Ew = apply_star(w, E).ideal();
        for (int k : {0, 1}) {
            const Overring& T = f.env.overrings[k].ring;
            CHECK(extension_contains(T, E, Ew));
            CHECK(extension_contains(T, Ew, E));
        }
    }
    // a_approx: a larger pool never shrinks the result
    ProbePool small{"small", {FracIdeal::unit(f.D.ring), f.fi("(X, Y)")}};
    StarOp const a1 = StarOp::a_approx(f.op("custom_gcd_star"), small, 1);
    StarOp const a2 = StarOp::a_approx(f.op("custom_gcd_star"), pool, 2);
    const char* tests[] = {"X", "Y", "1", "X*Y", "Y^2", "X^2", "Y/X", "1+X"};
    for (const char* E : {"(X, Y)", "(X^2, Y^2)", "(X, Y^2)"}) {
        IdealHandle const h1 = apply_star(a1, f.fi(E));
        IdealHandle const h2 = apply_star(a2, f.fi(E));
        for (const char* k : tests)
            if (h1.contains(f.fr(k))) CHECK(h2.contains(f.fr(k)));
    }
    // ⋆_a of the gcd star reaches t on M: M^{⋆_a} = D
    CHECK(apply_star(a2, f.fi("(X, Y)")).contains(f.fr("1")));
}
