#include <catch2/catch_amalgamated.hpp>
#include <gsym/json_io.hpp>
#include <gsym/polynomial.hpp>

#include <random>

using namespace gsym;

namespace {

Poly randomPoly(const TruncationContext &ctx, std::mt19937 &rng) {
    std::uniform_int_distribution<int> coeff(-6, 6), deg(0, 3), nterms(1, 6);
    Poly f(ctx);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        for (int v = 0; v < ctx.varCount(); ++v) m.e[v] = (uint8_t)deg(rng);
        f.addTerm(m, coeff(rng));
    }
    return f;
}

} // namespace

TEST_CASE("ring axioms hold on random triples") {
    TruncationContext ctx({Alphabet::scalar("b", 5), Alphabet::vars("x", 2, 4), Alphabet::vars("y", 2, 4)});
    std::mt19937 rng(42);
    Poly one = Poly::constant(ctx, 1), zero(ctx);
    for (int t = 0; t < 200; ++t) {
        Poly f = randomPoly(ctx, rng), g = randomPoly(ctx, rng), h = randomPoly(ctx, rng);
        REQUIRE(f + g == g + f);
        REQUIRE((f + g) + h == f + (g + h));
        REQUIRE(f * g == g * f);
        REQUIRE((f * g) * h == f * (g * h));
        REQUIRE(f * (g + h) == f * g + f * h);
        REQUIRE(f + zero == f);
        REQUIRE(f * one == f);
        REQUIRE(f - f == zero);
        REQUIRE(f * zero == zero);
    }
}

TEST_CASE("truncation drops monomials beyond per-alphabet caps") {
    TruncationContext ctx({Alphabet::scalar("b", 2), Alphabet::vars("x", 1, 3)});
    Poly b = Poly::variable(ctx, ctx.var("b"));
    Poly x = Poly::variable(ctx, ctx.var("x", 1));
    REQUIRE(b.pow(3).isZero());
    REQUIRE(!b.pow(2).isZero());
    REQUIRE(x.pow(4).isZero());
    REQUIRE((b.pow(2) * x.pow(3)).termCount() == 1); // caps are per alphabet, not global
}

TEST_CASE("canonical text form") {
    TruncationContext ctx({Alphabet::scalar("b", 4), Alphabet::vars("x", 1, 4)});
    Poly b = Poly::variable(ctx, ctx.var("b"));
    Poly x = Poly::variable(ctx, ctx.var("x", 1));
    Poly one = Poly::constant(ctx, 1);

    REQUIRE((x - b * x * x).toString() == "x1 - b*x1^2");
    Poly f = (one - b * x) * (one - b * x);
    REQUIRE(f.toString() == "1 - 2*b*x1 + b^2*x1^2");
    REQUIRE(Poly(ctx).toString() == "0");
    REQUIRE((-x).toString() == "-x1");
    REQUIRE(Poly::constant(ctx, -7).toString() == "-7");
}

TEST_CASE("term order sorts by total degree then leading variables") {
    TruncationContext ctx({Alphabet::vars("x", 2, 4)});
    Poly x1 = Poly::variable(ctx, ctx.var("x", 1));
    Poly x2 = Poly::variable(ctx, ctx.var("x", 2));
    Poly s2 = x1 * x1 + x1 * x2 + x2 * x2;
    REQUIRE(s2.toString() == "x1^2 + x1*x2 + x2^2");
    REQUIRE((x2 + x1 * x1).toString() == "x2 + x1^2");
}

TEST_CASE("cauchy kernel times its reciprocal is one") {
    for (int cap : {4, 6}) {
        TruncationContext ctx({Alphabet::vars("x", 2, cap), Alphabet::vars("y", 2, cap)});
        Poly prod = cauchyKernel(2, 2, ctx);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                prod = prod * (Poly::constant(ctx, 1) - Poly::variable(ctx, ctx.var("x", i)) *
                                                           Poly::variable(ctx, ctx.var("y", j)));
        REQUIRE(prod == Poly::constant(ctx, 1));
    }
}

TEST_CASE("dual kernel matches elementary expansion") {
    TruncationContext ctx({Alphabet::vars("x", 2, 3), Alphabet::vars("y", 1, 3)});
    // prod (1 + x_i y) = 1 + e_1(x) y + e_2(x) y^2
    Poly x1 = Poly::variable(ctx, ctx.var("x", 1));
    Poly x2 = Poly::variable(ctx, ctx.var("x", 2));
    Poly y = Poly::variable(ctx, ctx.var("y", 1));
    Poly expect = Poly::constant(ctx, 1) + (x1 + x2) * y + x1 * x2 * y * y;
    REQUIRE(dualKernel(2, 1, ctx) == expect);
}

TEST_CASE("inverse and geometric series agree") {
    TruncationContext ctx({Alphabet::scalar("b", 3), Alphabet::vars("x", 1, 5)});
    Poly b = Poly::variable(ctx, ctx.var("b"));
    Poly x = Poly::variable(ctx, ctx.var("x", 1));
    Poly f = Poly::constant(ctx, 1) - b * x;
    REQUIRE(f.inverse() == geometricSeries(b * x));
    REQUIRE(f * f.inverse() == Poly::constant(ctx, 1));
    Poly g = Poly::constant(ctx, -1) + x;
    REQUIRE(g * g.inverse() == Poly::constant(ctx, 1));
    REQUIRE_THROWS(geometricSeries(Poly::constant(ctx, 1)));
}

TEST_CASE("specialization is a ring map and commutes with arithmetic") {
    // The substituted variable must be uncapped: truncation in b would discard
    // terms that survive b := 1.  Capped alphabets are only ever truncated in
    // variables that keep their formal meaning.
    TruncationContext ctx({Alphabet::scalar("b"), Alphabet::vars("x", 2, 4)});
    std::mt19937 rng(7);
    int bv = ctx.var("b");
    for (int t = 0; t < 80; ++t) {
        Poly f = randomPoly(ctx, rng), g = randomPoly(ctx, rng);
        for (int val : {0, 1, -1}) {
            REQUIRE(substituteValue(f + g, bv, val) ==
                    substituteValue(f, bv, val) + substituteValue(g, bv, val));
            REQUIRE(substituteValue(f * g, bv, val) ==
                    substituteValue(f, bv, val) * substituteValue(g, bv, val));
        }
    }
    Poly b = Poly::variable(ctx, bv), x = Poly::variable(ctx, ctx.var("x", 1));
    Poly f = Poly::constant(ctx, 1) + b * x + b * b;
    REQUIRE(substituteValue(f, bv, 0) == Poly::constant(ctx, 1));
    REQUIRE(specialize(f, {{bv, 1}}) == Poly::constant(ctx, 2) + x);
    REQUIRE(specialize(f, {{bv, -1}}) == Poly::constant(ctx, 2) - x);
}

TEST_CASE("alphabet negation flips odd-degree terms") {
    TruncationContext ctx({Alphabet::scalar("b", 4), Alphabet::vars("x", 2, 4)});
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        Poly f = randomPoly(ctx, rng);
        REQUIRE(negateAlphabet(negateAlphabet(f, "x"), "x") == f);
        Poly g = randomPoly(ctx, rng);
        REQUIRE(negateAlphabet(f * g, "x") == negateAlphabet(f, "x") * negateAlphabet(g, "x"));
    }
}

TEST_CASE("homogeneous components sum back to the polynomial") {
    TruncationContext ctx({Alphabet::scalar("b", 4), Alphabet::vars("x", 2, 4)});
    std::mt19937 rng(13);
    for (int t = 0; t < 40; ++t) {
        Poly f = randomPoly(ctx, rng);
        auto comps = homogeneousComponents(f, "x");
        Poly sum(ctx);
        for (auto &[d, c] : comps) {
            sum += c;
            for (auto &[m, coef] : c.terms()) REQUIRE(ctx.alphabetDegree(m, "x") == d);
        }
        REQUIRE(sum == f);
    }
}

TEST_CASE("polynomial JSON round-trips exactly") {
    TruncationContext ctx({Alphabet::scalar("b", 6), Alphabet::vars("x", 2, 6)});
    std::mt19937 rng(17);
    for (int t = 0; t < 25; ++t) {
        Poly f = randomPoly(ctx, rng);
        Json j = toJson(f);
        REQUIRE(polyFromJson(j, ctx) == f);
        // serialized form round-trips through text too
        REQUIRE(polyFromJson(Json::parse(j.dump()), ctx) == f);
    }
    // big coefficients survive
    Poly big = Poly::constant(ctx, Int("123456789012345678901234567890"));
    REQUIRE(polyFromJson(toJson(big), ctx) == big);
}

TEST_CASE("coefficient lookup") {
    TruncationContext ctx({Alphabet::scalar("b", 4), Alphabet::vars("x", 1, 4)});
    Poly b = Poly::variable(ctx, ctx.var("b"));
    Poly x = Poly::variable(ctx, ctx.var("x", 1));
    Poly f = Poly::constant(ctx, 3) + b * x.pow(2).scaled(-5);
    Monomial m;
    m.e[ctx.var("b")] = 1;
    m.e[ctx.var("x", 1)] = 2;
    REQUIRE(f.coefficientOf(m) == -5);
    REQUIRE(f.constantTerm() == 3);
    m.e[ctx.var("b")] = 2;
    REQUIRE(f.coefficientOf(m) == 0);
}
