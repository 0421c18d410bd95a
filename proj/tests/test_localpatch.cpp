#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadcert/localpatch.hpp"
#include "testutil.hpp"

using namespace quadcert;

namespace {

RingDescriptor qt() { return RingDescriptor::make(CoefficientField::rationals(), {"T"}); }
RingDescriptor qxt() { return RingDescriptor::make(CoefficientField::rationals(), {"x", "T"}); }

}  // namespace

TEST_CASE("monic_check") {
    auto r = qxt();
    auto T = Polynomial::variable(r, "T");
    auto x = Polynomial::variable(r, "x");
    auto one = Polynomial::one(r);
    auto two = Polynomial::constant(r, 2);

    auto m1 = monic_check(T * T - T.scaled(Rational(3)) + two, "T");
    CHECK(m1.ok);
    CHECK(m1.degree == 2);

    auto m2 = monic_check(T.scaled(Rational(2)) + one, "T");
    CHECK_FALSE(m2.ok);
    CHECK(m2.leading_coeff == two);

    auto m3 = monic_check(x * T + one, "T");
    CHECK_FALSE(m3.ok);
    CHECK(m3.leading_coeff == x);
}

TEST_CASE("laurent reversal") {
    // f = T: f* = 1
    {
        auto r = qt();
        auto ctx = LaurentContext::make(r, "T");
        auto rev = ctx.reverse_monic(Polynomial::variable(r, "T"));
        CHECK(rev.fstar.is_one());
        CHECK(rev.degree == 1);
    }
    // f = T^2 - 3T + 2: f* = 2Y^2 - 3Y + 1, f*(0) = 1
    {
        auto r = qt();
        auto T = Polynomial::variable(r, "T");
        auto ctx = LaurentContext::make(r, "T");
        auto rev = ctx.reverse_monic(T * T - T.scaled(Rational(3)) + Polynomial::constant(r, 2));
        auto Y = Polynomial::variable(ctx.ring_Y(), "Y");
        auto oneY = Polynomial::one(ctx.ring_Y());
        CHECK(rev.fstar == (Y * Y).scaled(Rational(2)) - Y.scaled(Rational(3)) + oneY);
        CHECK(rev.fstar.substitute("Y", Rational(0)).is_one());
        CHECK(rev.bez_fstar * rev.fstar + rev.bez_Y * Y == oneY);
    }
    // f = T^3 + xT over Q[x][T]: f* = x Y^2 + 1
    {
        auto r = qxt();
        auto T = Polynomial::variable(r, "T");
        auto x = Polynomial::variable(r, "x");
        auto ctx = LaurentContext::make(r, "T");
        auto rev = ctx.reverse_monic(T * T * T + x * T);
        auto Y = Polynomial::variable(ctx.ring_Y(), "Y");
        auto xY = Polynomial::variable(ctx.ring_Y(), "x");
        CHECK(rev.fstar == xY * Y * Y + Polynomial::one(ctx.ring_Y()));
        CHECK(rev.degree == 3);
    }
    // non-monic input rejected
    {
        auto r = qxt();
        auto x = Polynomial::variable(r, "x");
        auto T = Polynomial::variable(r, "T");
        auto ctx = LaurentContext::make(r, "T");
        CHECK_THROWS_AS(ctx.reverse_monic(x * T), PreconditionError);
    }
}

TEST_CASE("laurent reversal on random monic polynomials") {
    auto r = qxt();
    auto T = Polynomial::variable(r, "T");
    auto ctx = LaurentContext::make(r, "T");
    auto rx = ctx.base_ring();
    qctest::Rng rng(55);
    for (int t = 0; t < 20; ++t) {
        int deg = static_cast<int>(rng.range(1, 4));
        Polynomial f = T.pow(deg);
        for (int d = 0; d < deg; ++d) f = f + rng.poly(rx, 2, 2).embed(r) * T.pow(d);
        auto rev = ctx.reverse_monic(f);
        CHECK(rev.fstar.substitute("Y", Rational(0)).is_one());
        auto Y = Polynomial::variable(ctx.ring_Y(), "Y");
        CHECK(rev.bez_fstar * rev.fstar + rev.bez_Y * Y == Polynomial::one(ctx.ring_Y()));
    }
}

TEST_CASE("y_to_t dictionary") {
    auto r = qxt();
    auto ctx = LaurentContext::make(r, "T");
    auto Y = Polynomial::variable(ctx.ring_Y(), "Y");
    auto xY = Polynomial::variable(ctx.ring_Y(), "x");
    // x Y^2 + 1 -> (x + T^2)/T^2
    auto le = ctx.y_to_t(xY * Y * Y + Polynomial::one(ctx.ring_Y()));
    auto T = Polynomial::variable(r, "T");
    auto x = Polynomial::variable(r, "x");
    CHECK(le.den_exp == 2);
    CHECK(le.num == x + T * T);
}

TEST_CASE("glue_element") {
    auto r = RingDescriptor::make(CoefficientField::rationals(), {"x", "y"});
    auto x = Polynomial::variable(r, "x");
    auto y = Polynomial::variable(r, "y");
    auto one = Polynomial::one(r);

    // p/f^0 = p glues trivially with itself
    {
        auto p = LocalizedElement::of(y);
        auto res = glue_element(p, p, one, Polynomial::zero(r));
        CHECK(res.glued == y);
    }
    // y*x/x and y(1-x)/(1-x) glue to y via 1 = x + (1-x)
    {
        auto p = LocalizedElement::over(y * x, x, 1);
        auto q = LocalizedElement::over(y * (one - x), one - x, 1);
        auto res = glue_element(p, q, one, one);
        CHECK(res.glued == y);
    }
    // mismatched pair: error mentioning the defect
    {
        auto p = LocalizedElement::over(y * x, x, 1);
        auto q = LocalizedElement::over(one - x, one - x, 1);
        CHECK_THROWS_AS(glue_element(p, q, one, one), PreconditionError);
    }
}

TEST_CASE("glue round-trips exactly on random data") {
    auto r = RingDescriptor::make(CoefficientField::rationals(), {"x"});
    auto x = Polynomial::variable(r, "x");
    auto one = Polynomial::one(r);
    Polynomial f = x;
    Polynomial g = one - x;
    qctest::Rng rng(73);
    for (int t = 0; t < 15; ++t) {
        int k = static_cast<int>(rng.range(1, 3));
        int l = static_cast<int>(rng.range(1, 3));
        auto [u, v] = power_bezout(one, one, f, g, k, l);
        Polynomial target = rng.poly(r, 3, 3);
        auto p = LocalizedElement::over(target * f.pow(k), f, k);
        auto q = LocalizedElement::over(target * g.pow(l), g, l);
        auto res = glue_element(p, q, u, v);
        CHECK(res.glued == target);
        CHECK(res.glued * f.pow(k) == p.num);
        CHECK(res.glued * g.pow(l) == q.num);
    }
}

TEST_CASE("verify_split") {
    auto r = RingDescriptor::make(CoefficientField::rationals(), {"x"});
    auto x = Polynomial::variable(r, "x");
    auto one = Polynomial::one(r);
    Polynomial f = x;
    Polynomial g = one - x;

    // identity words
    {
        auto sv = verify_split(LocalizedWord(r, 2, f * g), LocalizedWord(r, 2, f),
                               LocalizedWord(r, 2, g), f, g);
        CHECK(sv.ok);
        CHECK(sv.bezout.u + sv.bezout.v == one);
    }
    // gamma a transvection with parameter 1/f, beta empty, sigma the same
    // generator read over A_{fg} (numerator g, denominator fg)
    {
        LocalizedWord gamma(r, 2, f, {{OrthGenerator::transvection(2, 0, 4, one), 1}});
        LocalizedWord beta(r, 2, g);
        LocalizedWord sigma(r, 2, f * g, {{OrthGenerator::transvection(2, 0, 4, g), 1}});
        auto sv = verify_split(sigma, gamma, beta, f, g);
        CHECK(sv.ok);
    }
    // wrong sigma: failure with nonzero defect
    {
        LocalizedWord sigma(r, 2, f * g, {{OrthGenerator::transvection(2, 0, 4, one), 0}});
        auto sv = verify_split(sigma, LocalizedWord(r, 2, f), LocalizedWord(r, 2, g), f, g);
        CHECK_FALSE(sv.ok);
        CHECK_FALSE(sv.defect.is_zero());
    }
    // non-comaximal pair rejected
    CHECK_THROWS_AS(verify_split(LocalizedWord(r, 2, x * x * x), LocalizedWord(r, 2, x),
                                 LocalizedWord(r, 2, x * x), x, x * x),
                    PreconditionError);
}

TEST_CASE("verify_split accepts constructed witnesses and rejects mutations") {
    auto r = RingDescriptor::make(CoefficientField::rationals(), {"x"});
    auto x = Polynomial::variable(r, "x");
    auto one = Polynomial::one(r);
    Polynomial f = x;
    Polynomial g = one - x;
    qctest::Rng rng(99);

    for (int t = 0; t < 8; ++t) {
        LocalizedWord gamma(r, 2, f,
                            {{OrthGenerator::transvection(2, 0, 4, rng.poly(r, 1, 2)), 1},
                             {OrthGenerator::hyperbolic(2, 1, 2, rng.poly(r, 1, 2)), 0}});
        LocalizedWord beta(r, 2, g,
                           {{OrthGenerator::transvection(2, 1, 4, rng.poly(r, 1, 2)), 1}});

        // sigma := gamma then beta, both rewritten over the base f*g
        LocalizedWord gamma_fg = gamma.relocalize(g);
        LocalizedWord beta_fg = beta.relocalize(f);
        std::vector<LocalizedWord::Factor> fs;
        for (const auto& fac : gamma_fg.factors()) fs.push_back(fac);
        for (const auto& fac : beta_fg.factors()) fs.push_back(fac);
        LocalizedWord sigma(r, 2, f * g, fs);

        auto sv = verify_split(sigma, gamma, beta, f, g);
        CHECK(sv.ok);

        // single-generator mutation is rejected
        auto mutated = fs;
        mutated[0].gen = mutated[0].gen.with_lambda(mutated[0].gen.lambda() + one);
        LocalizedWord sigma_bad(r, 2, f * g, mutated);
        auto sv_bad = verify_split(sigma_bad, gamma, beta, f, g);
        CHECK_FALSE(sv_bad.ok);
    }
}

TEST_CASE("relocalize keeps the action (two-denominator reduction)") {
    // Certificates with distinct monic denominators relocalize to their
    // product: the cleared act-check transfers verbatim.
    auto r = qxt();
    auto T = Polynomial::variable(r, "T");
    auto one = Polynomial::one(r);
    Polynomial f1 = T;
    Polynomial f2 = T + one;

    auto base = QuadricPoint::base_point(r, 2, QuadricKind::QPrime);
    OrthWord w(r, 2,
               {OrthGenerator::transvection(2, 0, 4, Polynomial::variable(r, "x")),
                OrthGenerator::hyperbolic(2, 1, 2, T)});
    auto v = act(base, w);

    LocalizedWord sigma1 = LocalizedWord::from_word(w.inverse(), f1);
    LocalizedWord sigma12 = sigma1.relocalize(f2);
    CHECK(sigma12.den_base() == f1 * f2);
    CHECK(monic_check(f1 * f2, "T").ok);  // product of monics is monic

    auto S = expand(sigma12);
    auto row = PolyMatrix::row_times(v.coords(), S.num);
    for (std::size_t i = 0; i < row.size(); ++i)
        CHECK(row[i] == base.coords()[i] * S.den());
}

TEST_CASE("monic pipeline, f = T") {
    auto r = qxt();
    auto T = Polynomial::variable(r, "T");
    auto x = Polynomial::variable(r, "x");
    auto base = QuadricPoint::base_point(r, 2, QuadricKind::QPrime);

    // trivial instance
    {
        auto res = monic_pipeline(base, "T", T, LocalizedWord(r, 2, T));
        REQUIRE(res.complete());
        CHECK(verify_chain(*res.chain, base, base).ok);
    }
    // v built by acting with a known word; sigma = inverse word
    {
        OrthWord w(r, 2,
                   {OrthGenerator::transvection(2, 0, 4, x * T),
                    OrthGenerator::hyperbolic(2, 1, 2, T * T - x)});
        auto v = act(base, w);
        auto sigma = LocalizedWord::from_word(w.inverse(), T);
        auto res = monic_pipeline(v, "T", T, sigma);
        REQUIRE(res.complete());
        CHECK(verify_chain(*res.chain, v, base).ok);
    }
    // sigma written with a genuine denominator: trans(e1, f2, (-x T)/T)
    {
        OrthWord w(r, 2, {OrthGenerator::transvection(2, 0, 3, x)});
        auto v = act(base, w);
        LocalizedWord sigma(r, 2, T, {{OrthGenerator::transvection(2, 0, 3, -x * T), 1}});
        auto res = monic_pipeline(v, "T", T, sigma);
        REQUIRE(res.complete());
        CHECK(verify_chain(*res.chain, v, base).ok);
    }
    // corrupted sigma rejected at the precondition with a defect report
    {
        OrthWord w(r, 2, {OrthGenerator::transvection(2, 0, 4, x * T)});
        auto v = act(base, w);
        auto bad = LocalizedWord::from_word(w, T);  // not the inverse
        auto res = monic_pipeline(v, "T", T, bad);
        CHECK(res.status == PipelineStatus::Failed);
        CHECK(res.failure.find("localized-trivialization") != std::string::npos);
    }
}

TEST_CASE("monic pipeline, general monic f with split witness") {
    // v extended from A (the paper's setting after its extendedness step):
    // v = act(base, W) with W constant in T. sigma carries genuine
    // f-denominators through a cancelling pair; the split witness carries
    // genuine f*- and Y-denominators the same way.
    auto r = qxt();
    auto T = Polynomial::variable(r, "T");
    auto x = Polynomial::variable(r, "x");
    auto one = Polynomial::one(r);
    Polynomial f = T * T + one;
    auto base = QuadricPoint::base_point(r, 2, QuadricKind::QPrime);

    OrthWord W(r, 2,
               {OrthGenerator::transvection(2, 0, 4, x),
                OrthGenerator::hyperbolic(2, 1, 2, x * x)});
    auto v = act(base, W);

    // sigma = E(T/f) E(-T/f) W^{-1} over A[T]_f
    OrthWord Winv = W.inverse();
    std::vector<LocalizedWord::Factor> sfs = {
        {OrthGenerator::transvection(2, 1, 4, T), 1},
        {OrthGenerator::transvection(2, 1, 4, -T), 1}};
    for (const auto& g : Winv.factors()) sfs.push_back({g, 0});
    LocalizedWord sigma(r, 2, f, sfs);

    auto ctx = LaurentContext::make(r, "T");
    auto rev = ctx.reverse_monic(f);  // f* = Y^2 + 1
    const auto& ry = ctx.ring_Y();
    auto Y = Polynomial::variable(ry, "Y");
    auto xY = Polynomial::variable(ry, "x");

    // sigma1 = E(Y/f*) E(-Y/f*) over A[Y]_{f*} (expands to the identity)
    LocalizedWord sigma1(ry, 2, rev.fstar,
                         {{OrthGenerator::transvection(2, 0, 4, Y), 1},
                          {OrthGenerator::transvection(2, 0, 4, -Y), 1}});
    // sigma2 = E(1/Y) E(-1/Y) W^{-1} over A[Y, 1/Y]
    std::vector<LocalizedWord::Factor> s2fs = {
        {OrthGenerator::transvection(2, 1, 4, Polynomial::one(ry)), 1},
        {OrthGenerator::transvection(2, 1, 4, -Polynomial::one(ry)), 1},
        {OrthGenerator::hyperbolic(2, 1, 2, -(xY * xY)), 0},
        {OrthGenerator::transvection(2, 0, 4, -xY), 0}};
    LocalizedWord sigma2(ry, 2, Y, s2fs);

    auto res = monic_pipeline(v, "T", f, sigma, SplitWitness{sigma1, sigma2});
    REQUIRE(res.complete());
    CHECK(verify_chain(*res.chain, v, base).ok);
    REQUIRE(res.glued.has_value());
    CHECK(res.glued->ring() == ry);

    // without the split witness: partial verification with the reversal done
    auto partial = monic_pipeline(v, "T", f, sigma);
    CHECK(partial.status == PipelineStatus::PartialVerified);
    REQUIRE(partial.reversal.has_value());
    CHECK(partial.reversal->fstar == rev.fstar);

    // a broken split witness is caught at the split equation
    LocalizedWord sigma2_bad(ry, 2, Y,
                             {{OrthGenerator::transvection(2, 1, 4, Polynomial::one(ry)), 1}});
    auto bad = monic_pipeline(v, "T", f, sigma, SplitWitness{sigma1, sigma2_bad});
    CHECK(bad.status == PipelineStatus::Failed);
    CHECK(bad.failure.find("split-verification") != std::string::npos);
}

TEST_CASE("monic pipeline rejects non-monic f") {
    auto r = qxt();
    auto x = Polynomial::variable(r, "x");
    auto T = Polynomial::variable(r, "T");
    auto base = QuadricPoint::base_point(r, 2, QuadricKind::QPrime);
    auto res = monic_pipeline(base, "T", x * T, LocalizedWord(r, 2, x * T));
    CHECK(res.status == PipelineStatus::Failed);
    CHECK(res.failure.find("monic-check") != std::string::npos);
}

TEST_CASE("monic inversion ideal wrapper") {
    auto r = qxt();
    auto T = Polynomial::variable(r, "T");
    auto x = Polynomial::variable(r, "x");
    auto base = QuadricPoint::base_point(r, 2, QuadricKind::QPrime);

    // I = (x, T) with orientation (x, T): theta gives s = 0, b = 0, point
    // (x, T, 0, 0, 0), and beta lifts it to (2x, 2T, 0, 0, 1). That point is
    // act(base, E_{e1,g}(-x) E_{e2,g}(-T)).
    Ideal I(r, {x, T});
    std::vector<Polynomial> fg = {x, T};
    OrthWord W2(r, 2,
                {OrthGenerator::transvection(2, 0, 4, -x),
                 OrthGenerator::transvection(2, 1, 4, -T)});
    auto vt = act(base, W2);
    auto expected = QuadricPoint::require(
        r, 2, QuadricKind::QPrime,
        {x.scaled(Rational(2)), T.scaled(Rational(2)), Polynomial::zero(r), Polynomial::zero(r),
         Polynomial::one(r)});
    REQUIRE(vt == expected);

    MonicInversionInput in{I,
                           fg,
                           "T",
                           T,
                           LocalizedWord::from_word(W2.inverse(), T),
                           std::nullopt,
                           std::optional<std::vector<Polynomial>>({x, T})};
    auto out = monic_inversion_ideal(in);
    CHECK(out.pipeline.complete());
    CHECK(out.generators_verified);
    CHECK(out.lift_congruence.size() == 2);
    for (const auto& c : out.lift_congruence) CHECK(c.expands_over(square_generators(I)));

    // a wrong lift is reported, not silently accepted
    MonicInversionInput in_bad = in;
    in_bad.lifted_gens = std::vector<Polynomial>{x, T + Polynomial::one(r)};
    auto out_bad = monic_inversion_ideal(in_bad);
    CHECK_FALSE(out_bad.generators_verified);
}
