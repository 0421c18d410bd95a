#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadcert/polynomial.hpp"
#include "testutil.hpp"

using namespace quadcert;

namespace {

RingDescriptor qxy() {
    return RingDescriptor::make(CoefficientField::rationals(), {"x", "y"});
}

Polynomial var(const RingDescriptor& r, const std::string& n) {
    return Polynomial::variable(r, n);
}

}  // namespace

TEST_CASE("coefficient fields") {
    auto q = CoefficientField::rationals();
    CHECK(q.is_rationals());
    CHECK(q.normalize(Rational(3, 6)) == Rational(1, 2));

    auto f7 = CoefficientField::prime_field(7);
    CHECK(f7.characteristic() == 7);
    CHECK(f7.normalize(Rational(15)) == Rational(1));
    CHECK(f7.inv(Rational(3)) == Rational(5));  // 3*5 = 15 = 1 mod 7
    CHECK(f7.normalize(Rational(1, 3)) == Rational(5));

    CHECK_THROWS_AS(CoefficientField::prime_field(2), Error);
    CHECK_THROWS_AS(CoefficientField::prime_field(6), Error);
    CHECK_THROWS_AS(f7.inv(Rational(0)), Error);
}

TEST_CASE("basic arithmetic") {
    auto r = qxy();
    auto x = var(r, "x");
    auto one = Polynomial::one(r);

    // (x+1)*(x-1) = x^2 - 1
    CHECK((x + one) * (x - one) == x * x - one);
    // p + 0 = p
    auto p = x * x + Polynomial::constant(r, 3) * x;
    CHECK(p + Polynomial::zero(r) == p);

    // over F7: (3x)*(5x) = x^2, since 15 = 1 mod 7
    auto r7 = RingDescriptor::make(CoefficientField::prime_field(7), {"x"});
    auto x7 = var(r7, "x");
    auto lhs = x7.scaled(Rational(3)) * x7.scaled(Rational(5));
    CHECK(lhs == x7 * x7);
    CHECK(Rational(15 % 7) == Rational(1));  // modular arithmetic oracle
}

TEST_CASE("ring axioms on random triples") {
    auto r = qxy();
    qctest::Rng rng(42);
    for (int i = 0; i < 30; ++i) {
        auto a = rng.poly(r, 3, 3);
        auto b = rng.poly(r, 3, 3);
        auto c = rng.poly(r, 3, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("substitute") {
    auto r = RingDescriptor::make(CoefficientField::rationals(), {"T"});
    auto T = var(r, "T");

    // T^2 - T at T = 0 vanishes
    CHECK((T * T - T).substitute("T", Rational(0)).is_zero());
    // T^2 - 3T + 2 at T = 1: 1 - 3 + 2 = 0 (direct evaluation)
    auto p = T * T - T.scaled(Rational(3)) + Polynomial::constant(r, 2);
    CHECK(p.substitute("T", Rational(1)).is_zero());
    CHECK(p.substitute("T", Rational(0)) == Polynomial::constant(r, 2));

    // V(T) = 2T*y under T -> X*T gives 2XTy
    auto rty = RingDescriptor::make(CoefficientField::rationals(), {"T", "y"});
    auto ext = rty.extended({"X"});
    auto v = Polynomial::variable(rty, "T").scaled(Rational(2)) * Polynomial::variable(rty, "y");
    std::map<std::string, Polynomial> b;
    b.emplace("T", Polynomial::variable(ext, "X") * Polynomial::variable(ext, "T"));
    auto img = v.substitute(b);
    auto expect = Polynomial::variable(ext, "X") * Polynomial::variable(ext, "T") *
                  Polynomial::variable(ext, "y");
    CHECK(img == expect.scaled(Rational(2)));

    CHECK_THROWS_AS(v.substitute("z", Rational(0)), Error);
}

TEST_CASE("substitute is a ring homomorphism") {
    auto r = qxy();
    auto ext = r.extended({"T"});
    qctest::Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        auto p = rng.poly(r, 3, 3);
        auto q = rng.poly(r, 3, 3);
        std::map<std::string, Polynomial> b;
        b.emplace("x", rng.poly(ext, 2, 2));
        b.emplace("y", rng.poly(ext, 2, 2));
        CHECK((p * q).substitute(b) == p.substitute(b) * q.substitute(b));
        CHECK((p + q).substitute(b) == p.substitute(b) + q.substitute(b));
    }
}

TEST_CASE("extend_ring") {
    auto r = RingDescriptor::make(CoefficientField::rationals(), {"x"});
    auto rt = r.extended({"T"});
    CHECK(rt.vars() == std::vector<std::string>{"x", "T"});
    auto rtx = rt.extended({"X"});
    CHECK(rtx.vars() == std::vector<std::string>{"x", "T", "X"});
    CHECK_THROWS_AS(r.extended({"x"}), NameClashError);

    // existing polynomials embed term-by-term
    auto p = var(r, "x") * var(r, "x") + Polynomial::one(r);
    auto pe = p.embed(rt);
    CHECK(pe.degree_in(*rt.index_of("x")) == 2);
    CHECK(pe.restrict_to(r) == p);
}

TEST_CASE("embedding and restriction guard variables") {
    auto r = qxy();
    auto rx = RingDescriptor::make(CoefficientField::rationals(), {"x"});
    auto p = var(r, "y");
    CHECK_THROWS_AS(p.restrict_to(rx), RingMismatchError);
    CHECK(var(r, "x").restrict_to(rx) == var(rx, "x"));
}

TEST_CASE("exponent overflow is a checked error") {
    auto r = RingDescriptor::make(CoefficientField::rationals(), {"x"});
    auto big = Polynomial::monomial(r, {1 << 27}, Rational(1));
    CHECK_THROWS_AS(big * big * big, OverflowError);
}

TEST_CASE("univariate coefficient view") {
    auto r = RingDescriptor::make(CoefficientField::rationals(), {"x", "T"});
    auto x = var(r, "x");
    auto T = var(r, "T");
    auto p = T * T * T + x * T + Polynomial::one(r);
    auto coeffs = p.coefficients_in(*r.index_of("T"));
    CHECK(coeffs.size() == 3);
    CHECK(coeffs.at(3) == Polynomial::one(r));
    CHECK(coeffs.at(1) == x);
    CHECK(coeffs.at(0) == Polynomial::one(r));
}

TEST_CASE("canonical string form") {
    auto r = qxy();
    auto x = var(r, "x");
    auto y = var(r, "y");
    auto p = x * x - y.scaled(Rational(1, 2)) + Polynomial::constant(r, -3);
    CHECK(p.to_string() == "x^2 - 1/2*y - 3");
    CHECK(Polynomial::zero(r).to_string() == "0");
}
