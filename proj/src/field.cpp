#include "quadcert/field.hpp"

namespace quadcert {

namespace {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

CoefficientField CoefficientField::prime_field(unsigned long p) {
    if (p == 2) throw Error("prime field F_2 not supported: 2 must be invertible");
    if (!is_prime(p)) throw Error("not a prime: " + std::to_string(p));
    return CoefficientField(p);
}

Rational CoefficientField::normalize(const Rational& v) const {
    Rational r(v);
    r.canonicalize();
    if (p_ == 0) return r;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = r.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = r.get_den() % p;
    if (den < 0) den += p;
    if (den == 0) throw Error("denominator vanishes in F_" + std::to_string(p_));
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw Error("non-invertible denominator in F_" + std::to_string(p_));
    mpz_class res = (num * dinv) % p;
    if (res < 0) res += p;
    return Rational(res);
}

Rational CoefficientField::inv(const Rational& a) const {
    Rational r = normalize(a);
    if (r == 0) throw Error("division by zero");
    if (p_ == 0) return 1 / r;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class x = r.get_num();
    mpz_class xinv;
    if (mpz_invert(xinv.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0)
        throw Error("non-invertible element in F_" + std::to_string(p_));
    if (xinv < 0) xinv += p;
    return Rational(xinv);
}

std::string CoefficientField::to_string() const {
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

std::string CoefficientField::coeff_to_string(const Rational& a) const {
    Rational r = normalize(a);
    return r.get_str();
}

}  // namespace quadcert
