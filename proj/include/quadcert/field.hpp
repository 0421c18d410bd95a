#pragma once

#include <gmpxx.h>

#include <string>

#include "quadcert/errors.hpp"

namespace quadcert {

using Rational = mpq_class;

// Coefficient field with 2 invertible: the rationals, or a prime field F_p
// with p an odd prime. Prime-field values are canonical residues 0..p-1
// stored with denominator 1.
class CoefficientField {
public:
    static CoefficientField rationals() { return CoefficientField(0); }
    static CoefficientField prime_field(unsigned long p);

    bool is_rationals() const { return p_ == 0; }
    unsigned long characteristic() const { return p_; }

    Rational normalize(const Rational& v) const;
    Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
    Rational neg(const Rational& a) const { return normalize(-a); }
    Rational inv(const Rational& a) const;
    Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }
    Rational from_long(long v) const { return normalize(Rational(v)); }

    bool is_zero(const Rational& a) const { return normalize(a) == 0; }

    std::string to_string() const;
    std::string coeff_to_string(const Rational& a) const;

    bool operator==(const CoefficientField& o) const { return p_ == o.p_; }
    bool operator!=(const CoefficientField& o) const { return p_ != o.p_; }

private:
    explicit CoefficientField(unsigned long p) : p_(p) {}
    unsigned long p_;  // 0 = rationals
};

}  // namespace quadcert
