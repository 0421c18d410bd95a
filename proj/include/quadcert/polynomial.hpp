#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadcert/ring.hpp"

namespace quadcert {

// Sparse multivariate polynomial in canonical form: a finite map from
// exponent vectors to nonzero coefficients. Equality is exact equality of
// term maps. Immutable; all operations return new values.
class Polynomial {
public:
    using Terms = std::map<ExpVec, Rational>;

    Polynomial() = default;

    static Polynomial zero(const RingDescriptor& ring);
    static Polynomial one(const RingDescriptor& ring);
    static Polynomial constant(const RingDescriptor& ring, const Rational& c);
    static Polynomial constant(const RingDescriptor& ring, long c);
    static Polynomial variable(const RingDescriptor& ring, const std::string& name);
    static Polynomial monomial(const RingDescriptor& ring, const ExpVec& exps,
                               const Rational& coeff);
    static Polynomial from_terms(const RingDescriptor& ring, Terms terms);

    const RingDescriptor& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // Constant term (0 if absent).
    Rational constant_value() const;

    long total_degree() const;  // -1 for the zero polynomial
    long degree_in(std::size_t var_index) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial pow(long k) const;
    Polynomial scaled(const Rational& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Homomorphic substitution. Every bound name must be a variable of this
    // ring; all images must share one target ring, and every unbound variable
    // of this ring must exist in the target (it maps to itself). With no
    // bindings the polynomial is returned unchanged.
    Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;

    // Convenience: substitute one variable by a constant of the same ring.
    Polynomial substitute(const std::string& var, const Rational& value) const;

    // Ring transport by variable name. embed: every variable of this ring
    // must exist in `target`. restrict_to: every variable actually occurring
    // must exist in `target`.
    Polynomial embed(const RingDescriptor& target) const;
    Polynomial restrict_to(const RingDescriptor& target) const;
    bool uses_var(std::size_t var_index) const;

    // View as a univariate polynomial in the given variable: map from
    // T-degree to coefficient polynomial (with the T-exponent zeroed out).
    std::map<long, Polynomial> coefficients_in(std::size_t var_index) const;

    std::string to_string() const;

private:
    Polynomial(RingDescriptor ring, Terms terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}
    void check_same_ring(const Polynomial& o) const;

    RingDescriptor ring_;
    Terms terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

}  // namespace quadcert
