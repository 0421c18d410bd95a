#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quadcert/polynomial.hpp"

namespace quadcert {

// Witness that `element` lies in an ideal: element = sum cofactors[i] * gens[i].
struct MembershipCertificate {
    Polynomial element;
    std::vector<Polynomial> cofactors;

    bool expands_over(const std::vector<Polynomial>& gens) const;
};

// Reduced Groebner basis together with expressions of its elements over the
// original generators (elements[i] = sum_j expressions[i][j] * gens[j]).
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> elements;
    std::vector<std::vector<Polynomial>> expressions;

    bool contains_unit() const;
};

// Height of an ideal; the unit ideal gets a +infinity sentinel which
// satisfies every ">= n" threshold.
struct Height {
    bool infinite = false;
    long value = 0;

    static Height inf() { return {true, 0}; }
    static Height finite(long v) { return {false, v}; }
    bool at_least(long n) const { return infinite || value >= n; }
    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
    bool operator==(const Height&) const = default;
};

// Finitely generated ideal of a polynomial ring. Zero and duplicate
// generators are pruned at construction. Groebner bases are cached per order.
class Ideal {
public:
    Ideal() = default;
    Ideal(const RingDescriptor& ring, std::vector<Polynomial> gens);

    const RingDescriptor& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    // Reduced Groebner basis w.r.t. `order` (ring default when omitted).
    // Deterministic for fixed input and order. `cancel` is polled between
    // S-polynomial reductions.
    const GroebnerBasis& groebner(std::optional<MonomialOrder> order = std::nullopt,
                                  const std::atomic<bool>* cancel = nullptr) const;

    bool operator==(const Ideal& o) const { return ring_ == o.ring_ && gens_ == o.gens_; }

private:
    RingDescriptor ring_;
    std::vector<Polynomial> gens_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

struct Reduction {
    Polynomial remainder;
    MembershipCertificate certificate;  // for element = p - remainder
};

// Normal form of p modulo I's reduced basis, with a certificate expressing
// p - remainder over I's generators.
Reduction reduce(const Polynomial& p, const Ideal& I);

// Certificate iff the normal form of p vanishes.
std::optional<MembershipCertificate> member(const Polynomial& p, const Ideal& I);

// I and J via a fresh elimination variable t: eliminate t from t*I + (1-t)*J.
Ideal intersect(const Ideal& I, const Ideal& J);

// (I : f^inf) via a Rabinowitsch variable w, eliminating w from I + (1 - w*f).
Ideal saturate(const Ideal& I, const Polynomial& f);

// Krull dimension of R/I from the leading-term ideal; -1 for the unit ideal.
long dimension(const Ideal& I);

Height height(const Ideal& I);

// Bezout witness of comaximality: 1 = u + v with u in I, v in J.
struct BezoutCertificate {
    Polynomial u, v;
    MembershipCertificate u_in_first, v_in_second;
};

std::optional<BezoutCertificate> comaximal(const Ideal& I, const Ideal& J);

struct CrtTarget {
    Polynomial value;
    Ideal modulus;
};

struct CrtResult {
    Polynomial lift;
    std::vector<MembershipCertificate> certificates;  // lift - value_i over modulus_i
};

class NonComaximalError : public PreconditionError {
public:
    NonComaximalError(std::size_t i, std::size_t j, Polynomial remainder)
        : PreconditionError("moduli " + std::to_string(i) + " and " + std::to_string(j) +
                            " are not comaximal; 1 reduces to " + remainder.to_string()),
          first(i),
          second(j),
          unit_remainder(std::move(remainder)) {}
    std::size_t first, second;
    Polynomial unit_remainder;
};

// Simultaneous congruences: returns f with f - value_i in modulus_i for all i.
CrtResult crt_lift(const std::vector<CrtTarget>& targets);

}  // namespace quadcert
