#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadcert/polynomial.hpp"

namespace qctest {

// Deterministic generator with fixed constants so expected values frozen in
// tests are stable across platforms and standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] (inclusive).
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    quadcert::Rational coeff(long bound = 5) {
        long v = range(-bound, bound);
        return quadcert::Rational(v);
    }

    quadcert::Rational nonzero_coeff(long bound = 5) {
        for (;;) {
            auto c = coeff(bound);
            if (c != 0) return c;
        }
    }

    quadcert::Polynomial poly(const quadcert::RingDescriptor& ring, int max_deg, int terms) {
        using quadcert::Polynomial;
        Polynomial acc = Polynomial::zero(ring);
        for (int t = 0; t < terms; ++t) {
            quadcert::ExpVec e(ring.nvars(), 0);
            long budget = range(0, max_deg);
            for (long d = 0; d < budget; ++d) {
                std::size_t i = static_cast<std::size_t>(range(0, static_cast<long>(ring.nvars()) - 1));
                e[i] += 1;
            }
            acc = acc + Polynomial::monomial(ring, e, coeff());
        }
        return acc;
    }

    quadcert::Polynomial nonzero_poly(const quadcert::RingDescriptor& ring, int max_deg, int terms) {
        for (;;) {
            auto p = poly(ring, max_deg, terms);
            if (!p.is_zero()) return p;
        }
    }

private:
    uint64_t state_;
};

}  // namespace qctest
