#pragma once

#include <optional>
#include <vector>

#include "quadcert/ideal.hpp"
#include "quadcert/polynomial.hpp"

namespace quadcert {

// The two pointed quadric sets:
//   QPrime: sum x_i y_i + z^2 = 1, base point (0,...,0,1)
//   Q:      sum x_i y_i = z - z^2, base point (0,...,0)
// with 2n+1 coordinates (x_1..x_n, y_1..y_n, z) and n >= 2.
enum class QuadricKind { Q, QPrime };

std::string to_string(QuadricKind k);

struct QuadricCheck;

// A validated point of Q_{2n} or Q'_{2n} over a polynomial ring. Construction
// goes through check() or base_point(); the defining identity always holds.
class QuadricPoint {
public:
    static QuadricCheck check(const RingDescriptor& ring, int n, QuadricKind kind,
                              std::vector<Polynomial> coords);
    // As check(), but throws PreconditionError on a nonzero defect.
    static QuadricPoint require(const RingDescriptor& ring, int n, QuadricKind kind,
                                std::vector<Polynomial> coords);
    static QuadricPoint base_point(const RingDescriptor& ring, int n, QuadricKind kind);

    // The defining-equation defect of a raw coordinate vector.
    static Polynomial defect(const RingDescriptor& ring, int n, QuadricKind kind,
                             const std::vector<Polynomial>& coords);

    const RingDescriptor& ring() const { return ring_; }
    int n() const { return n_; }
    QuadricKind kind() const { return kind_; }
    const std::vector<Polynomial>& coords() const { return coords_; }
    const Polynomial& x(int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const Polynomial& y(int i) const { return coords_[static_cast<std::size_t>(n_ + i)]; }
    const Polynomial& z() const { return coords_[static_cast<std::size_t>(2 * n_)]; }

    bool is_base_point() const;

    QuadricPoint embed(const RingDescriptor& target) const;
    QuadricPoint restrict_to(const RingDescriptor& target) const;
    QuadricPoint substitute(const std::map<std::string, Polynomial>& bindings) const;

    bool operator==(const QuadricPoint& o) const;
    bool operator!=(const QuadricPoint& o) const { return !(*this == o); }

private:
    QuadricPoint(RingDescriptor ring, int n, QuadricKind kind, std::vector<Polynomial> coords)
        : ring_(std::move(ring)), n_(n), kind_(kind), coords_(std::move(coords)) {}

    RingDescriptor ring_;
    int n_ = 0;
    QuadricKind kind_ = QuadricKind::Q;
    std::vector<Polynomial> coords_;
};

struct QuadricCheck {
    std::optional<QuadricPoint> point;
    Polynomial defect;  // zero iff point is set
    bool ok() const { return point.has_value(); }
};

// Mutually inverse bijections between the two quadrics (2 invertible):
//   beta:  Q -> QPrime, (x, y, z) |-> (2x, 2y, 1 - 2z)
//   alpha: QPrime -> Q, (x, y, z) |-> (x/2, y/2, (1-z)/2)
QuadricPoint alpha(const QuadricPoint& v);
QuadricPoint beta(const QuadricPoint& v);

// Ideal (x_1, ..., x_n, z) attached to a Q-flavor point.
Ideal associated_ideal(const QuadricPoint& v);

}  // namespace quadcert
