#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadcert/ortho.hpp"
#include "quadcert/quadric.hpp"

namespace quadcert {

// One-parameter quadric point: a point over the base ring extended by a
// fresh parameter variable, satisfying the defining equation identically.
// Its specializations at parameter 0 and 1 are the endpoints.
class HomotopyWitness {
public:
    // `point` lives over base_ring + {param}; the parameter must be a
    // variable of point.ring() absent from base_ring.
    static HomotopyWitness make(const RingDescriptor& base_ring, const std::string& param,
                                QuadricPoint point);

    // Constant witness at a point over the base ring (parameter unused).
    static HomotopyWitness constant(const QuadricPoint& v);

    const RingDescriptor& base_ring() const { return base_ring_; }
    const std::string& param() const { return param_; }
    const QuadricPoint& point() const { return point_; }

    QuadricPoint at0() const { return at(Rational(0)); }
    QuadricPoint at1() const { return at(Rational(1)); }
    QuadricPoint at(const Rational& value) const;

    // Endpoints swapped: parameter X replaced by 1 - X.
    HomotopyWitness reversed() const;
    // Transport the base ring along an embedding (the parameter is appended
    // to the target ring).
    HomotopyWitness embed_base(const RingDescriptor& target_base) const;
    // Shrink the base ring; the witness must not use the dropped variables.
    HomotopyWitness restrict_base(const RingDescriptor& target_base) const;
    // Substitute a base-ring variable (must not be the parameter).
    HomotopyWitness substitute_base(const std::string& var, const Polynomial& image) const;

private:
    HomotopyWitness(RingDescriptor base, std::string param, QuadricPoint point)
        : base_ring_(std::move(base)), param_(std::move(param)), point_(std::move(point)) {}

    RingDescriptor base_ring_;
    std::string param_;
    QuadricPoint point_;
};

// Finite chain of witnesses over a common base ring. The naive homotopy
// relation is not transitive, so chains are the certificate currency.
// Junction validity is established by verify_chain, not at construction.
class HomotopyChain {
public:
    explicit HomotopyChain(std::vector<HomotopyWitness> links);

    const std::vector<HomotopyWitness>& links() const { return links_; }
    const RingDescriptor& base_ring() const { return links_.front().base_ring(); }

    // (first link at 0, last link at 1)
    std::pair<QuadricPoint, QuadricPoint> endpoints() const;

    HomotopyChain then(const HomotopyChain& o) const;
    HomotopyChain reversed() const;
    HomotopyChain embed_base(const RingDescriptor& target_base) const;
    HomotopyChain restrict_base(const RingDescriptor& target_base) const;
    HomotopyChain substitute_base(const std::string& var, const Polynomial& image) const;

private:
    std::vector<HomotopyWitness> links_;
};

std::pair<QuadricPoint, QuadricPoint> endpoints(const HomotopyWitness& h);
std::pair<QuadricPoint, QuadricPoint> endpoints(const HomotopyChain& c);

// Failure-as-value result of chain verification. `broken_junction` is the
// index k of the first junction with link_k(1) != link_{k+1}(0); -1 when the
// failure is at an endpoint; defect is the first nonzero coordinate
// difference found.
struct ChainVerification {
    bool ok = false;
    std::string what;
    int broken_junction = -2;
    std::optional<Polynomial> defect;
};

ChainVerification verify_chain(const HomotopyChain& c, const QuadricPoint& from,
                               const QuadricPoint& to);

// Chain realizing v ~ act(v, w) by scaling each factor's parameter with a
// fresh variable: one witness per factor of w.
HomotopyChain elementary_homotopy(const QuadricPoint& v, const OrthWord& w);

// Witness linking V(anchor) and V via the substitution T -> anchor + (T - anchor)X
// (T -> T*X for the default anchor 0). V must be valid over a ring containing T.
HomotopyWitness cylinder(const QuadricPoint& V, const std::string& T_name,
                         const Rational& anchor = Rational(0));

}  // namespace quadcert
