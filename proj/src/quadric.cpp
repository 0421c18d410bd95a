#include "quadcert/quadric.hpp"

#include "quadcert/errors.hpp"

namespace quadcert {

std::string to_string(QuadricKind k) { return k == QuadricKind::Q ? "Q" : "Qprime"; }

Polynomial QuadricPoint::defect(const RingDescriptor& ring, int n, QuadricKind kind,
                                const std::vector<Polynomial>& coords) {
    Polynomial pairing = Polynomial::zero(ring);
    for (int i = 0; i < n; ++i)
        pairing = pairing + coords[static_cast<std::size_t>(i)] *
                                coords[static_cast<std::size_t>(n + i)];
    const Polynomial& z = coords[static_cast<std::size_t>(2 * n)];
    if (kind == QuadricKind::QPrime) return pairing + z * z - Polynomial::one(ring);
    return pairing - z + z * z;
}

QuadricCheck QuadricPoint::check(const RingDescriptor& ring, int n, QuadricKind kind,
                                              std::vector<Polynomial> coords) {
    if (n < 2) throw PreconditionError("quadric point needs n >= 2");
    if (coords.size() != static_cast<std::size_t>(2 * n + 1))
        throw PreconditionError("expected " + std::to_string(2 * n + 1) + " coordinates, got " +
                                std::to_string(coords.size()));
    for (const auto& c : coords)
        if (c.ring() != ring) throw RingMismatchError("coordinate over wrong ring");
    Polynomial d = defect(ring, n, kind, coords);
    QuadricCheck res{std::nullopt, d};
    if (d.is_zero()) res.point = QuadricPoint(ring, n, kind, std::move(coords));
    return res;
}

QuadricPoint QuadricPoint::require(const RingDescriptor& ring, int n, QuadricKind kind,
                                   std::vector<Polynomial> coords) {
    auto res = check(ring, n, kind, std::move(coords));
    if (!res.ok())
        throw PreconditionError("not a point of " + to_string(kind) +
                                ": defect = " + res.defect.to_string());
    return *res.point;
}

QuadricPoint QuadricPoint::base_point(const RingDescriptor& ring, int n, QuadricKind kind) {
    if (n < 2) throw PreconditionError("quadric point needs n >= 2");
    std::vector<Polynomial> coords(static_cast<std::size_t>(2 * n + 1), Polynomial::zero(ring));
    if (kind == QuadricKind::QPrime) coords.back() = Polynomial::one(ring);
    return QuadricPoint(ring, n, kind, std::move(coords));
}

bool QuadricPoint::is_base_point() const { return *this == base_point(ring_, n_, kind_); }

QuadricPoint QuadricPoint::embed(const RingDescriptor& target) const {
    std::vector<Polynomial> coords;
    coords.reserve(coords_.size());
    for (const auto& c : coords_) coords.push_back(c.embed(target));
    return QuadricPoint(target, n_, kind_, std::move(coords));
}

QuadricPoint QuadricPoint::restrict_to(const RingDescriptor& target) const {
    std::vector<Polynomial> coords;
    coords.reserve(coords_.size());
    for (const auto& c : coords_) coords.push_back(c.restrict_to(target));
    return QuadricPoint(target, n_, kind_, std::move(coords));
}

QuadricPoint QuadricPoint::substitute(const std::map<std::string, Polynomial>& bindings) const {
    std::vector<Polynomial> coords;
    coords.reserve(coords_.size());
    for (const auto& c : coords_) coords.push_back(c.substitute(bindings));
    // A ring homomorphism preserves the defining identity.
    RingDescriptor target = bindings.empty() ? ring_ : bindings.begin()->second.ring();
    return QuadricPoint(target, n_, kind_, std::move(coords));
}

bool QuadricPoint::operator==(const QuadricPoint& o) const {
    return ring_ == o.ring_ && n_ == o.n_ && kind_ == o.kind_ && coords_ == o.coords_;
}

QuadricPoint alpha(const QuadricPoint& v) {
    if (v.kind() != QuadricKind::QPrime)
        throw PreconditionError("alpha expects a Qprime-flavor point");
    const auto& ring = v.ring();
    Rational half(1, 2);
    std::vector<Polynomial> coords;
    coords.reserve(v.coords().size());
    for (int i = 0; i < 2 * v.n(); ++i)
        coords.push_back(v.coords()[static_cast<std::size_t>(i)].scaled(half));
    coords.push_back((Polynomial::one(ring) - v.z()).scaled(half));
    return QuadricPoint::require(ring, v.n(), QuadricKind::Q, std::move(coords));
}

QuadricPoint beta(const QuadricPoint& v) {
    if (v.kind() != QuadricKind::Q) throw PreconditionError("beta expects a Q-flavor point");
    const auto& ring = v.ring();
    Rational two(2);
    std::vector<Polynomial> coords;
    coords.reserve(v.coords().size());
    for (int i = 0; i < 2 * v.n(); ++i)
        coords.push_back(v.coords()[static_cast<std::size_t>(i)].scaled(two));
    coords.push_back(Polynomial::one(ring) - v.z().scaled(two));
    return QuadricPoint::require(ring, v.n(), QuadricKind::QPrime, std::move(coords));
}

Ideal associated_ideal(const QuadricPoint& v) {
    if (v.kind() != QuadricKind::Q)
        throw PreconditionError("associated ideal is defined for Q-flavor points");
    std::vector<Polynomial> gens;
    for (int i = 0; i < v.n(); ++i) gens.push_back(v.x(i));
    gens.push_back(v.z());
    return Ideal(v.ring(), std::move(gens));
}

}  // namespace quadcert
