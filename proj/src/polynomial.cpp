#include "quadcert/polynomial.hpp"

#include <algorithm>

#include "quadcert/errors.hpp"

namespace quadcert {

namespace {

constexpr int32_t kExpLimit = 1 << 28;

ExpVec add_exps(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) + b[i];
        if (s > kExpLimit) throw OverflowError("exponent overflow");
        r[i] = static_cast<int32_t>(s);
    }
    return r;
}

}  // namespace

Polynomial Polynomial::zero(const RingDescriptor& ring) { return Polynomial(ring, {}); }

Polynomial Polynomial::one(const RingDescriptor& ring) { return constant(ring, Rational(1)); }

Polynomial Polynomial::constant(const RingDescriptor& ring, const Rational& c) {
    Terms t;
    Rational v = ring.field().normalize(c);
    if (v != 0) t.emplace(ExpVec(ring.nvars(), 0), v);
    return Polynomial(ring, std::move(t));
}

Polynomial Polynomial::constant(const RingDescriptor& ring, long c) {
    return constant(ring, Rational(c));
}

Polynomial Polynomial::variable(const RingDescriptor& ring, const std::string& name) {
    auto idx = ring.index_of(name);
    if (!idx) throw Error("no such variable: " + name + " in " + ring.to_string());
    ExpVec e(ring.nvars(), 0);
    e[*idx] = 1;
    Terms t;
    t.emplace(std::move(e), Rational(1));
    return Polynomial(ring, std::move(t));
}

Polynomial Polynomial::monomial(const RingDescriptor& ring, const ExpVec& exps,
                                const Rational& coeff) {
    if (exps.size() != ring.nvars()) throw Error("exponent vector length mismatch");
    for (auto e : exps)
        if (e < 0 || e > kExpLimit) throw OverflowError("exponent out of range");
    Terms t;
    Rational v = ring.field().normalize(coeff);
    if (v != 0) t.emplace(exps, v);
    return Polynomial(ring, std::move(t));
}

Polynomial Polynomial::from_terms(const RingDescriptor& ring, Terms terms) {
    Terms out;
    for (auto& [e, c] : terms) {
        if (e.size() != ring.nvars()) throw Error("exponent vector length mismatch");
        Rational v = ring.field().normalize(c);
        if (v != 0) out.emplace(e, std::move(v));
    }
    return Polynomial(ring, std::move(out));
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    return quadcert::total_degree(terms_.begin()->first) == 0;
}

bool Polynomial::is_one() const { return is_constant() && constant_value() == 1; }

Rational Polynomial::constant_value() const {
    ExpVec zero(ring_.nvars(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

long Polynomial::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, quadcert::total_degree(e));
    return d;
}

long Polynomial::degree_in(std::size_t var_index) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max<long>(d, e[var_index]);
    return d;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (ring_ != o.ring_)
        throw RingMismatchError("operands over different rings: " + ring_.to_string() + " vs " +
                                o.ring_.to_string());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    Terms t = terms_;
    const auto& field = ring_.field();
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = t.emplace(e, c);
        if (!inserted) {
            it->second = field.add(it->second, c);
            if (it->second == 0) t.erase(it);
        }
    }
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Terms t;
    const auto& field = ring_.field();
    for (const auto& [e, c] : terms_) t.emplace(e, field.neg(c));
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    Terms t;
    const auto& field = ring_.field();
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e = add_exps(e1, e2);
            Rational c = field.mul(c1, c2);
            auto [it, inserted] = t.emplace(std::move(e), c);
            if (!inserted) {
                it->second = field.add(it->second, c);
                if (it->second == 0) t.erase(it);
            }
        }
    }
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::pow(long k) const {
    if (k < 0) throw Error("negative exponent");
    Polynomial result = one(ring_);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = (k >>= 1) ? base * base : base;
    }
    return result;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    const auto& field = ring_.field();
    Rational v = field.normalize(c);
    if (v == 0) return zero(ring_);
    Terms t;
    for (const auto& [e, coeff] : terms_) t.emplace(e, field.mul(coeff, v));
    return Polynomial(ring_, std::move(t));
}

bool Polynomial::operator==(const Polynomial& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
    if (bindings.empty()) return *this;
    RingDescriptor target = bindings.begin()->second.ring();
    for (const auto& [name, img] : bindings) {
        if (!ring_.has_var(name)) throw Error("bound variable not in ring: " + name);
        if (img.ring() != target) throw RingMismatchError("substitution images over mixed rings");
    }
    if (ring_.field() != target.field())
        throw RingMismatchError("substitution cannot change the coefficient field");

    // Per-variable image (target variable itself when unbound).
    std::vector<Polynomial> images;
    images.reserve(ring_.nvars());
    for (const auto& name : ring_.vars()) {
        auto it = bindings.find(name);
        if (it != bindings.end()) {
            images.push_back(it->second);
        } else {
            if (!target.has_var(name))
                throw RingMismatchError("unbound variable missing from target ring: " + name);
            images.push_back(variable(target, name));
        }
    }

    std::vector<std::map<long, Polynomial>> pow_cache(ring_.nvars());
    auto image_pow = [&](std::size_t i, long k) -> const Polynomial& {
        auto it = pow_cache[i].find(k);
        if (it == pow_cache[i].end()) it = pow_cache[i].emplace(k, images[i].pow(k)).first;
        return it->second;
    };

    Polynomial acc = zero(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term * image_pow(i, e[i]);
        acc = acc + term;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::string& var, const Rational& value) const {
    std::map<std::string, Polynomial> b;
    b.emplace(var, constant(ring_, value));
    return substitute(b);
}

Polynomial Polynomial::embed(const RingDescriptor& target) const {
    if (target == ring_) return *this;
    if (ring_.field() != target.field())
        throw RingMismatchError("embedding cannot change the coefficient field");
    std::vector<std::size_t> where(ring_.nvars());
    for (std::size_t i = 0; i < ring_.nvars(); ++i) {
        auto idx = target.index_of(ring_.vars()[i]);
        if (!idx) throw RingMismatchError("target ring lacks variable: " + ring_.vars()[i]);
        where[i] = *idx;
    }
    Terms t;
    for (const auto& [e, c] : terms_) {
        ExpVec ne(target.nvars(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
        t.emplace(std::move(ne), c);
    }
    return Polynomial(target, std::move(t));
}

Polynomial Polynomial::restrict_to(const RingDescriptor& target) const {
    if (target == ring_) return *this;
    if (ring_.field() != target.field())
        throw RingMismatchError("restriction cannot change the coefficient field");
    std::vector<std::optional<std::size_t>> where(ring_.nvars());
    for (std::size_t i = 0; i < ring_.nvars(); ++i) where[i] = target.index_of(ring_.vars()[i]);
    Terms t;
    for (const auto& [e, c] : terms_) {
        ExpVec ne(target.nvars(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!where[i])
                throw RingMismatchError("polynomial uses variable absent from target ring: " +
                                        ring_.vars()[i]);
            ne[*where[i]] = e[i];
        }
        t.emplace(std::move(ne), c);
    }
    return Polynomial(target, std::move(t));
}

bool Polynomial::uses_var(std::size_t var_index) const {
    for (const auto& [e, c] : terms_)
        if (e[var_index] != 0) return true;
    return false;
}

std::map<long, Polynomial> Polynomial::coefficients_in(std::size_t var_index) const {
    std::map<long, Polynomial> out;
    for (const auto& [e, c] : terms_) {
        ExpVec rest = e;
        long d = rest[var_index];
        rest[var_index] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, zero(ring_)).first;
        it->second = it->second + monomial(ring_, rest, c);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // Terms printed in descending ring order.
    std::vector<const std::pair<const ExpVec, Rational>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    const MonomialOrder& ord = ring_.order();
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return compare_monomials(ord, a->first, b->first) > 0; });

    std::string out;
    bool first = true;
    for (auto* t : sorted) {
        const auto& [e, c] = *t;
        bool neg = c < 0;
        Rational abs = neg ? Rational(-c) : c;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_.vars()[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string coeff = ring_.field().coeff_to_string(abs);
        std::string piece;
        if (mono.empty())
            piece = coeff;
        else if (coeff == "1")
            piece = mono;
        else
            piece = coeff + "*" + mono;

        if (first) {
            out += (neg ? "-" : "") + piece;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

}  // namespace quadcert
