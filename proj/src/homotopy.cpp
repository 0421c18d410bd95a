#include "quadcert/homotopy.hpp"

#include "quadcert/errors.hpp"

namespace quadcert {

HomotopyWitness HomotopyWitness::make(const RingDescriptor& base_ring, const std::string& param,
                                      QuadricPoint point) {
    if (!point.ring().has_var(param))
        throw PreconditionError("homotopy parameter not a variable of the witness ring");
    if (base_ring.has_var(param))
        throw PreconditionError("homotopy parameter must be fresh over the base ring");
    if (point.ring() != base_ring.extended({param}))
        throw RingMismatchError("witness ring must be the base ring extended by the parameter");
    return HomotopyWitness(base_ring, param, std::move(point));
}

HomotopyWitness HomotopyWitness::constant(const QuadricPoint& v) {
    std::string param = v.ring().fresh_name("X");
    RingDescriptor ext = v.ring().extended({param});
    return HomotopyWitness(v.ring(), param, v.embed(ext));
}

QuadricPoint HomotopyWitness::at(const Rational& value) const {
    QuadricPoint sub =
        point_.substitute({{param_, Polynomial::constant(point_.ring(), value)}});
    return sub.restrict_to(base_ring_);
}

HomotopyWitness HomotopyWitness::reversed() const {
    Polynomial x = Polynomial::variable(point_.ring(), param_);
    Polynomial one = Polynomial::one(point_.ring());
    std::map<std::string, Polynomial> b;
    b.emplace(param_, one - x);
    return HomotopyWitness(base_ring_, param_, point_.substitute(b));
}

HomotopyWitness HomotopyWitness::embed_base(const RingDescriptor& target_base) const {
    if (target_base.has_var(param_))
        throw NameClashError("target base ring already uses the parameter name " + param_);
    RingDescriptor ext = target_base.extended({param_});
    return HomotopyWitness(target_base, param_, point_.embed(ext));
}

HomotopyWitness HomotopyWitness::restrict_base(const RingDescriptor& target_base) const {
    RingDescriptor ext = target_base.extended({param_});
    return HomotopyWitness(target_base, param_, point_.restrict_to(ext));
}

HomotopyWitness HomotopyWitness::substitute_base(const std::string& var,
                                                 const Polynomial& image) const {
    if (var == param_) throw PreconditionError("cannot substitute the homotopy parameter");
    if (image.ring() != base_ring_)
        throw RingMismatchError("substitute_base image must live over the base ring");
    std::map<std::string, Polynomial> b;
    b.emplace(var, image.embed(point_.ring()));
    return HomotopyWitness(base_ring_, param_, point_.substitute(b));
}

HomotopyChain::HomotopyChain(std::vector<HomotopyWitness> links) : links_(std::move(links)) {
    if (links_.empty()) throw PreconditionError("chain needs at least one link");
    for (const auto& l : links_)
        if (l.base_ring() != links_.front().base_ring())
            throw RingMismatchError("chain links over mixed base rings");
}

std::pair<QuadricPoint, QuadricPoint> HomotopyChain::endpoints() const {
    return {links_.front().at0(), links_.back().at1()};
}

HomotopyChain HomotopyChain::then(const HomotopyChain& o) const {
    std::vector<HomotopyWitness> ls = links_;
    ls.insert(ls.end(), o.links_.begin(), o.links_.end());
    return HomotopyChain(std::move(ls));
}

HomotopyChain HomotopyChain::reversed() const {
    std::vector<HomotopyWitness> ls;
    for (auto it = links_.rbegin(); it != links_.rend(); ++it) ls.push_back(it->reversed());
    return HomotopyChain(std::move(ls));
}

HomotopyChain HomotopyChain::embed_base(const RingDescriptor& target_base) const {
    std::vector<HomotopyWitness> ls;
    ls.reserve(links_.size());
    for (const auto& l : links_) ls.push_back(l.embed_base(target_base));
    return HomotopyChain(std::move(ls));
}

HomotopyChain HomotopyChain::restrict_base(const RingDescriptor& target_base) const {
    std::vector<HomotopyWitness> ls;
    ls.reserve(links_.size());
    for (const auto& l : links_) ls.push_back(l.restrict_base(target_base));
    return HomotopyChain(std::move(ls));
}

HomotopyChain HomotopyChain::substitute_base(const std::string& var,
                                             const Polynomial& image) const {
    std::vector<HomotopyWitness> ls;
    ls.reserve(links_.size());
    for (const auto& l : links_) ls.push_back(l.substitute_base(var, image));
    return HomotopyChain(std::move(ls));
}

std::pair<QuadricPoint, QuadricPoint> endpoints(const HomotopyWitness& h) {
    return {h.at0(), h.at1()};
}

std::pair<QuadricPoint, QuadricPoint> endpoints(const HomotopyChain& c) { return c.endpoints(); }

namespace {

std::optional<Polynomial> first_defect(const QuadricPoint& a, const QuadricPoint& b) {
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        Polynomial d = a.coords()[i] - b.coords()[i];
        if (!d.is_zero()) return d;
    }
    return std::nullopt;
}

}  // namespace

ChainVerification verify_chain(const HomotopyChain& c, const QuadricPoint& from,
                               const QuadricPoint& to) {
    ChainVerification res;
    const auto& links = c.links();
    if (from.ring() != c.base_ring() || to.ring() != c.base_ring()) {
        res.what = "endpoint ring mismatch";
        return res;
    }
    if (from.n() != links.front().point().n() || from.kind() != links.front().point().kind() ||
        to.n() != from.n() || to.kind() != from.kind()) {
        res.what = "endpoint size or flavor mismatch";
        return res;
    }

    QuadricPoint start = links.front().at0();
    if (start != from) {
        res.what = "chain start differs from expected point";
        res.broken_junction = -1;
        res.defect = first_defect(start, from);
        return res;
    }
    for (std::size_t k = 0; k + 1 < links.size(); ++k) {
        QuadricPoint left = links[k].at1();
        QuadricPoint right = links[k + 1].at0();
        if (left != right) {
            res.what = "junction " + std::to_string(k) + " mismatch";
            res.broken_junction = static_cast<int>(k);
            res.defect = first_defect(left, right);
            return res;
        }
    }
    QuadricPoint finish = links.back().at1();
    if (finish != to) {
        res.what = "chain end differs from expected point";
        res.broken_junction = static_cast<int>(links.size()) - 1;
        res.defect = first_defect(finish, to);
        return res;
    }
    res.ok = true;
    res.what = "chain verified";
    res.broken_junction = -2;
    return res;
}

HomotopyChain elementary_homotopy(const QuadricPoint& v, const OrthWord& w) {
    if (w.ring() != v.ring()) throw RingMismatchError("elementary_homotopy: ring mismatch");
    if (w.n() != v.n()) throw PreconditionError("elementary_homotopy: size mismatch");

    const RingDescriptor& base = v.ring();
    std::string param = base.fresh_name("X");
    RingDescriptor ext = base.extended({param});
    Polynomial X = Polynomial::variable(ext, param);

    std::vector<HomotopyWitness> links;
    QuadricPoint running = v;
    for (const auto& factor : w.factors()) {
        OrthWord scaled_factor(ext, w.n(), {factor.scaled(X)});
        QuadricPoint moved = act(running.embed(ext), scaled_factor);
        links.push_back(HomotopyWitness::make(base, param, std::move(moved)));
        running = act(running, OrthWord(base, w.n(), {factor}));
    }
    if (links.empty()) links.push_back(HomotopyWitness::constant(v));
    return HomotopyChain(std::move(links));
}

HomotopyWitness cylinder(const QuadricPoint& V, const std::string& T_name,
                         const Rational& anchor) {
    if (!V.ring().has_var(T_name))
        throw PreconditionError("cylinder: variable " + T_name + " not present in ring");
    const RingDescriptor& base = V.ring();
    std::string param = base.fresh_name("X");
    RingDescriptor ext = base.extended({param});
    Polynomial T = Polynomial::variable(ext, T_name);
    Polynomial X = Polynomial::variable(ext, param);
    Polynomial a = Polynomial::constant(ext, anchor);
    std::map<std::string, Polynomial> b;
    b.emplace(T_name, a + (T - a) * X);
    return HomotopyWitness::make(base, param, V.substitute(b));
}

}  // namespace quadcert
