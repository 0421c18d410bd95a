#include "quadcert/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quadcert/errors.hpp"

namespace quadcert {

bool MembershipCertificate::expands_over(const std::vector<Polynomial>& gens) const {
    if (cofactors.size() != gens.size()) return false;
    Polynomial acc = Polynomial::zero(element.ring());
    for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + cofactors[i] * gens[i];
    return acc == element;
}

bool GroebnerBasis::contains_unit() const {
    for (const auto& g : elements)
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Internal ordered representation for division and Buchberger's algorithm.

namespace {

struct Term {
    ExpVec e;
    Rational c;
};

// Terms sorted descending w.r.t. the active order.
struct OrdPoly {
    std::vector<Term> t;
    bool is_zero() const { return t.empty(); }
    const Term& lt() const { return t.front(); }
};

OrdPoly to_ordered(const Polynomial& p, const MonomialOrder& ord) {
    OrdPoly q;
    q.t.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) q.t.push_back({e, c});
    std::sort(q.t.begin(), q.t.end(),
              [&](const Term& a, const Term& b) { return compare_monomials(ord, a.e, b.e) > 0; });
    return q;
}

Polynomial from_ordered(const OrdPoly& p, const RingDescriptor& ring) {
    Polynomial::Terms t;
    for (const auto& term : p.t) t.emplace(term.e, term.c);
    return Polynomial::from_terms(ring, std::move(t));
}

bool divides(const ExpVec& a, const ExpVec& b) {  // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

// h -= c * x^shift * g, merging sorted term lists.
OrdPoly sub_scaled(const OrdPoly& h, const Rational& c, const ExpVec& shift, const OrdPoly& g,
                   const MonomialOrder& ord, const CoefficientField& field) {
    OrdPoly out;
    out.t.reserve(h.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    while (i < h.t.size() || j < g.t.size()) {
        if (j == g.t.size()) {
            out.t.push_back(h.t[i++]);
            continue;
        }
        ExpVec ge = exp_add(g.t[j].e, shift);
        Rational gc = field.neg(field.mul(c, g.t[j].c));
        if (i == h.t.size()) {
            out.t.push_back({std::move(ge), std::move(gc)});
            ++j;
            continue;
        }
        int cmp = compare_monomials(ord, h.t[i].e, ge);
        if (cmp > 0) {
            out.t.push_back(h.t[i++]);
        } else if (cmp < 0) {
            out.t.push_back({std::move(ge), std::move(gc)});
            ++j;
        } else {
            Rational s = field.add(h.t[i].c, gc);
            if (s != 0) out.t.push_back({h.t[i].e, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

struct Row {
    OrdPoly p;
    std::vector<Polynomial> expr;  // over the original generators
};

struct DivisionResult {
    OrdPoly remainder;
    std::vector<Polynomial> quotients;  // one per divisor row
};

// Multivariate division with full tail reduction; deterministic (first
// divisor whose leading term divides wins).
DivisionResult divide(const OrdPoly& p, const std::vector<Row>& rows, const RingDescriptor& ring,
                      const MonomialOrder& ord) {
    const auto& field = ring.field();
    DivisionResult res;
    res.quotients.assign(rows.size(), Polynomial::zero(ring));
    OrdPoly h = p;
    OrdPoly rem;
    while (!h.is_zero()) {
        bool reduced = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].p.is_zero()) continue;
            const Term& glt = rows[i].p.lt();
            if (!divides(glt.e, h.lt().e)) continue;
            ExpVec shift = exp_sub(h.lt().e, glt.e);
            Rational c = field.div(h.lt().c, glt.c);
            res.quotients[i] =
                res.quotients[i] + Polynomial::monomial(ring, shift, c);
            h = sub_scaled(h, c, shift, rows[i].p, ord, field);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.t.push_back(h.lt());
            h.t.erase(h.t.begin());
        }
    }
    res.remainder = std::move(rem);
    return res;
}

std::vector<Polynomial> combine_expressions(const DivisionResult& div,
                                            const std::vector<Row>& rows, std::size_t ngens,
                                            const RingDescriptor& ring) {
    std::vector<Polynomial> out(ngens, Polynomial::zero(ring));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (div.quotients[i].is_zero()) continue;
        for (std::size_t j = 0; j < ngens; ++j) {
            if (rows[i].expr[j].is_zero()) continue;
            out[j] = out[j] + div.quotients[i] * rows[i].expr[j];
        }
    }
    return out;
}

GroebnerBasis buchberger(const RingDescriptor& ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord, const std::atomic<bool>* cancel) {
    const auto& field = ring.field();
    std::vector<Row> rows;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        Row r;
        r.p = to_ordered(gens[j], ord);
        r.expr.assign(gens.size(), Polynomial::zero(ring));
        r.expr[j] = Polynomial::one(ring);
        if (!r.p.is_zero()) rows.push_back(std::move(r));
    }

    struct Pair {
        std::size_t i, j;
        ExpVec lcm;
    };
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> processed;
    auto add_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            pending.push_back({i, k, exp_lcm(rows[i].p.lt().e, rows[k].p.lt().e)});
    };
    for (std::size_t k = 0; k < rows.size(); ++k) add_pairs_for(k);

    while (!pending.empty()) {
        if (cancel && cancel->load()) throw CancelledError();
        // Normal selection: the pair with the smallest lcm in the order.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            int c = compare_monomials(ord, pending[k].lcm, pending[best].lcm);
            if (c < 0 || (c == 0 && std::make_pair(pending[k].i, pending[k].j) <
                                        std::make_pair(pending[best].i, pending[best].j)))
                best = k;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + static_cast<long>(best));
        processed.insert({pr.i, pr.j});

        const ExpVec& lti = rows[pr.i].p.lt().e;
        const ExpVec& ltj = rows[pr.j].p.lt().e;
        // First Buchberger criterion: coprime leading terms.
        if (pr.lcm == exp_add(lti, ltj)) continue;
        // Second (chain) criterion.
        bool skip = false;
        for (std::size_t k = 0; k < rows.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(rows[k].p.lt().e, pr.lcm)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(pr.j, k);
            if (processed.count({key1.first, key1.second}) &&
                processed.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        // S-polynomial with expression tracking.
        ExpVec si = exp_sub(pr.lcm, lti);
        ExpVec sj = exp_sub(pr.lcm, ltj);
        Rational ci = field.inv(rows[pr.i].p.lt().c);
        Rational cj = field.inv(rows[pr.j].p.lt().c);
        OrdPoly s = sub_scaled(OrdPoly{}, field.neg(ci), si, rows[pr.i].p, ord, field);
        s = sub_scaled(s, cj, sj, rows[pr.j].p, ord, field);

        DivisionResult div = divide(s, rows, ring, ord);
        if (div.remainder.is_zero()) continue;

        Row nr;
        nr.p = div.remainder;
        nr.expr.assign(gens.size(), Polynomial::zero(ring));
        Polynomial mi = Polynomial::monomial(ring, si, ci);
        Polynomial mj = Polynomial::monomial(ring, sj, cj);
        auto qexpr = combine_expressions(div, rows, gens.size(), ring);
        for (std::size_t g = 0; g < gens.size(); ++g)
            nr.expr[g] = mi * rows[pr.i].expr[g] - mj * rows[pr.j].expr[g] - qexpr[g];
        rows.push_back(std::move(nr));
        add_pairs_for(rows.size() - 1);
    }

    // Minimalize: drop rows whose leading term is divisible by another's.
    std::vector<bool> keep(rows.size(), true);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (divides(rows[j].p.lt().e, rows[i].p.lt().e) &&
                !(rows[j].p.lt().e == rows[i].p.lt().e && j > i))
                keep[i] = false;
        }
    }
    std::vector<Row> minimal;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(rows[i]));

    // Tail-reduce each element against the others and make monic.
    std::vector<Row> reduced = minimal;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Row> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        DivisionResult div = divide(minimal[i].p, others, ring, ord);
        Row r;
        r.p = div.remainder;
        auto qexpr = combine_expressions(div, others, gens.size(), ring);
        r.expr.assign(gens.size(), Polynomial::zero(ring));
        for (std::size_t g = 0; g < gens.size(); ++g)
            r.expr[g] = minimal[i].expr[g] - qexpr[g];
        Rational lc = r.p.lt().c;
        Rational ilc = field.inv(lc);
        for (auto& term : r.p.t) term.c = field.mul(term.c, ilc);
        for (auto& e : r.expr) e = e.scaled(ilc);
        reduced[i] = std::move(r);
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Row& a, const Row& b) {
        return compare_monomials(ord, a.p.lt().e, b.p.lt().e) < 0;
    });

    GroebnerBasis gb;
    gb.order = ord;
    for (auto& r : reduced) {
        gb.elements.push_back(from_ordered(r.p, ring));
        gb.expressions.push_back(std::move(r.expr));
    }
    return gb;
}

}  // namespace

// ---------------------------------------------------------------------------

struct Ideal::Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> by_order;
};

Ideal::Ideal(const RingDescriptor& ring, std::vector<Polynomial> gens)
    : ring_(ring), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        if (g.ring() != ring)
            throw RingMismatchError("ideal generator over wrong ring: " + g.ring().to_string());
        if (g.is_zero()) continue;
        if (std::find(gens_.begin(), gens_.end(), g) != gens_.end()) continue;
        gens_.push_back(std::move(g));
    }
}

const GroebnerBasis& Ideal::groebner(std::optional<MonomialOrder> order,
                                     const std::atomic<bool>* cancel) const {
    MonomialOrder ord = order.value_or(ring_.order());
    std::string key = ord.to_string();
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->by_order.find(key);
        if (it != cache_->by_order.end()) return *it->second;
    }
    auto gb = std::make_shared<GroebnerBasis>(buchberger(ring_, gens_, ord, cancel));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, ins] = cache_->by_order.emplace(key, std::move(gb));
    return *it->second;
}

Reduction reduce(const Polynomial& p, const Ideal& I) {
    if (p.ring() != I.ring()) throw RingMismatchError("reduce: polynomial over wrong ring");
    const RingDescriptor& ring = I.ring();
    const MonomialOrder ord = ring.order();
    const GroebnerBasis& gb = I.groebner();

    std::vector<Row> rows;
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        rows.push_back({to_ordered(gb.elements[i], ord), gb.expressions[i]});

    DivisionResult div = divide(to_ordered(p, ord), rows, ring, ord);
    Reduction res;
    res.remainder = from_ordered(div.remainder, ring);
    res.certificate.element = p - res.remainder;
    res.certificate.cofactors = combine_expressions(div, rows, I.gens().size(), ring);
    return res;
}

std::optional<MembershipCertificate> member(const Polynomial& p, const Ideal& I) {
    Reduction r = reduce(p, I);
    if (!r.remainder.is_zero()) return std::nullopt;
    return r.certificate;
}

namespace {

// Restrict basis elements free of the auxiliary tail variable back to `ring`.
Ideal eliminate_tail(const GroebnerBasis& gb, const RingDescriptor& ext,
                     const RingDescriptor& ring) {
    std::size_t tail = ext.nvars() - 1;
    std::vector<Polynomial> kept;
    for (const auto& g : gb.elements)
        if (!g.uses_var(tail)) kept.push_back(g.restrict_to(ring));
    return Ideal(ring, std::move(kept));
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw RingMismatchError("intersect: mixed rings");
    const RingDescriptor& ring = I.ring();
    std::string t = ring.fresh_name("_t");
    RingDescriptor ext = ring.extended({t});
    Polynomial tv = Polynomial::variable(ext, t);
    Polynomial one_minus_t = Polynomial::one(ext) - tv;
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(tv * g.embed(ext));
    for (const auto& g : J.gens()) gens.push_back(one_minus_t * g.embed(ext));
    Ideal K(ext, std::move(gens));
    return eliminate_tail(K.groebner(MonomialOrder::elim(1)), ext, ring);
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
    if (f.ring() != I.ring()) throw RingMismatchError("saturate: mixed rings");
    if (f.is_zero()) throw PreconditionError("saturate: f must be nonzero");
    const RingDescriptor& ring = I.ring();
    std::string w = ring.fresh_name("_w");
    RingDescriptor ext = ring.extended({w});
    Polynomial wv = Polynomial::variable(ext, w);
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(g.embed(ext));
    gens.push_back(Polynomial::one(ext) - wv * f.embed(ext));
    Ideal K(ext, std::move(gens));
    return eliminate_tail(K.groebner(MonomialOrder::elim(1)), ext, ring);
}

long dimension(const Ideal& I) {
    const GroebnerBasis& gb = I.groebner();
    if (gb.contains_unit()) return -1;
    const std::size_t n = I.ring().nvars();
    if (n > 24) throw Error("dimension: too many variables");

    std::vector<uint32_t> supports;
    for (const auto& g : gb.elements) {
        // Support of the leading term w.r.t. the basis order.
        const Polynomial::Terms& terms = g.terms();
        auto lead = terms.begin();
        for (auto it = terms.begin(); it != terms.end(); ++it)
            if (compare_monomials(gb.order, it->first, lead->first) > 0) lead = it;
        uint32_t mask = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (lead->first[i] > 0) mask |= (uint32_t(1) << i);
        supports.push_back(mask);
    }

    long best = -1;
    for (uint32_t s = 0; s < (uint32_t(1) << n); ++s) {
        bool independent = true;
        for (uint32_t m : supports) {
            if ((m & ~s) == 0) {  // support(lt) contained in s
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, static_cast<long>(__builtin_popcount(s)));
    }
    return best;
}

Height height(const Ideal& I) {
    long dim = dimension(I);
    if (dim < 0) return Height::inf();
    return Height::finite(static_cast<long>(I.ring().nvars()) - dim);
}

std::optional<BezoutCertificate> comaximal(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw RingMismatchError("comaximal: mixed rings");
    std::vector<Polynomial> combined = I.gens();
    for (const auto& g : J.gens()) combined.push_back(g);
    Ideal sum(I.ring(), combined);
    auto cert = member(Polynomial::one(I.ring()), sum);
    if (!cert) return std::nullopt;

    // The pruning in Ideal's constructor keeps generators in order, so the
    // first |I.gens()| cofactor slots of `sum` correspond to I... unless a
    // duplicate was pruned. Recover positions explicitly.
    const auto& sg = sum.gens();
    std::vector<Polynomial> cof_i(I.gens().size(), Polynomial::zero(I.ring()));
    std::vector<Polynomial> cof_j(J.gens().size(), Polynomial::zero(I.ring()));
    Polynomial u = Polynomial::zero(I.ring());
    for (std::size_t k = 0; k < sg.size(); ++k) {
        auto it = std::find(I.gens().begin(), I.gens().end(), sg[k]);
        if (it != I.gens().end()) {
            std::size_t pos = static_cast<std::size_t>(it - I.gens().begin());
            cof_i[pos] = cof_i[pos] + cert->cofactors[k];
            u = u + cert->cofactors[k] * sg[k];
        } else {
            auto jt = std::find(J.gens().begin(), J.gens().end(), sg[k]);
            std::size_t pos = static_cast<std::size_t>(jt - J.gens().begin());
            cof_j[pos] = cof_j[pos] + cert->cofactors[k];
        }
    }
    BezoutCertificate bez;
    bez.u = u;
    bez.v = Polynomial::one(I.ring()) - u;
    bez.u_in_first = {bez.u, std::move(cof_i)};
    bez.v_in_second = {bez.v, std::move(cof_j)};
    return bez;
}

CrtResult crt_lift(const std::vector<CrtTarget>& targets) {
    if (targets.empty()) throw PreconditionError("crt_lift: no targets");
    const RingDescriptor& ring = targets.front().value.ring();
    for (const auto& t : targets)
        if (t.value.ring() != ring || t.modulus.ring() != ring)
            throw RingMismatchError("crt_lift: mixed rings");

    CrtResult out;
    if (targets.size() == 1) {
        out.lift = targets[0].value;
        MembershipCertificate c;
        c.element = Polynomial::zero(ring);
        c.cofactors.assign(targets[0].modulus.gens().size(), Polynomial::zero(ring));
        out.certificates.push_back(std::move(c));
        return out;
    }

    // Pairwise Bezout data; ones[i][j] = 1 mod I_i, in I_j.
    const std::size_t k = targets.size();
    std::vector<std::vector<Polynomial>> ones(k, std::vector<Polynomial>(k, Polynomial::zero(ring)));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            auto bez = comaximal(targets[i].modulus, targets[j].modulus);
            if (!bez) {
                Reduction r = reduce(Polynomial::one(ring),
                                     Ideal(ring, [&] {
                                         auto g = targets[i].modulus.gens();
                                         for (const auto& h : targets[j].modulus.gens())
                                             g.push_back(h);
                                         return g;
                                     }()));
                throw NonComaximalError(i, j, r.remainder);
            }
            ones[i][j] = bez->v;  // in I_j, = 1 - u = 1 mod I_i
            ones[j][i] = bez->u;  // in I_i, = 1 mod I_j
        }
    }

    Polynomial f = Polynomial::zero(ring);
    for (std::size_t i = 0; i < k; ++i) {
        Polynomial e = Polynomial::one(ring);
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) e = e * ones[i][j];
        f = f + targets[i].value * e;
    }
    out.lift = f;
    for (std::size_t i = 0; i < k; ++i) {
        auto cert = member(f - targets[i].value, targets[i].modulus);
        if (!cert) throw Error("crt_lift: internal check failed");
        out.certificates.push_back(std::move(*cert));
    }
    return out;
}

}  // namespace quadcert
