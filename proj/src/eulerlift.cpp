#include "quadcert/eulerlift.hpp"

#include <algorithm>

#include "quadcert/errors.hpp"
#include "quadcert/matrix.hpp"

namespace quadcert {

std::vector<Polynomial> square_generators(const Ideal& J) {
    std::vector<Polynomial> out;
    const auto& g = J.gens();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j) out.push_back(g[i] * g[j]);
    return out;
}

LocalOrientation LocalOrientation::make(const Ideal& J, std::vector<Polynomial> a) {
    if (a.empty()) throw PreconditionError("orientation needs at least one generator");
    for (const auto& p : a)
        if (p.ring() != J.ring()) throw RingMismatchError("orientation generator over wrong ring");

    LocalOrientation o;
    o.J_ = J;
    o.a_ = std::move(a);
    o.j2_gens_ = square_generators(J);

    // (a) + J^2 contained in J: each a_i must lie in J.
    for (const auto& p : o.a_)
        if (!member(p, J))
            throw PreconditionError("orientation generator not in the ideal: " + p.to_string());

    // J = (a) + J^2: every generator of J reduces to zero.
    std::vector<Polynomial> combined = o.a_;
    for (const auto& g : o.j2_gens_) combined.push_back(g);
    Ideal a_plus_j2(J.ring(), combined);
    for (const auto& g : J.gens()) {
        auto cert = member(g, a_plus_j2);
        if (!cert)
            throw PreconditionError("generator of J does not reduce modulo (a) + J^2: " +
                                    g.to_string());
        o.gen_certs_.push_back(std::move(*cert));
    }

    o.height_ = height(J);
    return o;
}

namespace {

// Attribute the cofactors of a membership certificate over a combined ideal
// back to the two source generator lists (the ideal constructor prunes
// duplicates, so positions must be recovered by value).
struct SplitCofactors {
    std::vector<Polynomial> first;
    std::vector<Polynomial> second;
};

SplitCofactors split_cofactors(const MembershipCertificate& cert, const Ideal& combined,
                               const std::vector<Polynomial>& first_gens,
                               const std::vector<Polynomial>& second_gens,
                               const RingDescriptor& ring) {
    SplitCofactors out;
    out.first.assign(first_gens.size(), Polynomial::zero(ring));
    out.second.assign(second_gens.size(), Polynomial::zero(ring));
    const auto& cg = combined.gens();
    for (std::size_t k = 0; k < cg.size(); ++k) {
        if (cert.cofactors[k].is_zero()) continue;
        auto it = std::find(first_gens.begin(), first_gens.end(), cg[k]);
        if (it != first_gens.end()) {
            std::size_t pos = static_cast<std::size_t>(it - first_gens.begin());
            out.first[pos] = out.first[pos] + cert.cofactors[k];
            continue;
        }
        auto jt = std::find(second_gens.begin(), second_gens.end(), cg[k]);
        if (jt == second_gens.end()) throw Error("cofactor attribution failed");
        std::size_t pos = static_cast<std::size_t>(jt - second_gens.begin());
        out.second[pos] = out.second[pos] + cert.cofactors[k];
    }
    return out;
}

// Core of the determinant trick; empty result means a contract check failed
// and the caller retries with reordered generators.
std::optional<NakayamaResult> try_nakayama(const Ideal& I, const Ideal& J, const Ideal& K) {
    const RingDescriptor& ring = I.ring();
    const auto& gens = I.gens();
    const std::size_t r = gens.size();

    if (r == 0) {
        NakayamaResult res;
        res.s = Polynomial::zero(ring);
        res.s_in_K = {res.s, std::vector<Polynomial>(K.gens().size(), Polynomial::zero(ring))};
        res.s_idempotent_mod_J = {Polynomial::zero(ring),
                                  std::vector<Polynomial>(J.gens().size(), Polynomial::zero(ring))};
        return res;
    }

    // Write a_i = sum_l c_il a_l + j_i, the c_il assembled from I^2-cofactors.
    std::vector<Polynomial> sq = square_generators(I);
    std::vector<Polynomial> combined = sq;
    for (const auto& g : J.gens()) combined.push_back(g);
    Ideal i2_plus_j(ring, combined);

    PolyMatrix C(ring, r, r);
    for (std::size_t i = 0; i < r; ++i) {
        auto cert = member(gens[i], i2_plus_j);
        if (!cert) return std::nullopt;
        auto split = split_cofactors(*cert, i2_plus_j, sq, J.gens(), ring);
        // sq[(k,l)] = a_k * a_l with k <= l: put cofactor * a_k in column l.
        std::size_t idx = 0;
        for (std::size_t k = 0; k < r; ++k) {
            for (std::size_t l = k; l < r; ++l, ++idx) {
                if (split.first[idx].is_zero()) continue;
                C.at(i, l) = C.at(i, l) + split.first[idx] * gens[k];
            }
        }
    }

    // det(Id - C) = 1 - e with e in I and I(1-e) contained in J.
    Polynomial det = (PolyMatrix::identity(ring, r) - C).determinant();
    Polynomial e = Polynomial::one(ring) - det;

    // Pull e back into K along the surjection K -> I/J.
    std::vector<Polynomial> kj = K.gens();
    for (const auto& g : J.gens()) kj.push_back(g);
    Ideal k_plus_j(ring, kj);
    auto pull = member(e, k_plus_j);
    if (!pull) return std::nullopt;
    auto split = split_cofactors(*pull, k_plus_j, K.gens(), J.gens(), ring);
    Polynomial s = Polynomial::zero(ring);
    for (std::size_t k = 0; k < K.gens().size(); ++k) s = s + split.first[k] * K.gens()[k];

    // Certify the contract.
    NakayamaResult res;
    res.s = s;
    res.s_in_K = {s, split.first};
    if (!res.s_in_K.expands_over(K.gens())) return std::nullopt;

    std::vector<Polynomial> sj = {s};
    for (const auto& g : J.gens()) sj.push_back(g);
    Ideal s_plus_j(ring, sj);
    for (const auto& g : gens) {
        auto cert = member(g, s_plus_j);
        if (!cert) return std::nullopt;
        auto sp = split_cofactors(*cert, s_plus_j, {s}, J.gens(), ring);
        std::vector<Polynomial> cof = {sp.first[0]};
        for (auto& c : sp.second) cof.push_back(std::move(c));
        res.I_gens_in_sJ.push_back({g, std::move(cof)});
    }

    auto idem = member(s - s * s, Ideal(ring, J.gens()));
    if (!idem) return std::nullopt;
    res.s_idempotent_mod_J = std::move(*idem);
    return res;
}

}  // namespace

NakayamaResult nakayama_lift(const Ideal& I, const Ideal& J, const Ideal& K) {
    const RingDescriptor& ring = I.ring();
    if (J.ring() != ring || K.ring() != ring) throw RingMismatchError("nakayama_lift: mixed rings");

    // Preconditions, certified: I = J + K and K in I^2.
    std::vector<Polynomial> jk = J.gens();
    for (const auto& g : K.gens()) jk.push_back(g);
    Ideal j_plus_k(ring, jk);
    for (const auto& g : I.gens())
        if (!member(g, j_plus_k))
            throw PreconditionError("I = J + K fails: generator " + g.to_string() +
                                    " of I is not in J + K");
    for (const auto& g : J.gens())
        if (!member(g, I))
            throw PreconditionError("I = J + K fails: generator " + g.to_string() +
                                    " of J is not in I");
    Ideal i_square(ring, square_generators(I));
    for (const auto& g : K.gens()) {
        if (!member(g, i_square))
            throw PreconditionError("K is not contained in I^2: failed membership for " +
                                    g.to_string());
        if (!member(g, I))
            throw PreconditionError("I = J + K fails: generator " + g.to_string() +
                                    " of K is not in I");
    }

    if (auto res = try_nakayama(I, J, K)) return *res;
    // Degenerate determinant trick: retry once with reversed generators.
    std::vector<Polynomial> rev = I.gens();
    std::reverse(rev.begin(), rev.end());
    if (auto res = try_nakayama(Ideal(ring, rev), J, K)) return *res;
    throw Error("nakayama_lift: determinant trick degenerate for both generator orders");
}

ThetaPoint theta_point(const LocalOrientation& o) {
    const RingDescriptor& ring = o.J().ring();
    const int n = o.n();

    Ideal a_ideal(ring, o.a());
    Ideal j2(ring, o.j_square_gens());
    NakayamaResult nk = nakayama_lift(o.J(), a_ideal, j2);

    // b read off the membership certificate of s - s^2 in (a).
    auto cert = member(nk.s - nk.s * nk.s, a_ideal);
    if (!cert) throw Error("theta_point: s - s^2 escaped (a)");
    std::vector<Polynomial> b(static_cast<std::size_t>(n), Polynomial::zero(ring));
    {
        const auto& ag = a_ideal.gens();
        for (std::size_t k = 0; k < ag.size(); ++k) {
            if (cert->cofactors[k].is_zero()) continue;
            auto it = std::find(o.a().begin(), o.a().end(), ag[k]);
            std::size_t pos = static_cast<std::size_t>(it - o.a().begin());
            b[pos] = b[pos] + cert->cofactors[k];
        }
    }

    std::vector<Polynomial> coords = o.a();
    coords.insert(coords.end(), b.begin(), b.end());
    coords.push_back(nk.s);

    // Reorder the J = (s) + (a) certificates from [s, a...] to [a..., s].
    std::vector<MembershipCertificate> j_in_as;
    for (auto& cert : nk.I_gens_in_sJ) {
        std::vector<Polynomial> cof(cert.cofactors.begin() + 1, cert.cofactors.end());
        cof.push_back(cert.cofactors.front());
        j_in_as.push_back({cert.element, std::move(cof)});
    }

    ThetaPoint tp{QuadricPoint::require(ring, n, QuadricKind::Q, std::move(coords)),
                  nk.s,
                  std::move(b),
                  nk.s_in_K,
                  std::move(j_in_as),
                  {}};

    for (const auto& ai : o.a()) {
        auto c = member(ai, o.J());
        if (!c) throw Error("theta_point: orientation generator escaped J");
        tp.as_in_J.push_back(std::move(*c));
    }
    auto sc = member(nk.s, o.J());
    if (!sc) throw Error("theta_point: s escaped J");
    tp.as_in_J.push_back(std::move(*sc));
    return tp;
}

MovingStep moving_step(const QuadricPoint& v, const std::vector<Polynomial>& mu) {
    if (v.kind() != QuadricKind::Q)
        throw PreconditionError("moving_step expects a Q-flavor point");
    const int n = v.n();
    if (mu.size() != static_cast<std::size_t>(n))
        throw PreconditionError("moving_step: expected " + std::to_string(n) +
                                " moving coefficients, got " + std::to_string(mu.size()));
    const RingDescriptor& base = v.ring();
    for (const auto& m : mu)
        if (m.ring() != base) throw RingMismatchError("moving coefficient over wrong ring");

    std::string param = base.fresh_name("X");
    RingDescriptor ext = base.extended({param});
    Polynomial X = Polynomial::variable(ext, param);
    Polynomial one = Polynomial::one(ext);

    Polynomial s = v.z().embed(ext);
    Polynomial one_minus_s_sq = (one - s) * (one - s);
    Polynomial mu_bt = Polynomial::zero(ext);
    for (int i = 0; i < n; ++i)
        mu_bt = mu_bt + mu[static_cast<std::size_t>(i)].embed(ext) * v.y(i).embed(ext);
    Polynomial scale = one - X * mu_bt;

    std::vector<Polynomial> coords;
    coords.reserve(static_cast<std::size_t>(2 * n + 1));
    for (int i = 0; i < n; ++i)
        coords.push_back(v.x(i).embed(ext) +
                         X * mu[static_cast<std::size_t>(i)].embed(ext) * one_minus_s_sq);
    for (int i = 0; i < n; ++i) coords.push_back(scale * v.y(i).embed(ext));
    coords.push_back(s + X * mu_bt * (one - s));

    // The proof identity, expanded over the extended ring:
    //   A b^t (1 - X mu b^t) = (1-s)(1 - X mu b^t) - (1-s)^2 (1 - X mu b^t)^2
    Polynomial a_bt = Polynomial::zero(ext);
    for (int i = 0; i < n; ++i)
        a_bt = a_bt + coords[static_cast<std::size_t>(i)] * v.y(i).embed(ext);
    Polynomial lhs = a_bt * scale;
    Polynomial rhs = (one - s) * scale - one_minus_s_sq * scale * scale;
    if (lhs != rhs) throw Error("moving_step: proof identity failed to expand to zero");

    HomotopyWitness H = HomotopyWitness::make(
        base, param, QuadricPoint::require(ext, n, QuadricKind::Q, std::move(coords)));
    QuadricPoint v2 = H.at1();
    Ideal K = associated_ideal(v2);
    Height h = height(K);
    bool ok = h.at_least(n);
    return MovingStep{std::move(H), std::move(v2), std::move(K), h, ok};
}

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

MuSearchResult find_moving_mu(const QuadricPoint& v, int trials,
                              const std::vector<Polynomial>& pool, uint64_t seed) {
    if (trials < 1) throw PreconditionError("find_moving_mu: trials must be >= 1");
    if (pool.empty()) throw PreconditionError("find_moving_mu: empty coefficient pool");
    const int n = v.n();
    const RingDescriptor& ring = v.ring();

    MuSearchResult out;
    out.seed = seed;
    uint64_t state = seed;

    for (int t = 0; t < trials; ++t) {
        std::vector<Polynomial> mu;
        if (t == 0) {
            mu.assign(static_cast<std::size_t>(n), Polynomial::zero(ring));
        } else {
            for (int i = 0; i < n; ++i) {
                std::size_t pick = static_cast<std::size_t>(splitmix64(state) % pool.size());
                mu.push_back(pool[pick].embed(ring));
            }
        }
        MovingStep step = moving_step(v, mu);
        out.trials_used = t + 1;
        if (step.height.infinite ||
            (!out.best_height.infinite && step.height.value > out.best_height.value))
            out.best_height = step.height;
        if (step.meets_threshold) {
            out.step = std::move(step);
            out.mu = std::move(mu);
            return out;
        }
    }
    return out;
}

}  // namespace quadcert
