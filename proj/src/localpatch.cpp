#include "quadcert/localpatch.hpp"

#include <algorithm>

#include "quadcert/errors.hpp"

namespace quadcert {

LocalizedElement LocalizedElement::of(const Polynomial& p) {
    return {p, Polynomial::one(p.ring()), 0};
}

LocalizedElement LocalizedElement::over(Polynomial num, Polynomial den_base, int den_exp) {
    if (den_exp < 0) throw PreconditionError("negative denominator exponent");
    if (den_base.is_zero()) throw PreconditionError("zero denominator base");
    if (den_exp == 0) den_base = Polynomial::one(num.ring());
    return {std::move(num), std::move(den_base), den_exp};
}

bool LocalizedElement::same_as(const LocalizedElement& o) const {
    return num * o.den() == o.num * den();
}

MonicCheck monic_check(const Polynomial& f, const std::string& T) {
    auto idx = f.ring().index_of(T);
    if (!idx) throw PreconditionError("monic_check: no variable " + T + " in the ring");
    MonicCheck res;
    if (f.is_zero()) {
        res.leading_coeff = f;
        return res;
    }
    auto coeffs = f.coefficients_in(*idx);
    res.degree = coeffs.rbegin()->first;
    res.leading_coeff = coeffs.rbegin()->second;
    res.ok = res.leading_coeff.is_one();
    return res;
}

LocalizedWord::LocalizedWord(const RingDescriptor& ring, int n, Polynomial den_base,
                             std::vector<Factor> factors)
    : ring_(ring), n_(n), den_base_(std::move(den_base)), factors_(std::move(factors)) {
    if (den_base_.is_zero()) throw PreconditionError("zero denominator base");
    if (den_base_.ring() != ring_) throw RingMismatchError("denominator base over wrong ring");
    for (const auto& f : factors_) {
        if (f.gen.n() != n_) throw PreconditionError("generator size mismatch in localized word");
        if (f.gen.lambda().ring() != ring_)
            throw RingMismatchError("generator numerator over wrong ring");
        if (f.den_exp < 0) throw PreconditionError("negative denominator exponent");
    }
}

LocalizedWord LocalizedWord::from_word(const OrthWord& w, Polynomial den_base) {
    std::vector<Factor> fs;
    fs.reserve(w.factors().size());
    for (const auto& g : w.factors()) fs.push_back({g, 0});
    return LocalizedWord(w.ring(), w.n(), std::move(den_base), std::move(fs));
}

LocalizedWord LocalizedWord::inverse() const {
    std::vector<Factor> fs;
    fs.reserve(factors_.size());
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
        fs.push_back({it->gen.inverse(), it->den_exp});
    return LocalizedWord(ring_, n_, den_base_, std::move(fs));
}

LocalizedWord LocalizedWord::relocalize(const Polynomial& extra) const {
    if (extra.is_zero()) throw PreconditionError("relocalize by zero");
    std::vector<Factor> fs;
    fs.reserve(factors_.size());
    for (const auto& f : factors_)
        fs.push_back({f.gen.with_lambda(f.gen.lambda() * extra.pow(f.den_exp)), f.den_exp});
    return LocalizedWord(ring_, n_, den_base_ * extra, std::move(fs));
}

OrthWord LocalizedWord::specialize(const std::map<std::string, Polynomial>& bindings) const {
    Polynomial base_img = den_base_.substitute(bindings);
    if (!base_img.is_constant() || base_img.is_zero())
        throw PreconditionError(
            "specialization must send the denominator base to a nonzero constant, got " +
            base_img.to_string());
    const RingDescriptor& target = base_img.ring();
    Rational inv = target.field().inv(base_img.constant_value());
    std::vector<OrthGenerator> fs;
    fs.reserve(factors_.size());
    for (const auto& f : factors_) {
        Polynomial num = f.gen.lambda().substitute(bindings);
        Rational scale(1);
        for (int k = 0; k < f.den_exp; ++k) scale *= inv;
        fs.push_back(f.gen.with_lambda(num.scaled(scale)));
    }
    return OrthWord(target, n_, std::move(fs));
}

LocalizedMatrix expand(const LocalizedWord& w) {
    const RingDescriptor& ring = w.ring();
    const std::size_t size = static_cast<std::size_t>(2 * w.n() + 1);
    std::string L = ring.fresh_name("_L");
    RingDescriptor ext = ring.extended({L});
    Polynomial Lvar = Polynomial::variable(ext, L);
    std::size_t Lidx = *ext.index_of(L);

    PolyMatrix acc = PolyMatrix::identity(ring, size);
    int total_exp = 0;
    for (const auto& factor : w.factors()) {
        PolyMatrix sym = factor.gen.with_lambda(Lvar).expand(ext);
        PolyMatrix num(ring, size, size);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                // Entries are quadratic in the parameter; clearing base^k
                // against lambda = num/base^k gives
                //   sum_d coeff_d num^d base^((2-d)k).
                Polynomial cell = Polynomial::zero(ring);
                for (const auto& [d, c] : sym.at(i, j).coefficients_in(Lidx)) {
                    Polynomial piece = c.restrict_to(ring) * factor.gen.lambda().pow(d) *
                                       w.den_base().pow((2 - d) * factor.den_exp);
                    cell = cell + piece;
                }
                num.at(i, j) = cell;
            }
        }
        acc = acc * num;
        total_exp += 2 * factor.den_exp;
    }

    // Localized form preservation: num gram num^t = gram base^(2 exp).
    PolyMatrix gram = PolarForm::gram(ring, w.n());
    if (!(acc * gram * acc.transpose() == gram.scaled(w.den_base().pow(2 * total_exp))))
        throw Error("localized word does not preserve the form");
    return {std::move(acc), w.den_base(), total_exp};
}

bool localized_equal(const LocalizedMatrix& a, const LocalizedMatrix& b) {
    return a.num.scaled(b.den()) == b.num.scaled(a.den());
}

LaurentContext LaurentContext::make(const RingDescriptor& ring_T, const std::string& T,
                                    const std::string& Y_hint) {
    if (!ring_T.has_var(T)) throw PreconditionError("no variable " + T + " in the ring");
    LaurentContext ctx;
    ctx.ring_T_ = ring_T;
    ctx.T_ = T;
    ctx.base_ = ring_T.removed(T);
    ctx.Y_ = ring_T.fresh_name(Y_hint);
    ctx.ring_Y_ = ctx.base_.extended({ctx.Y_});
    return ctx;
}

LaurentContext::Reversal LaurentContext::reverse_monic(const Polynomial& f) const {
    auto mc = monic_check(f, T_);
    if (!mc.ok)
        throw PreconditionError("not monic in " + T_ + ": leading coefficient " +
                                mc.leading_coeff.to_string());
    const long m = mc.degree;
    Polynomial Y = Polynomial::variable(ring_Y_, Y_);

    Reversal rev;
    rev.degree = m;
    rev.fstar = Polynomial::zero(ring_Y_);
    Polynomial tail = Polynomial::zero(ring_Y_);  // h with f* = 1 + Y h
    for (const auto& [d, c] : f.coefficients_in(*ring_T_.index_of(T_))) {
        Polynomial cy = c.restrict_to(base_).embed(ring_Y_);
        rev.fstar = rev.fstar + cy * Y.pow(m - d);
        if (d < m) tail = tail + cy * Y.pow(m - d - 1);
    }
    rev.bez_fstar = Polynomial::one(ring_Y_);
    rev.bez_Y = -tail;

    // f*(0) = 1 and the Bezout identity, rechecked by expansion.
    if (!rev.fstar.substitute(Y_, Rational(0)).is_one())
        throw Error("laurent reversal: f*(0) != 1");
    if (!(rev.bez_fstar * rev.fstar + rev.bez_Y * Y == Polynomial::one(ring_Y_)))
        throw Error("laurent reversal: Bezout identity failed");
    return rev;
}

LocalizedElement LaurentContext::y_to_t(const Polynomial& p) const {
    Polynomial T = Polynomial::variable(ring_T_, T_);
    std::size_t yidx = *ring_Y_.index_of(Y_);
    long D = std::max<long>(p.degree_in(yidx), 0);
    Polynomial num = Polynomial::zero(ring_T_);
    for (const auto& [d, c] : p.coefficients_in(yidx))
        num = num + c.restrict_to(base_).embed(ring_T_) * T.pow(D - d);
    return LocalizedElement::over(std::move(num), T, static_cast<int>(D));
}

std::pair<PolyMatrix, long> LaurentContext::y_matrix_to_t(const PolyMatrix& m) const {
    Polynomial T = Polynomial::variable(ring_T_, T_);
    std::size_t yidx = *ring_Y_.index_of(Y_);
    long D = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            D = std::max(D, m.at(i, j).degree_in(yidx));
    if (D < 0) D = 0;
    PolyMatrix out(ring_T_, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Polynomial acc = Polynomial::zero(ring_T_);
            for (const auto& [d, c] : m.at(i, j).coefficients_in(yidx))
                acc = acc + c.restrict_to(base_).embed(ring_T_) * T.pow(D - d);
            out.at(i, j) = acc;
        }
    }
    return {std::move(out), D};
}

Polynomial laurent_reverse(const LaurentContext& ctx, const Polynomial& f) {
    return ctx.reverse_monic(f).fstar;
}

SplitVerification verify_split(const LocalizedWord& sigma, const LocalizedWord& gamma,
                               const LocalizedWord& beta, const Polynomial& f,
                               const Polynomial& g) {
    const RingDescriptor& ring = sigma.ring();
    if (gamma.ring() != ring || beta.ring() != ring || f.ring() != ring || g.ring() != ring)
        throw RingMismatchError("verify_split: mixed rings");
    if (!(sigma.den_base() == f * g)) throw PreconditionError("sigma must be localized at f*g");
    if (!(gamma.den_base() == f)) throw PreconditionError("gamma must be localized at f");
    if (!(beta.den_base() == g)) throw PreconditionError("beta must be localized at g");

    auto bez = comaximal(Ideal(ring, {f}), Ideal(ring, {g}));
    if (!bez) throw PreconditionError("f and g are not comaximal");

    SplitVerification res;
    res.bezout = *bez;

    LocalizedMatrix S = expand(sigma);
    LocalizedMatrix G = expand(gamma);
    LocalizedMatrix B = expand(beta);

    // sigma = gamma beta in A_{fg}: cross-multiplied matrix equality.
    Polynomial gb_den = f.pow(G.den_exp) * g.pow(B.den_exp);
    PolyMatrix lhs = S.num.scaled(gb_den);
    PolyMatrix rhs = (G.num * B.num).scaled(S.den());
    res.defect = lhs - rhs;
    res.ok = res.defect.is_zero();
    res.what = res.ok ? "split verified" : "sigma differs from gamma*beta in the localization";
    return res;
}

std::pair<Polynomial, Polynomial> power_bezout(const Polynomial& u0, const Polynomial& v0,
                                               const Polynomial& f, const Polynomial& g, int k,
                                               int l) {
    const RingDescriptor& ring = u0.ring();
    if (!(u0 * f + v0 * g == Polynomial::one(ring)))
        throw PreconditionError("power_bezout: 1 = u0 f + v0 g fails");
    if (k == 0 && l == 0) return {Polynomial::one(ring), Polynomial::zero(ring)};
    const int m = k + l - 1;
    Polynomial U = Polynomial::zero(ring);
    Polynomial V = Polynomial::zero(ring);
    for (int i = 0; i <= m; ++i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m),
                     static_cast<unsigned long>(i));
        Polynomial term = Polynomial::constant(ring, Rational(binom)) * u0.pow(i) * v0.pow(m - i);
        if (i >= k)
            U = U + term * f.pow(i - k) * g.pow(m - i);
        else
            V = V + term * f.pow(i) * g.pow(m - i - l);
    }
    if (!(U * f.pow(k) + V * g.pow(l) == Polynomial::one(ring)))
        throw Error("power_bezout: powered identity failed");
    return {U, V};
}

GlueResult glue_element(const LocalizedElement& p, const LocalizedElement& q, const Polynomial& u,
                        const Polynomial& v) {
    const RingDescriptor& ring = p.num.ring();
    Polynomial fk = p.den();
    Polynomial gl = q.den();
    if (!(u * fk + v * gl == Polynomial::one(ring)))
        throw PreconditionError("glue_element: Bezout identity 1 = u f^k + v g^l fails");
    GlueResult res;
    res.agreement_defect = p.num * gl - q.num * fk;
    if (!res.agreement_defect.is_zero())
        throw PreconditionError("glue_element: agreement fails, defect " +
                                res.agreement_defect.to_string());
    res.glued = u * p.num + v * q.num;
    if (!(res.glued * fk == p.num) || !(res.glued * gl == q.num))
        throw Error("glue_element: glued element failed re-verification");
    return res;
}

QuadricPoint glue_point(const std::vector<Polynomial>& p_num, const Polynomial& f, int k,
                        const std::vector<Polynomial>& q_num, const Polynomial& g, int l,
                        const Polynomial& u, const Polynomial& v, int n, QuadricKind kind) {
    if (p_num.size() != q_num.size()) throw PreconditionError("glue_point: size mismatch");
    std::vector<Polynomial> coords;
    coords.reserve(p_num.size());
    for (std::size_t i = 0; i < p_num.size(); ++i) {
        auto res = glue_element(LocalizedElement::over(p_num[i], f, k),
                                LocalizedElement::over(q_num[i], g, l), u, v);
        coords.push_back(std::move(res.glued));
    }
    return QuadricPoint::require(p_num.front().ring(), n, kind, std::move(coords));
}

namespace {

OrthWord transport_word(const OrthWord& w, const RingDescriptor& via,
                        const RingDescriptor& target) {
    std::vector<OrthGenerator> fs;
    fs.reserve(w.factors().size());
    for (const auto& f : w.factors())
        fs.push_back(f.with_lambda(f.lambda().restrict_to(via).embed(target)));
    return OrthWord(target, w.n(), std::move(fs));
}

}  // namespace

PipelineResult monic_pipeline(const QuadricPoint& v, const std::string& T, const Polynomial& f,
                              const LocalizedWord& sigma,
                              const std::optional<SplitWitness>& split) {
    if (v.kind() != QuadricKind::QPrime)
        throw PreconditionError("monic_pipeline expects a Qprime-flavor point");
    const RingDescriptor& ring_T = v.ring();
    if (!ring_T.has_var(T)) throw PreconditionError("no variable " + T + " in the ring");
    if (f.ring() != ring_T || sigma.ring() != ring_T)
        throw RingMismatchError("monic_pipeline: mixed rings");
    if (sigma.n() != v.n()) throw PreconditionError("monic_pipeline: size mismatch");
    if (!(sigma.den_base() == f))
        throw PreconditionError("sigma must be localized at the monic polynomial f");

    PipelineResult res;
    auto fail = [&](const std::string& name, const std::string& detail) -> PipelineResult& {
        res.steps.push_back({name, false, detail});
        res.failure = name + ": " + detail;
        res.status = PipelineStatus::Failed;
        return res;
    };
    auto pass = [&](const std::string& name, const std::string& detail = "") {
        res.steps.push_back({name, true, detail});
    };

    auto mc = monic_check(f, T);
    if (!mc.ok)
        return fail("monic-check", "leading T-coefficient " + mc.leading_coeff.to_string());
    pass("monic-check", "degree " + std::to_string(mc.degree));

    const int n = v.n();
    QuadricPoint base_T = QuadricPoint::base_point(ring_T, n, QuadricKind::QPrime);

    // Localized trivialization: v sigma = base in A[T]_f, cleared.
    LocalizedMatrix S = expand(sigma);
    {
        auto row = PolyMatrix::row_times(v.coords(), S.num);
        Polynomial den = S.den();
        for (std::size_t i = 0; i < row.size(); ++i) {
            Polynomial expect = base_T.coords()[i] * den;
            if (row[i] != expect)
                return fail("localized-trivialization",
                            "coordinate " + std::to_string(i) + " defect " +
                                (row[i] - expect).to_string());
        }
    }
    pass("localized-trivialization");

    // v ~ v(1), constructive for any f.
    HomotopyWitness link_v_v1 = cylinder(v, T, Rational(1)).reversed();
    std::map<std::string, Polynomial> at_T1;
    at_T1.emplace(T, Polynomial::one(ring_T));
    QuadricPoint v1_T = v.substitute(at_T1);

    Polynomial Tvar = Polynomial::variable(ring_T, T);
    if (f == Tvar) {
        // Special case: T = 1 keeps denominators invertible, so sigma
        // specializes to an honest word and the chain closes immediately.
        OrthWord sigma_at1 = sigma.specialize(at_T1);
        HomotopyChain chain =
            HomotopyChain({link_v_v1}).then(elementary_homotopy(v1_T, sigma_at1));
        auto ver = verify_chain(chain, v, base_T);
        if (!ver.ok) return fail("chain-verification", ver.what);
        pass("chain-assembly", "links " + std::to_string(chain.links().size()));
        pass("chain-verification");
        res.chain = std::move(chain);
        res.status = PipelineStatus::Complete;
        return res;
    }

    // General monic f: Laurent reversal first.
    LaurentContext ctx = LaurentContext::make(ring_T, T);
    LaurentContext::Reversal rev = ctx.reverse_monic(f);
    res.reversal = rev;
    pass("laurent-reversal", "degree " + std::to_string(rev.degree));

    if (!split) {
        res.status = PipelineStatus::PartialVerified;
        res.failure =
            "split witness (sigma1 over A[Y] at f*, sigma2 over A[Y,1/Y]) not supplied; "
            "verified the localized trivialization and the Laurent reversal";
        res.steps.push_back({"split-witness", false, res.failure});
        return res;
    }

    const RingDescriptor& ring_Y = ctx.ring_Y();
    const std::string& Y = ctx.Y();
    Polynomial Yvar = Polynomial::variable(ring_Y, Y);

    if (split->sigma1.ring() != ring_Y || !(split->sigma1.den_base() == rev.fstar))
        return fail("split-witness", "sigma1 must be over the Y-ring localized at f*");
    if (split->sigma2.ring() != ring_Y || !(split->sigma2.den_base() == Yvar))
        return fail("split-witness", "sigma2 must be over the Y-ring localized at Y");
    if (split->sigma1.n() != n || split->sigma2.n() != n)
        return fail("split-witness", "size mismatch");

    // Split equation sigma_T = sigma1 sigma2 in A[T,1/T]_f, checked on the
    // T-side with denominators T^a f^b.
    LocalizedMatrix S1 = expand(split->sigma1);
    LocalizedMatrix S2 = expand(split->sigma2);
    {
        auto [n1, d1] = ctx.y_matrix_to_t(S1.num);
        auto [n2, d2] = ctx.y_matrix_to_t(S2.num);
        // sigma1: N1 T^(m a) / (T^d1 f^a); sigma2: N2 T^e / T^d2.
        PolyMatrix p1 = n1.scaled(Tvar.pow(rev.degree * S1.den_exp));
        PolyMatrix p2 = n2.scaled(Tvar.pow(S2.den_exp));
        PolyMatrix prod = p1 * p2;
        long prod_t = d1 + d2;
        long prod_f = S1.den_exp;
        Polynomial den_prod = Tvar.pow(prod_t) * f.pow(prod_f);
        PolyMatrix lhs = S.num.scaled(den_prod);
        PolyMatrix rhs = prod.scaled(S.den());
        if (!(lhs == rhs))
            return fail("split-verification",
                        "sigma and sigma1*sigma2 differ in the common localization");
    }
    pass("split-verification");

    // Patch v(1) sigma1 against base sigma2^{-1} over A[Y].
    QuadricPoint v1_Y = v1_T.restrict_to(ctx.base_ring()).embed(ring_Y);
    QuadricPoint base_Y = QuadricPoint::base_point(ring_Y, n, QuadricKind::QPrime);
    auto p_row = PolyMatrix::row_times(v1_Y.coords(), S1.num);
    int a_exp = S1.den_exp;
    LocalizedMatrix S2inv = expand(split->sigma2.inverse());
    auto q_row = PolyMatrix::row_times(base_Y.coords(), S2inv.num);
    int e_exp = S2inv.den_exp;

    Polynomial fstar_a = rev.fstar.pow(a_exp);
    Polynomial Y_e = Yvar.pow(e_exp);
    for (std::size_t i = 0; i < p_row.size(); ++i) {
        Polynomial defect = p_row[i] * Y_e - q_row[i] * fstar_a;
        if (!defect.is_zero())
            return fail("patch-agreement",
                        "coordinate " + std::to_string(i) + " defect " + defect.to_string());
    }
    pass("patch-agreement");

    auto [U, V] = power_bezout(rev.bez_fstar, rev.bez_Y, rev.fstar, Yvar, a_exp, e_exp);
    QuadricPoint w =
        glue_point(p_row, rev.fstar, a_exp, q_row, Yvar, e_exp, U, V, n, QuadricKind::QPrime);
    res.glued = w;
    pass("glue", "patched point over the Y-ring");

    // w sigma2 = base over A[Y]_Y.
    {
        auto w_row = PolyMatrix::row_times(w.coords(), S2.num);
        Polynomial den2 = S2.den();
        for (std::size_t i = 0; i < w_row.size(); ++i) {
            Polynomial expect = base_Y.coords()[i] * den2;
            if (w_row[i] != expect)
                return fail("laurent-trivialization",
                            "coordinate " + std::to_string(i) + " defect " +
                                (w_row[i] - expect).to_string());
        }
    }
    pass("laurent-trivialization");

    // Special case applied over A[Y] (the denominator there is Y itself).
    std::map<std::string, Polynomial> at_Y1;
    at_Y1.emplace(Y, Polynomial::one(ring_Y));
    HomotopyWitness link_w_w1 = cylinder(w, Y, Rational(1)).reversed();
    QuadricPoint w1 = w.substitute(at_Y1);
    OrthWord sigma2_at1 = split->sigma2.specialize(at_Y1);
    HomotopyChain chain_Y = HomotopyChain({link_w_w1}).then(elementary_homotopy(w1, sigma2_at1));
    auto verY = verify_chain(chain_Y, w, base_Y);
    if (!verY.ok) return fail("laurent-chain", verY.what);
    pass("laurent-chain", "links " + std::to_string(chain_Y.links().size()));

    // Specialize Y = 0 (f*(0) = 1 keeps sigma1 honest) and assemble.
    std::map<std::string, Polynomial> at_Y0;
    at_Y0.emplace(Y, Polynomial::zero(ring_Y));
    HomotopyChain chain_A =
        chain_Y.substitute_base(Y, Polynomial::zero(ring_Y)).restrict_base(ctx.base_ring());
    QuadricPoint w0_T = w.substitute(at_Y0).restrict_to(ctx.base_ring()).embed(ring_T);

    OrthWord sigma1_at0 = split->sigma1.specialize(at_Y0);
    OrthWord sigma1_at0_T = transport_word(sigma1_at0, ctx.base_ring(), ring_T);
    QuadricPoint moved = act(v1_T, sigma1_at0_T);
    if (moved != w0_T) return fail("specialization", "w(0) differs from v(1) sigma1(0)");
    pass("specialization", "w(0) = v(1) sigma1(0)");

    HomotopyChain chain = HomotopyChain({link_v_v1})
                              .then(elementary_homotopy(v1_T, sigma1_at0_T))
                              .then(chain_A.embed_base(ring_T));
    auto ver = verify_chain(chain, v, base_T);
    if (!ver.ok) return fail("chain-verification", ver.what);
    pass("chain-assembly", "links " + std::to_string(chain.links().size()));
    pass("chain-verification");
    res.chain = std::move(chain);
    res.status = PipelineStatus::Complete;
    return res;
}

MonicInversionResult monic_inversion_ideal(const MonicInversionInput& input) {
    const RingDescriptor& ring = input.I.ring();
    LocalOrientation orientation = LocalOrientation::make(input.I, input.f_gens);
    ThetaPoint theta = theta_point(orientation);
    QuadricPoint v = beta(theta.point);

    MonicInversionResult out{std::move(theta),
                             monic_pipeline(v, input.T, input.f_monic, input.sigma, input.split),
                             false,
                             {},
                             {},
                             {},
                             ""};

    if (!input.lifted_gens) {
        out.note = "generator lift not supplied; chain certificate only";
        return out;
    }
    const auto& lift = *input.lifted_gens;
    if (lift.size() != input.f_gens.size())
        throw PreconditionError("lifted generator count mismatch");

    Ideal lift_ideal(ring, lift);
    Ideal i_square(ring, square_generators(input.I));
    bool all = true;
    for (const auto& g : lift) {
        auto c = member(g, input.I);
        if (!c) {
            all = false;
            break;
        }
        out.lift_in_I.push_back(std::move(*c));
    }
    if (all) {
        for (const auto& g : input.I.gens()) {
            auto c = member(g, lift_ideal);
            if (!c) {
                all = false;
                break;
            }
            out.I_gens_in_lift.push_back(std::move(*c));
        }
    }
    if (all) {
        for (std::size_t i = 0; i < lift.size(); ++i) {
            auto c = member(lift[i] - input.f_gens[i], i_square);
            if (!c) {
                all = false;
                break;
            }
            out.lift_congruence.push_back(std::move(*c));
        }
    }
    out.generators_verified = all;
    out.note = all ? "generator lift verified" : "generator lift failed verification";
    return out;
}

}  // namespace quadcert
