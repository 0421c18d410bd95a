#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadcert/eulerlift.hpp"
#include "quadcert/homotopy.hpp"
#include "quadcert/ortho.hpp"

namespace quadcert {

// Fraction num / den_base^den_exp over a polynomial ring (a domain, so
// equality is cross-multiplication). den_exp 0 canonicalizes the base to 1.
struct LocalizedElement {
    Polynomial num;
    Polynomial den_base;
    int den_exp = 0;

    static LocalizedElement of(const Polynomial& p);
    static LocalizedElement over(Polynomial num, Polynomial den_base, int den_exp);
    Polynomial den() const { return den_base.pow(den_exp); }
    bool same_as(const LocalizedElement& o) const;  // equality in the localization
};

struct MonicCheck {
    bool ok = false;
    long degree = -1;
    Polynomial leading_coeff;
};

// Degree when the leading T-coefficient is 1; failure report otherwise.
MonicCheck monic_check(const Polynomial& f, const std::string& T);

// Word in elementary-orthogonal generators whose parameters are fractions
// num / den_base^k with a common denominator base. Exponent 0 factors are
// ordinary polynomial parameters.
class LocalizedWord {
public:
    struct Factor {
        OrthGenerator gen;  // lambda field holds the numerator
        int den_exp = 0;
    };

    LocalizedWord(const RingDescriptor& ring, int n, Polynomial den_base,
                  std::vector<Factor> factors = {});
    static LocalizedWord from_word(const OrthWord& w, Polynomial den_base);

    const RingDescriptor& ring() const { return ring_; }
    int n() const { return n_; }
    const Polynomial& den_base() const { return den_base_; }
    const std::vector<Factor>& factors() const { return factors_; }

    LocalizedWord inverse() const;
    // Rewrite over the base den_base * extra (numerators pick up extra^k).
    LocalizedWord relocalize(const Polynomial& extra) const;
    // Specialize variables; the denominator base must become a nonzero
    // constant (e.g. T = 1 for base T, or Y = 0 for base f* with f*(0) = 1).
    OrthWord specialize(const std::map<std::string, Polynomial>& bindings) const;

private:
    RingDescriptor ring_;
    int n_ = 0;
    Polynomial den_base_;
    std::vector<Factor> factors_;
};

// Matrix with entries num(i,j) / den_base^den_exp. Expansion of a localized
// word verifies form preservation in the localized sense:
//   num gram num^t = gram * den_base^(2 den_exp).
struct LocalizedMatrix {
    PolyMatrix num;
    Polynomial den_base;
    int den_exp = 0;

    Polynomial den() const { return den_base.pow(den_exp); }
};

LocalizedMatrix expand(const LocalizedWord& w);

// Exact equality of two localized matrices in a common localization
// (cross-multiplied; the bases may differ).
bool localized_equal(const LocalizedMatrix& a, const LocalizedMatrix& b);

// Translation dictionary between A[T] (distinguished T) and A[Y], Y standing
// for T^-1. The Y-ring has the same base variables with Y appended in place
// of T.
class LaurentContext {
public:
    static LaurentContext make(const RingDescriptor& ring_T, const std::string& T,
                               const std::string& Y_hint = "Y");

    const RingDescriptor& ring_T() const { return ring_T_; }
    const RingDescriptor& ring_Y() const { return ring_Y_; }
    const RingDescriptor& base_ring() const { return base_; }
    const std::string& T() const { return T_; }
    const std::string& Y() const { return Y_; }

    struct Reversal {
        Polynomial fstar;  // in the Y-ring, fstar(0) = 1
        long degree = 0;
        // Bezout certificate 1 = bez_fstar * fstar + bez_Y * Y
        Polynomial bez_fstar;
        Polynomial bez_Y;
    };

    // f* = Y^deg(f) f(1/Y) for monic f; fails on non-monic input.
    Reversal reverse_monic(const Polynomial& f) const;

    // p(Y) as num / T^shift with shift = deg_Y(p).
    LocalizedElement y_to_t(const Polynomial& p) const;
    // Matrix version with one common shift for all entries.
    std::pair<PolyMatrix, long> y_matrix_to_t(const PolyMatrix& m) const;

private:
    RingDescriptor ring_T_, ring_Y_, base_;
    std::string T_, Y_;
};

Polynomial laurent_reverse(const LaurentContext& ctx, const Polynomial& f);

// sigma = gamma * beta in A_{fg}, checked exactly after clearing
// denominators. gamma is over A_f, beta over A_g, sigma over A_{fg}.
struct SplitVerification {
    bool ok = false;
    std::string what;
    BezoutCertificate bezout;  // 1 = u + v, u in (f), v in (g)
    PolyMatrix defect;
};

SplitVerification verify_split(const LocalizedWord& sigma, const LocalizedWord& gamma,
                               const LocalizedWord& beta, const Polynomial& f,
                               const Polynomial& g);

// From 1 = u0 f + v0 g produce 1 = U f^k + V g^l.
std::pair<Polynomial, Polynomial> power_bezout(const Polynomial& u0, const Polynomial& v0,
                                               const Polynomial& f, const Polynomial& g, int k,
                                               int l);

// The unique x with x f^k = p and x g^l = q, given agreement p g^l = q f^k
// and a powered Bezout identity 1 = u f^k + v g^l.
struct GlueResult {
    Polynomial glued;
    Polynomial agreement_defect;  // p g^l - q f^k (zero on success)
};

GlueResult glue_element(const LocalizedElement& p, const LocalizedElement& q, const Polynomial& u,
                        const Polynomial& v);

// Coordinate-wise glue of two localized coordinate rows into a quadric point
// (membership re-validated).
QuadricPoint glue_point(const std::vector<Polynomial>& p_num, const Polynomial& f, int k,
                        const std::vector<Polynomial>& q_num, const Polynomial& g, int l,
                        const Polynomial& u, const Polynomial& v, int n, QuadricKind kind);

// Split witness for the monic inversion pipeline: sigma1 over A[Y]_{f*},
// sigma2 over A[Y, Y^-1] (denominator base Y).
struct SplitWitness {
    LocalizedWord sigma1;
    LocalizedWord sigma2;
};

enum class PipelineStatus { Complete, PartialVerified, Failed };

struct PipelineStep {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct PipelineResult {
    PipelineStatus status = PipelineStatus::Failed;
    std::vector<PipelineStep> steps;
    std::optional<HomotopyChain> chain;  // over A[T], linking v and the base point
    std::optional<LaurentContext::Reversal> reversal;
    std::optional<QuadricPoint> glued;  // w over the Y-ring
    std::string failure;

    bool complete() const { return status == PipelineStatus::Complete; }
};

// Monic inversion verification: given v in Q'_{2n}(A[T]), monic f, and sigma
// over A[T]_f with act(v, sigma) = base, emit a verified chain linking v to
// the base point over A[T]. The case f = T is fully automatic; a general
// monic f needs the split witness. Without it the pipeline verifies what it
// can and reports what remains.
PipelineResult monic_pipeline(const QuadricPoint& v, const std::string& T, const Polynomial& f,
                              const LocalizedWord& sigma,
                              const std::optional<SplitWitness>& split = std::nullopt);

// Ideal-theoretic wrapper: orientation data (I, f_gens) is converted to a
// theta point, run through the pipeline, and a caller-supplied generator
// lift g (I = (g), g_i - f_i in I^2) is verified with certificates.
struct MonicInversionInput {
    Ideal I;
    std::vector<Polynomial> f_gens;
    std::string T;
    Polynomial f_monic;
    LocalizedWord sigma;
    std::optional<SplitWitness> split;
    std::optional<std::vector<Polynomial>> lifted_gens;
};

struct MonicInversionResult {
    ThetaPoint theta;
    PipelineResult pipeline;
    bool generators_verified = false;
    std::vector<MembershipCertificate> lift_in_I;        // g_i in I
    std::vector<MembershipCertificate> I_gens_in_lift;   // gens(I) in (g)
    std::vector<MembershipCertificate> lift_congruence;  // g_i - f_i in I^2
    std::string note;
};

MonicInversionResult monic_inversion_ideal(const MonicInversionInput& input);

}  // namespace quadcert
