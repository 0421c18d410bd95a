#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadcert/homotopy.hpp"
#include "quadcert/ideal.hpp"
#include "quadcert/quadric.hpp"

namespace quadcert {

// A local orientation of an ideal J: a tuple a_1..a_n generating J modulo
// J^2. Construction certifies J = (a) + J^2 (every generator of J reduces to
// zero modulo (a) + J^2) and each a_i in J; the height of J is computed and
// reported (theta needs height n, but the value is reported, not enforced).
class LocalOrientation {
public:
    static LocalOrientation make(const Ideal& J, std::vector<Polynomial> a);

    const Ideal& J() const { return J_; }
    const std::vector<Polynomial>& a() const { return a_; }
    int n() const { return static_cast<int>(a_.size()); }
    const Height& height_report() const { return height_; }
    // Certificates: gens(J)[k] in (a) + J^2, cofactors over [a_1..a_n, J^2 gens].
    const std::vector<MembershipCertificate>& generator_certificates() const { return gen_certs_; }
    const std::vector<Polynomial>& j_square_gens() const { return j2_gens_; }

private:
    LocalOrientation() = default;
    Ideal J_;
    std::vector<Polynomial> a_;
    Height height_ = Height::finite(0);
    std::vector<MembershipCertificate> gen_certs_;
    std::vector<Polynomial> j2_gens_;
};

// Pairwise products of the generators of J, in deterministic order.
std::vector<Polynomial> square_generators(const Ideal& J);

// Result of the idempotent (Nakayama) lift: given I = J + K with K in I^2,
// an s in K with I = (s) + J and s - s^2 in J, all certified.
struct NakayamaResult {
    Polynomial s;
    MembershipCertificate s_in_K;
    std::vector<MembershipCertificate> I_gens_in_sJ;  // over [s, gens J]
    MembershipCertificate s_idempotent_mod_J;         // s - s^2 over gens J
};

NakayamaResult nakayama_lift(const Ideal& I, const Ideal& J, const Ideal& K);

// Theta association: from an orientation (J, a) produce the Q-point
// (a_1..a_n, b_1..b_n, s) with s in J^2, J = (a, s), s - s^2 = sum a_i b_i.
struct ThetaPoint {
    QuadricPoint point;
    Polynomial s;
    std::vector<Polynomial> b;
    MembershipCertificate s_in_J2;                    // over square_generators(J)
    std::vector<MembershipCertificate> J_gens_in_as;  // over [a_1..a_n, s]
    std::vector<MembershipCertificate> as_in_J;       // a_i and s over gens J
};

ThetaPoint theta_point(const LocalOrientation& o);

// One application of the moving construction: H is the witness
//   (a + X mu (1-s)^2, (1 - X mu b^t) b, s + X mu b^t (1-s)),
// v2 its value at X = 1, K = (a'_1..a'_n, s') with its height report. The
// identity A b^t (1 - X mu b^t) = (1-s)(1 - X mu b^t) - (1-s)^2 (1 - X mu b^t)^2
// is verified symbolically during construction.
struct MovingStep {
    HomotopyWitness H;
    QuadricPoint v2;
    Ideal K;
    Height height;
    bool meets_threshold = false;  // height >= n
};

MovingStep moving_step(const QuadricPoint& v, const std::vector<Polynomial>& mu);

// Seeded search for mu making height(K) >= n; candidates are drawn from the
// pool (mu = 0 tried first). Failure after `trials` candidates is
// inconclusive and reports the best height found.
struct MuSearchResult {
    std::optional<MovingStep> step;
    std::vector<Polynomial> mu;
    int trials_used = 0;
    Height best_height = Height::finite(0);
    uint64_t seed = 0;
    bool found() const { return step.has_value(); }
};

MuSearchResult find_moving_mu(const QuadricPoint& v, int trials,
                              const std::vector<Polynomial>& pool, uint64_t seed = 0);

}  // namespace quadcert
