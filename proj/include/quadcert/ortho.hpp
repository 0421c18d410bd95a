#pragma once

#include <string>
#include <vector>

#include "quadcert/matrix.hpp"
#include "quadcert/quadric.hpp"

namespace quadcert {

// Quadratic form q = sum X_i Y_i + Z^2 on rows of length 2n+1 and its polar
// bilinear form B(u,v) = q(u+v) - q(u) - q(v). Basis indexing: 0..n-1 the
// x-block (e_i), n..2n-1 the y-block (f_i), 2n the z-axis vector (g).
struct PolarForm {
    static PolyMatrix gram(const RingDescriptor& ring, int n);
    static Polynomial q(const RingDescriptor& ring, int n, const std::vector<Polynomial>& v);
    static Polynomial bilinear(const RingDescriptor& ring, int n, const std::vector<Polynomial>& u,
                               const std::vector<Polynomial>& v);

    // Basis bookkeeping.
    static bool is_hyperbolic_index(int n, int idx) { return idx >= 0 && idx < 2 * n; }
    static int pair_partner(int n, int idx);           // e_i <-> f_i
    static Rational q_of_basis(int n, int idx);        // 0 on e/f, 1 on g
    static std::string basis_name(int n, int idx);     // "e1", "f2", "g"
    static int basis_index(int n, const std::string&); // -1 when unknown
};

// Generators of the elementary orthogonal group:
//  - Eichler transvections E_{u,v}(lambda), u an isotropic hyperbolic basis
//    vector, v a basis vector orthogonal to u (anything but u's partner):
//      x |-> x + lambda B(x,u) v - lambda B(x,v) u - lambda^2 q(v) B(x,u) u
//  - hyperbolic embeddings of the linear elementary matrices E_{ij}(lambda),
//    expanding to the block matrix diag(E_{ij}(lambda), (E_{ij}(lambda)^-1)^t, 1).
class OrthGenerator {
public:
    enum class Kind { Transvection, Hyperbolic };

    static OrthGenerator transvection(int n, int u_index, int v_index, Polynomial lambda);
    static OrthGenerator hyperbolic(int n, int i, int j, Polynomial lambda);  // 1-based, i != j

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    int u_index() const { return u_; }
    int v_index() const { return v_; }
    int i() const { return i_; }
    int j() const { return j_; }
    const Polynomial& lambda() const { return lambda_; }

    // Same generator with parameter lambda * scale (used for homotopies).
    OrthGenerator scaled(const Polynomial& scale) const;
    OrthGenerator with_lambda(Polynomial lambda) const;
    OrthGenerator inverse() const;  // parameter negated

    PolyMatrix expand(const RingDescriptor& ring) const;

    bool operator==(const OrthGenerator& o) const;

private:
    OrthGenerator() = default;
    Kind kind_ = Kind::Transvection;
    int n_ = 0;
    int u_ = 0, v_ = 0;  // transvection basis indices
    int i_ = 0, j_ = 0;  // hyperbolic 1-based indices
    Polynomial lambda_;
};

// Word in elementary-orthogonal generators. Kept unexpanded so parameters can
// be rescaled; expansion verifies form preservation.
class OrthWord {
public:
    OrthWord(const RingDescriptor& ring, int n, std::vector<OrthGenerator> factors = {});

    const RingDescriptor& ring() const { return ring_; }
    int n() const { return n_; }
    const std::vector<OrthGenerator>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    OrthWord scaled(const Polynomial& scale) const;
    OrthWord inverse() const;  // reversed order, inverted factors
    OrthWord then(const OrthWord& o) const;
    OrthWord embed(const RingDescriptor& target) const;
    OrthWord substitute(const std::map<std::string, Polynomial>& bindings) const;

    bool operator==(const OrthWord& o) const;

private:
    RingDescriptor ring_;
    int n_ = 0;
    std::vector<OrthGenerator> factors_;
};

// A matrix certified to preserve the form: M gram M^t = gram, exactly.
class OrthMatrix {
public:
    static OrthMatrix require(int n, PolyMatrix entries);

    int n() const { return n_; }
    const PolyMatrix& entries() const { return entries_; }
    const RingDescriptor& ring() const { return entries_.ring(); }

private:
    OrthMatrix(int n, PolyMatrix entries) : n_(n), entries_(std::move(entries)) {}
    int n_ = 0;
    PolyMatrix entries_;
};

struct OrthoCheck {
    bool ok = false;
    PolyMatrix defect;  // M gram M^t - gram
};

OrthoCheck is_orthogonal(const PolyMatrix& m, int n);

// Product of the factors' matrices; form preservation re-verified.
OrthMatrix expand(const OrthWord& w);

// Right action on quadric points. QPrime points act directly as row vector
// times matrix; Q points act through the alpha/beta transport. Membership of
// the image is re-verified.
QuadricPoint act(const QuadricPoint& v, const OrthMatrix& m);
QuadricPoint act(const QuadricPoint& v, const OrthWord& w);

Polynomial determinant(const OrthMatrix& m);

}  // namespace quadcert
