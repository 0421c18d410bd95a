#include "quadcert/ortho.hpp"

#include "quadcert/errors.hpp"

namespace quadcert {

PolyMatrix PolarForm::gram(const RingDescriptor& ring, int n) {
    const std::size_t k = static_cast<std::size_t>(2 * n + 1);
    PolyMatrix g(ring, k, k);
    for (int i = 0; i < n; ++i) {
        g.at(static_cast<std::size_t>(i), static_cast<std::size_t>(n + i)) = Polynomial::one(ring);
        g.at(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i)) = Polynomial::one(ring);
    }
    g.at(k - 1, k - 1) = Polynomial::constant(ring, 2);
    return g;
}

Polynomial PolarForm::q(const RingDescriptor& ring, int n, const std::vector<Polynomial>& v) {
    Polynomial acc = Polynomial::zero(ring);
    for (int i = 0; i < n; ++i)
        acc = acc + v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(n + i)];
    const Polynomial& z = v[static_cast<std::size_t>(2 * n)];
    return acc + z * z;
}

Polynomial PolarForm::bilinear(const RingDescriptor& ring, int n,
                               const std::vector<Polynomial>& u,
                               const std::vector<Polynomial>& v) {
    Polynomial acc = Polynomial::zero(ring);
    for (int i = 0; i < n; ++i) {
        acc = acc + u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(n + i)];
        acc = acc + u[static_cast<std::size_t>(n + i)] * v[static_cast<std::size_t>(i)];
    }
    acc = acc + (u[static_cast<std::size_t>(2 * n)] * v[static_cast<std::size_t>(2 * n)])
                    .scaled(Rational(2));
    return acc;
}

int PolarForm::pair_partner(int n, int idx) {
    if (idx < n) return idx + n;
    if (idx < 2 * n) return idx - n;
    return -1;  // g has no hyperbolic partner
}

Rational PolarForm::q_of_basis(int n, int idx) { return idx == 2 * n ? Rational(1) : Rational(0); }

std::string PolarForm::basis_name(int n, int idx) {
    if (idx < n) return "e" + std::to_string(idx + 1);
    if (idx < 2 * n) return "f" + std::to_string(idx - n + 1);
    return "g";
}

int PolarForm::basis_index(int n, const std::string& name) {
    if (name == "g") return 2 * n;
    if (name.size() < 2) return -1;
    char c = name[0];
    int num = 0;
    try {
        num = std::stoi(name.substr(1));
    } catch (...) {
        return -1;
    }
    if (num < 1 || num > n) return -1;
    if (c == 'e') return num - 1;
    if (c == 'f') return n + num - 1;
    return -1;
}

OrthGenerator OrthGenerator::transvection(int n, int u_index, int v_index, Polynomial lambda) {
    if (n < 2) throw PreconditionError("generator needs n >= 2");
    if (!PolarForm::is_hyperbolic_index(n, u_index))
        throw PreconditionError("transvection direction u must be a hyperbolic basis vector");
    if (v_index < 0 || v_index > 2 * n) throw PreconditionError("basis index out of range");
    if (v_index == PolarForm::pair_partner(n, u_index))
        throw PreconditionError("transvection target v must be orthogonal to u");
    OrthGenerator g;
    g.kind_ = Kind::Transvection;
    g.n_ = n;
    g.u_ = u_index;
    g.v_ = v_index;
    g.lambda_ = std::move(lambda);
    return g;
}

OrthGenerator OrthGenerator::hyperbolic(int n, int i, int j, Polynomial lambda) {
    if (n < 2) throw PreconditionError("generator needs n >= 2");
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw PreconditionError("hyperbolic indices must be distinct in 1..n");
    OrthGenerator g;
    g.kind_ = Kind::Hyperbolic;
    g.n_ = n;
    g.i_ = i;
    g.j_ = j;
    g.lambda_ = std::move(lambda);
    return g;
}

OrthGenerator OrthGenerator::scaled(const Polynomial& scale) const {
    OrthGenerator g = *this;
    g.lambda_ = lambda_.embed(scale.ring()) * scale;
    return g;
}

OrthGenerator OrthGenerator::with_lambda(Polynomial lambda) const {
    OrthGenerator g = *this;
    g.lambda_ = std::move(lambda);
    return g;
}

OrthGenerator OrthGenerator::inverse() const {
    OrthGenerator g = *this;
    g.lambda_ = -lambda_;
    return g;
}

PolyMatrix OrthGenerator::expand(const RingDescriptor& ring) const {
    const std::size_t k = static_cast<std::size_t>(2 * n_ + 1);
    Polynomial lam = lambda_.embed(ring);
    PolyMatrix m = PolyMatrix::identity(ring, k);
    if (kind_ == Kind::Hyperbolic) {
        // x-block E_ij(lam); y-block (E_ij(lam)^-1)^t = E_ji(-lam); z fixed.
        m.at(static_cast<std::size_t>(i_ - 1), static_cast<std::size_t>(j_ - 1)) = lam;
        m.at(static_cast<std::size_t>(n_ + j_ - 1), static_cast<std::size_t>(n_ + i_ - 1)) = -lam;
        return m;
    }
    // Eichler transvection. Row k is the image of basis vector eps_k:
    //   eps_k + lam B(eps_k,u) v - (lam B(eps_k,v) + lam^2 q(v) B(eps_k,u)) u
    PolyMatrix g = PolarForm::gram(ring, n_);
    Polynomial qv = Polynomial::constant(ring, PolarForm::q_of_basis(n_, v_));
    for (std::size_t row = 0; row < k; ++row) {
        const Polynomial& b_u = g.at(row, static_cast<std::size_t>(u_));
        const Polynomial& b_v = g.at(row, static_cast<std::size_t>(v_));
        m.at(row, static_cast<std::size_t>(v_)) =
            m.at(row, static_cast<std::size_t>(v_)) + lam * b_u;
        m.at(row, static_cast<std::size_t>(u_)) =
            m.at(row, static_cast<std::size_t>(u_)) - lam * b_v - lam * lam * qv * b_u;
    }
    return m;
}

bool OrthGenerator::operator==(const OrthGenerator& o) const {
    return kind_ == o.kind_ && n_ == o.n_ && u_ == o.u_ && v_ == o.v_ && i_ == o.i_ &&
           j_ == o.j_ && lambda_ == o.lambda_;
}

OrthWord::OrthWord(const RingDescriptor& ring, int n, std::vector<OrthGenerator> factors)
    : ring_(ring), n_(n), factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        if (f.n() != n_) throw PreconditionError("generator size mismatch in word");
        if (f.lambda().ring() != ring_)
            throw RingMismatchError("generator parameter over wrong ring");
    }
}

OrthWord OrthWord::scaled(const Polynomial& scale) const {
    std::vector<OrthGenerator> fs;
    fs.reserve(factors_.size());
    for (const auto& f : factors_) fs.push_back(f.scaled(scale));
    return OrthWord(scale.ring(), n_, std::move(fs));
}

OrthWord OrthWord::inverse() const {
    std::vector<OrthGenerator> fs;
    fs.reserve(factors_.size());
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) fs.push_back(it->inverse());
    return OrthWord(ring_, n_, std::move(fs));
}

OrthWord OrthWord::then(const OrthWord& o) const {
    if (o.ring_ != ring_ || o.n_ != n_) throw PreconditionError("word mismatch in concatenation");
    std::vector<OrthGenerator> fs = factors_;
    fs.insert(fs.end(), o.factors_.begin(), o.factors_.end());
    return OrthWord(ring_, n_, std::move(fs));
}

OrthWord OrthWord::embed(const RingDescriptor& target) const {
    std::vector<OrthGenerator> fs;
    fs.reserve(factors_.size());
    for (const auto& f : factors_) fs.push_back(f.with_lambda(f.lambda().embed(target)));
    return OrthWord(target, n_, std::move(fs));
}

OrthWord OrthWord::substitute(const std::map<std::string, Polynomial>& bindings) const {
    if (bindings.empty()) return *this;
    RingDescriptor target = bindings.begin()->second.ring();
    std::vector<OrthGenerator> fs;
    fs.reserve(factors_.size());
    for (const auto& f : factors_) fs.push_back(f.with_lambda(f.lambda().substitute(bindings)));
    return OrthWord(target, n_, std::move(fs));
}

bool OrthWord::operator==(const OrthWord& o) const {
    return ring_ == o.ring_ && n_ == o.n_ && factors_ == o.factors_;
}

OrthoCheck is_orthogonal(const PolyMatrix& m, int n) {
    const std::size_t k = static_cast<std::size_t>(2 * n + 1);
    if (m.rows() != k || m.cols() != k)
        throw PreconditionError("matrix must be square of size 2n+1");
    PolyMatrix g = PolarForm::gram(m.ring(), n);
    PolyMatrix defect = m * g * m.transpose() - g;
    return {defect.is_zero(), std::move(defect)};
}

OrthMatrix OrthMatrix::require(int n, PolyMatrix entries) {
    auto chk = is_orthogonal(entries, n);
    if (!chk.ok) throw PreconditionError("matrix does not preserve the form");
    return OrthMatrix(n, std::move(entries));
}

OrthMatrix expand(const OrthWord& w) {
    PolyMatrix acc = PolyMatrix::identity(w.ring(), static_cast<std::size_t>(2 * w.n() + 1));
    for (const auto& f : w.factors()) acc = acc * f.expand(w.ring());
    return OrthMatrix::require(w.n(), std::move(acc));
}

QuadricPoint act(const QuadricPoint& v, const OrthMatrix& m) {
    if (m.n() != v.n()) throw PreconditionError("act: size mismatch");
    if (m.ring() != v.ring()) throw RingMismatchError("act: ring mismatch");
    if (v.kind() == QuadricKind::QPrime) {
        auto coords = PolyMatrix::row_times(v.coords(), m.entries());
        return QuadricPoint::require(v.ring(), v.n(), QuadricKind::QPrime, std::move(coords));
    }
    // Transported action on Q: alpha(beta(v) * M).
    return alpha(act(beta(v), m));
}

QuadricPoint act(const QuadricPoint& v, const OrthWord& w) { return act(v, expand(w)); }

Polynomial determinant(const OrthMatrix& m) { return m.entries().determinant(); }

}  // namespace quadcert
