#include "quadcert/matrix.hpp"

#include <unordered_map>

#include "quadcert/errors.hpp"

namespace quadcert {

PolyMatrix::PolyMatrix(const RingDescriptor& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Polynomial::zero(ring)) {}

PolyMatrix PolyMatrix::identity(const RingDescriptor& ring, std::size_t k) {
    PolyMatrix m(ring, k, k);
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) = Polynomial::one(ring);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix size mismatch in product");
    PolyMatrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Polynomial& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Polynomial& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix size mismatch in sum");
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix size mismatch in difference");
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& f) const {
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * f;
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::substitute(const std::map<std::string, Polynomial>& bindings) const {
    if (bindings.empty()) return *this;
    PolyMatrix r(bindings.begin()->second.ring(), rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].substitute(bindings);
    return r;
}

PolyMatrix PolyMatrix::embed(const RingDescriptor& target) const {
    PolyMatrix r(target, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].embed(target);
    return r;
}

std::vector<Polynomial> PolyMatrix::row_times(const std::vector<Polynomial>& row,
                                              const PolyMatrix& m) {
    if (row.size() != m.rows_) throw Error("row length mismatch");
    std::vector<Polynomial> out(m.cols_, Polynomial::zero(m.ring_));
    for (std::size_t k = 0; k < m.rows_; ++k) {
        if (row[k].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols_; ++j) {
            if (m.at(k, j).is_zero()) continue;
            out[j] = out[j] + row[k] * m.at(k, j);
        }
    }
    return out;
}

Polynomial PolyMatrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return Polynomial::one(ring_);
    // det over the rows (n - popcount(mask))..n-1 using the columns NOT in mask.
    std::unordered_map<uint64_t, Polynomial> memo;
    auto rec = [&](auto&& self, uint64_t mask, std::size_t row) -> Polynomial {
        if (row == n) return Polynomial::one(ring_);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Polynomial acc = Polynomial::zero(ring_);
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (uint64_t(1) << j)) continue;
            if (!at(row, j).is_zero()) {
                Polynomial sub = self(self, mask | (uint64_t(1) << j), row + 1);
                Polynomial term = at(row, j) * sub;
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, 0, 0);
}

}  // namespace quadcert
