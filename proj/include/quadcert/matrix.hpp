#pragma once

#include <cstddef>
#include <vector>

#include "quadcert/polynomial.hpp"

namespace quadcert {

// Dense matrix of polynomials over a common ring.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(const RingDescriptor& ring, std::size_t rows, std::size_t cols);
    static PolyMatrix identity(const RingDescriptor& ring, std::size_t k);

    const RingDescriptor& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Polynomial& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Polynomial& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix transpose() const;
    PolyMatrix scaled(const Polynomial& f) const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    PolyMatrix substitute(const std::map<std::string, Polynomial>& bindings) const;
    PolyMatrix embed(const RingDescriptor& target) const;

    // Row vector times matrix.
    static std::vector<Polynomial> row_times(const std::vector<Polynomial>& row,
                                             const PolyMatrix& m);

    // Exact determinant by cofactor expansion (memoized over column masks);
    // intended for small matrices.
    Polynomial determinant() const;

private:
    RingDescriptor ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> data_;
};

}  // namespace quadcert
