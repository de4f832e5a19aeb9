#pragma once

#include <string>
#include <vector>

#include "homocyl/numeric.hpp"

namespace homocyl {

// Dense matrix over exact rationals; just enough linear algebra for the
// sigma / pairing computations (Gauss with exact arithmetic, no pivots lost).
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols);
    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    Rational det() const;
    bool is_integral() const;

    // solve a * x = b; throws singular_matrix_error when det(a) = 0
    static RatMatrix solve(RatMatrix a, RatMatrix b);
    RatMatrix inverse() const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

}  // namespace homocyl
