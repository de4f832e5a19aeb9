#include "homocyl/ratmat.hpp"

#include <sstream>

namespace homocyl {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::domain_error("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::domain_error("matrix size mismatch in product");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::domain_error("matrix size mismatch in difference");
    RatMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

Rational RatMatrix::det() const {
    if (rows_ != cols_) throw std::domain_error("determinant of non-square matrix");
    RatMatrix m = *this;
    Rational d = 1;
    for (int k = 0; k < rows_; ++k) {
        int piv = k;
        while (piv < rows_ && m.at(piv, k) == 0) ++piv;
        if (piv == rows_) return 0;
        if (piv != k) {
            for (int j = k; j < cols_; ++j) std::swap(m.at(piv, j), m.at(k, j));
            d = -d;
        }
        d *= m.at(k, k);
        for (int i = k + 1; i < rows_; ++i) {
            Rational f = m.at(i, k) / m.at(k, k);
            if (f == 0) continue;
            for (int j = k; j < cols_; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return d;
}

bool RatMatrix::is_integral() const {
    for (const auto& x : e_)
        if (!is_integer(x)) return false;
    return true;
}

RatMatrix RatMatrix::solve(RatMatrix a, RatMatrix b) {
    if (a.rows_ != a.cols_) throw std::domain_error("solve needs a square matrix");
    if (a.rows_ != b.rows_) throw std::domain_error("solve size mismatch");
    const int n = a.rows_;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        while (piv < n && a.at(piv, k) == 0) ++piv;
        if (piv == n) throw singular_matrix_error("singular rational matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
            for (int j = 0; j < b.cols_; ++j) std::swap(b.at(piv, j), b.at(k, j));
        }
        Rational inv = Rational(1) / a.at(k, k);
        for (int j = 0; j < n; ++j) a.at(k, j) *= inv;
        for (int j = 0; j < b.cols_; ++j) b.at(k, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            Rational f = a.at(i, k);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            for (int j = 0; j < b.cols_; ++j) b.at(i, j) -= f * b.at(k, j);
        }
    }
    return b;
}

RatMatrix RatMatrix::inverse() const {
    return solve(*this, identity(rows_));
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace homocyl
