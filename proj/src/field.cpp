#include "homocyl/field.hpp"

#include <sstream>

namespace homocyl {

namespace {

// positive rational c with p/c integer-primitive
Rational content(const Laurent& p) {
    Int g = 0, l = 1;
    for (const auto& [e, c] : p.terms()) {
        Int n = rat_num(c);
        if (n < 0) n = -n;
        g = boost::multiprecision::gcd(g, n);
        l = boost::multiprecision::lcm(l, rat_den(c));
    }
    return Rational(g, l);
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s)
    Int n = boost::multiprecision::gcd(rat_num(a) * rat_den(b), rat_num(b) * rat_den(a));
    return Rational(n, rat_den(a) * rat_den(b));
}

}  // namespace

RationalFunction::RationalFunction(Laurent num, Laurent den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.vars() != den_.vars())
        throw std::domain_error("rational function with mismatched variable lists");
    canonicalize();
}

RationalFunction RationalFunction::from_poly(Laurent p) {
    Laurent one = Laurent::constant(p.vars(), 1);
    return RationalFunction(std::move(p), std::move(one));
}

RationalFunction RationalFunction::one(std::vector<std::string> vars) {
    return from_poly(Laurent::constant(std::move(vars), 1));
}

RationalFunction RationalFunction::zero(std::vector<std::string> vars) {
    Laurent z(vars);
    return RationalFunction(std::move(z), Laurent::constant(std::move(vars), 1));
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Laurent::constant(num_.vars(), 1);
        return;
    }
    // common monomial factor
    ExpVec mn = num_.min_exponents();
    ExpVec md = den_.min_exponents();
    ExpVec shift(mn.size());
    bool any = false;
    for (std::size_t i = 0; i < mn.size(); ++i) {
        shift[i] = -std::min(mn[i], md[i]);
        if (shift[i] != 0) any = true;
    }
    if (any) {
        num_ = num_.shift(shift);
        den_ = den_.shift(shift);
    }
    // joint rational content: one scalar applied to both sides
    Rational g = rational_gcd(content(num_), content(den_));
    if (den_.lead().second < 0) g = -g;
    if (g != 1) {
        Rational inv = rational_inverse(g);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

bool RationalFunction::eq(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::optional<Laurent> RationalFunction::as_polynomial() const {
    if (is_zero()) return Laurent(vars());
    auto q = try_divide(num_, den_);
    if (!q) return std::nullopt;
    if (*q * den_ != num_)
        throw std::logic_error("internal arithmetic bug: verified division failed");
    return q;
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw std::domain_error("rational function denominator vanishes at point");
    return num_.evaluate(point) / d;
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

FieldMatrix::FieldMatrix(int rows, int cols, std::vector<std::string> vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)) {
    if (rows < 0 || cols < 0) throw std::domain_error("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              RationalFunction::zero(vars_));
}

FieldMatrix FieldMatrix::identity(int n, std::vector<std::string> vars) {
    FieldMatrix m(n, n, std::move(vars));
    for (int i = 0; i < n; ++i) m.at(i, i) = RationalFunction::one(m.vars_);
    return m;
}

FieldMatrix FieldMatrix::from_polys(const std::vector<std::vector<Laurent>>& m,
                                    std::vector<std::string> vars) {
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    FieldMatrix out(rows, cols, std::move(vars));
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(m[static_cast<std::size_t>(i)].size()) != cols)
            throw std::domain_error("ragged matrix");
        for (int j = 0; j < cols; ++j)
            out.at(i, j) = RationalFunction::from_poly(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return out;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    if (cols_ != o.rows_) throw std::domain_error("matrix size mismatch in product");
    FieldMatrix r(rows_, o.cols_, vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            RationalFunction s = RationalFunction::zero(vars_);
            for (int k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::domain_error("matrix size mismatch in difference");
    FieldMatrix r(rows_, cols_, vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

FieldMatrix FieldMatrix::scaled(const RationalFunction& c) const {
    FieldMatrix r(rows_, cols_, vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * c;
    return r;
}

bool FieldMatrix::eq(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).eq(o.at(i, j))) return false;
    return true;
}

std::string FieldMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << "  ";
            os << at(i, j).str();
        }
        os << '\n';
    }
    return os.str();
}

namespace {

// scale each row by the product of its denominators; returns the polynomial
// matrix and the total cleared factor
std::pair<std::vector<std::vector<Laurent>>, Laurent> clear_rows(const FieldMatrix& m) {
    const auto& vars = m.vars();
    Laurent cleared = Laurent::constant(vars, 1);
    std::vector<std::vector<Laurent>> p(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        Laurent rowden = Laurent::constant(vars, 1);
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).den().is_one()) rowden *= m.at(i, j).den();
        cleared *= rowden;
        auto& row = p[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) {
            const auto& e = m.at(i, j);
            if (e.den().is_one()) {
                row.push_back(e.num() * rowden);
            } else {
                row.push_back(e.num() * divide_exact(rowden, e.den()));
            }
        }
    }
    return {std::move(p), std::move(cleared)};
}

}  // namespace

RationalFunction det(const FieldMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("determinant of non-square matrix");
    auto [p, cleared] = clear_rows(m);
    Laurent d = laurent_det(std::move(p), m.vars());
    return RationalFunction(std::move(d), std::move(cleared));
}

FieldMatrix solve_right(const FieldMatrix& m, const FieldMatrix& rhs) {
    if (m.rows() != m.cols()) throw std::domain_error("solve_right needs a square matrix");
    if (m.rows() != rhs.rows()) throw std::domain_error("solve_right size mismatch");
    const int n = m.rows();
    const auto& vars = m.vars();

    // clear denominators across [m | rhs] with one multiplier per row, then
    // Cramer on the polynomial system
    FieldMatrix joint(n, n + rhs.cols(), vars);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) joint.at(i, j) = m.at(i, j);
        for (int j = 0; j < rhs.cols(); ++j) joint.at(i, n + j) = rhs.at(i, j);
    }
    auto [p, cleared] = clear_rows(joint);
    (void)cleared;  // row scaling cancels between the two Cramer determinants

    std::vector<std::vector<Laurent>> base(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        base[static_cast<std::size_t>(i)] =
            std::vector<Laurent>(p[static_cast<std::size_t>(i)].begin(),
                                 p[static_cast<std::size_t>(i)].begin() + n);
    Laurent d0 = laurent_det(base, vars);
    if (d0.is_zero())
        throw singular_matrix_error("matrix is singular over K_Gamma");

    FieldMatrix x(n, rhs.cols(), vars);
    for (int j = 0; j < rhs.cols(); ++j) {
        for (int k = 0; k < n; ++k) {
            auto tmp = base;
            for (int i = 0; i < n; ++i)
                tmp[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                    p[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
            x.at(k, j) = RationalFunction(laurent_det(std::move(tmp), vars), d0);
        }
    }
    return x;
}

TorsionClass::TorsionClass(RationalFunction value) : value_(std::move(value)) {
    if (value_.is_zero()) throw std::domain_error("torsion class of zero");
}

bool TorsionClass::eq_up_to_unit(const TorsionClass& o) const {
    // a/b equals c/d up to ±monomial iff a*d = ±t^v · c*b
    Laurent p = value_.num() * o.value_.den();
    Laurent q = o.value_.num() * value_.den();
    if (p.term_count() != q.term_count()) return false;
    const auto& [ep, cp] = p.lead();
    const auto& [eq, cq] = q.lead();
    Rational ratio = cp / cq;
    if (ratio != 1 && ratio != -1) return false;
    ExpVec off(ep.size());
    for (std::size_t i = 0; i < off.size(); ++i) off[i] = ep[i] - eq[i];
    return p == q.shift(off).scaled(ratio);
}

bool TorsionClass::is_trivial() const {
    return eq_up_to_unit(TorsionClass(RationalFunction::one(value_.vars())));
}

std::string TorsionClass::str() const {
    return value_.str() + "  (up to ±monomial)";
}

}  // namespace homocyl
