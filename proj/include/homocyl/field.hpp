#pragma once

#include <string>
#include <vector>

#include "homocyl/laurent.hpp"

namespace homocyl {

/*
 * Element of the fraction field K_Γ of the Laurent ring.  No multivariate GCD
 * anywhere: values are kept partially canonical only (joint integer content
 * and common monomial factor removed, sign fixed so the denominator's
 * lex-first coefficient is positive), and equality is exact
 * cross-multiplication.
 */
class RationalFunction {
public:
    RationalFunction() = default;  // zero over the empty variable list
    RationalFunction(Laurent num, Laurent den);  // den == 0 is a domain error
    static RationalFunction from_poly(Laurent p);
    static RationalFunction one(std::vector<std::string> vars);
    static RationalFunction zero(std::vector<std::string> vars);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    RationalFunction inverse() const;  // zero -> domain error

    // exact equality as field elements: a.num*b.den == b.num*a.den
    bool eq(const RationalFunction& o) const;

    // exact reduction to a Laurent polynomial when den | num, verified by
    // multiplying back; nullopt otherwise
    std::optional<Laurent> as_polynomial() const;

    Rational evaluate(const std::map<std::string, Rational>& point) const;

    std::string str() const;  // "num / den", den elided when it is 1

private:
    Laurent num_, den_;
    void canonicalize();
};

class FieldMatrix {
public:
    FieldMatrix(int rows, int cols, std::vector<std::string> vars);
    static FieldMatrix identity(int n, std::vector<std::string> vars);
    static FieldMatrix from_polys(const std::vector<std::vector<Laurent>>& m,
                                  std::vector<std::string> vars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<std::string>& vars() const { return vars_; }

    RationalFunction& at(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
    const RationalFunction& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i * cols_ + j)];
    }

    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix operator-(const FieldMatrix& o) const;
    FieldMatrix scaled(const RationalFunction& c) const;
    bool eq(const FieldMatrix& o) const;  // entrywise rf_eq

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<std::string> vars_;
    std::vector<RationalFunction> e_;
};

// Exact determinant: clear denominators row-wise (tracking the cleared
// product), fraction-free Bareiss over the polynomial ring, divide back.
// Returns 0 for singular input.
RationalFunction det(const FieldMatrix& m);

// Solve m * X = rhs exactly (Cramer over the denominator-cleared rows);
// singular m raises singular_matrix_error.
FieldMatrix solve_right(const FieldMatrix& m, const FieldMatrix& rhs);

/*
 * Image of a torsion in K_1(K_Γ)/±Γ.  Since Γ is free abelian here, K_1 of
 * the field is its multiplicative group and a single nonzero field element
 * represents the class; equality is "up to ±monomial".
 */
class TorsionClass {
public:
    explicit TorsionClass(RationalFunction value);  // zero -> domain error
    const RationalFunction& value() const { return value_; }

    bool eq_up_to_unit(const TorsionClass& o) const;
    bool is_trivial() const;  // equal to the class of 1

    std::string str() const;  // renders with the "up to ±monomial" annotation

private:
    RationalFunction value_;
};

}  // namespace homocyl
