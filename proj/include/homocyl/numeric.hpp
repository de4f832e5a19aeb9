#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace homocyl {

// Exact arithmetic throughout: all coefficients are arbitrary-precision
// rationals, so determinant growth and census formulas can never overflow.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }
inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

// 1/r built without ever passing a negative denominator to the rational
// constructor (boost's normalize() rejects negative denominators when the
// integer type is unbounded)
inline Rational rational_inverse(const Rational& r) {
    if (r == 0) throw std::domain_error("rational division by zero");
    Int n = rat_num(r);
    bool neg = n < 0;
    if (neg) n = -n;
    Rational inv(rat_den(r), n);
    if (neg) inv = -inv;
    return inv;
}

// Mathematical failure of a precondition (as opposed to malformed input).
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// det = 0 where the theory requires invertibility; for cylinder data this is
// the computational witness that the input is not a rational homology cylinder.
struct singular_matrix_error : math_error {
    using math_error::math_error;
};

// Exterior torsion undefined: the Fox minor vanishes (Alexander polynomial 0).
struct nonacyclic_error : math_error {
    using math_error::math_error;
};

// The generator chosen for row deletion has trivial rho image.
struct invalid_drop_error : math_error {
    using math_error::math_error;
};

}  // namespace homocyl
