#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homocyl/numeric.hpp"

namespace homocyl {

using ExpVec = std::vector<int>;

// Canonical term order: lexicographic on exponent vectors, descending, so the
// highest term comes first ("t^2 - t + 1").  Storage, rendering and golden
// files all use this order.
struct LexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/*
 * Multivariate Laurent polynomial with exact rational coefficients over a
 * fixed ordered variable list.  Houses ZΓ (and QΓ) for free abelian Γ.
 * Exponents may be arbitrary integers; no zero coefficient is ever stored.
 * Values are immutable in spirit: every operation returns a fresh value.
 */
class Laurent {
public:
    using TermMap = std::map<ExpVec, Rational, LexDesc>;

    Laurent() = default;  // zero over the empty variable list
    explicit Laurent(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Laurent constant(std::vector<std::string> vars, const Rational& c);
    static Laurent monomial(std::vector<std::string> vars, ExpVec e, const Rational& c = 1);
    static Laurent variable(std::vector<std::string> vars, const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // exactly one term with coefficient +-1: a unit of ZΓ
    bool is_monomial_unit() const;
    // every coefficient lies in Z
    bool is_integral() const;

    // leading (lex-greatest) term; polynomial must be nonzero
    const std::pair<const ExpVec, Rational>& lead() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent scaled(const Rational& c) const;

    bool operator==(const Laurent& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // the ring involution induced by g -> g^-1: negate every exponent vector
    Laurent involute() const;

    // multiply by the monomial with exponent vector delta
    Laurent shift(const ExpVec& delta) const;

    // componentwise minimum of exponent vectors over all terms; pre: nonzero
    ExpVec min_exponents() const;
    // top degree in a single variable; pre: nonzero
    int degree_in(const std::string& var) const;

    // exact substitution; every variable needs a value, and zero may only be
    // substituted where the variable never occurs with a negative exponent
    Rational evaluate(const std::map<std::string, Rational>& point) const;
    Rational evaluate_all(const Rational& v) const;
    // coefficient of the zero exponent vector (Delta(0) after normalization)
    Rational constant_term() const;

    // ring homomorphism sending var to the monomial given by image (exponents
    // over the remaining variables; empty image means var -> 1)
    Laurent specialize(const std::string& var, const std::map<std::string, int>& image) const;
    Laurent specialize_to_one(const std::string& var) const { return specialize(var, {}); }

    void add_term(const ExpVec& e, const Rational& c);

    // canonical rendering: terms in lex-descending order, "c*t1^a*t2^b" with
    // "^1" and "*1" elided; parse() accepts exactly this language (plus '/'
    // rational coefficients and redundant whitespace)
    std::string str() const;
    static Laurent parse(const std::string& text, std::vector<std::string> vars);

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void check_same_vars(const Laurent& o) const;
    int var_index(const std::string& name) const;  // -1 if absent
};

// Exact division in the Laurent ring: returns num/den when den divides num,
// std::nullopt otherwise.  den must be nonzero.
std::optional<Laurent> try_divide(const Laurent& num, const Laurent& den);

// As above but a failure is an internal arithmetic bug (Bareiss guarantees
// divisibility) and aborts loudly.
Laurent divide_exact(const Laurent& num, const Laurent& den);

// Fraction-free Bareiss determinant of a square matrix over the Laurent ring.
// Rows are first scaled by monomials so entries become ordinary polynomials;
// the scaling is divided back out at the end.
Laurent laurent_det(std::vector<std::vector<Laurent>> m, const std::vector<std::string>& vars);

// One-variable Alexander polynomial in normalized form: lowest degree 0 and
// positive constant term.  degree is the top degree of poly.
struct NormalizedAlexander {
    Laurent poly;
    int degree = 0;
    bool operator==(const NormalizedAlexander& o) const {
        return poly == o.poly && degree == o.degree;
    }
};

// nullopt on the zero polynomial (degenerate Alexander polynomial)
std::optional<NormalizedAlexander> normalize_alexander(const Laurent& p);

}  // namespace homocyl
