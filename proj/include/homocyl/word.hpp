#pragma once

#include <map>
#include <string>
#include <vector>

#include "homocyl/laurent.hpp"

namespace homocyl {

// generator names: nonempty over [A-Za-z0-9_]
bool is_valid_generator_name(const std::string& name);

/*
 * Freely reduced word in a free group over named generators, stored
 * run-length encoded: adjacent letters always have distinct generators and
 * nonzero exponents.  The empty word is the identity.
 */
class Word {
public:
    struct Letter {
        std::string gen;
        int exp;
        bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
    };

    Word() = default;

    // merge and cancel; zero exponents are dropped, never an error
    static Word reduce(const std::vector<Letter>& raw);
    static Word from_letter(const std::string& gen, int exp = 1);

    Word inverse() const;
    friend Word operator*(const Word& a, const Word& b);

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const;  // total letter count, with multiplicity

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return !(*this == o); }

    // CLI text syntax: whitespace-separated tokens `name` or `name^k`
    std::string str() const;
    static Word parse(const std::string& text);

private:
    std::vector<Letter> letters_;
};

/*
 * A homomorphism from the free group to a free abelian group Γ = <t1,...,tk>,
 * given by a monomial image per generator (coefficient +1 always).
 */
class MonomialMap {
public:
    MonomialMap() = default;
    explicit MonomialMap(std::vector<std::string> variables) : vars_(std::move(variables)) {}

    const std::vector<std::string>& variables() const { return vars_; }

    void set(const std::string& gen, ExpVec exponents);
    bool has(const std::string& gen) const { return images_.count(gen) != 0; }
    const ExpVec& exponents(const std::string& gen) const;  // throws on unknown generator
    const std::map<std::string, ExpVec>& images() const { return images_; }

    ExpVec image_exponents(const Word& w) const;
    Laurent image(const Word& w) const;          // the monomial rho(w)
    bool is_trivial_on(const Word& w) const;     // rho(w) == 1

private:
    std::vector<std::string> vars_;
    std::map<std::string, ExpVec> images_;
};

// Fox free derivative of w by gen, evaluated directly in Z[t1^±,...,tk^±]
// through rho (no involution applied here).  Rules:
//   d(g)/dg = 1,  d(g^-1)/dg = -rho(g)^-1,  d(uv)/dg = du/dg + rho(u)·dv/dg.
Laurent fox_derivative(const Word& w, const std::string& gen, const MonomialMap& rho);

}  // namespace homocyl
