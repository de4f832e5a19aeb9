#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homocyl/cylinder.hpp"

namespace homocyl {

/*
 * Deficiency-1 presentation of a link exterior group together with a
 * monomial homomorphism rho; mu names a meridian generator (used as the
 * default dropped row, must have nontrivial rho image).
 */
struct ExteriorPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;  // count = #generators - 1
    MonomialMap rho;
    std::string mu;

    int gen_index(const std::string& name) const;  // -1 if absent
};

std::vector<std::string> validate(const ExteriorPresentation& q);
void require_valid(const ExteriorPresentation& q);

// involuted rho-Fox matrix: rows = generators, columns = relators
std::vector<std::vector<Laurent>> fox_matrix(const ExteriorPresentation& q);

// τ_Γ(E(L)) = det(J_i) / (1 - rho(y_i)^-1) with the i-th row deleted.
// rho(y_i) = 1 raises invalid_drop_error; det(J_i) = 0 raises nonacyclic_error.
TorsionClass torsion_exterior(const ExteriorPresentation& q, int drop_index);
// default drop: mu when set, otherwise the first generator with rho != 1
TorsionClass torsion_exterior(const ExteriorPresentation& q);

/*
 * Exterior presentation of the reglued link complement: add a meridian mu and
 * the conjugation relators i-(γj) mu i+(γj)^-1 mu^-1.  Those relators force
 * rho(i-(γj)) = rho(i+(γj)), so the inherited coefficient group is the
 * free quotient of <t1..tk, mu_var> by the saturation of the span of
 * rho(i-(γj)) - rho(i+(γj)); the quotient map is computed by Smith normal
 * form and quotient variables that survive as coordinates keep their names.
 */
ExteriorPresentation build_exterior_presentation(const AdmissiblePresentation& p,
                                                 const MonomialMap& rho,
                                                 const std::string& mu_name,
                                                 const std::string& mu_var);

struct FactorizationCheck {
    TorsionClass lhs;  // torsion of the built exterior presentation
    TorsionClass rhs;  // det(τ_Γ^+) · det(I - rho(mu) r_Γ) / (1 - rho(mu))
    bool ok = false;
};

// the factorized form det(τ+) · det(I - rho(mu) r) / (1 - rho(mu)) computed
// from cylinder invariants under the quotient rho of ext
TorsionClass factorization_rhs(const AdmissiblePresentation& p, const ExteriorPresentation& ext);

FactorizationCheck factorization_check(const AdmissiblePresentation& p, const MonomialMap& rho,
                                       const std::string& mu_var);
bool verify_factorization(const AdmissiblePresentation& p, const MonomialMap& rho,
                          const std::string& mu_var);

// Milnor's formula: Delta_L(t) = (1-t) det τ_<t>(E(L)), normalized; requires
// a one-variable rho; nullopt when the torsion is degenerate (Delta = 0)
std::optional<NormalizedAlexander> milnor_alexander(const ExteriorPresentation& q);

// all k x k minors (generators of the elementary ideal E_{rows-k})
std::vector<Laurent> elementary_minors(const std::vector<std::vector<Laurent>>& m, int k,
                                       const std::vector<std::string>& vars);

struct BoundResult {
    int bound = 0;
    // every level below the bound carries a sound non-unit certificate
    // (evaluation refutation), so "e >= bound" is proven, not heuristic
    bool certified = false;
};

// Largest k such that the unit test on E_{k-1}'s generators exhibits no
// ±monomial; lower-bounds the minimal generator count of the presented
// module (Nakanishi index / handle number machinery).
BoundResult generator_lower_bound(const std::vector<std::vector<Laurent>>& m,
                                  const std::vector<std::string>& vars);

}  // namespace homocyl
