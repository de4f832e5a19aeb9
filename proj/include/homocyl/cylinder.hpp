#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homocyl/field.hpp"
#include "homocyl/ratmat.hpp"
#include "homocyl/word.hpp"

namespace homocyl {

/*
 * Admissible presentation of pi_1(M) for a homology cylinder over Σ_{g,n}:
 * generators ordered (i-(γ1)..i-(γm), z1..zl, i+(γ1)..i+(γm)) with
 * m = 2g+n-1 and exactly m+l relators (deficiency m by construction).
 */
struct AdmissiblePresentation {
    int g = 0;
    int n = 1;
    std::vector<std::string> minus_gens;
    std::vector<std::string> aux_gens;
    std::vector<std::string> plus_gens;
    std::vector<Word> relators;

    int surface_rank() const { return 2 * g + n - 1; }
    std::vector<std::string> all_generators() const;
};

// structural checks plus rho(relator) = 1 for every relator; returns the list
// of violated checks (empty = valid), never throws
std::vector<std::string> validate(const AdmissiblePresentation& p, const MonomialMap& rho);

// throws std::domain_error with the joined diagnostics when invalid
void require_valid(const AdmissiblePresentation& p, const MonomialMap& rho);

// The three involuted rho-Fox blocks: rows indexed by the generator block
// in declaration order, columns by relators.
//   a: minus rows    b: aux rows    c: plus rows
struct AbcMatrices {
    std::vector<std::vector<Laurent>> a, b, c;
};

AbcMatrices abc_matrices(const AdmissiblePresentation& p, const MonomialMap& rho);

// the stacked square matrix (A over B); its det represents τ_Γ^+(M)
std::vector<std::vector<Laurent>> stacked_ab(const AdmissiblePresentation& p,
                                             const MonomialMap& rho);

// τ_Γ^+(M) as a torsion class; singular (A;B) raises singular_matrix_error
// (the witness that the input is not a rational homology cylinder)
TorsionClass torsion_plus(const AdmissiblePresentation& p, const MonomialMap& rho);

// Magnus matrix r_Γ(M) = -C (A;B)^-1 (I;0), square of size 2g+n-1
FieldMatrix magnus(const AdmissiblePresentation& p, const MonomialMap& rho);

// specialization of the Magnus matrix at all variables = 1; equals the
// sigma matrix of the corresponding Seifert surface data
RatMatrix sigma_specialized(const AdmissiblePresentation& p, const MonomialMap& rho);

struct CylinderInvariants {
    TorsionClass torsion;
    FieldMatrix magnus;
    RatMatrix sigma;
};

CylinderInvariants invariants(const AdmissiblePresentation& p, const MonomialMap& rho);

struct FiberingReport {
    bool torsion_trivial = false;   // det(A;B) a ±monomial
    bool magnus_integral = false;   // every Magnus entry reduces to ZΓ
    CylinderInvariants inv;
    bool obstructed() const { return !torsion_trivial || !magnus_integral; }
};

// fibering obstructions: nontrivial torsion or a non-Laurent Magnus entry
// each certify "not fibered"
FiberingReport fibering_report(const AdmissiblePresentation& p, const MonomialMap& rho);

// monoid composition at the invariant level: sigma of the stack (sizes must match)
RatMatrix compose_sigma(const AdmissiblePresentation& p1, const MonomialMap& rho1,
                        const AdmissiblePresentation& p2, const MonomialMap& rho2);

// --- canonical constructions used by tests and the corpus ---

// product cylinder <m_i, p_i | m_i p_i^-1>, rho(m_i) = rho(p_i) = t_i
std::pair<AdmissiblePresentation, MonomialMap> identity_cylinder(int g, int n);

// cylinder of a mapping class φ: images[j] = φ(γ_{j+1}) as a word in the aux
// generators z1..zm; relators are i-(γj)·φ(γj)^-1 and i+(γj)·zj^-1
std::pair<AdmissiblePresentation, MonomialMap> mapping_class_cylinder(
    int g, int n, const std::vector<Word>& images);

}  // namespace homocyl
