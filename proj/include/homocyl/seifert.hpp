#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homocyl/laurent.hpp"
#include "homocyl/ratmat.hpp"

namespace homocyl {

/*
 * Seifert matrix S = (lk(a_j^-, a_k)) for the spine basis of a genus g
 * Seifert surface with n boundary components; size is always 2g+n-1.
 * S - S^T records the intersection pairing of the chosen basis.
 */
struct SeifertMatrix {
    int g = 0;
    int n = 1;
    RatMatrix s;  // integer entries

    SeifertMatrix(int g_, int n_, RatMatrix s_);
    int size() const { return 2 * g + n - 1; }
    RatMatrix pairing() const { return s - s.transpose(); }
};

// tS - S^T over Z[t^±]: the Alexander-module presentation matrix
std::vector<std::vector<Laurent>> alexander_presentation(const SeifertMatrix& sm);

// normalized det(tS - S^T); nullopt when the determinant vanishes identically
std::optional<NormalizedAlexander> alexander(const SeifertMatrix& sm);

enum class Fiberedness {
    HomologicallyFibered,
    RationallyHomologicallyFibered,
    Neither,
    Degenerate,
};

std::string to_string(Fiberedness v);

struct FiberednessReport {
    std::optional<NormalizedAlexander> alexander;  // nullopt = degenerate (Delta = 0)
    bool degree_ok = false;                        // deg Delta == 2g+n-1
    Rational det_s;
    Fiberedness verdict = Fiberedness::Degenerate;
    // minimal genus of the surface is caller-asserted, not checkable here
    bool assumes_minimal_genus = true;
};

// Verdict per the det S criterion (det = ±1 homologically fibered, det != 0
// rationally so), cross-checked internally against the degree/Delta(0) route.
FiberednessReport classify(const SeifertMatrix& sm);

// (S^T)^-1 S, the matrix of sigma(M) on the spine basis; integral whenever
// det S = ±1.  Singular S raises singular_matrix_error.
RatMatrix sigma(const SeifertMatrix& sm);

// M^T (S - S^T) M == S - S^T for M = sigma(sm)
bool check_pairing_preserved(const SeifertMatrix& sm);

// For n >= 2 the monodromy matrix takes the block form (X 0; * I_{n-1}) with
// X preserving the genus-block pairing, provided the basis lists the genus
// loops first and the boundary-parallel loops last.  The shape depends on
// that declared ordering, so it is reported, never asserted.
struct SigmaBlockReport {
    bool applies = false;       // n >= 2
    bool matches = false;       // upper-right 2g x (n-1) zero, lower-right identity
    bool x_preserves_form = false;  // X^T P X = P on the leading 2g x 2g corner
};

SigmaBlockReport sigma_block_report(const SeifertMatrix& sm);

// det(tS - S^T) == det(S^T) * det(t (S^T)^-1 S - I) as polynomials
bool factor_check(const SeifertMatrix& sm);

}  // namespace homocyl
