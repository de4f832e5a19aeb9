#include "homocyl/seifert.hpp"

namespace homocyl {

namespace {
const std::vector<std::string> kTVar{"t"};
}

SeifertMatrix::SeifertMatrix(int g_, int n_, RatMatrix s_) : g(g_), n(n_), s(std::move(s_)) {
    if (g < 0 || n < 1) throw std::domain_error("Seifert surface needs g >= 0, n >= 1");
    if (s.rows() != size() || s.cols() != size())
        throw std::domain_error("Seifert matrix must be square of size 2g+n-1");
    if (!s.is_integral()) throw std::domain_error("Seifert matrix entries must be integers");
}

std::vector<std::vector<Laurent>> alexander_presentation(const SeifertMatrix& sm) {
    const int n = sm.size();
    std::vector<std::vector<Laurent>> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = m[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            Laurent e(kTVar);
            e.add_term({1}, sm.s.at(i, j));
            e.add_term({0}, -sm.s.at(j, i));
            row.push_back(std::move(e));
        }
    }
    return m;
}

std::optional<NormalizedAlexander> alexander(const SeifertMatrix& sm) {
    return normalize_alexander(laurent_det(alexander_presentation(sm), kTVar));
}

std::string to_string(Fiberedness v) {
    switch (v) {
        case Fiberedness::HomologicallyFibered: return "HomologicallyFibered";
        case Fiberedness::RationallyHomologicallyFibered: return "RationallyHomologicallyFibered";
        case Fiberedness::Neither: return "Neither";
        case Fiberedness::Degenerate: return "Degenerate";
    }
    return "?";
}

FiberednessReport classify(const SeifertMatrix& sm) {
    FiberednessReport r;
    r.det_s = sm.s.det();
    r.alexander = alexander(sm);
    r.degree_ok = r.alexander && r.alexander->degree == sm.size();

    if (r.det_s == 1 || r.det_s == -1) {
        r.verdict = Fiberedness::HomologicallyFibered;
    } else if (r.det_s != 0) {
        r.verdict = Fiberedness::RationallyHomologicallyFibered;
    } else {
        r.verdict = r.alexander ? Fiberedness::Neither : Fiberedness::Degenerate;
    }

    // the two routes of Def 3.1 must agree: deg = 2g+n-1 iff det != 0, and
    // then Delta(0) = ±det S up to the normalization sign
    bool det_route = r.det_s != 0;
    if (det_route != r.degree_ok)
        throw std::logic_error("internal bug: degree criterion disagrees with det S");
    if (det_route) {
        Rational c = r.alexander->poly.constant_term();
        if (c != r.det_s && c != -r.det_s)
            throw std::logic_error("internal bug: Delta(0) disagrees with det S");
    }
    return r;
}

RatMatrix sigma(const SeifertMatrix& sm) {
    if (sm.s.det() == 0)
        throw singular_matrix_error("Seifert matrix is singular: not rationally homologically fibered");
    return RatMatrix::solve(sm.s.transpose(), sm.s);
}

bool check_pairing_preserved(const SeifertMatrix& sm) {
    RatMatrix m = sigma(sm);
    RatMatrix j = sm.pairing();
    return m.transpose() * j * m == j;
}

SigmaBlockReport sigma_block_report(const SeifertMatrix& sm) {
    SigmaBlockReport r;
    if (sm.n < 2) return r;
    r.applies = true;
    RatMatrix m = sigma(sm);
    const int top = 2 * sm.g;
    r.matches = true;
    for (int i = 0; i < sm.size() && r.matches; ++i)
        for (int j = top; j < sm.size(); ++j) {
            Rational expect = i == j ? 1 : 0;
            if (i < top) expect = 0;
            if (m.at(i, j) != expect) {
                r.matches = false;
                break;
            }
        }
    RatMatrix x(top, top), p(top, top);
    RatMatrix pairing = sm.pairing();
    for (int i = 0; i < top; ++i)
        for (int j = 0; j < top; ++j) {
            x.at(i, j) = m.at(i, j);
            p.at(i, j) = pairing.at(i, j);
        }
    r.x_preserves_form = x.transpose() * p * x == p;
    return r;
}

bool factor_check(const SeifertMatrix& sm) {
    Laurent lhs = laurent_det(alexander_presentation(sm), kTVar);
    RatMatrix m = sigma(sm);
    const int n = sm.size();
    std::vector<std::vector<Laurent>> tm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Laurent e(kTVar);
            e.add_term({1}, m.at(i, j));
            if (i == j) e.add_term({0}, -1);
            tm[static_cast<std::size_t>(i)].push_back(std::move(e));
        }
    Laurent rhs = laurent_det(std::move(tm), kTVar).scaled(sm.s.transpose().det());
    return lhs == rhs;
}

}  // namespace homocyl
