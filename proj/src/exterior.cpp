#include "homocyl/exterior.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace homocyl {

int ExteriorPresentation::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> validate(const ExteriorPresentation& q) {
    std::vector<std::string> bad;
    if (q.generators.empty()) bad.push_back("no generators");
    if (q.relators.size() + 1 != q.generators.size())
        bad.push_back("deficiency must be exactly 1 (#relators = #generators - 1)");
    std::set<std::string> seen;
    for (const auto& g : q.generators) {
        if (!is_valid_generator_name(g)) bad.push_back("invalid generator name: " + g);
        if (!seen.insert(g).second) bad.push_back("duplicate generator name: " + g);
    }
    for (std::size_t j = 0; j < q.relators.size(); ++j)
        for (const auto& l : q.relators[j].letters())
            if (!seen.count(l.gen))
                bad.push_back("relator " + std::to_string(j + 1) + " uses undeclared generator " +
                              l.gen);
    for (const auto& g : seen)
        if (!q.rho.has(g)) bad.push_back("rho missing generator " + g);
    if (!q.mu.empty() && !seen.count(q.mu)) bad.push_back("mu names an undeclared generator");
    if (!bad.empty()) return bad;

    for (std::size_t j = 0; j < q.relators.size(); ++j)
        if (!q.rho.is_trivial_on(q.relators[j]))
            bad.push_back("rho(relator " + std::to_string(j + 1) + ") != 1: " +
                          q.relators[j].str());
    bool some_nontrivial = false;
    for (const auto& g : q.generators)
        if (!q.rho.is_trivial_on(Word::from_letter(g))) some_nontrivial = true;
    if (!some_nontrivial) bad.push_back("rho is trivial on every generator");
    return bad;
}

void require_valid(const ExteriorPresentation& q) {
    auto bad = validate(q);
    if (bad.empty()) return;
    std::ostringstream os;
    os << "invalid exterior presentation:";
    for (const auto& b : bad) os << "\n  - " << b;
    throw std::domain_error(os.str());
}

std::vector<std::vector<Laurent>> fox_matrix(const ExteriorPresentation& q) {
    std::vector<std::vector<Laurent>> m;
    m.reserve(q.generators.size());
    for (const auto& g : q.generators) {
        std::vector<Laurent> row;
        row.reserve(q.relators.size());
        for (const auto& r : q.relators) row.push_back(fox_derivative(r, g, q.rho).involute());
        m.push_back(std::move(row));
    }
    return m;
}

TorsionClass torsion_exterior(const ExteriorPresentation& q, int drop_index) {
    require_valid(q);
    if (drop_index < 0 || drop_index >= static_cast<int>(q.generators.size()))
        throw std::domain_error("drop index out of range");
    const std::string& y = q.generators[static_cast<std::size_t>(drop_index)];
    if (q.rho.is_trivial_on(Word::from_letter(y)))
        throw invalid_drop_error("rho(" + y + ") = 1: cannot drop this generator");

    std::vector<std::vector<Laurent>> j = fox_matrix(q);
    j.erase(j.begin() + drop_index);
    Laurent d = laurent_det(std::move(j), q.rho.variables());
    if (d.is_zero())
        throw nonacyclic_error("Fox minor vanishes: torsion undefined (Delta_L = 0)");

    // 1 - rho(y)^-1
    Laurent den = Laurent::constant(q.rho.variables(), 1);
    ExpVec e = q.rho.exponents(y);
    for (auto& k : e) k = -k;
    den.add_term(e, -1);
    return TorsionClass(RationalFunction(std::move(d), std::move(den)));
}

TorsionClass torsion_exterior(const ExteriorPresentation& q) {
    require_valid(q);
    int drop = -1;
    if (!q.mu.empty()) {
        drop = q.gen_index(q.mu);
    } else {
        for (std::size_t i = 0; i < q.generators.size(); ++i)
            if (!q.rho.is_trivial_on(Word::from_letter(q.generators[i]))) {
                drop = static_cast<int>(i);
                break;
            }
    }
    if (drop < 0) throw invalid_drop_error("no generator with nontrivial rho image");
    return torsion_exterior(q, drop);
}

namespace {

/*
 * Quotient of Z^dim by the saturation of the column span of d, as a
 * projection matrix q with q's rows a basis of the quotient.  Computed from
 * the row-transform U of a Smith normal form (the rows of U beyond the rank
 * span the saturation's complement); rows are then Hermite-reduced and
 * sign-normalized for determinism.
 */
std::vector<std::vector<Int>> lattice_quotient_rows(std::vector<std::vector<Int>> a, int dim) {
    const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    std::vector<std::vector<Int>> u(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        u[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(dim), 0);
        u[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    }
    auto row_sub = [&](int dst, int src, const Int& f) {
        for (int j = 0; j < cols; ++j) a[dst][j] -= f * a[src][j];
        for (int j = 0; j < dim; ++j) u[dst][j] -= f * u[src][j];
    };
    auto row_swap = [&](int i1, int i2) {
        std::swap(a[i1], a[i2]);
        std::swap(u[i1], u[i2]);
    };

    int r = 0;
    for (int c = 0; c < cols && r < dim; ++c) {
        // gcd out column c below row r
        for (;;) {
            int piv = -1;
            Int best = 0;
            for (int i = r; i < dim; ++i) {
                Int v = a[i][c] < 0 ? Int(-a[i][c]) : a[i][c];
                if (v != 0 && (piv < 0 || v < best)) {
                    piv = i;
                    best = v;
                }
            }
            if (piv < 0) break;
            row_swap(r, piv);
            bool clean = true;
            for (int i = r + 1; i < dim; ++i) {
                if (a[i][c] == 0) continue;
                Int f = a[i][c] / a[r][c];
                row_sub(i, r, f);
                if (a[i][c] != 0) clean = false;
            }
            if (clean) {
                ++r;
                break;
            }
        }
    }

    // rows r..dim-1 of u annihilate the column space (and its saturation)
    std::vector<std::vector<Int>> q(u.begin() + r, u.end());

    // Hermite-style canonical form on q's rows, pivots positive, entries
    // above pivots reduced
    int rr = 0;
    for (int c = 0; c < dim && rr < static_cast<int>(q.size()); ++c) {
        for (;;) {
            int piv = -1;
            Int best = 0;
            for (int i = rr; i < static_cast<int>(q.size()); ++i) {
                Int v = q[i][c] < 0 ? Int(-q[i][c]) : q[i][c];
                if (v != 0 && (piv < 0 || v < best)) {
                    piv = i;
                    best = v;
                }
            }
            if (piv < 0) break;
            std::swap(q[rr], q[piv]);
            bool clean = true;
            for (int i = rr + 1; i < static_cast<int>(q.size()); ++i) {
                if (q[i][c] == 0) continue;
                Int f = q[i][c] / q[rr][c];
                for (int j = 0; j < dim; ++j) q[i][j] -= f * q[rr][j];
                if (q[i][c] != 0) clean = false;
            }
            if (!clean) continue;
            if (q[rr][c] < 0)
                for (int j = 0; j < dim; ++j) q[rr][j] = -q[rr][j];
            for (int i = 0; i < rr; ++i) {
                Int f = q[i][c] / q[rr][c];
                if (q[i][c] < 0 && q[i][c] % q[rr][c] != 0) f -= 1;  // floor division
                if (f != 0)
                    for (int j = 0; j < dim; ++j) q[i][j] -= f * q[rr][j];
            }
            ++rr;
            break;
        }
    }
    return q;
}

}  // namespace

ExteriorPresentation build_exterior_presentation(const AdmissiblePresentation& p,
                                                 const MonomialMap& rho,
                                                 const std::string& mu_name,
                                                 const std::string& mu_var) {
    require_valid(p, rho);
    if (!is_valid_generator_name(mu_name)) throw std::domain_error("bad meridian name: " + mu_name);
    for (const auto& g : p.all_generators())
        if (g == mu_name) throw std::domain_error("meridian name collides with generator " + g);
    for (const auto& v : rho.variables())
        if (v == mu_var) throw std::domain_error("meridian variable collides with variable " + v);

    const int m = p.surface_rank();
    const int k = static_cast<int>(rho.variables().size());
    const int dim = k + 1;  // old variables plus the meridian slot

    // difference columns rho(i-(γj)) - rho(i+(γj)), meridian coordinate 0
    std::vector<std::vector<Int>> diff(static_cast<std::size_t>(dim),
                                       std::vector<Int>(static_cast<std::size_t>(m), 0));
    for (int j = 0; j < m; ++j) {
        const ExpVec& lo = rho.exponents(p.minus_gens[static_cast<std::size_t>(j)]);
        const ExpVec& hi = rho.exponents(p.plus_gens[static_cast<std::size_t>(j)]);
        for (int i = 0; i < k; ++i)
            diff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Int(lo[i]) - Int(hi[i]);
    }
    std::vector<std::vector<Int>> q = lattice_quotient_rows(std::move(diff), dim);

    // quotient variable names: coordinate rows keep the old name
    std::vector<std::string> old_names = rho.variables();
    old_names.push_back(mu_var);
    std::vector<std::string> new_vars;
    std::set<std::string> used;
    int synth = 0;
    for (const auto& row : q) {
        int coord = -1;
        bool is_coord = true;
        for (int i = 0; i < dim; ++i) {
            if (row[static_cast<std::size_t>(i)] == 0) continue;
            if (row[static_cast<std::size_t>(i)] == 1 && coord < 0) {
                coord = i;
            } else {
                is_coord = false;
                break;
            }
        }
        std::string name;
        if (is_coord && coord >= 0 && !used.count(old_names[static_cast<std::size_t>(coord)])) {
            name = old_names[static_cast<std::size_t>(coord)];
        } else {
            do {
                name = "u" + std::to_string(++synth);
            } while (used.count(name));
        }
        used.insert(name);
        new_vars.push_back(name);
    }

    auto project = [&](const ExpVec& old_exps, int mu_exp) {
        ExpVec e(q.size(), 0);
        for (std::size_t r = 0; r < q.size(); ++r) {
            Int acc = 0;
            for (int i = 0; i < k; ++i) acc += q[r][static_cast<std::size_t>(i)] * old_exps[i];
            acc += q[r][static_cast<std::size_t>(k)] * mu_exp;
            e[r] = static_cast<int>(acc.convert_to<long long>());
        }
        return e;
    };

    ExteriorPresentation ext;
    ext.generators = p.all_generators();
    ext.generators.push_back(mu_name);
    ext.mu = mu_name;
    ext.relators = p.relators;
    for (int j = 0; j < m; ++j) {
        Word w = Word::from_letter(p.minus_gens[static_cast<std::size_t>(j)]) *
                 Word::from_letter(mu_name) *
                 Word::from_letter(p.plus_gens[static_cast<std::size_t>(j)], -1) *
                 Word::from_letter(mu_name, -1);
        ext.relators.push_back(std::move(w));
    }
    ext.rho = MonomialMap(new_vars);
    for (const auto& g : p.all_generators()) ext.rho.set(g, project(rho.exponents(g), 0));
    ext.rho.set(mu_name, project(ExpVec(static_cast<std::size_t>(k), 0), 1));
    return ext;
}

namespace {

// restriction of the quotient rho to the cylinder generators
MonomialMap restrict_rho(const ExteriorPresentation& ext, const AdmissiblePresentation& p) {
    MonomialMap r(ext.rho.variables());
    for (const auto& g : p.all_generators()) r.set(g, ext.rho.exponents(g));
    return r;
}

}  // namespace

TorsionClass factorization_rhs(const AdmissiblePresentation& p, const ExteriorPresentation& ext) {
    MonomialMap rho_q = restrict_rho(ext, p);
    const auto& vars = rho_q.variables();
    TorsionClass tau = torsion_plus(p, rho_q);
    FieldMatrix r = magnus(p, rho_q);

    Laurent mu_mono = Laurent::monomial(vars, ext.rho.exponents(ext.mu), 1);
    FieldMatrix scaled = r.scaled(RationalFunction::from_poly(mu_mono));
    FieldMatrix diff = FieldMatrix::identity(r.rows(), vars) - scaled;
    RationalFunction det_part = det(diff);
    if (det_part.is_zero())
        throw nonacyclic_error("det(I - rho(mu) r_Gamma) = 0: exterior torsion degenerate");

    Laurent one_minus_mu = Laurent::constant(vars, 1) - mu_mono;
    RationalFunction rhs =
        tau.value() * det_part * RationalFunction::from_poly(one_minus_mu).inverse();
    return TorsionClass(rhs);
}

FactorizationCheck factorization_check(const AdmissiblePresentation& p, const MonomialMap& rho,
                                       const std::string& mu_var) {
    ExteriorPresentation ext = build_exterior_presentation(p, rho, "mu", mu_var);
    TorsionClass lhs = torsion_exterior(ext);
    TorsionClass rhs = factorization_rhs(p, ext);
    bool ok = lhs.eq_up_to_unit(rhs);
    return FactorizationCheck{std::move(lhs), std::move(rhs), ok};
}

bool verify_factorization(const AdmissiblePresentation& p, const MonomialMap& rho,
                          const std::string& mu_var) {
    return factorization_check(p, rho, mu_var).ok;
}

std::optional<NormalizedAlexander> milnor_alexander(const ExteriorPresentation& q) {
    require_valid(q);
    if (q.rho.variables().size() != 1)
        throw std::domain_error("milnor_alexander needs a one-variable rho");
    std::optional<TorsionClass> tau;
    try {
        tau = torsion_exterior(q);
    } catch (const nonacyclic_error&) {
        return std::nullopt;  // Delta_L = 0
    }
    const auto& vars = q.rho.variables();
    Laurent one_minus_t = Laurent::constant(vars, 1) - Laurent::variable(vars, vars[0]);
    RationalFunction delta = RationalFunction::from_poly(one_minus_t) * tau->value();
    auto poly = delta.as_polynomial();
    if (!poly)
        throw math_error("(1-t)*torsion is not a polynomial: not a meridional exterior datum");
    return normalize_alexander(*poly);
}

std::vector<Laurent> elementary_minors(const std::vector<std::vector<Laurent>>& m, int k,
                                       const std::vector<std::string>& vars) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    if (k < 0 || k > std::min(rows, cols))
        throw std::domain_error("minor size out of range");
    if (k == 0) return {Laurent::constant(vars, 1)};

    std::vector<Laurent> out;
    std::vector<int> ri(static_cast<std::size_t>(k)), ci(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) ri[static_cast<std::size_t>(i)] = i;
    auto next_comb = [](std::vector<int>& idx, int limit) {
        int kk = static_cast<int>(idx.size());
        for (int i = kk - 1; i >= 0; --i) {
            if (idx[static_cast<std::size_t>(i)] < limit - (kk - i)) {
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < kk; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        for (int i = 0; i < k; ++i) ci[static_cast<std::size_t>(i)] = i;
        do {
            std::vector<std::vector<Laurent>> sub(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub[static_cast<std::size_t>(i)].push_back(
                        m[static_cast<std::size_t>(ri[static_cast<std::size_t>(i)])]
                         [static_cast<std::size_t>(ci[static_cast<std::size_t>(j)])]);
            out.push_back(laurent_det(std::move(sub), vars));
        } while (next_comb(ci, cols));
    } while (next_comb(ri, rows));
    return out;
}

namespace {

// Sound refutation of "1 ∈ ideal(gens)": evaluate every generator at each
// variable = a; if a prime not dividing a divides every value (or all values
// vanish), 1 cannot lie in the ideal.  Requires integer coefficients.
bool refute_unit_ideal(const std::vector<Laurent>& gens) {
    for (const auto& g : gens)
        if (!g.is_integral()) return false;
    for (long long a : {2LL, 3LL, -2LL, 5LL}) {
        Int g = 0;
        bool ok = true;
        for (const auto& p : gens) {
            // clear the monomial denominator: unit multiples do not change
            // membership of 1
            Laurent q = p;
            if (!q.is_zero()) {
                ExpVec mn = q.min_exponents();
                for (auto& e : mn) e = e < 0 ? -e : 0;
                q = q.shift(mn);
            }
            Rational v = q.evaluate_all(Rational(a));
            if (!is_integer(v)) {
                ok = false;
                break;
            }
            Int n = rat_num(v);
            if (n < 0) n = -n;
            g = boost::multiprecision::gcd(g, n);
        }
        if (!ok) continue;
        if (g == 0) return true;
        Int base = a < 0 ? Int(-a) : Int(a);
        for (;;) {
            Int d = boost::multiprecision::gcd(g, base);
            if (d == 1) break;
            g /= d;
        }
        if (g > 1) return true;
    }
    return false;
}

}  // namespace

BoundResult generator_lower_bound(const std::vector<std::vector<Laurent>>& m,
                                  const std::vector<std::string>& vars) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    BoundResult res;
    bool all_sound = true;
    for (int level = 0;; ++level) {
        int size = rows - level;
        if (size <= 0) {
            // the empty minor is the unit 1
            res.bound = level;
            res.certified = all_sound;
            return res;
        }
        std::vector<Laurent> gens;
        if (size <= cols) gens = elementary_minors(m, size, vars);
        bool unit = false;
        for (const auto& p : gens)
            if (p.is_monomial_unit()) unit = true;
        if (unit) {
            res.bound = level;
            res.certified = all_sound;
            return res;
        }
        std::vector<Laurent> nonzero;
        for (const auto& p : gens)
            if (!p.is_zero()) nonzero.push_back(p);
        // the zero ideal refutes trivially
        if (!nonzero.empty() && !refute_unit_ideal(nonzero)) all_sound = false;
    }
}

}  // namespace homocyl
