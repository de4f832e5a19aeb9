#include "homocyl/cylinder.hpp"

#include <set>
#include <sstream>

namespace homocyl {

std::vector<std::string> AdmissiblePresentation::all_generators() const {
    std::vector<std::string> all = minus_gens;
    all.insert(all.end(), aux_gens.begin(), aux_gens.end());
    all.insert(all.end(), plus_gens.begin(), plus_gens.end());
    return all;
}

std::vector<std::string> validate(const AdmissiblePresentation& p, const MonomialMap& rho) {
    std::vector<std::string> bad;
    const int m = p.surface_rank();
    if (p.g < 0 || p.n < 1 || m < 1) bad.push_back("surface data needs g >= 0, n >= 1, 2g+n-1 >= 1");
    if (static_cast<int>(p.minus_gens.size()) != m)
        bad.push_back("minus generator count must be 2g+n-1");
    if (static_cast<int>(p.plus_gens.size()) != m)
        bad.push_back("plus generator count must be 2g+n-1");
    if (p.relators.size() != p.minus_gens.size() + p.aux_gens.size())
        bad.push_back("relator count must be (2g+n-1) + #aux (deficiency 2g+n-1)");

    std::set<std::string> seen;
    for (const auto& g : p.all_generators()) {
        if (!is_valid_generator_name(g)) bad.push_back("invalid generator name: " + g);
        if (!seen.insert(g).second) bad.push_back("duplicate generator name: " + g);
    }
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        for (const auto& l : p.relators[j].letters())
            if (!seen.count(l.gen))
                bad.push_back("relator " + std::to_string(j + 1) + " uses undeclared generator " +
                              l.gen);
    for (const auto& g : seen)
        if (!rho.has(g)) bad.push_back("rho missing generator " + g);
    if (!bad.empty()) return bad;

    for (std::size_t j = 0; j < p.relators.size(); ++j)
        if (!rho.is_trivial_on(p.relators[j]))
            bad.push_back("rho(relator " + std::to_string(j + 1) + ") != 1: " +
                          p.relators[j].str());
    return bad;
}

void require_valid(const AdmissiblePresentation& p, const MonomialMap& rho) {
    auto bad = validate(p, rho);
    if (bad.empty()) return;
    std::ostringstream os;
    os << "invalid admissible presentation:";
    for (const auto& b : bad) os << "\n  - " << b;
    throw std::domain_error(os.str());
}

namespace {

std::vector<std::vector<Laurent>> fox_block(const std::vector<std::string>& gens,
                                            const std::vector<Word>& relators,
                                            const MonomialMap& rho) {
    std::vector<std::vector<Laurent>> m;
    m.reserve(gens.size());
    for (const auto& g : gens) {
        std::vector<Laurent> row;
        row.reserve(relators.size());
        for (const auto& r : relators) row.push_back(fox_derivative(r, g, rho).involute());
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

AbcMatrices abc_matrices(const AdmissiblePresentation& p, const MonomialMap& rho) {
    require_valid(p, rho);
    AbcMatrices out;
    out.a = fox_block(p.minus_gens, p.relators, rho);
    out.b = fox_block(p.aux_gens, p.relators, rho);
    out.c = fox_block(p.plus_gens, p.relators, rho);
    return out;
}

std::vector<std::vector<Laurent>> stacked_ab(const AdmissiblePresentation& p,
                                             const MonomialMap& rho) {
    AbcMatrices abc = abc_matrices(p, rho);
    std::vector<std::vector<Laurent>> ab = std::move(abc.a);
    for (auto& row : abc.b) ab.push_back(std::move(row));
    return ab;
}

TorsionClass torsion_plus(const AdmissiblePresentation& p, const MonomialMap& rho) {
    Laurent d = laurent_det(stacked_ab(p, rho), rho.variables());
    if (d.is_zero())
        throw singular_matrix_error(
            "(A;B) is singular: the input is not a rational homology cylinder datum");
    return TorsionClass(RationalFunction::from_poly(std::move(d)));
}

FieldMatrix magnus(const AdmissiblePresentation& p, const MonomialMap& rho) {
    AbcMatrices abc = abc_matrices(p, rho);
    const int m = p.surface_rank();
    const int l = static_cast<int>(p.aux_gens.size());
    const auto& vars = rho.variables();

    std::vector<std::vector<Laurent>> ab = abc.a;
    for (auto& row : abc.b) ab.push_back(std::move(row));
    FieldMatrix AB = FieldMatrix::from_polys(ab, vars);

    FieldMatrix rhs(m + l, m, vars);
    for (int i = 0; i < m; ++i) rhs.at(i, i) = RationalFunction::one(vars);
    FieldMatrix x = solve_right(AB, rhs);  // singular -> singular_matrix_error

    FieldMatrix r(m, m, vars);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            RationalFunction sum = RationalFunction::zero(vars);
            for (int k = 0; k < m + l; ++k) {
                const Laurent& cik = abc.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                if (cik.is_zero()) continue;
                sum = sum + RationalFunction::from_poly(cik) * x.at(k, j);
            }
            r.at(i, j) = -sum;
        }
    return r;
}

RatMatrix sigma_specialized(const AdmissiblePresentation& p, const MonomialMap& rho) {
    FieldMatrix r = magnus(p, rho);
    std::map<std::string, Rational> ones;
    for (const auto& v : rho.variables()) ones.emplace(v, 1);
    RatMatrix s(r.rows(), r.cols());
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) s.at(i, j) = r.at(i, j).evaluate(ones);
    return s;
}

CylinderInvariants invariants(const AdmissiblePresentation& p, const MonomialMap& rho) {
    return CylinderInvariants{torsion_plus(p, rho), magnus(p, rho), sigma_specialized(p, rho)};
}

FiberingReport fibering_report(const AdmissiblePresentation& p, const MonomialMap& rho) {
    FiberingReport rep{false, false, invariants(p, rho)};
    rep.torsion_trivial = rep.inv.torsion.is_trivial();
    rep.magnus_integral = true;
    for (int i = 0; i < rep.inv.magnus.rows() && rep.magnus_integral; ++i)
        for (int j = 0; j < rep.inv.magnus.cols(); ++j)
            if (!rep.inv.magnus.at(i, j).as_polynomial()) {
                rep.magnus_integral = false;
                break;
            }
    return rep;
}

RatMatrix compose_sigma(const AdmissiblePresentation& p1, const MonomialMap& rho1,
                        const AdmissiblePresentation& p2, const MonomialMap& rho2) {
    if (p1.g != p2.g || p1.n != p2.n)
        throw std::domain_error("compose: cylinders over different surfaces");
    return sigma_specialized(p1, rho1) * sigma_specialized(p2, rho2);
}

std::pair<AdmissiblePresentation, MonomialMap> identity_cylinder(int g, int n) {
    AdmissiblePresentation p;
    p.g = g;
    p.n = n;
    const int m = p.surface_rank();
    std::vector<std::string> vars;
    for (int i = 1; i <= m; ++i) vars.push_back("t" + std::to_string(i));
    MonomialMap rho(vars);
    for (int i = 1; i <= m; ++i) {
        std::string mg = "g" + std::to_string(i) + "m";
        std::string pg = "g" + std::to_string(i) + "p";
        p.minus_gens.push_back(mg);
        p.plus_gens.push_back(pg);
        p.relators.push_back(Word::from_letter(mg) * Word::from_letter(pg, -1));
        ExpVec e(static_cast<std::size_t>(m), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        rho.set(mg, e);
        rho.set(pg, e);
    }
    return {std::move(p), std::move(rho)};
}

std::pair<AdmissiblePresentation, MonomialMap> mapping_class_cylinder(
    int g, int n, const std::vector<Word>& images) {
    AdmissiblePresentation p;
    p.g = g;
    p.n = n;
    const int m = p.surface_rank();
    if (static_cast<int>(images.size()) != m)
        throw std::domain_error("mapping class needs one image word per spine loop");
    std::vector<std::string> vars, zs;
    for (int i = 1; i <= m; ++i) {
        vars.push_back("t" + std::to_string(i));
        zs.push_back("z" + std::to_string(i));
    }
    MonomialMap rho(vars);
    for (int i = 0; i < m; ++i) {
        ExpVec e(static_cast<std::size_t>(m), 0);
        e[static_cast<std::size_t>(i)] = 1;
        rho.set(zs[static_cast<std::size_t>(i)], e);
    }
    p.aux_gens = zs;
    for (int i = 1; i <= m; ++i) {
        std::string mg = "g" + std::to_string(i) + "m";
        std::string pg = "g" + std::to_string(i) + "p";
        p.minus_gens.push_back(mg);
        p.plus_gens.push_back(pg);
        const Word& w = images[static_cast<std::size_t>(i - 1)];
        for (const auto& l : w.letters())
            if (std::find(zs.begin(), zs.end(), l.gen) == zs.end())
                throw std::domain_error("mapping class image must be a word in z1..zm");
        rho.set(mg, rho.image_exponents(w));
        ExpVec e(static_cast<std::size_t>(m), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        rho.set(pg, e);
    }
    // relators: i-(γj) φ(γj)^-1 first, then i+(γj) zj^-1
    for (int i = 1; i <= m; ++i)
        p.relators.push_back(Word::from_letter(p.minus_gens[static_cast<std::size_t>(i - 1)]) *
                             images[static_cast<std::size_t>(i - 1)].inverse());
    for (int i = 1; i <= m; ++i)
        p.relators.push_back(Word::from_letter(p.plus_gens[static_cast<std::size_t>(i - 1)]) *
                             Word::from_letter(zs[static_cast<std::size_t>(i - 1)], -1));
    return {std::move(p), std::move(rho)};
}

}  // namespace homocyl
