#pragma once

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "homocyl/cylinder.hpp"
#include "homocyl/parse.hpp"
#include "homocyl/seifert.hpp"

namespace homocyl::test {

inline std::string data_path(const std::string& name) {
    return std::string(HOMOCYL_TEST_DATA) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

inline ParsedCylinder load_cylinder(const std::string& name) {
    return std::get<ParsedCylinder>(parse_input_file(data_path(name)));
}

inline ExteriorPresentation load_exterior(const std::string& name) {
    return std::get<ExteriorPresentation>(parse_input_file(data_path(name)));
}

inline SeifertMatrix load_seifert(const std::string& name) {
    return std::get<SeifertMatrix>(parse_input_file(data_path(name)));
}

// apply the homomorphism gen -> images[gen] letter by letter
inline Word apply_hom(const Word& w, const std::map<std::string, Word>& images) {
    Word out;
    for (const auto& l : w.letters()) {
        const Word& img = images.at(l.gen);
        Word power;
        Word factor = l.exp > 0 ? img : img.inverse();
        int reps = l.exp > 0 ? l.exp : -l.exp;
        for (int i = 0; i < reps; ++i) power = power * factor;
        out = out * power;
    }
    return out;
}

/*
 * Mapping classes of the once-punctured torus as automorphisms of F<z1,z2>,
 * generated by the two core-curve Dehn twists.  Every composite fixes the
 * boundary commutator [z1,z2], which random_mapping_class asserts.
 */
struct TorusAutomorphism {
    Word a = Word::from_letter("z1");  // image of z1
    Word b = Word::from_letter("z2");  // image of z2

    // boundary word [a,b]
    Word boundary() const { return a * b * a.inverse() * b.inverse(); }

    // phi := phi_old ∘ tau, substituting the old images into tau's words;
    // twist 0 is t_a (z2 -> z2 z1), twist 1 is t_b (z1 -> z1 z2^-1)
    static TorusAutomorphism compose_twists(const std::vector<std::pair<int, int>>& twists) {
        TorusAutomorphism phi;
        for (auto [which, sign] : twists) {
            std::map<std::string, Word> cur{{"z1", phi.a}, {"z2", phi.b}};
            Word ta = Word::from_letter("z1");
            Word tb = Word::from_letter("z2");
            if (which == 0) {
                tb = Word::parse(sign > 0 ? "z2 z1" : "z2 z1^-1");
            } else {
                ta = Word::parse(sign > 0 ? "z1 z2^-1" : "z1 z2");
            }
            Word na = apply_hom(ta, cur);
            Word nb = apply_hom(tb, cur);
            phi.a = na;
            phi.b = nb;
        }
        return phi;
    }
};

inline std::pair<AdmissiblePresentation, MonomialMap> random_mapping_class_cylinder(
    std::mt19937& rng) {
    std::uniform_int_distribution<int> len(1, 5), which(0, 1), sign(0, 1);
    int n = len(rng);
    std::vector<std::pair<int, int>> twists;
    for (int i = 0; i < n; ++i) twists.push_back({which(rng), sign(rng) ? 1 : -1});
    TorusAutomorphism phi = TorusAutomorphism::compose_twists(twists);
    Word bd = phi.boundary();
    Word expect = Word::parse("z1 z2 z1^-1 z2^-1");
    if (bd != expect) throw std::logic_error("twist composition does not fix the boundary");
    return mapping_class_cylinder(1, 1, {phi.a, phi.b});
}

inline Word random_word(std::mt19937& rng, const std::vector<std::string>& alphabet,
                        std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> exp(0, 1);
    std::vector<Word::Letter> raw;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i)
        raw.push_back({alphabet[pick(rng)], exp(rng) ? 1 : -1});
    return Word::reduce(raw);
}

inline MonomialMap random_rho(std::mt19937& rng, const std::vector<std::string>& alphabet,
                              const std::vector<std::string>& vars) {
    std::uniform_int_distribution<int> e(-2, 2);
    MonomialMap rho(vars);
    for (const auto& g : alphabet) {
        ExpVec v(vars.size());
        for (auto& x : v) x = e(rng);
        rho.set(g, v);
    }
    return rho;
}

inline SeifertMatrix random_invertible_seifert(std::mt19937& rng, int size) {
    std::uniform_int_distribution<int> entry(-2, 2);
    for (;;) {
        RatMatrix s(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) s.at(i, j) = entry(rng);
        if (s.det() == 0) continue;
        // size = 2g+n-1: realize as g = size/2, n = 1 or 2
        int g = size / 2;
        int n = size - 2 * g + 1;
        return SeifertMatrix(g, n, std::move(s));
    }
}

}  // namespace homocyl::test
