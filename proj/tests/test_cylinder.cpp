#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "homocyl/cylinder.hpp"

using namespace homocyl;
using homocyl::test::load_cylinder;
using homocyl::test::random_mapping_class_cylinder;
using homocyl::test::random_word;

namespace {

const std::vector<std::string> T12{"t1", "t2"};
Laurent P2(const std::string& s) { return Laurent::parse(s, T12); }

// the four reference Magnus entries of the P(-3,5,9) cylinder
FieldMatrix reference_magnus() {
    const char* denom_core = "1 - t1*t2^2 - t1*t2^3 - t1*t2^4 + t1^2*t2^6";
    Laurent core = P2(denom_core);
    FieldMatrix m(2, 2, T12);
    m.at(0, 0) = RationalFunction(
        P2("-1 - t1*t2 + t1*t2^2 - t1^2*t2^4 - t1^2*t2^5 - t1^2*t2^6 + t1^3*t2^8"),
        P2("t1*t2^2") * core);
    m.at(0, 1) = RationalFunction(
        P2("-1 - t1*t2 - t1^2*t2^2 - t1^2*t2^3 - t1^2*t2^4 - t1^2*t2^5 - t1^2*t2^6"),
        P2("t1^3*t2^7") * core);
    m.at(1, 0) = RationalFunction(P2("t2^2") * P2("1 + t1*t2 - t1*t2^2"), core);
    m.at(1, 1) = RationalFunction(
        P2("1 + t1*t2 + t1^2*t2^2 + t1^2*t2^3 - t1^3*t2^5 - t1^3*t2^6 - t1^3*t2^7 + t1^4*t2^9"),
        P2("t1^2*t2^3") * core);
    return m;
}

}  // namespace

TEST_CASE("validation catches structural and homomorphism failures") {
    auto [p, rho] = load_cylinder("p359.cyl");
    CHECK(validate(p, rho).empty());

    // rebuild rho with x1 -> t1^2: every relator image check must fire
    MonomialMap bad2(rho.variables());
    for (const auto& [g, e] : rho.images())
        if (g != "x1") bad2.set(g, e);
    bad2.set("x1", {2, 0});
    auto diags = validate(p, bad2);
    REQUIRE(!diags.empty());
    bool mentions_relator = false;
    for (const auto& d : diags)
        if (d.find("rho(relator") != std::string::npos) mentions_relator = true;
    CHECK(mentions_relator);

    auto [ip, irho] = identity_cylinder(1, 1);
    CHECK(validate(ip, irho).empty());

    AdmissiblePresentation wrong = ip;
    wrong.relators.pop_back();
    CHECK(!validate(wrong, irho).empty());
}

TEST_CASE("P(-3,5,9): fox blocks match the reference matrices") {
    auto [p, rho] = load_cylinder("p359.cyl");
    AbcMatrices abc = abc_matrices(p, rho);

    // ^rho A = (I2 | 0), ^rho C = (0 | I2)
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(abc.a[i][j] == (i == j ? Laurent::constant(T12, 1) : Laurent(T12)));
            CHECK(abc.c[i][j] == (i + 2 == j ? Laurent::constant(T12, 1) : Laurent(T12)));
        }

    const char* g1[2][2] = {
        {"t1 - t1*t2^-1 - t2^-2", "-t1^-2*t2^-7 - t1^-1*t2^-6 - t2^-5"},
        {"-t1 - t2^-1", "-t1^-2*t2^-6 - t1^-1*t2^-5 - t2^-4 - t2^-3 - t2^-2 - t2^-1 - 1"}};
    const char* g2[2][2] = {
        {"t1 - t1*t2^-1 - t2^-2", "-t1^-1*t2^-6 - t2^-5"},
        {"-t1^-1*t2^-2 - t1 - t2^-1",
         "-t1^-2*t2^-6 - t1^-1*t2^-5 - t2^-4 - t2^-3 - t2^-2 - t2^-1 - 1"}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(abc.b[i][j] == P2(g1[i][j]));
            CHECK(abc.b[i][j + 2] == P2(g2[i][j]));
        }
}

TEST_CASE("P(-3,5,9): torsion, magnus, sigma") {
    auto [p, rho] = load_cylinder("p359.cyl");

    TorsionClass tau = torsion_plus(p, rho);
    RationalFunction det_g2 =
        RationalFunction::from_poly(P2("-t1^-1*t2^-6 - t1 + t2^-4 + t2^-3 + t2^-2"));
    CHECK(tau.value().eq(det_g2));
    CHECK_FALSE(tau.is_trivial());

    FieldMatrix r = magnus(p, rho);
    CHECK(r.eq(reference_magnus()));

    RatMatrix s = sigma_specialized(p, rho);
    RatMatrix expect(2, 2);
    expect.at(0, 0) = 3; expect.at(0, 1) = 7;
    expect.at(1, 0) = -1; expect.at(1, 1) = -2;
    CHECK(s == expect);
    CHECK(s.det() == 1);
}

TEST_CASE("identity cylinder has trivial invariants") {
    for (auto [g, n] : {std::pair{1, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        auto [p, rho] = identity_cylinder(g, n);
        CHECK(torsion_plus(p, rho).is_trivial());
        CHECK(magnus(p, rho).eq(FieldMatrix::identity(p.surface_rank(), rho.variables())));
        CHECK(sigma_specialized(p, rho) == RatMatrix::identity(p.surface_rank()));
    }
}

TEST_CASE("mapping-class cylinders extend the Magnus representation") {
    // trefoil monodromy: phi(a) = b^-1, phi(b) = ba
    std::vector<Word> images{Word::parse("z2^-1"), Word::parse("z2 z1")};
    auto [p, rho] = mapping_class_cylinder(1, 1, images);
    CHECK(validate(p, rho).empty());

    TorsionClass tau = torsion_plus(p, rho);
    CHECK(tau.is_trivial());

    // r_Gamma = involuted rho-Fox jacobian of the image words
    FieldMatrix r = magnus(p, rho);
    MonomialMap zrho(T12);
    zrho.set("z1", {1, 0});
    zrho.set("z2", {0, 1});
    FieldMatrix expect(2, 2, T12);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            expect.at(i, j) = RationalFunction::from_poly(
                fox_derivative(images[j], i == 0 ? "z1" : "z2", zrho).involute());
    CHECK(r.eq(expect));

    RatMatrix s = sigma_specialized(p, rho);
    CHECK(s.at(0, 0) == 0);
    CHECK(s.at(0, 1) == 1);
    CHECK(s.at(1, 0) == -1);
    CHECK(s.at(1, 1) == 1);

    // file form of the same cylinder
    auto [fp, frho] = load_cylinder("trefoil_monodromy.cyl");
    CHECK(magnus(fp, frho).eq(r));
}

TEST_CASE("fibering reports") {
    auto [p, rho] = load_cylinder("p359.cyl");
    FiberingReport obstructed = fibering_report(p, rho);
    CHECK_FALSE(obstructed.torsion_trivial);
    CHECK_FALSE(obstructed.magnus_integral);
    CHECK(obstructed.obstructed());

    auto [ip, irho] = identity_cylinder(1, 1);
    FiberingReport clean = fibering_report(ip, irho);
    CHECK(clean.torsion_trivial);
    CHECK(clean.magnus_integral);
    CHECK_FALSE(clean.obstructed());

    auto [tp, trho] = load_cylinder("trefoil_monodromy.cyl");
    FiberingReport fibered = fibering_report(tp, trho);
    CHECK(fibered.torsion_trivial);
    CHECK(fibered.magnus_integral);
    CHECK_FALSE(fibered.obstructed());
}

TEST_CASE("sigma composition") {
    auto [ip, irho] = identity_cylinder(1, 1);
    CHECK(compose_sigma(ip, irho, ip, irho) == RatMatrix::identity(2));

    auto [tp, trho] = load_cylinder("trefoil_monodromy.cyl");
    RatMatrix once = sigma_specialized(tp, trho);
    CHECK(compose_sigma(tp, trho, tp, trho) == once * once);

    // phi^-1 images: a -> ab, b -> a^-1
    auto [qp, qrho] = mapping_class_cylinder(1, 1, {Word::parse("z1 z2"), Word::parse("z1^-1")});
    CHECK(compose_sigma(tp, trho, qp, qrho) == RatMatrix::identity(2));

    auto [hp, hrho] = identity_cylinder(0, 2);
    CHECK_THROWS_AS(compose_sigma(ip, irho, hp, hrho), std::domain_error);
}

TEST_CASE("singular (A;B) is rejected as not a rational homology cylinder") {
    AdmissiblePresentation p;
    p.g = 0;
    p.n = 2;
    p.minus_gens = {"m"};
    p.plus_gens = {"q"};
    p.relators = {Word()};  // empty relator: zero Fox column
    MonomialMap rho({"t"});
    rho.set("m", {1});
    rho.set("q", {1});
    CHECK(validate(p, rho).empty());
    CHECK_THROWS_AS(torsion_plus(p, rho), singular_matrix_error);
    CHECK_THROWS_AS(magnus(p, rho), singular_matrix_error);
}

TEST_CASE("torsion and magnus are invariant under Tietze moves") {
    auto [p, rho] = load_cylinder("p359.cyl");
    TorsionClass tau = torsion_plus(p, rho);
    FieldMatrix r = magnus(p, rho);
    std::mt19937 rng(77);
    std::uniform_int_distribution<std::size_t> pick_rel(0, p.relators.size() - 1);

    for (int it = 0; it < 8; ++it) {
        AdmissiblePresentation q = p;
        std::size_t j = pick_rel(rng);
        if (it % 2 == 0) {
            // conjugate relator j by a random word
            Word w = random_word(rng, q.all_generators(), 4);
            q.relators[j] = w * q.relators[j] * w.inverse();
        } else {
            // multiply relator j by another relator k != j
            std::size_t k = pick_rel(rng);
            if (k == j) k = (k + 1) % q.relators.size();
            q.relators[j] = q.relators[j] * q.relators[k];
        }
        REQUIRE(validate(q, rho).empty());
        CHECK(torsion_plus(q, rho).eq_up_to_unit(tau));
        CHECK(magnus(q, rho).eq(r));
    }
}

TEST_CASE("random mapping-class cylinders have unit torsion") {
    std::mt19937 rng(78);
    for (int i = 0; i < 10; ++i) {
        auto [p, rho] = random_mapping_class_cylinder(rng);
        REQUIRE(validate(p, rho).empty());
        CHECK(torsion_plus(p, rho).is_trivial());
        CHECK(fibering_report(p, rho).magnus_integral);
    }
}
