#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "homocyl/seifert.hpp"

using namespace homocyl;
using homocyl::test::load_seifert;
using homocyl::test::random_invertible_seifert;

namespace {
Laurent P(const std::string& s) { return Laurent::parse(s, {"t"}); }
}

TEST_CASE("alexander polynomials of the standard corpus") {
    auto tre = alexander(load_seifert("trefoil.seifert"));
    REQUIRE(tre.has_value());
    CHECK(tre->poly == P("t^2 - t + 1"));
    CHECK(tre->degree == 2);

    auto unk = alexander(load_seifert("unknot.seifert"));
    REQUIRE(unk.has_value());
    CHECK(unk->poly == Laurent::constant({"t"}, 1));
    CHECK(unk->degree == 0);

    auto fig8 = alexander(load_seifert("fig8.seifert"));
    REQUIRE(fig8.has_value());
    CHECK(fig8->poly == P("t^2 - 3*t + 1"));

    auto hopf = alexander(load_seifert("hopf.seifert"));
    REQUIRE(hopf.has_value());
    CHECK(hopf->poly == P("1 - t"));
    CHECK(hopf->degree == 1);
}

TEST_CASE("classification per the det S criterion") {
    FiberednessReport tre = classify(load_seifert("trefoil.seifert"));
    CHECK(tre.verdict == Fiberedness::HomologicallyFibered);
    CHECK(tre.det_s == 1);
    CHECK(tre.degree_ok);
    CHECK(tre.assumes_minimal_genus);

    FiberednessReport rhf = classify(load_seifert("rhf2.seifert"));
    CHECK(rhf.verdict == Fiberedness::RationallyHomologicallyFibered);
    CHECK(rhf.det_s == 2);

    FiberednessReport nei = classify(load_seifert("degenerate.seifert"));
    CHECK(nei.verdict == Fiberedness::Neither);
    CHECK(nei.det_s == 0);
    CHECK_FALSE(nei.degree_ok);

    RatMatrix z(2, 2);
    FiberednessReport deg = classify(SeifertMatrix(1, 1, z));
    CHECK(deg.verdict == Fiberedness::Degenerate);
    CHECK_FALSE(deg.alexander.has_value());
}

TEST_CASE("sigma = (S^T)^-1 S") {
    RatMatrix tre = sigma(load_seifert("trefoil.seifert"));
    RatMatrix expect(2, 2);
    expect.at(0, 0) = 1; expect.at(0, 1) = -1;
    expect.at(1, 0) = 1; expect.at(1, 1) = 0;
    CHECK(tre == expect);
    CHECK(tre.det() == 1);
    CHECK(tre.is_integral());

    RatMatrix p359 = sigma(load_seifert("p359.seifert"));
    RatMatrix expect2(2, 2);
    expect2.at(0, 0) = 3; expect2.at(0, 1) = 7;
    expect2.at(1, 0) = -1; expect2.at(1, 1) = -2;
    CHECK(p359 == expect2);

    // symmetric invertible S gives the identity
    RatMatrix sym(2, 2);
    sym.at(0, 0) = 2; sym.at(0, 1) = 1;
    sym.at(1, 0) = 1; sym.at(1, 1) = 1;
    CHECK(sigma(SeifertMatrix(1, 1, sym)) == RatMatrix::identity(2));

    CHECK_THROWS_AS(sigma(load_seifert("degenerate.seifert")), singular_matrix_error);
}

TEST_CASE("sigma preserves the intersection pairing") {
    CHECK(check_pairing_preserved(load_seifert("trefoil.seifert")));
    CHECK(check_pairing_preserved(load_seifert("hopf.seifert")));

    std::mt19937 rng(57);
    for (int i = 0; i < 25; ++i) {
        SeifertMatrix sm = random_invertible_seifert(rng, 5);
        CHECK(check_pairing_preserved(sm));
        CHECK(sigma(sm).det() == 1);
    }
}

TEST_CASE("the factorization det(tS - S^T) = det(S^T) det(t sigma - I)") {
    CHECK(factor_check(load_seifert("trefoil.seifert")));
    CHECK(factor_check(load_seifert("fig8.seifert")));
    CHECK(factor_check(load_seifert("rhf2.seifert")));

    std::mt19937 rng(58);
    for (int i = 0; i < 15; ++i) CHECK(factor_check(random_invertible_seifert(rng, 4)));
}

TEST_CASE("normalized degree and constant term track det S") {
    std::mt19937 rng(59);
    for (int size : {2, 3, 4, 5}) {
        SeifertMatrix sm = random_invertible_seifert(rng, size);
        auto a = alexander(sm);
        REQUIRE(a.has_value());
        CHECK(a->degree == sm.size());
        Rational d = sm.s.det();
        CHECK((a->poly.constant_term() == d || a->poly.constant_term() == -d));
    }
}

TEST_CASE("block form of sigma is reported for multi-component links") {
    CHECK_FALSE(sigma_block_report(load_seifert("trefoil.seifert")).applies);

    SigmaBlockReport hopf = sigma_block_report(load_seifert("hopf.seifert"));
    CHECK(hopf.applies);
    CHECK(hopf.matches);
    CHECK(hopf.x_preserves_form);

    // symmetric S has sigma = I: the block shape holds
    SigmaBlockReport sym = sigma_block_report(SeifertMatrix(1, 2, RatMatrix::identity(3)));
    CHECK(sym.applies);
    CHECK(sym.matches);
    CHECK(sym.x_preserves_form);

    // a basis-scrambled matrix need not match; that is reported, not an error
    RatMatrix s(3, 3);
    s.at(0, 0) = 1; s.at(0, 1) = 1; s.at(0, 2) = 1;
    s.at(1, 1) = 1; s.at(2, 2) = 1;
    SigmaBlockReport off = sigma_block_report(SeifertMatrix(1, 2, std::move(s)));
    CHECK(off.applies);
    CHECK_FALSE(off.matches);
}

TEST_CASE("seifert matrix validation") {
    RatMatrix bad(2, 2);
    bad.at(0, 0) = Rational(1, 2);
    CHECK_THROWS_AS(SeifertMatrix(1, 1, bad), std::domain_error);
    CHECK_THROWS_AS(SeifertMatrix(1, 2, RatMatrix(2, 2)), std::domain_error);
    CHECK_THROWS_AS(SeifertMatrix(0, 0, RatMatrix(0, 0)), std::domain_error);
}
