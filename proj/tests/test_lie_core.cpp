#include "liegrade/lie_core.hpp"

#include "liegrade/serialize.hpp"

#include <doctest.h>

using namespace liegrade;

namespace {

// sl2 with basis e, h, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h
LieAlgebra make_sl2()
{
    LieAlgebra l(3, {"e", "h", "f"});
    l.set_bracket(0, 1, {{0, Cyc(-2)}});
    l.set_bracket(0, 2, {{1, Cyc(1)}});
    l.set_bracket(1, 2, {{2, Cyc(-2)}});
    return l;
}

SVec unit(int i)
{
    return {{i, Cyc(1)}};
}

}  // namespace

TEST_CASE("bracket basics on sl2")
{
    LieAlgebra l = make_sl2();
    CHECK(l.bracket(unit(1), unit(0)) == SVec{{0, Cyc(2)}});
    CHECK(l.bracket(unit(0), unit(0)).empty());
    // bilinearity on a combination: [h, e + f] = 2e - 2f
    SVec v = {{0, Cyc(1)}, {2, Cyc(1)}};
    CHECK(l.bracket(unit(1), v) == SVec{{0, Cyc(2)}, {2, Cyc(-2)}});
    // antisymmetry of arbitrary vectors
    SVec u = {{0, Cyc(3)}, {1, Cyc(-1)}};
    SVec ab = l.bracket(u, v), ba = l.bracket(v, u);
    REQUIRE(ab.size() == ba.size());
    for (size_t k = 0; k < ab.size(); ++k) {
        CHECK(ab[k].first == ba[k].first);
        CHECK((ab[k].second + ba[k].second).is_zero());
    }
    CHECK_THROWS_AS(l.bracket_dense({Cyc(1)}, {Cyc(1)}), Error);
}

TEST_CASE("ad matrix agrees with the bracket")
{
    LieAlgebra l = make_sl2();
    SVec x = {{0, Cyc(2)}, {1, Cyc(1)}, {2, Cyc(-1)}};
    Mat<Cyc> ad = l.ad(x);
    for (int j = 0; j < 3; ++j) {
        std::vector<Cyc> col = to_dense(l.bracket(x, unit(j)), 3);
        for (int i = 0; i < 3; ++i)
            CHECK(ad.at(i, j) == col[static_cast<size_t>(i)]);
    }
}

TEST_CASE("jacobi check and failure reporting")
{
    CHECK_FALSE(make_sl2().check_jacobi().has_value());
    CHECK_FALSE(make_sl2().check_jacobi(4).has_value());

    LieAlgebra bad(3);
    bad.set_bracket(0, 1, {{0, Cyc(-2)}});
    bad.set_bracket(0, 2, {{1, Cyc(1)}});
    bad.set_bracket(1, 2, {{2, Cyc(-3)}});  // perturbed constant
    auto fail = bad.check_jacobi();
    REQUIRE(fail.has_value());
    CHECK(fail->i == 0);
    CHECK(fail->j == 1);
    CHECK(fail->k == 2);
}

TEST_CASE("automorphism checks")
{
    LieAlgebra l = make_sl2();
    AutMap id(Mat<Cyc>::identity(3), 1);
    CHECK(is_automorphism(l, id).ok);

    Mat<Cyc> neg(3, 3);
    for (int i = 0; i < 3; ++i)
        neg.at(i, i) = Cyc(-1);
    CHECK_FALSE(is_automorphism(l, AutMap(neg)).ok);

    Mat<Cyc> sing(3, 3);
    AutCheck c = is_automorphism(l, AutMap(sing));
    CHECK_FALSE(c.ok);
    CHECK(c.reason == "matrix is singular");

    // Ad of diag(t, 1/t) with t = 2: e -> 4e, f -> f/4, h -> h
    Mat<Cyc> adt(3, 3);
    adt.at(0, 0) = Cyc(4);
    adt.at(1, 1) = Cyc(1);
    adt.at(2, 2) = Cyc(Rat(1, 4));
    CHECK(is_automorphism(l, AutMap(adt)).ok);
}

TEST_CASE("fixed subalgebras and rank")
{
    LieAlgebra l = make_sl2();
    AutMap id(Mat<Cyc>::identity(3), 1);
    Subalgebra fix = fixed_subalgebra(l, {&id});
    CHECK(fix.dimension() == 3);
    CHECK(is_bracket_closed(l, fix));

    // Ad diag(i, -i): e -> -e, f -> -f, h -> h; fixes the Cartan line
    Mat<Cyc> a(3, 3);
    a.at(0, 0) = Cyc(-1);
    a.at(1, 1) = Cyc(1);
    a.at(2, 2) = Cyc(-1);
    AutMap inv(a, 2);
    Subalgebra cartan = fixed_subalgebra(l, {&inv});
    CHECK(cartan.dimension() == 1);

    RankResult r = reductive_rank(l, full_subalgebra(l));
    CHECK(r.value == 1);
    CHECK(r.unanimous);

    // not an automorphism: rejected
    Mat<Cyc> neg(3, 3);
    for (int i = 0; i < 3; ++i)
        neg.at(i, i) = Cyc(-1);
    AutMap bad(neg);
    CHECK_THROWS_AS(fixed_subalgebra(l, {&bad}), Error);
}

TEST_CASE("strong commutation on sl2")
{
    LieAlgebra l = make_sl2();
    AutMap id(Mat<Cyc>::identity(3), 1);
    CHECK(strongly_commute(l, id, id));

    Mat<Cyc> a(3, 3);
    a.at(0, 0) = Cyc(-1);
    a.at(1, 1) = Cyc(1);
    a.at(2, 2) = Cyc(-1);
    AutMap inv(a, 2);
    CHECK(strongly_commute(l, id, inv));
    CHECK(strongly_commute(l, inv, id));  // symmetric in its arguments
    CHECK(strongly_commute(l, inv, inv));

    // the Weyl flip W and Ad(diag(2,1/2)) do not commute: rejected input
    Mat<Cyc> w(3, 3);
    w.at(0, 2) = Cyc(-1);
    w.at(1, 1) = Cyc(-1);
    w.at(2, 0) = Cyc(-1);
    REQUIRE(is_automorphism(l, AutMap(w)).ok);
    Mat<Cyc> adt(3, 3);
    adt.at(0, 0) = Cyc(4);
    adt.at(1, 1) = Cyc(1);
    adt.at(2, 2) = Cyc(Rat(1, 4));
    CHECK_THROWS_AS(strongly_commute(l, AutMap(w), AutMap(adt)), Error);

    // declared order that fails to hold is rejected
    AutMap wrong_order(adt, 2);
    CHECK_FALSE(wrong_order.declared_order_holds());
    CHECK_THROWS_AS(strongly_commute(l, wrong_order, wrong_order), Error);
}

TEST_CASE("structure constants round-trip through JSON")
{
    LieAlgebra l = make_sl2();
    Json doc = lie_to_json(l);
    CHECK(doc.at("dim") == 3);
    CHECK(doc.at("labels").size() == 3);
    LieAlgebra back = lie_from_json(doc);
    CHECK(back.dim() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(back.bracket_basis(i, j) == l.bracket_basis(i, j));
    CHECK_FALSE(back.check_jacobi().has_value());

    // a fractional, non-rational coefficient survives
    LieAlgebra m(3);
    m.set_bracket(0, 1, {{2, Cyc(Rat(1, 2)) * Cyc::zeta_pow(6)}});
    LieAlgebra mback = lie_from_json(lie_to_json(m));
    CHECK(mback.bracket_basis(0, 1) == m.bracket_basis(0, 1));
}
