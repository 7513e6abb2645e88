#include "liegrade/invariants.hpp"

#include "liegrade/bichar.hpp"

#include <doctest.h>

using namespace liegrade;

namespace {

Weight fund(LieType t, int i)
{
    Weight w(static_cast<size_t>(type_rank(t)), Int(0));
    w[static_cast<size_t>(i - 1)] = 1;
    return w;
}

ModuleSpec single(Weight w, long mult)
{
    ModuleSpec m;
    m.summands.emplace_back(std::move(w), Int(mult));
    return m;
}

}  // namespace

TEST_CASE("catalog shape")
{
    CHECK(catalog(LieType::E6).size() == 14);
    CHECK(catalog(LieType::E7).size() == 14);

    int outer = 0, inner = 0;
    for (const auto& e : catalog(LieType::E6))
        (e.outer ? outer : inner) += 1;
    CHECK(outer == 9);
    CHECK(inner == 5);

    const auto& z34 = catalog_entry(LieType::E6, "Z3^4");
    REQUIRE(z34.t.has_value());
    CHECK(z34.t->order() == 9);
    CHECK(z34.t->contains(Elt{1, 0, 0, 0}));
    CHECK(z34.t->contains(Elt{0, 1, 0, 0}));
    CHECK_FALSE(z34.t->contains(Elt{0, 0, 1, 0}));

    const auto& z28 = catalog_entry(LieType::E7, "Z2^8");
    REQUIRE(z28.t.has_value());
    CHECK(z28.t->order() == 4);
    CHECK(z28.t->contains(Elt{1, 0, 0, 0, 0, 0, 0, 0}));

    CHECK(catalog_entry(LieType::E7, "Z^7").trivial_invariants());
    CHECK(catalog_entry(LieType::E7, "ZxZ3^3").trivial_invariants());
    CHECK(catalog_entry(LieType::E7, "Z^3xZ2^3").trivial_invariants());

    // the doubled universal group needs its suffix
    CHECK_THROWS_AS(catalog_entry(LieType::E6, "Z^2xZ2^3"), Error);
    CHECK_FALSE(catalog_entry(LieType::E6, "Z^2xZ2^3-inner").outer);
    CHECK(catalog_entry(LieType::E6, "Z^2xZ2^3-outer").outer);

    // T sits inside the Z4^2 factor as its order-2 part
    const auto& z42 = catalog_entry(LieType::E7, "Z2^3xZ4^2");
    REQUIRE(z42.t.has_value());
    CHECK(z42.t->contains(Elt{0, 0, 0, 2, 0}));
    CHECK_FALSE(z42.t->contains(Elt{1, 0, 0, 0, 0}));

    // the structurable-algebra entry joins the Z2 factor with h
    const auto& brown = catalog_entry(LieType::E7, "Z2xZ4^3");
    REQUIRE(brown.h.has_value());
    CHECK(brown.universal.order_of(*brown.h) == 2);
    CHECK(brown.t->contains(*brown.h));
    CHECK(brown.t->contains(Elt{1, 0, 0, 0}));
    CHECK(brown.h_by_convention);
}

TEST_CASE("worked reports")
{
    // E7 / Z2^8 / pi1: support Z2^2, index 2, graded-simple dimension 112
    {
        const auto& e = catalog_entry(LieType::E7, "Z2^8");
        BrauerReport r = brauer_report(e, Hom::identity(e.universal), fund(LieType::E7, 1));
        CHECK(r.schur_index == 2);
        CHECK(r.support.order() == 4);
        CHECK(r.graded_simple_dim == 112);
        CHECK(r.orbit.size() == 1);
        CHECK(r.h_lambda.is_trivial());
    }
    // E6 / Z3^4 / pi1: index 3, dimension 81 = 3 * 27
    {
        const auto& e = catalog_entry(LieType::E6, "Z3^4");
        BrauerReport r = brauer_report(e, Hom::identity(e.universal), fund(LieType::E6, 1));
        CHECK(r.schur_index == 3);
        CHECK(r.graded_simple_dim == 81);
        CHECK(r.summands.size() == 1);
        CHECK(r.summands[0].second == 3);
    }
    // E6 / Z3^4 / pi3: the class vanishes, index 1
    {
        const auto& e = catalog_entry(LieType::E6, "Z3^4");
        BrauerReport r = brauer_report(e, Hom::identity(e.universal), fund(LieType::E6, 3));
        CHECK(r.schur_index == 1);
        CHECK(r.support.is_trivial());
    }
    // E6 outer / Z2xZ3^3 / pi1: trivial invariant, orbit of size 2, dim 54
    {
        const auto& e = catalog_entry(LieType::E6, "Z2xZ3^3");
        BrauerReport r = brauer_report(e, Hom::identity(e.universal), fund(LieType::E6, 1));
        CHECK(r.schur_index == 1);
        CHECK(r.h_lambda.order() == 2);
        CHECK(r.orbit.size() == 2);
        CHECK(r.orbit[1] == fund(LieType::E6, 5));
        CHECK(r.graded_simple_dim == 54);
        CHECK(r.quotient.order() == 27);
    }
    // same entry, weight fixed by the involution: no merge
    {
        const auto& e = catalog_entry(LieType::E6, "Z2xZ3^3");
        BrauerReport r = brauer_report(e, Hom::identity(e.universal), fund(LieType::E6, 3));
        CHECK(r.orbit.size() == 1);
        CHECK(r.h_lambda.is_trivial());
    }
}

TEST_CASE("module compatibility thresholds")
{
    const auto& e7 = catalog_entry(LieType::E7, "Z2^8");
    Hom id7 = Hom::identity(e7.universal);
    CHECK_FALSE(module_compatible(e7, id7, single(fund(LieType::E7, 1), 1)).compatible);
    CHECK(module_compatible(e7, id7, single(fund(LieType::E7, 1), 2)).compatible);
    CHECK(module_compatible(e7, id7, single(fund(LieType::E7, 2), 1)).compatible);

    const auto& e6 = catalog_entry(LieType::E6, "Z3^4");
    Hom id6 = Hom::identity(e6.universal);
    CHECK_FALSE(module_compatible(e6, id6, single(fund(LieType::E6, 1), 2)).compatible);
    CHECK(module_compatible(e6, id6, single(fund(LieType::E6, 1), 3)).compatible);

    // trivial entries accept anything
    const auto& cartan = catalog_entry(LieType::E7, "Z^7");
    CHECK(module_compatible(cartan, Hom::identity(cartan.universal),
                            single(fund(LieType::E7, 1), 1))
              .compatible);

    // outer: conjugate multiplicities must match
    const auto& outer = catalog_entry(LieType::E6, "Z2xZ3^3");
    Hom ido = Hom::identity(outer.universal);
    CHECK_FALSE(module_compatible(outer, ido, single(fund(LieType::E6, 1), 1)).compatible);
    ModuleSpec pair;
    pair.summands.emplace_back(fund(LieType::E6, 1), Int(2));
    pair.summands.emplace_back(fund(LieType::E6, 5), Int(2));
    CHECK(module_compatible(outer, ido, pair).compatible);

    CHECK_THROWS_AS(module_compatible(e7, id7, single(fund(LieType::E7, 1), 0)), Error);
}

TEST_CASE("graded simple descriptions")
{
    const auto& e6 = catalog_entry(LieType::E6, "Z3^4");
    GradedSimpleDescription d =
        graded_simple_description(e6, Hom::zero(e6.universal, AbelianGroup::trivial()),
                                  fund(LieType::E6, 1));
    CHECK(d.schur_index == 1);
    CHECK(d.total_dim == 27);

    d = graded_simple_description(e6, Hom::identity(e6.universal), fund(LieType::E6, 1));
    CHECK(d.schur_index == 3);
    CHECK(d.total_dim == 81);

    const auto& outer = catalog_entry(LieType::E6, "Z2xZ3^3");
    d = graded_simple_description(outer, Hom::identity(outer.universal), fund(LieType::E6, 1));
    CHECK(d.summands.size() == 2);
    CHECK(d.total_dim == 54);
}

TEST_CASE("error paths")
{
    const auto& e7 = catalog_entry(LieType::E7, "Z2^8");
    // wrong weight arity
    CHECK_THROWS_AS(brauer_report(e7, Hom::identity(e7.universal), fund(LieType::E6, 1)),
                    ArityError);
    // nu on the wrong domain
    const auto& e6 = catalog_entry(LieType::E6, "Z3^4");
    CHECK_THROWS_AS(brauer_report(e7, Hom::identity(e6.universal), fund(LieType::E7, 1)),
                    ArityError);
    // negative weight coefficient
    Weight neg(7, Int(0));
    neg[0] = -1;
    CHECK_THROWS_AS(brauer_report(e7, Hom::identity(e7.universal), neg), Error);
}

TEST_CASE("non-injective coarsenings lift the constraints")
{
    const auto& e6 = catalog_entry(LieType::E6, "Z3^4");
    IntMat m = IntMat::identity(4);
    m.at(0, 0) = 0;  // crush the first generator of T
    Hom nu(e6.universal, e6.universal, std::move(m));
    BrauerReport r = brauer_report(e6, nu, fund(LieType::E6, 1));
    CHECK(r.schur_index == 1);
    CHECK(module_compatible(e6, nu, single(fund(LieType::E6, 1), 1)).compatible);
}

TEST_CASE("convention-sensitive verdicts are flagged")
{
    const auto& brown = catalog_entry(LieType::E7, "Z2xZ4^3");
    // kill the second coordinate (where h lives) but keep the third
    IntMat m(4, 4);
    m.at(0, 0) = 1;
    m.at(2, 2) = 1;
    m.at(3, 3) = 1;
    Hom nu(brown.universal, brown.universal, std::move(m));
    BrauerReport r = brauer_report(brown, nu, fund(LieType::E7, 1));
    CHECK(r.schur_index == 1);  // h crushed, T not injective
    bool flagged = false;
    for (const std::string& note : r.notes)
        if (note.find("convention") != std::string::npos)
            flagged = true;
    CHECK(flagged);

    // identity keeps every candidate: no flag
    BrauerReport rid = brauer_report(brown, Hom::identity(brown.universal), fund(LieType::E7, 1));
    for (const std::string& note : rid.notes)
        CHECK(note.find("convention") == std::string::npos);
    CHECK(rid.schur_index == 2);
}

TEST_CASE("index divides the graded-simple dimension everywhere")
{
    for (LieType t : {LieType::E6, LieType::E7}) {
        const RootSystem& rs = RootSystem::get(t);
        for (const auto& e : catalog(t)) {
            Hom id = Hom::identity(e.universal);
            for (int i = 1; i <= rs.rank(); ++i) {
                BrauerReport r = brauer_report(e, id, fund(t, i));
                Int wd = rs.weyl_dim(fund(t, i));
                CHECK(r.graded_simple_dim % wd == 0);
                CHECK((r.graded_simple_dim / wd) % r.schur_index == 0);
                CHECK(r.schur_index * r.schur_index == r.support.order());
                // support lies inside the image of the p-torsion
                Int p = rs.class_modulus();
                for (const Elt& g : r.support.generators()) {
                    Int o = r.quotient.order_of(g);
                    CHECK((o == 1 || o == p));
                }
            }
        }
    }
}

TEST_CASE("class powers behind the congruences")
{
    // the decision layer's congruence arithmetic matches bicharacter powers
    for (int p : {2, 3}) {
        Bichar b = Bichar::hyperbolic(p);
        for (int m = 0; m < 2 * p; ++m)
            CHECK(is_nondegenerate(b.power(m)) == (m % p != 0));
    }
}
