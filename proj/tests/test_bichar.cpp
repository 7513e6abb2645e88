#include "liegrade/bichar.hpp"

#include <doctest.h>

using namespace liegrade;

namespace {

Elt el(std::vector<long> v)
{
    return Elt(v.begin(), v.end());
}

// radical by exhausting the pairing, for cross-checks
Subgroup radical_bruteforce(const Bichar& b)
{
    const AbelianGroup& g = b.group();
    std::vector<Elt> rad;
    for (const Elt& x : g.elements()) {
        bool in = true;
        for (const Elt& y : g.elements())
            if (b.pairing_exponent(x, y) != 0) {
                in = false;
                break;
            }
        if (in)
            rad.push_back(x);
    }
    return Subgroup(g, std::move(rad));
}

}  // namespace

TEST_CASE("radical")
{
    Bichar triv = Bichar::trivial(AbelianGroup(0, {2, 6}));
    CHECK(radical(triv).order() == 12);

    Bichar pauli3 = Bichar::hyperbolic(3);
    CHECK(radical(pauli3).is_trivial());
    CHECK(radical_bruteforce(pauli3).is_trivial());

    // hyperbolic Z2^2 plane plus a trivial Z2
    Bichar sum = Bichar::hyperbolic(2).oplus(Bichar::trivial(AbelianGroup::cyclic(2)));
    Subgroup rad = radical(sum);
    CHECK(rad.order() == 2);
    CHECK(rad.contains(el({0, 0, 1})));
    CHECK(rad.same_subgroup(radical_bruteforce(sum)));
}

TEST_CASE("brauer class")
{
    BrauerClass c = brauer_class(Bichar::trivial(AbelianGroup(0, {2, 2})));
    CHECK(c.degree == 1);
    CHECK(c.support.is_trivial());

    c = brauer_class(Bichar::hyperbolic(3));
    CHECK(c.degree == 3);
    CHECK(c.support.order() == 9);
    CHECK(is_nondegenerate(c.beta_on_support));

    c = brauer_class(Bichar::hyperbolic(2));
    CHECK(c.degree == 2);

    // sum with a radical factor: support excludes the radical
    Bichar sum = Bichar::hyperbolic(2).oplus(Bichar::trivial(AbelianGroup::cyclic(4)));
    c = brauer_class(sum);
    CHECK(c.degree == 2);
    CHECK(c.support.order() == 4);
    CHECK_FALSE(c.support.contains(el({0, 0, 1})));
}

TEST_CASE("radical and support decompose the group")
{
    for (Bichar b : {Bichar::hyperbolic(2).oplus(Bichar::trivial(AbelianGroup::cyclic(4))),
                     Bichar::hyperbolic(3).oplus(Bichar::trivial(AbelianGroup(0, {3, 3}))),
                     Bichar::hyperbolic(4),
                     Bichar::trivial(AbelianGroup(0, {2, 6}))}) {
        Subgroup rad = radical(b);
        BrauerClass c = brauer_class(b);
        CHECK(rad.intersect(c.support).is_trivial());
        CHECK(rad.order() * c.support.order() == b.group().order());
        CHECK(rad.join(c.support).order() == b.group().order());
        CHECK(c.degree * c.degree == c.support.order());
        // the two factors pair trivially with each other
        for (const Elt& r : rad.generators())
            for (const Elt& t : c.support.generators())
                CHECK(b.pairing_exponent(r, t) == 0);
    }
}

TEST_CASE("powers")
{
    Bichar p3 = Bichar::hyperbolic(3);
    CHECK(p3.power(0).is_trivial());
    CHECK(Bichar::hyperbolic(2).power(2).is_trivial());

    Bichar sq = p3.power(2);
    CHECK(is_nondegenerate(sq));
    // the square equals the inverse pairing, exhaustively over all 81 pairs
    for (const Elt& x : p3.group().elements())
        for (const Elt& y : p3.group().elements()) {
            CHECK(sq.pairing_exponent(x, y) ==
                  mod_floor(-p3.pairing_exponent(x, y), p3.value_order()));
            CHECK(mod_floor(p3.power(2).pairing_exponent(x, y) +
                                p3.power(-2).pairing_exponent(x, y),
                            p3.value_order()) == 0);
        }
}

TEST_CASE("isotropy")
{
    AbelianGroup g = AbelianGroup::elementary(3, 2);
    Bichar triv = Bichar::trivial(g);
    Bichar p3 = Bichar::hyperbolic(3);
    Subgroup a(g, {el({1, 0})});
    CHECK(is_isotropic(triv, Subgroup::full(g)));
    CHECK(is_isotropic(p3, a));
    CHECK_FALSE(is_isotropic(p3, Subgroup::full(g)));
}

TEST_CASE("alternating holds on every element")
{
    for (Bichar b : {Bichar::hyperbolic(2), Bichar::hyperbolic(3), Bichar::hyperbolic(4),
                     Bichar::hyperbolic(2).oplus(Bichar::hyperbolic(3))})
        for (const Elt& x : b.group().elements())
            CHECK(b.pairing_exponent(x, x) == 0);
}

TEST_CASE("values as field elements")
{
    Bichar p3 = Bichar::hyperbolic(3);
    Cyc w = Cyc::root_of_unity(3, 1);
    CHECK(p3.pairing(el({1, 0}), el({0, 1})) == w);
    CHECK(p3.pairing(el({0, 1}), el({1, 0})) == w * w);
}

TEST_CASE("restriction")
{
    Bichar p3 = Bichar::hyperbolic(3);
    Bichar r = p3.restrict_to(Subgroup(p3.group(), {el({1, 0})}));
    CHECK(r.group().order() == 3);
    CHECK(r.is_trivial());
}

TEST_CASE("malformed exponent matrices are rejected")
{
    AbelianGroup g = AbelianGroup::elementary(3, 2);
    IntMat notskew(2, 2);
    notskew.at(0, 1) = 1;
    notskew.at(1, 0) = 1;
    CHECK_THROWS_AS(Bichar(g, notskew), Error);

    IntMat diag(2, 2);
    diag.at(0, 0) = 1;
    CHECK_THROWS_AS(Bichar(g, diag), Error);

    // value order exceeding a generator order
    AbelianGroup mixed(0, {2, 4});
    IntMat bad(2, 2);
    bad.at(0, 1) = 1;  // beta(g1, g2) = zeta_4, but g1 has order 2
    bad.at(1, 0) = 3;
    CHECK_THROWS_AS(Bichar(mixed, bad), Error);

    // infinite groups are not allowed
    CHECK_THROWS_AS(Bichar::trivial(AbelianGroup(1, {2})), Error);
}
