#include "liegrade/roots_weights.hpp"

#include <doctest.h>

#include <random>

using namespace liegrade;

namespace {

Weight wt(std::vector<long> v)
{
    return Weight(v.begin(), v.end());
}

Weight fund(LieType t, int i)
{
    Weight w(static_cast<size_t>(type_rank(t)), Int(0));
    w[static_cast<size_t>(i - 1)] = 1;
    return w;
}

}  // namespace

TEST_CASE("positive root counts")
{
    CHECK(RootSystem::get(LieType::E6).positive_roots().size() == 36);
    CHECK(RootSystem::get(LieType::E7).positive_roots().size() == 63);
    CHECK(RootSystem::get(LieType::C4).positive_roots().size() == 16);
}

TEST_CASE("Weyl dimensions")
{
    const RootSystem& e6 = RootSystem::get(LieType::E6);
    const RootSystem& e7 = RootSystem::get(LieType::E7);
    const RootSystem& c4 = RootSystem::get(LieType::C4);

    CHECK(e6.weyl_dim(wt({0, 0, 0, 0, 0, 0})) == 1);
    CHECK(e6.weyl_dim(fund(LieType::E6, 1)) == 27);
    CHECK(e6.weyl_dim(fund(LieType::E6, 5)) == 27);
    CHECK(e6.weyl_dim(fund(LieType::E6, 2)) == 351);
    CHECK(e6.weyl_dim(fund(LieType::E6, 4)) == 351);
    CHECK(e6.weyl_dim(fund(LieType::E6, 3)) == 2925);

    CHECK(e7.weyl_dim(fund(LieType::E7, 1)) == 56);
    CHECK(e7.weyl_dim(fund(LieType::E7, 7)) == 912);
    CHECK(e7.weyl_dim(fund(LieType::E7, 2)) == 1539);

    // the adjoint module: dimension = 2 * #positive roots + rank, and its
    // highest weight is the fundamental weight at the branch-adjacent node
    CHECK(e6.weyl_dim(fund(LieType::E6, 6)) == 2 * 36 + 6);
    CHECK(e7.weyl_dim(fund(LieType::E7, 6)) == 2 * 63 + 7);

    CHECK(c4.weyl_dim(wt({2, 0, 0, 0})) == 36);
    CHECK(c4.weyl_dim(wt({0, 1, 0, 0})) == 27);
    CHECK(c4.weyl_dim(wt({0, 0, 0, 1})) == 42);
    CHECK(c4.weyl_dim(wt({1, 0, 0, 0})) == 8);

    CHECK_THROWS_AS(e6.weyl_dim(wt({-1, 0, 0, 0, 0, 0})), Error);
    CHECK_THROWS_AS(e6.weyl_dim(wt({1, 0})), ArityError);
}

TEST_CASE("diagram involution")
{
    Weight pi3 = fund(LieType::E6, 3);
    CHECK(e6_diagram_involution(pi3) == pi3);
    CHECK(e6_diagram_involution(fund(LieType::E6, 1)) == fund(LieType::E6, 5));
    Weight w = wt({3, 1, 4, 1, 5, 2});
    CHECK(e6_diagram_involution(e6_diagram_involution(w)) == w);

    // dimensions are symmetric under the involution, exhaustively for
    // coefficient sum <= 3
    const RootSystem& e6 = RootSystem::get(LieType::E6);
    for (int m1 = 0; m1 <= 3; ++m1)
        for (int m2 = 0; m1 + m2 <= 3; ++m2)
            for (int m3 = 0; m1 + m2 + m3 <= 3; ++m3)
                for (int m4 = 0; m1 + m2 + m3 + m4 <= 3; ++m4)
                    for (int m5 = 0; m1 + m2 + m3 + m4 + m5 <= 3; ++m5)
                        for (int m6 = 0; m1 + m2 + m3 + m4 + m5 + m6 <= 3; ++m6) {
                            Weight w2 = wt({m1, m2, m3, m4, m5, m6});
                            CHECK(e6.weyl_dim(w2) == e6.weyl_dim(e6_diagram_involution(w2)));
                        }
}

TEST_CASE("center classes")
{
    const RootSystem& e6 = RootSystem::get(LieType::E6);
    const RootSystem& e7 = RootSystem::get(LieType::E7);

    CHECK(e6.center_class(fund(LieType::E6, 3)) == 0);
    CHECK(e6.center_class(fund(LieType::E6, 6)) == 0);
    CHECK(e6.center_class(fund(LieType::E6, 1)) == 1);
    CHECK(e6.center_class(fund(LieType::E6, 2)) == 2);
    CHECK(e7.center_class(fund(LieType::E7, 1)) == 1);
    CHECK(e7.center_class(fund(LieType::E7, 2)) == 0);
    CHECK(e7.center_class(fund(LieType::E7, 7)) == 1);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coeff(0, 9);
    for (LieType t : {LieType::E6, LieType::E7}) {
        const RootSystem& rs = RootSystem::get(t);
        for (int trial = 0; trial < 60; ++trial) {
            Weight w;
            for (int i = 0; i < rs.rank(); ++i)
                w.push_back(coeff(rng));
            CHECK(rs.center_class(w) == rs.center_class_by_lattice(w));
        }
    }
}

TEST_CASE("bourbaki translation")
{
    // E6: our node 2 is Bourbaki node 3, our branch node 6 is Bourbaki 2
    CHECK(to_bourbaki(LieType::E6, fund(LieType::E6, 1)) == fund(LieType::E6, 1));
    CHECK(to_bourbaki(LieType::E6, fund(LieType::E6, 2)) == fund(LieType::E6, 3));
    CHECK(to_bourbaki(LieType::E6, fund(LieType::E6, 6)) == fund(LieType::E6, 2));
    // E7: our 56-dimensional node 1 is Bourbaki node 7
    CHECK(to_bourbaki(LieType::E7, fund(LieType::E7, 1)) == fund(LieType::E7, 7));
    CHECK(to_bourbaki(LieType::E7, fund(LieType::E7, 6)) == fund(LieType::E7, 1));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coeff(0, 9);
    for (LieType t : {LieType::E6, LieType::E7}) {
        for (int trial = 0; trial < 20; ++trial) {
            Weight w;
            for (int i = 0; i < type_rank(t); ++i)
                w.push_back(coeff(rng));
            CHECK(from_bourbaki(t, to_bourbaki(t, w)) == w);
        }
    }
}
