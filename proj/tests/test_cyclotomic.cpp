#include "liegrade/cyclotomic.hpp"

#include <doctest.h>

#include <random>

using namespace liegrade;

namespace {

Cyc random_small(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    std::array<Rat, Cyc::kDegree> c;
    for (auto& r : c)
        r = Rat(num(rng), den(rng));
    return Cyc::from_coords(c);
}

}  // namespace

TEST_CASE("roots of unity")
{
    CHECK(Cyc::root_of_unity(1, 0).is_one());
    Cyc i = Cyc::root_of_unity(4, 1);
    CHECK(i * i == Cyc(-1));
    Cyc w = Cyc::root_of_unity(3, 1);
    CHECK((Cyc(1) + w + w * w).is_zero());
    Cyc eps8 = Cyc::root_of_unity(8, 1);
    CHECK(eps8.pow(8).is_one());
    CHECK_FALSE(eps8.pow(4).is_one());
    CHECK_THROWS_AS(Cyc::root_of_unity(5, 1), Error);
    CHECK_THROWS_AS(Cyc::root_of_unity(48, 1), Error);

    // zeta^24 = 1 and no smaller power is 1
    for (int k = 1; k < 24; ++k)
        CHECK_FALSE(Cyc::zeta_pow(1).pow(k).is_one());
    CHECK(Cyc::zeta_pow(1).pow(24).is_one());
}

TEST_CASE("reduction by the conductor-24 minimal polynomial")
{
    // z^8 = z^4 - 1
    Cyc z8 = Cyc::zeta_pow(8);
    std::array<Rat, 8> expect{};
    expect[0] = -1;
    expect[4] = 1;
    CHECK(z8 == Cyc::from_coords(expect));
    // z^12 = -1
    CHECK(Cyc::zeta_pow(12) == Cyc(-1));
    CHECK(Cyc::zeta_pow(12) * Cyc::zeta_pow(12) == Cyc(1));
}

TEST_CASE("division and inverses")
{
    for (int k = 1; k < 24; ++k) {
        Cyc q = Cyc(1) / Cyc::zeta_pow(k);
        CHECK(q == Cyc::zeta_pow(24 - k));
    }
    CHECK_THROWS_AS(Cyc(1) / Cyc(0), Error);

    std::mt19937_64 rng(7);
    int tested = 0;
    while (tested < 40) {
        Cyc a = random_small(rng);
        if (a.is_zero())
            continue;
        CHECK(a * a.inverse() == Cyc(1));
        ++tested;
    }
}

TEST_CASE("field axioms on random elements")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        Cyc a = random_small(rng), b = random_small(rng), c = random_small(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * Cyc(1) == a);
    }
}

TEST_CASE("inverse roots multiply to one")
{
    for (int n : {1, 2, 3, 4, 6, 8, 12, 24})
        for (int k = 0; k < n; ++k)
            CHECK((Cyc::root_of_unity(n, k) * Cyc::root_of_unity(n, n - k)).is_one());
}

TEST_CASE("coordinate serialization round-trips")
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        Cyc a = random_small(rng);
        CHECK(Cyc::from_coord_strings(a.coord_strings()) == a);
    }
    CHECK_THROWS_AS(Cyc::from_coord_strings({"1", "2"}), Error);
}

TEST_CASE("printing")
{
    CHECK(Cyc(0).to_string() == "0");
    CHECK(Cyc::zeta_pow(8).to_string() == "-1 + z^4");
    CHECK(Cyc(Rat(1, 2)).to_string() == "1/2");
}
