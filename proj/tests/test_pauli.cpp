#include "liegrade/pauli.hpp"

#include <doctest.h>

using namespace liegrade;

TEST_CASE("size-2 pair is the classical one")
{
    PauliPair p = pauli_pair(2);
    CHECK(p.x.at(0, 0) == Cyc(-1));
    CHECK(p.x.at(1, 1) == Cyc(1));
    CHECK(p.x.at(0, 1).is_zero());
    CHECK(p.y.at(0, 1) == Cyc(1));
    CHECK(p.y.at(1, 0) == Cyc(1));
    CHECK(p.y.at(0, 0).is_zero());
    CHECK(p.epsilon == Cyc(-1));
}

TEST_CASE("defining relations")
{
    for (int ell : {2, 3, 4}) {
        PauliPair p = pauli_pair(ell);
        Mat<Cyc> xp = Mat<Cyc>::identity(ell), yp = Mat<Cyc>::identity(ell);
        for (int k = 0; k < ell; ++k) {
            xp = xp * p.x;
            yp = yp * p.y;
        }
        CHECK(xp == Mat<Cyc>::identity(ell));
        CHECK(yp == Mat<Cyc>::identity(ell));
        // X Y = eps Y X by direct multiplication
        Mat<Cyc> lhs = p.x * p.y;
        Mat<Cyc> rhs = p.y * p.x;
        for (int r = 0; r < ell; ++r)
            for (int c = 0; c < ell; ++c)
                CHECK(lhs.at(r, c) == p.epsilon * rhs.at(r, c));
    }
    CHECK_THROWS_AS(pauli_pair(5), Error);
    CHECK_THROWS_AS(pauli_pair(1), Error);
}

TEST_CASE("commutation scalars match the closed form")
{
    for (int ell : {2, 3, 4}) {
        PauliAlgebra alg(ell);
        // the constructor of the bicharacter brute-forces all l^4 pairs
        Bichar b = alg.commutation_bicharacter();
        CHECK(is_nondegenerate(b));
        CHECK(brauer_class(b).degree == ell);
        CHECK(alg.cocycle_identity_holds());
        CHECK(alg.monomials_span());
    }
}

TEST_CASE("specific commutation values")
{
    PauliAlgebra alg(3);
    Cyc w = Cyc::root_of_unity(3, 1);
    // the generators a = (1,0), b = (0,1) pair to the primitive root
    CHECK(alg.commutation_scalar(1, 0, 0, 1) == w);
    CHECK(alg.commutation_scalar(0, 1, 1, 0) == w * w);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(alg.commutation_scalar(i, j, i, j).is_one());
}
