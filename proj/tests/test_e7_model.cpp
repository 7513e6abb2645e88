#include "liegrade/e7_model.hpp"

#include <doctest.h>

using namespace liegrade;

namespace {

const E7Model& model()
{
    static const E7Model m;
    return m;
}

SVec unit(int i)
{
    return {{i, Cyc(1)}};
}

}  // namespace

TEST_CASE("construction shape")
{
    const E7Model& m = model();
    CHECK(m.algebra().dim() == 133);
    CHECK(m.algebra().label(E7Model::e_index(0, 1)) == "E(1,2)");
    CHECK(m.algebra().label(E7Model::h_index(0)) == "H1");
    CHECK(m.algebra().label(m.wedge_index({0, 1, 2, 3})) == "x1^x2^x3^x4");
    CHECK(m.algebra().label(m.wedge_index({4, 5, 6, 7})) == "y1^y2^y3^y4");
    CHECK(m.algebra().table_entries() > 0);
}

TEST_CASE("derivation action on a basic wedge")
{
    const E7Model& m = model();
    // E(1,2) replaces x2 by x1 in x2^x3^x4^y1
    SVec out = m.algebra().bracket(unit(E7Model::e_index(0, 1)), unit(m.wedge_index({1, 2, 3, 4})));
    REQUIRE(out.size() == 1);
    CHECK(out[0].first == m.wedge_index({0, 2, 3, 4}));
    CHECK(out[0].second == Cyc(1));
    // moving past one factor flips the sign: E(3,1) on x1^x2^x4^y1
    SVec out2 = m.algebra().bracket(unit(E7Model::e_index(2, 0)), unit(m.wedge_index({0, 1, 3, 4})));
    REQUIRE(out2.size() == 1);
    CHECK(out2[0].first == m.wedge_index({1, 2, 3, 4}));
    CHECK(out2[0].second == Cyc(-1));
}

TEST_CASE("top wedge bracket is the half-split diagonal")
{
    const E7Model& m = model();
    SVec w = m.algebra().bracket(unit(m.wedge_index({0, 1, 2, 3})), unit(m.wedge_index({4, 5, 6, 7})));
    std::vector<Rat> expect = {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(3, 2), Rat(1), Rat(1, 2)};
    REQUIRE(w.size() == 7);
    for (int i = 0; i < 7; ++i) {
        CHECK(w[static_cast<size_t>(i)].first == E7Model::h_index(i));
        CHECK(w[static_cast<size_t>(i)].second == Cyc(expect[static_cast<size_t>(i)]));
    }
}

TEST_CASE("sigma")
{
    const E7Model& m = model();
    CHECK(m.sigma().declared_order_holds());
    CHECK_FALSE(m.sigma().is_identity());
    Subalgebra fix = fixed_subalgebra(m.algebra(), {&m.sigma()});
    CHECK(fix.dimension() == 63);
}

TEST_CASE("tau on specific wedges")
{
    const E7Model& m = model();
    SVec top = unit(m.wedge_index({0, 1, 2, 3}));
    CHECK(m.tau().apply(top) == top);
    // x1^x2^y1^y2 -> x3^x4^y3^y4
    SVec out = m.tau().apply(unit(m.wedge_index({0, 1, 4, 5})));
    REQUIRE(out.size() == 1);
    CHECK(out[0].first == m.wedge_index({2, 3, 6, 7}));
    CHECK(out[0].second == Cyc(1));
    // order two
    CHECK(m.tau().compose(m.tau()).is_identity());
    CHECK(m.sigma().commutes_with(m.tau()));
}

TEST_CASE("contractions")
{
    const E7Model& m = model();
    // c kills the top wedge
    const Mat<Cyc>& c = m.contraction();
    int top = m.wedge_index({0, 1, 2, 3}) - E7Model::kSlDim;
    for (int r = 0; r < 28; ++r)
        CHECK(c.at(r, top).is_zero());
    // full contraction of x1^x2^y1^y2 is -1
    int s = m.wedge_index({0, 1, 4, 5}) - E7Model::kSlDim;
    CHECK(m.full_contraction()[static_cast<size_t>(s)] == Cyc(-1));
    // and of the top wedge is 0
    CHECK(m.full_contraction()[static_cast<size_t>(top)].is_zero());

    // b~ = -(sum of x_i ^ x_j ^ y_i ^ y_j)
    SVec bt = m.b_tilde();
    CHECK(bt.size() == 6);
    for (const auto& [idx, coeff] : bt)
        CHECK(coeff == Cyc(-1));
}

TEST_CASE("phi basics")
{
    const E7Model& m = model();
    CHECK(m.phi(Mat<Cyc>::identity(8)).is_identity());

    Mat<Cyc> i_id(8, 8);
    for (int k = 0; k < 8; ++k)
        i_id.at(k, k) = Cyc::root_of_unity(4, 1);
    CHECK(m.phi(i_id).is_identity());

    // eps I maps to sigma
    Mat<Cyc> eps_id(8, 8);
    for (int k = 0; k < 8; ++k)
        eps_id.at(k, k) = Cyc::root_of_unity(8, 1);
    CHECK(m.phi(eps_id).matrix() == m.sigma().matrix());

    // determinant must be exactly 1
    Mat<Cyc> bad = Mat<Cyc>::identity(8);
    bad.at(0, 0) = Cyc(2);
    CHECK_THROWS_AS(m.phi(bad), Error);
}

TEST_CASE("quasitorus generators are unimodular and of the right order")
{
    const E7Model& m = model();
    E7Model::Z42Gens g = m.z42_generators();
    for (const Mat<Cyc>* op : {&g.x1, &g.y1, &g.x2, &g.y2, &g.eps_id})
        CHECK(determinant(*op).is_one());
    AutMap p1 = m.phi(g.x1, 4);
    CHECK(p1.declared_order_holds());
    CHECK_FALSE(p1.compose(p1).is_identity());  // order exactly 4
    AutMap p3 = m.phi(g.x2, 2);
    CHECK(p3.declared_order_holds());
    CHECK_FALSE(p3.is_identity());
    // the torus direction stays in the kernel-free part: det 1 and diagonal
    Mat<Cyc> t = E7Model::torus_op(Cyc::zeta_pow(1));
    CHECK(determinant(t).is_one());
}

TEST_CASE("symplectic adjoint")
{
    // adjoint of E_15 (x1 -> b-pair with y1): check the defining identity on
    // a couple of basis vectors via the Gram matrix
    Mat<Cyc> f(8, 8);
    f.at(0, 4) = Cyc(1);
    Mat<Cyc> star = E7Model::symplectic_adjoint(f);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            // b(f e_i, e_j) = b(e_i, f* e_j)
            Cyc lhs, rhs;
            for (int k = 0; k < 8; ++k) {
                if (!f.at(k, i).is_zero())
                    lhs += f.at(k, i) * Cyc(E7Model::b_form(k, j));
                if (!star.at(k, j).is_zero())
                    rhs += Cyc(E7Model::b_form(i, k)) * star.at(k, j);
            }
            CHECK(lhs == rhs);
        }
}

TEST_CASE("nontorality of the order-2 pair")
{
    const E7Model& m = model();
    Subalgebra fst = fixed_subalgebra(m.algebra(), {&m.sigma(), &m.tau()});
    CHECK(fst.dimension() == 36);
    RankResult r = reductive_rank(m.algebra(), fst);
    CHECK(r.value == 4);
    CHECK(r.unanimous);
    // ties the catalog's nondegeneracy claim for the order-2 pair to the model
    CHECK_FALSE(strongly_commute(m.algebra(), m.sigma(), m.tau(), 7, kDefaultSeed));
}
