// e7_model.hpp — the simple Lie algebra of type E7 realized as
// sl(V) + wedge^4(V) for an 8-dimensional V, together with its distinguished
// automorphisms sigma, tau, the SL(V)-action Phi, the symplectic contraction
// maps, and the rank-2 quasitorus generators living over a tensor split of V.
//
// Basis order (133 = 63 + 70):
//   0..55    E_ab for a != b (0-based, row-major over ordered pairs)
//   56..62   H_i = E_ii - E_{i+1,i+1}
//   63..132  basic wedges e_S, S a 4-subset of {0..7} in lexicographic order
// The symplectic basis is e_0..e_3 = x_1..x_4, e_4..e_7 = y_1..y_4 with
// b(x_i, y_j) = delta_ij, and Omega is normalized by
// Omega(x_1^x_2^x_3^x_4, y_1^y_2^y_3^y_4) = 1.
// The tensor split used for the quasitorus identifies e_{2a+c} with
// v_a (x) w_c (a in 0..3, c in 0..1).
#pragma once

#include "liegrade/lie_core.hpp"

#include <array>
#include <memory>

namespace liegrade {

class E7Model {
public:
    static constexpr int kDim = 133;
    static constexpr int kSlDim = 63;
    static constexpr int kWedges = 70;

    E7Model();

    const LieAlgebra& algebra() const { return *lie_; }

    static int e_index(int a, int b);  // a != b in 0..7
    static int h_index(int i);         // i in 0..6
    int wedge_index(std::array<int, 4> set) const;  // absolute index (63-based)
    const std::array<int, 4>& wedge_set(int k) const { return wedge_sets_[static_cast<size_t>(k)]; }

    // symplectic form on basis vectors
    static int b_form(int i, int j);
    // Omega(e_S, e_T) for wedge positions s, t in 0..69 (0 unless T = comp(S))
    int omega_sign(int s, int t) const;

    const AutMap& sigma() const { return sigma_; }
    const AutMap& tau() const { return tau_; }

    // Phi(f) for f in SL(V): conjugation on sl(V), exterior 4th power on the
    // wedge block; throws unless det f = 1 exactly.
    AutMap phi(const Mat<Cyc>& f, std::optional<long> declared_order = std::nullopt) const;

    // partial contraction wedge^4 V -> wedge^2 V (28 x 70)
    const Mat<Cyc>& contraction() const { return contr_; }
    // full contraction values on basic wedges
    const std::vector<Cyc>& full_contraction() const { return bhat_; }
    // invariant wedge element representing the full contraction via Omega
    const SVec& b_tilde() const { return btilde_; }

    // simultaneous (sigma, tau) eigencomponents for signs (+,+), (+,-),
    // (-,+), (-,-); dimensions (36, 27, 43, 27)
    std::array<Subalgebra, 4> z22_components() const;

    struct Z42Gens {
        Mat<Cyc> x1, y1, x2, y2, eps_id;  // 8x8 determinant-1 operators
    };
    Z42Gens z42_generators() const;

    // Phi-images of the five quasitorus operators together with their
    // pairwise strong-commutation table (symmetric, true on the diagonal).
    struct Z42Table {
        std::vector<AutMap> generators;  // 5 entries
        std::array<std::array<bool, 5>, 5> strongly_commutes{};
    };
    Z42Table z42_strong_commutation(std::uint64_t seed = kDefaultSeed) const;

    static Mat<Cyc> tensor_op(const Mat<Cyc>& a4, const Mat<Cyc>& b2);
    // I_4 (x) diag(t, 1/t) for a nonzero field element t
    static Mat<Cyc> torus_op(const Cyc& t);

    // symplectic adjoint f* with b(f v, w) = b(v, f* w)
    static Mat<Cyc> symplectic_adjoint(const Mat<Cyc>& f);

    // the wedge-block action of f in GL(V) (4th exterior power), 70 x 70
    Mat<Cyc> wedge_power(const Mat<Cyc>& f) const;

    // sl(V) element (8x8 traceless) -> coordinates in the 63-dim sl block
    std::vector<Cyc> sl_coords(const Mat<Cyc>& m) const;

private:
    std::vector<std::array<int, 4>> wedge_sets_;
    std::array<int, 256> mask_to_wedge_{};
    std::unique_ptr<LieAlgebra> lie_;
    AutMap sigma_, tau_;
    Mat<Cyc> contr_;
    std::vector<Cyc> bhat_;
    SVec btilde_;

    Mat<Cyc> basis_matrix(int k) const;  // 8x8 matrix of sl basis element k
    void build_algebra();
    void build_tau();
    void build_contractions();
};

}  // namespace liegrade
