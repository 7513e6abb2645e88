// pauli.hpp — generalized Pauli matrices and the associated grading of the
// l x l matrix algebra by Z_l^2, with its commutation bicharacter.
#pragma once

#include "liegrade/bichar.hpp"
#include "liegrade/linalg.hpp"

namespace liegrade {

// X = diag(eps^{l-1}, ..., eps, 1), Y the cyclic shift; X^l = Y^l = I and
// X Y = eps Y X. Only l in {2, 3, 4} is supported (the fixed cyclotomic
// field has no higher-order roots that the constructions need).
struct PauliPair {
    Mat<Cyc> x, y;
    Cyc epsilon;
};
PauliPair pauli_pair(int ell);

// The graded matrix algebra: monomial X^i Y^j sits in degree (i, j) of Z_l^2.
class PauliAlgebra {
public:
    explicit PauliAlgebra(int ell);

    int ell() const { return ell_; }
    const Cyc& epsilon() const { return eps_; }
    const AbelianGroup& degree_group() const { return grp_; }
    const Mat<Cyc>& monomial(int i, int j) const;

    // Scalar s with A B = s B A for homogeneous A = X^i Y^j, B = X^{i'} Y^{j'};
    // computed by brute-force matrix arithmetic, not from the closed form.
    Cyc commutation_scalar(int i, int j, int ip, int jp) const;

    // The commutation bicharacter as an exponent matrix on Z_l^2; verifies
    // the brute-force table against eps^(i j' - i' j) for every pair first.
    Bichar commutation_bicharacter() const;

    // X^i Y^j * X^{i'} Y^{j'} = eps^{-i' j} X^{i+i'} Y^{j+j'}, exhaustively.
    bool cocycle_identity_holds() const;

    // the l^2 monomials are linearly independent (hence span M_l)
    bool monomials_span() const;

private:
    int ell_;
    Cyc eps_;
    AbelianGroup grp_;
    std::vector<Mat<Cyc>> monomials_;  // index i*ell + j
};

}  // namespace liegrade
