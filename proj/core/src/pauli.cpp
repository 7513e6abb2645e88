#include "liegrade/pauli.hpp"

namespace liegrade {

PauliPair pauli_pair(int ell)
{
    if (ell < 2 || ell > 4)
        throw Error("pauli_pair: only sizes 2, 3, 4 are supported");
    Cyc eps = Cyc::root_of_unity(ell, 1);
    Mat<Cyc> x(ell, ell), y(ell, ell);
    for (int i = 0; i < ell; ++i) {
        x.at(i, i) = eps.pow(ell - 1 - i);
        y.at(i, (i + 1) % ell) = Cyc(1);
    }
    return {std::move(x), std::move(y), std::move(eps)};
}

PauliAlgebra::PauliAlgebra(int ell)
    : ell_(ell), grp_(AbelianGroup::elementary(Int(ell), 2))
{
    PauliPair p = pauli_pair(ell);
    eps_ = p.epsilon;
    monomials_.reserve(static_cast<size_t>(ell) * static_cast<size_t>(ell));
    Mat<Cyc> xi = Mat<Cyc>::identity(ell);
    for (int i = 0; i < ell; ++i) {
        Mat<Cyc> m = xi;
        for (int j = 0; j < ell; ++j) {
            monomials_.push_back(m);
            m = m * p.y;
        }
        xi = xi * p.x;
    }
}

const Mat<Cyc>& PauliAlgebra::monomial(int i, int j) const
{
    int im = ((i % ell_) + ell_) % ell_;
    int jm = ((j % ell_) + ell_) % ell_;
    return monomials_[static_cast<size_t>(im * ell_ + jm)];
}

Cyc PauliAlgebra::commutation_scalar(int i, int j, int ip, int jp) const
{
    Mat<Cyc> ab = monomial(i, j) * monomial(ip, jp);
    Mat<Cyc> ba = monomial(ip, jp) * monomial(i, j);
    Cyc s;
    bool found = false;
    for (int r = 0; r < ell_ && !found; ++r)
        for (int c = 0; c < ell_ && !found; ++c)
            if (!ba.at(r, c).is_zero()) {
                s = ab.at(r, c) / ba.at(r, c);
                found = true;
            }
    if (!found)
        throw Error("commutation_scalar: zero product of monomials");
    for (int r = 0; r < ell_; ++r)
        for (int c = 0; c < ell_; ++c)
            if (ab.at(r, c) != s * ba.at(r, c))
                throw Error("monomials do not commute up to a scalar");
    return s;
}

Bichar PauliAlgebra::commutation_bicharacter() const
{
    for (int i = 0; i < ell_; ++i)
        for (int j = 0; j < ell_; ++j)
            for (int ip = 0; ip < ell_; ++ip)
                for (int jp = 0; jp < ell_; ++jp) {
                    Cyc expect = eps_.pow(i * jp - ip * j);
                    if (commutation_scalar(i, j, ip, jp) != expect)
                        throw Error("commutation table deviates from the closed form");
                }
    IntMat m(2, 2);
    m.at(0, 1) = 1;
    m.at(1, 0) = ell_ - 1;
    return Bichar(grp_, std::move(m));
}

bool PauliAlgebra::cocycle_identity_holds() const
{
    for (int i = 0; i < ell_; ++i)
        for (int j = 0; j < ell_; ++j)
            for (int ip = 0; ip < ell_; ++ip)
                for (int jp = 0; jp < ell_; ++jp) {
                    Mat<Cyc> lhs = monomial(i, j) * monomial(ip, jp);
                    const Mat<Cyc>& target = monomial(i + ip, j + jp);
                    Cyc f = eps_.pow(-ip * j);
                    for (int r = 0; r < ell_; ++r)
                        for (int c = 0; c < ell_; ++c)
                            if (lhs.at(r, c) != f * target.at(r, c))
                                return false;
                }
    return true;
}

bool PauliAlgebra::monomials_span() const
{
    int n2 = ell_ * ell_;
    Mat<Cyc> v(n2, n2);
    for (int k = 0; k < n2; ++k) {
        const Mat<Cyc>& m = monomials_[static_cast<size_t>(k)];
        for (int r = 0; r < ell_; ++r)
            for (int c = 0; c < ell_; ++c)
                v.at(k, r * ell_ + c) = m.at(r, c);
    }
    return rank(std::move(v)) == n2;
}

}  // namespace liegrade
