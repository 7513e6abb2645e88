// bichar.hpp — alternating bicharacters on finite abelian groups and the
// Brauer-class data they carry: radical, support, degree, powers.
//
// A bicharacter is stored as an integer exponent matrix M with
// beta(g_i, g_j) = zeta_N^{M_ij}, N the exponent of the group. Radical and
// powers then reduce to integer linear algebra; no value tables are kept.
#pragma once

#include "liegrade/abelian.hpp"
#include "liegrade/cyclotomic.hpp"

namespace liegrade {

class Bichar {
public:
    Bichar() = default;
    // group must be finite; M is n x n with beta(g_i,g_j) = zeta_N^{M_ij}.
    // Throws unless M is alternating (M_ii = 0, M_ij + M_ji = 0 mod N) and
    // well defined ((N/d_i) | M_ij and (N/d_j) | M_ij).
    Bichar(AbelianGroup group, IntMat exponents);

    static Bichar trivial(const AbelianGroup& g);

    // Standard hyperbolic plane on Z_l^2: beta(a, b) = zeta_l.
    static Bichar hyperbolic(const Int& ell);

    // Orthogonal direct sum.
    Bichar oplus(const Bichar& o) const;

    const AbelianGroup& group() const { return grp_; }
    const IntMat& exponents() const { return m_; }
    const Int& value_order() const { return n_; }

    // exponent e with beta(a, b) = zeta_N^e, reduced into [0, N)
    Int pairing_exponent(const Elt& a, const Elt& b) const;
    // the value as an element of the cyclotomic field; requires N | 24
    Cyc pairing(const Elt& a, const Elt& b) const;

    bool is_trivial() const;
    Bichar power(const Int& m) const;
    Bichar restrict_to(const Subgroup& s) const;

    bool operator==(const Bichar& o) const { return grp_ == o.grp_ && m_ == o.m_; }

private:
    AbelianGroup grp_;
    IntMat m_;
    Int n_ = 1;  // exponent of the group (order of the value group)
};

// { g : beta(g, h) = 1 for all h }
Subgroup radical(const Bichar& b);

bool is_isotropic(const Bichar& b, const Subgroup& s);
bool is_nondegenerate(const Bichar& b);

// Support T = perp(radical), the restriction of beta to T, and the degree
// sqrt(|T|). Throws Error if the restriction is degenerate or |T| is not a
// perfect square: both are impossible for inputs arising from an honest
// alternating form with rad ∩ perp(rad) = 1 and signal a malformed matrix.
struct BrauerClass {
    Subgroup support;
    Bichar beta_on_support;  // on the abstract group of the support
    Int degree;
};
BrauerClass brauer_class(const Bichar& b);

}  // namespace liegrade
