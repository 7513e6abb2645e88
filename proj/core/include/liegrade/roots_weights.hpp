// roots_weights.hpp — root systems for E6, E7 and C4, the Weyl dimension
// formula, weight-lattice class congruences, and the E6 diagram involution.
//
// Node numbering: E6 is the chain a1-a2-a3-a4-a5 with a6 attached to a3;
// E7 is the chain a1-...-a6 with a7 attached to a4. This is not the Bourbaki
// numbering; the translation is available via to_bourbaki/from_bourbaki and
// documented in the README.
#pragma once

#include "liegrade/intmat.hpp"

#include <string>
#include <vector>

namespace liegrade {

enum class LieType { E6, E7, C4 };

std::string type_name(LieType t);
int type_rank(LieType t);

// Dominant weight in fundamental-weight coordinates m_1..m_n (all >= 0).
using Weight = std::vector<Int>;

class RootSystem {
public:
    explicit RootSystem(LieType t);

    static const RootSystem& get(LieType t);  // cached instances

    LieType type() const { return type_; }
    int rank() const { return rank_; }
    const IntMat& cartan_matrix() const { return cartan_; }

    // positive roots as integer coefficient vectors over the simple roots
    const std::vector<std::vector<Int>>& positive_roots() const { return pos_roots_; }
    // matching coroots in the simple-coroot basis
    const std::vector<std::vector<Int>>& positive_coroots() const { return pos_coroots_; }

    // Weyl dimension of the irreducible module with highest weight lambda.
    // Throws ArityError on wrong length, Error on negative coefficients.
    Int weyl_dim(const Weight& lambda) const;

    // Class of lambda in (weight lattice)/(root lattice): residue mod 3 for
    // E6, mod 2 for E7. Accepts arbitrary integer coefficient vectors.
    Int center_class(const Weight& lambda) const;

    // Independent route to the same class: the least c >= 0 with
    // lambda - c*pi_1 in the root lattice (exact integer solve).
    Int center_class_by_lattice(const Weight& lambda) const;

    Int class_modulus() const;  // 3 for E6, 2 for E7

    void check_weight_arity(const Weight& lambda) const;

private:
    LieType type_;
    int rank_;
    IntMat cartan_;  // a[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)
    std::vector<Int> d_;  // half square lengths (1 for short/simply-laced)
    std::vector<std::vector<Int>> pos_roots_;
    std::vector<std::vector<Int>> pos_coroots_;

    void generate_roots();
};

// (m1,...,m6) -> (m5,m4,m3,m2,m1,m6); the unique nontrivial symmetry of the
// E6 diagram in this numbering.
Weight e6_diagram_involution(const Weight& lambda);

// Translation between this library's node numbering and Bourbaki's.
Weight to_bourbaki(LieType t, const Weight& lambda);
Weight from_bourbaki(LieType t, const Weight& lambda);

}  // namespace liegrade
