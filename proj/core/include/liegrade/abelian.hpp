// abelian.hpp — finitely generated abelian groups, homomorphisms, subgroups,
// quotients, torsion splitting and the perp calculus on finite groups.
//
// A group is a list of cyclic factors: free_rank copies of Z followed by
// torsion factors of the given orders. Element coordinates come in the same
// order, free coordinates first, torsion coordinates reduced into [0, d_i).
// Factor lists keep their presentation order (the catalog relies on fixed
// coordinates for its distinguished subgroups); groups computed from
// relation lattices always come out in invariant-factor form.
//
// The perp of a subgroup of a finite group is taken with respect to the
// fixed diagonal pairing <g, h> = prod_i zeta_{d_i}^{g_i h_i}, which
// identifies the group with its character group once and for all.
#pragma once

#include "liegrade/intmat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liegrade {

using Elt = std::vector<Int>;

class Subgroup;
class Hom;

class AbelianGroup {
public:
    AbelianGroup() = default;
    AbelianGroup(int free_rank, std::vector<Int> torsion_orders);

    static AbelianGroup trivial() { return AbelianGroup(0, {}); }
    static AbelianGroup free(int rank) { return AbelianGroup(rank, {}); }
    static AbelianGroup cyclic(const Int& d) { return AbelianGroup(0, {d}); }
    // k copies of Z_d
    static AbelianGroup elementary(const Int& d, int k);

    // direct product, this factors first
    AbelianGroup times(const AbelianGroup& o) const;

    int free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion_orders() const { return orders_; }
    int torsion_count() const { return static_cast<int>(orders_.size()); }
    int n() const { return free_rank_ + torsion_count(); }

    bool is_trivial() const { return n() == 0; }
    bool is_finite() const { return free_rank_ == 0; }
    // group order; 0 means infinite
    Int order() const;
    // exponent of the torsion part (lcm of the orders); 1 if torsion-free
    Int torsion_exponent() const;

    bool is_invariant_factor_form() const;

    bool operator==(const AbelianGroup& o) const
    {
        return free_rank_ == o.free_rank_ && orders_ == o.orders_;
    }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

    // order of the cyclic factor at coordinate i; 0 for a free coordinate
    Int coord_order(int i) const;

    Elt zero() const { return Elt(static_cast<size_t>(n())); }
    Elt gen(int i) const;
    Elt reduce(Elt x) const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt scale(const Int& k, const Elt& a) const;
    bool eq(const Elt& a, const Elt& b) const;
    bool is_zero(const Elt& a) const;
    // element order; 0 means infinite
    Int order_of(const Elt& a) const;

    // relation lattice d_i * e_i for the torsion coordinates, as columns
    IntMat relation_columns() const;

    // all elements of a finite group (throws if order exceeds the cap)
    std::vector<Elt> elements(const Int& cap = Int(100000)) const;

    // isomorphic group in invariant-factor form together with the
    // isomorphism from this group onto it
    std::pair<AbelianGroup, Hom> canonicalize() const;

    std::string to_string() const;  // e.g. "Z^2 x Z2 x Z4^2"

private:
    int free_rank_ = 0;
    std::vector<Int> orders_;
};

class Hom {
public:
    Hom() = default;
    // matrix has codomain.n() rows and domain.n() columns; throws Error if
    // some torsion generator's image has incompatible order
    Hom(AbelianGroup domain, AbelianGroup codomain, IntMat matrix);

    static Hom identity(const AbelianGroup& g);
    static Hom zero(const AbelianGroup& domain, const AbelianGroup& codomain);

    const AbelianGroup& domain() const { return dom_; }
    const AbelianGroup& codomain() const { return cod_; }
    const IntMat& matrix() const { return m_; }

    Elt apply(const Elt& x) const;
    Subgroup image() const;
    Subgroup kernel() const;
    bool is_injective_on(const Subgroup& s) const;

    // this after g
    Hom compose(const Hom& g) const;

private:
    AbelianGroup dom_, cod_;
    IntMat m_;
};

class Subgroup {
public:
    Subgroup() = default;
    Subgroup(AbelianGroup ambient, std::vector<Elt> generators);

    static Subgroup trivial(const AbelianGroup& ambient) { return Subgroup(ambient, {}); }
    static Subgroup full(const AbelianGroup& ambient);

    const AbelianGroup& ambient() const { return amb_; }
    const std::vector<Elt>& generators() const { return gens_; }

    bool contains(const Elt& x) const;
    bool contains(const Subgroup& o) const;
    bool same_subgroup(const Subgroup& o) const;
    bool is_trivial() const;

    // order of the subgroup; 0 means infinite
    Int order() const;

    // the subgroup as an abstract group (invariant-factor form) together
    // with independent generators realizing each cyclic factor
    struct Canon {
        AbelianGroup group;
        std::vector<Elt> gens;  // one per coordinate of `group`, free first
    };
    const Canon& canon() const;

    Subgroup intersect(const Subgroup& o) const;
    Subgroup join(const Subgroup& o) const;

    // columns spanning the preimage lattice in Z^n (generators + relations)
    const IntMat& lattice() const;

private:
    AbelianGroup amb_;
    std::vector<Elt> gens_;
    mutable std::optional<IntMat> lattice_;
    mutable std::optional<SmithDecomposition> lattice_snf_;
    mutable std::optional<Canon> canon_;

    const SmithDecomposition& lattice_snf() const;
};

// Annihilator of S under the fixed diagonal pairing; ambient must be finite.
// |S| * |perp(S)| = |G| and perp(perp(S)) = S.
Subgroup perp(const Subgroup& s);

// G = free part x p_part x complement: p_part collects the p-power torsion,
// complement the torsion of order coprime to p.
struct TorsionSplit {
    Subgroup p_part;
    Subgroup complement;
};
TorsionSplit torsion_split(const AbelianGroup& g, const Int& p);

// Quotient G / S in invariant-factor form with the projection hom.
struct QuotientResult {
    AbelianGroup group;
    Hom projection;
};
QuotientResult quotient(const AbelianGroup& g, const Subgroup& s);

}  // namespace liegrade
