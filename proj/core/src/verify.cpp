#include "liegrade/verify.hpp"

#include "liegrade/bichar.hpp"
#include "liegrade/e7_model.hpp"
#include "liegrade/invariants.hpp"
#include "liegrade/pauli.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

namespace liegrade {

bool all_pass(const std::vector<Claim>& claims)
{
    for (const Claim& c : claims)
        if (!c.pass)
            return false;
    return true;
}

const Claim* first_failure(const std::vector<Claim>& claims)
{
    for (const Claim& c : claims)
        if (!c.pass)
            return &c;
    return nullptr;
}

namespace {

struct Suite {
    std::vector<Claim> claims;
    std::ostream* progress;

    void add(int criterion, const std::string& name, bool pass, const std::string& detail = "")
    {
        claims.push_back({name, pass, detail, criterion});
        if (progress)
            (*progress) << (pass ? "  ok    " : "  FAIL  ") << name
                        << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    }

    // runs a computation that either returns (pass, detail) or throws
    template <class F>
    void run(int criterion, const std::string& name, F&& f)
    {
        if (progress)
            (*progress) << "[claim] " << name << "\n";
        try {
            auto [pass, detail] = f();
            add(criterion, name, pass, detail);
        } catch (const std::exception& ex) {
            add(criterion, name, false, std::string("exception: ") + ex.what());
        }
    }
};

using Outcome = std::pair<bool, std::string>;

// ------------------------------------------------------------------ groups

Outcome snf_random(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        int m = dim(rng), n = dim(rng);
        IntMat a(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                a.at(i, j) = entry(rng);
        SmithDecomposition d = smith_normal_form(a);
        if (abs(d.u.det_small()) != 1 || abs(d.v.det_small()) != 1)
            return {false, "transform not unimodular at trial " + std::to_string(trial)};
        if ((d.u * a) * d.v != d.s)
            return {false, "U*A*V != S at trial " + std::to_string(trial)};
        if (d.u * d.uinv != IntMat::identity(m) || d.v * d.vinv != IntMat::identity(n))
            return {false, "inverse transforms wrong at trial " + std::to_string(trial)};
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                if (i != j && d.s.at(i, j) != 0)
                    return {false, "S not diagonal at trial " + std::to_string(trial)};
            }
        int k = std::min(m, n);
        for (int i = 0; i + 1 < k; ++i) {
            const Int &a1 = d.s.at(i, i), &a2 = d.s.at(i + 1, i + 1);
            if (a1 < 0 || (a1 == 0 && a2 != 0) || (a1 != 0 && a2 % a1 != 0))
                return {false, "divisibility chain broken at trial " + std::to_string(trial)};
        }
    }
    return {true, "1000 random matrices"};
}

// brute-force annihilator by enumerating the pairing
Subgroup perp_bruteforce(const Subgroup& s)
{
    const AbelianGroup& g = s.ambient();
    Int nn = g.torsion_exponent();
    std::vector<Elt> out;
    for (const Elt& x : g.elements()) {
        bool ok = true;
        for (const Elt& h : s.generators()) {
            Int e = 0;
            for (int i = 0; i < g.n(); ++i)
                e += (nn / g.coord_order(i)) * x[static_cast<size_t>(i)] * h[static_cast<size_t>(i)];
            if (mod_floor(e, nn) != 0) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.push_back(x);
    }
    return Subgroup(g, std::move(out));
}

// every subgroup of an abelian group on <= 3 generators, by closing over
// generator triples
std::vector<Subgroup> all_subgroups(const AbelianGroup& g)
{
    std::vector<Elt> els = g.elements();
    std::vector<Subgroup> found;
    auto consider = [&](Subgroup s) {
        for (const Subgroup& f : found)
            if (f.same_subgroup(s))
                return;
        found.push_back(std::move(s));
    };
    consider(Subgroup::trivial(g));
    for (size_t a = 0; a < els.size(); ++a)
        for (size_t b = a; b < els.size(); ++b)
            for (size_t c = b; c < els.size(); ++c)
                consider(Subgroup(g, {els[a], els[b], els[c]}));
    return found;
}

Outcome perp_exhaustive_subgroups()
{
    // groups whose subgroups all need at most 3 generators
    struct Case {
        AbelianGroup g;
        int expected_subgroups;
    };
    // subgroup counts: 16 for Z2^3, 8 for Z4xZ2, 10 for Z9xZ3
    std::vector<Case> cases = {{AbelianGroup::elementary(2, 3), 16},
                               {AbelianGroup(0, {2, 4}), 8},
                               {AbelianGroup(0, {3, 9}), 10}};
    for (const Case& c : cases) {
        std::vector<Subgroup> subs = all_subgroups(c.g);
        if (static_cast<int>(subs.size()) != c.expected_subgroups)
            return {false, c.g.to_string() + " has " + std::to_string(subs.size()) + " subgroups"};
        for (const Subgroup& s : subs) {
            Subgroup p = perp(s);
            if (s.order() * p.order() != c.g.order())
                return {false, "order product fails on " + c.g.to_string()};
            if (!perp(p).same_subgroup(s))
                return {false, "involution fails on " + c.g.to_string()};
        }
        // inclusion reversal over every nested pair
        for (const Subgroup& s1 : subs)
            for (const Subgroup& s2 : subs)
                if (s2.contains(s1) && !perp(s1).contains(perp(s2)))
                    return {false, "inclusion reversal fails on " + c.g.to_string()};
    }
    return {true, "34 subgroups across 3 groups, all nested pairs"};
}

Outcome perp_properties(std::uint64_t seed)
{
    std::mt19937_64 rng(seed + 1);
    std::vector<AbelianGroup> groups = {
        AbelianGroup::elementary(4, 2),  AbelianGroup::elementary(2, 4),
        AbelianGroup(0, {2, 4}),         AbelianGroup(0, {6, 6}),
        AbelianGroup::elementary(3, 3),  AbelianGroup(0, {8, 2, 2}),
        AbelianGroup(0, {2, 2, 3, 3}),   AbelianGroup(0, {12, 12}),
        AbelianGroup(0, {4, 4, 4}),      AbelianGroup(0, {2, 4, 8}),
        AbelianGroup(0, {100, 100}),  // order 10^4
    };
    int checked = 0;
    for (const AbelianGroup& g : groups) {
        std::vector<Subgroup> subs = {Subgroup::trivial(g), Subgroup::full(g)};
        std::uniform_int_distribution<int> count(1, 3);
        for (int t = 0; t < 6; ++t) {
            std::vector<Elt> gens;
            for (int c = count(rng); c > 0; --c) {
                Elt e = g.zero();
                for (int i = 0; i < g.n(); ++i) {
                    std::uniform_int_distribution<long> coord(0, g.coord_order(i).get_si() - 1);
                    e[static_cast<size_t>(i)] = coord(rng);
                }
                gens.push_back(std::move(e));
            }
            subs.emplace_back(g, std::move(gens));
        }
        bool small_enough = g.order() <= 256;
        for (const Subgroup& s : subs) {
            Subgroup p = perp(s);
            if (s.order() * p.order() != g.order())
                return {false, "|S|*|perp S| != |G| on " + g.to_string()};
            if (!perp(p).same_subgroup(s))
                return {false, "perp not an involution on " + g.to_string()};
            if (small_enough && !p.same_subgroup(perp_bruteforce(s)))
                return {false, "perp disagrees with brute force on " + g.to_string()};
            ++checked;
        }
        // inclusion reversal on a nested pair
        const Subgroup& small = subs[2];
        Subgroup big = small.join(subs[3]);
        if (!perp(small).contains(perp(big)))
            return {false, "perp not inclusion-reversing on " + g.to_string()};
        // full and trivial swap
        if (!perp(Subgroup::full(g)).is_trivial())
            return {false, "perp(G) != 1 on " + g.to_string()};
        if (perp(Subgroup::trivial(g)).order() != g.order())
            return {false, "perp(1) != G on " + g.to_string()};
    }
    return {true, std::to_string(checked) + " subgroups over " + std::to_string(groups.size()) + " groups"};
}

Outcome torsion_split_properties()
{
    struct Case {
        AbelianGroup g;
        Int p;
        Int p_order, c_order;
    };
    std::vector<Case> cases = {
        {AbelianGroup::cyclic(6), 3, 3, 2},
        {AbelianGroup(2, {3, 3}), 3, 9, 1},
        {AbelianGroup::cyclic(4), 2, 4, 1},
        {AbelianGroup(0, {2, 4, 3, 9}), 3, 27, 8},
        {AbelianGroup(1, {60}), 2, 4, 15},
    };
    for (const Case& c : cases) {
        TorsionSplit s = torsion_split(c.g, c.p);
        if (s.p_part.order() != c.p_order || s.complement.order() != c.c_order)
            return {false, "wrong split orders on " + c.g.to_string()};
        if (gcd(s.p_part.order(), s.complement.order()) != 1)
            return {false, "split orders not coprime on " + c.g.to_string()};
        Int torsion = 1;
        for (const Int& d : c.g.torsion_orders())
            torsion *= d;
        if (s.p_part.order() * s.complement.order() != torsion)
            return {false, "split orders do not multiply to |torsion| on " + c.g.to_string()};
        if (!s.p_part.intersect(s.complement).is_trivial())
            return {false, "split parts intersect on " + c.g.to_string()};
    }
    return {true, std::to_string(cases.size()) + " cases"};
}

// ------------------------------------------------------------------- pauli

Outcome pauli_layer(int ell)
{
    PauliAlgebra alg(ell);
    PauliPair p = pauli_pair(ell);
    // X^l = Y^l = I and X Y = eps Y X
    Mat<Cyc> xl = Mat<Cyc>::identity(ell), yl = Mat<Cyc>::identity(ell);
    for (int k = 0; k < ell; ++k) {
        xl = xl * p.x;
        yl = yl * p.y;
    }
    if (xl != Mat<Cyc>::identity(ell) || yl != Mat<Cyc>::identity(ell))
        return {false, "X^l or Y^l is not the identity"};
    Mat<Cyc> xy = p.x * p.y, yx = p.y * p.x;
    for (int r = 0; r < ell; ++r)
        for (int c = 0; c < ell; ++c)
            if (xy.at(r, c) != p.epsilon * yx.at(r, c))
                return {false, "XY != eps YX"};
    // brute-force commutation table against the closed form (throws inside on mismatch)
    Bichar b = alg.commutation_bicharacter();
    if (!alg.cocycle_identity_holds())
        return {false, "cocycle identity fails"};
    if (!alg.monomials_span())
        return {false, "monomials do not span"};
    if (!is_nondegenerate(b))
        return {false, "commutation bicharacter has nontrivial radical"};
    BrauerClass cls = brauer_class(b);
    if (cls.degree != ell)
        return {false, "degree != l"};
    if (cls.support.order() != Int(ell) * Int(ell))
        return {false, "support is not the full group"};
    return {true, std::to_string(ell * ell * ell * ell) + " commutation pairs checked"};
}

// ----------------------------------------------------------------- weights

Outcome weight_fundamental_classes()
{
    const RootSystem& e6 = RootSystem::get(LieType::E6);
    const RootSystem& e7 = RootSystem::get(LieType::E7);
    std::vector<long> e6_expected = {1, 2, 0, 1, 2, 0};
    std::vector<long> e7_expected = {1, 0, 1, 0, 0, 0, 1};
    for (int i = 0; i < 6; ++i) {
        Weight w(6, Int(0));
        w[static_cast<size_t>(i)] = 1;
        if (e6.center_class(w) != e6_expected[static_cast<size_t>(i)] ||
            e6.center_class_by_lattice(w) != e6_expected[static_cast<size_t>(i)])
            return {false, "E6 fundamental class " + std::to_string(i + 1)};
    }
    for (int i = 0; i < 7; ++i) {
        Weight w(7, Int(0));
        w[static_cast<size_t>(i)] = 1;
        if (e7.center_class(w) != e7_expected[static_cast<size_t>(i)] ||
            e7.center_class_by_lattice(w) != e7_expected[static_cast<size_t>(i)])
            return {false, "E7 fundamental class " + std::to_string(i + 1)};
    }
    return {true, "13 fundamental weights"};
}

Outcome weight_oracle_agreement(std::uint64_t seed)
{
    std::mt19937_64 rng(seed + 2);
    std::uniform_int_distribution<long> coeff(0, 6);
    for (LieType t : {LieType::E6, LieType::E7}) {
        const RootSystem& rs = RootSystem::get(t);
        for (int trial = 0; trial < 200; ++trial) {
            Weight w;
            for (int i = 0; i < rs.rank(); ++i)
                w.push_back(coeff(rng));
            if (rs.center_class(w) != rs.center_class_by_lattice(w))
                return {false, "formula vs lattice oracle disagree on " + type_name(t)};
        }
        // additivity and vanishing on simple roots
        for (int j = 0; j < rs.rank(); ++j) {
            Weight root;
            for (int i = 0; i < rs.rank(); ++i)
                root.push_back(rs.cartan_matrix().at(i, j));
            if (rs.center_class(root) != 0)
                return {false, "class does not vanish on a simple root of " + type_name(t)};
        }
        std::uniform_int_distribution<long> small(0, 4);
        for (int trial = 0; trial < 50; ++trial) {
            Weight a, b, sum;
            for (int i = 0; i < rs.rank(); ++i) {
                a.push_back(small(rng));
                b.push_back(small(rng));
                sum.push_back(a.back() + b.back());
            }
            if (mod_floor(rs.center_class(a) + rs.center_class(b), rs.class_modulus()) !=
                rs.center_class(sum))
                return {false, "class not additive on " + type_name(t)};
        }
    }
    return {true, "200 random weights per type plus additivity samples"};
}

Outcome weight_dimensions()
{
    const RootSystem& e6 = RootSystem::get(LieType::E6);
    const RootSystem& e7 = RootSystem::get(LieType::E7);
    if (e6.positive_roots().size() != 36 || e7.positive_roots().size() != 63 ||
        RootSystem::get(LieType::C4).positive_roots().size() != 16)
        return {false, "positive root counts wrong"};
    if (e6.weyl_dim({1, 0, 0, 0, 0, 0}) != 27)
        return {false, "dim V(pi1) != 27 for E6"};
    if (e7.weyl_dim({1, 0, 0, 0, 0, 0, 0}) != 56)
        return {false, "dim V(pi1) != 56 for E7"};
    if (e6.weyl_dim({0, 0, 0, 0, 0, 0}) != 1 || e7.weyl_dim({0, 0, 0, 0, 0, 0, 0}) != 1)
        return {false, "dim V(0) != 1"};
    return {true, "27 and 56 reproduced"};
}

// --------------------------------------------------------------- decisions

Weight fundamental(LieType t, int i)
{
    Weight w(static_cast<size_t>(type_rank(t)), Int(0));
    w[static_cast<size_t>(i - 1)] = 1;
    return w;
}

Outcome decisions_catalog_shape()
{
    for (LieType t : {LieType::E6, LieType::E7}) {
        const auto& cat = catalog(t);
        if (cat.size() != 14)
            return {false, type_name(t) + " catalog has " + std::to_string(cat.size()) + " entries"};
        Int p = (t == LieType::E6) ? 3 : 2;
        int nontrivial = 0;
        for (const auto& e : cat) {
            if (e.h && e.universal.order_of(*e.h) != 2)
                return {false, e.id + ": h does not have order 2"};
            if (e.t) {
                ++nontrivial;
                if (e.t->order() != p * p)
                    return {false, e.id + ": |T| != p^2"};
                // T sits inside the p-torsion
                for (const Elt& g : e.t->generators()) {
                    Int o = e.universal.order_of(g);
                    if (o != 1 && o != p)
                        return {false, e.id + ": T generator of order " + o.get_str()};
                }
                Bichar triv = Bichar::trivial(e.t->canon().group);
                if (!triv.is_trivial())
                    return {false, "internal"};
            }
            if (t == LieType::E7 && e.outer)
                return {false, "E7 entry marked outer"};
            if (t == LieType::E6 && e.outer && !e.h)
                return {false, e.id + ": outer entry without h"};
        }
        if (t == LieType::E6 && nontrivial != 3)
            return {false, "E6 must have exactly 3 entries with nontrivial invariants"};
        if (t == LieType::E7 && nontrivial != 11)
            return {false, "E7 must have exactly 11 entries with nontrivial invariants"};
    }
    // the doubled universal group resolves by suffix
    catalog_entry(LieType::E6, "Z^2xZ2^3-inner");
    catalog_entry(LieType::E6, "Z^2xZ2^3-outer");
    catalog_entry(LieType::E6, "Z3^4");
    catalog_entry(LieType::E7, "Z2^8");
    return {true, "14 + 14 entries"};
}

Outcome decisions_worked_examples()
{
    // E7, Z2^8, identity, pi1: index 2, graded-simple dimension 112
    {
        const auto& e = catalog_entry(LieType::E7, "Z2^8");
        BrauerReport r = brauer_report(e, Hom::identity(e.universal), fundamental(LieType::E7, 1));
        if (r.schur_index != 2 || r.graded_simple_dim != 112 || r.support.order() != 4 ||
            r.orbit.size() != 1)
            return {false, "E7/Z2^8/pi1"};
    }
    // E6, Z3^4, identity, pi1: index 3, dimension 81
    {
        const auto& e = catalog_entry(LieType::E6, "Z3^4");
        BrauerReport r = brauer_report(e, Hom::identity(e.universal), fundamental(LieType::E6, 1));
        if (r.schur_index != 3 || r.graded_simple_dim != 81 || r.support.order() != 9)
            return {false, "E6/Z3^4/pi1"};
    }
    // E6, Z3^4, identity, pi3: trivial class, index 1
    {
        const auto& e = catalog_entry(LieType::E6, "Z3^4");
        BrauerReport r = brauer_report(e, Hom::identity(e.universal), fundamental(LieType::E6, 3));
        if (r.schur_index != 1 || !r.support.is_trivial() || r.orbit.size() != 1)
            return {false, "E6/Z3^4/pi3"};
        if (r.graded_simple_dim != RootSystem::get(LieType::E6).weyl_dim(fundamental(LieType::E6, 3)))
            return {false, "E6/Z3^4/pi3 dimension"};
    }
    // E6 outer Z2xZ3^3, identity, pi1: trivial invariant, orbit {pi1, pi5}, dim 54
    {
        const auto& e = catalog_entry(LieType::E6, "Z2xZ3^3");
        BrauerReport r = brauer_report(e, Hom::identity(e.universal), fundamental(LieType::E6, 1));
        if (r.schur_index != 1 || r.graded_simple_dim != 54 || r.orbit.size() != 2 ||
            r.h_lambda.order() != 2)
            return {false, "E6/Z2xZ3^3/pi1"};
        if (r.orbit[1] != fundamental(LieType::E6, 5))
            return {false, "E6/Z2xZ3^3/pi1 orbit"};
    }
    return {true, "4 worked examples"};
}

Outcome decisions_thresholds()
{
    auto mods = [](Weight w, long k) {
        ModuleSpec m;
        m.summands.emplace_back(std::move(w), Int(k));
        return m;
    };
    {
        const auto& e = catalog_entry(LieType::E7, "Z2^8");
        Hom id = Hom::identity(e.universal);
        Weight pi1 = fundamental(LieType::E7, 1), pi2 = fundamental(LieType::E7, 2);
        if (module_compatible(e, id, mods(pi1, 1)).compatible)
            return {false, "E7 multiplicity 1 accepted"};
        if (!module_compatible(e, id, mods(pi1, 2)).compatible)
            return {false, "E7 multiplicity 2 rejected"};
        if (module_compatible(e, id, mods(pi1, 3)).compatible)
            return {false, "E7 multiplicity 3 accepted"};
        if (!module_compatible(e, id, mods(pi2, 1)).compatible)
            return {false, "E7 trivial-class weight rejected"};
    }
    {
        const auto& e = catalog_entry(LieType::E6, "Z3^4");
        Hom id = Hom::identity(e.universal);
        Weight pi1 = fundamental(LieType::E6, 1);
        if (module_compatible(e, id, mods(pi1, 1)).compatible ||
            module_compatible(e, id, mods(pi1, 2)).compatible)
            return {false, "E6 multiplicity below 3 accepted"};
        if (!module_compatible(e, id, mods(pi1, 3)).compatible)
            return {false, "E6 multiplicity 3 rejected"};
        // killing one generator of T lifts the constraint
        IntMat m = IntMat::identity(4);
        m.at(0, 0) = 0;
        Hom crush(e.universal, e.universal, std::move(m));
        if (!module_compatible(e, crush, mods(pi1, 1)).compatible)
            return {false, "E6 non-injective nu still constrained"};
        BrauerReport r = brauer_report(e, crush, pi1);
        if (r.schur_index != 1)
            return {false, "E6 non-injective nu has index > 1"};
    }
    {
        const auto& e = catalog_entry(LieType::E6, "Z2xZ3^3");
        Hom id = Hom::identity(e.universal);
        Weight pi1 = fundamental(LieType::E6, 1), pi5 = fundamental(LieType::E6, 5);
        if (module_compatible(e, id, mods(pi1, 1)).compatible)
            return {false, "outer: lone conjugate weight accepted"};
        ModuleSpec both;
        both.summands.emplace_back(pi1, Int(1));
        both.summands.emplace_back(pi5, Int(1));
        if (!module_compatible(e, id, both).compatible)
            return {false, "outer: balanced pair rejected"};
        // crush h: the induced grading is inner, anything goes
        IntMat m = IntMat::identity(4);
        m.at(0, 0) = 0;
        Hom crush(e.universal, e.universal, std::move(m));
        if (!module_compatible(e, crush, mods(pi1, 1)).compatible)
            return {false, "outer with h killed still constrained"};
    }
    return {true, "threshold flips at 2 (E7) and 3 (E6)"};
}

Outcome decisions_support_in_p_torsion(std::uint64_t seed)
{
    std::mt19937_64 rng(seed + 3);
    std::uniform_int_distribution<long> entry(0, 5);
    int checked = 0;
    for (LieType t : {LieType::E6, LieType::E7}) {
        Int p = (t == LieType::E6) ? 3 : 2;
        for (const auto& e : catalog(t)) {
            if (!e.t)
                continue;
            // random nu into a small target group
            AbelianGroup target = (t == LieType::E6) ? AbelianGroup(0, {3, 3, 3})
                                                     : AbelianGroup(0, {2, 2, 4});
            for (int trial = 0; trial < 4; ++trial) {
                // a random well-defined matrix: the image of a generator of
                // order d in a coordinate of order e must be a multiple of
                // e / gcd(d, e)
                IntMat m(target.n(), e.universal.n());
                for (int i = 0; i < m.rows(); ++i)
                    for (int j = 0; j < m.cols(); ++j) {
                        Int d = e.universal.coord_order(j);
                        Int step = d == 0 ? Int(1)
                                          : target.coord_order(i) / gcd(d, target.coord_order(i));
                        m.at(i, j) = step * entry(rng);
                    }
                Hom nu(e.universal, target, std::move(m));
                Weight pi1 = fundamental(t, 1);
                BrauerReport r = brauer_report(e, nu, pi1);
                // support generators must be images of p-torsion elements
                TorsionSplit split = torsion_split(e.universal, p);
                std::vector<Elt> image_gens;
                for (const Elt& g : split.p_part.generators())
                    image_gens.push_back(r.quotient_projection.apply(nu.apply(g)));
                Subgroup image(r.quotient, std::move(image_gens));
                for (const Elt& g : r.support.generators())
                    if (!image.contains(g))
                        return {false, "support escapes the p-torsion image for " + e.id};
                // index divides dim/weyl_dim
                Int wd = RootSystem::get(t).weyl_dim(pi1);
                if (r.graded_simple_dim % (r.schur_index * wd) != 0)
                    return {false, "index does not divide the graded-simple dimension"};
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) + " random coarsenings"};
}

Outcome decisions_power_consistency()
{
    // the class-power congruences behind the decision layer, checked with
    // bicharacter arithmetic: the m-th power of the standard pairing on
    // Z_p^2 is nondegenerate exactly when p does not divide m
    for (int p : {2, 3}) {
        Bichar b = Bichar::hyperbolic(p);
        for (int m = 0; m <= 6; ++m) {
            bool nondeg = is_nondegenerate(b.power(m));
            if (nondeg != (m % p != 0))
                return {false, "power " + std::to_string(m) + " of the Z" + std::to_string(p) +
                                   " pairing"};
        }
    }
    return {true, "powers 0..6 for p = 2, 3"};
}

Outcome decisions_graded_simple_descriptions()
{
    const auto& e6 = catalog_entry(LieType::E6, "Z3^4");
    Hom to_trivial = Hom::zero(e6.universal, AbelianGroup::trivial());
    GradedSimpleDescription d =
        graded_simple_description(e6, to_trivial, fundamental(LieType::E6, 1));
    if (d.schur_index != 1 || d.total_dim != 27 || d.summands.size() != 1)
        return {false, "trivial grading"};

    d = graded_simple_description(e6, Hom::identity(e6.universal), fundamental(LieType::E6, 1));
    if (d.schur_index != 3 || d.total_dim != 81 || d.summands.size() != 1 ||
        d.summands[0].second != 3)
        return {false, "E6/Z3^4/pi1 description"};

    const auto& outer = catalog_entry(LieType::E6, "Z2xZ3^3");
    d = graded_simple_description(outer, Hom::identity(outer.universal), fundamental(LieType::E6, 1));
    if (d.schur_index != 1 || d.total_dim != 54 || d.summands.size() != 2)
        return {false, "outer orbit description"};

    // shape constraints: E7 orbits are singletons with k in {1,2}
    const auto& e7 = catalog_entry(LieType::E7, "Z2^8");
    for (int i = 1; i <= 7; ++i) {
        GradedSimpleDescription s =
            graded_simple_description(e7, Hom::identity(e7.universal), fundamental(LieType::E7, i));
        if (s.orbit.size() != 1 || (s.schur_index != 1 && s.schur_index != 2))
            return {false, "E7 orbit shape"};
    }
    return {true, "descriptions match"};
}

}  // namespace

std::vector<Claim> verify_groups(const SuiteOptions& opt)
{
    Suite s{{}, opt.progress};
    s.run(10, "snf-reconstruction-random", [&] { return snf_random(opt.seed); });
    s.run(10, "snf-pinned-examples", [&]() -> Outcome {
        SmithDecomposition d = smith_normal_form(IntMat::identity(3));
        if (d.s != IntMat::identity(3))
            return {false, "identity"};
        IntMat a(2, 2);
        a.at(0, 0) = 2;
        a.at(1, 1) = 3;
        d = smith_normal_form(a);
        if (d.s.at(0, 0) != 1 || d.s.at(1, 1) != 6)
            return {false, "diag(2,3) -> diag(1,6)"};
        IntMat z(3, 2);
        d = smith_normal_form(z);
        if (d.rank != 0 || d.s != z)
            return {false, "zero matrix"};
        return {true, ""};
    });
    s.run(10, "perp-involution-and-orders", [&] { return perp_properties(opt.seed); });
    s.run(10, "perp-exhaustive-subgroup-lattices", [&] { return perp_exhaustive_subgroups(); });
    s.run(10, "torsion-split-orders", [&] { return torsion_split_properties(); });
    return s.claims;
}

std::vector<Claim> verify_pauli(const SuiteOptions& opt)
{
    Suite s{{}, opt.progress};
    for (int ell : {2, 3, 4})
        s.run(7, "pauli-layer-l" + std::to_string(ell), [&] { return pauli_layer(ell); });
    return s.claims;
}

std::vector<Claim> verify_weights(const SuiteOptions& opt)
{
    Suite s{{}, opt.progress};
    s.run(8, "fundamental-weight-classes", [&] { return weight_fundamental_classes(); });
    s.run(8, "class-formula-vs-lattice-oracle", [&] { return weight_oracle_agreement(opt.seed); });
    s.run(8, "weyl-dimensions-27-56", [&] { return weight_dimensions(); });
    return s.claims;
}

std::vector<Claim> verify_decisions(const SuiteOptions& opt)
{
    Suite s{{}, opt.progress};
    s.run(9, "catalog-shape", [&] { return decisions_catalog_shape(); });
    s.run(9, "worked-examples", [&] { return decisions_worked_examples(); });
    s.run(9, "divisibility-thresholds", [&] { return decisions_thresholds(); });
    s.run(9, "support-inside-p-torsion", [&] { return decisions_support_in_p_torsion(opt.seed); });
    s.run(9, "class-power-consistency", [&] { return decisions_power_consistency(); });
    s.run(9, "graded-simple-descriptions", [&] { return decisions_graded_simple_descriptions(); });
    return s.claims;
}

namespace {

// ---------------------------------------------------------------- e7 model

SVec unit(int idx)
{
    return {{idx, Cyc(1)}};
}

Outcome e7_antisymmetry(const E7Model& m)
{
    const LieAlgebra& l = m.algebra();
    int checked = 0;
    for (int i = 0; i < l.dim(); ++i) {
        if (!l.bracket(unit(i), unit(i)).empty())
            return {false, "[e,e] != 0 at " + std::to_string(i)};
        for (int j = i + 1; j < l.dim(); ++j) {
            SVec a = l.bracket(unit(i), unit(j));
            SVec b = l.bracket(unit(j), unit(i));
            if (a.size() != b.size())
                return {false, "antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
            for (size_t k = 0; k < a.size(); ++k)
                if (a[k].first != b[k].first || !(a[k].second + b[k].second).is_zero())
                    return {false, "antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " pairs"};
}

Outcome e7_wedge_top_bracket(const E7Model& m)
{
    int top = m.wedge_index({0, 1, 2, 3});
    int bot = m.wedge_index({4, 5, 6, 7});
    SVec w = m.algebra().bracket(unit(top), unit(bot));
    // 1/2 diag(1,1,1,1,-1,-1,-1,-1) has H-coordinates given by partial sums
    std::vector<std::pair<int, Rat>> expected = {
        {E7Model::h_index(0), Rat(1, 2)}, {E7Model::h_index(1), Rat(1)},
        {E7Model::h_index(2), Rat(3, 2)}, {E7Model::h_index(3), Rat(2)},
        {E7Model::h_index(4), Rat(3, 2)}, {E7Model::h_index(5), Rat(1)},
        {E7Model::h_index(6), Rat(1, 2)},
    };
    if (w.size() != expected.size())
        return {false, "wrong support"};
    for (size_t k = 0; k < w.size(); ++k)
        if (w[k].first != expected[k].first || w[k].second != Cyc(expected[k].second))
            return {false, "wrong coefficient at position " + std::to_string(k)};
    return {true, ""};
}

Outcome e7_z22(const E7Model& m)
{
    auto comps = m.z22_components();
    const int expected[4] = {36, 27, 43, 27};
    int total = 0;
    for (int k = 0; k < 4; ++k) {
        if (comps[static_cast<size_t>(k)].dimension() != expected[k])
            return {false, "component " + std::to_string(k) + " has dimension " +
                               std::to_string(comps[static_cast<size_t>(k)].dimension())};
        total += comps[static_cast<size_t>(k)].dimension();
    }
    if (total != 133)
        return {false, "dimensions do not sum to 133"};
    return {true, "(36, 27, 43, 27)"};
}

Outcome e7_z22_weyl_crosscheck()
{
    const RootSystem& c4 = RootSystem::get(LieType::C4);
    if (c4.weyl_dim({2, 0, 0, 0}) != 36)
        return {false, "dim V(2 pi1) != 36"};
    if (c4.weyl_dim({0, 1, 0, 0}) != 27)
        return {false, "dim V(pi2) != 27"};
    if (c4.weyl_dim({0, 0, 0, 1}) != 42)
        return {false, "dim V(pi4) != 42"};
    if (c4.weyl_dim({0, 0, 0, 0}) != 1)
        return {false, "dim V(0) != 1"};
    return {true, "43 = 42 + 1 and 36, 27 match"};
}

Outcome e7_z22_containments(const E7Model& m)
{
    auto comps = m.z22_components();
    const int sign_s[4] = {1, 1, -1, -1};
    const int sign_t[4] = {1, -1, 1, -1};
    const LieAlgebra& l = m.algebra();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            int es = sign_s[a] * sign_s[b], et = sign_t[a] * sign_t[b];
            for (int i = 0; i < comps[static_cast<size_t>(a)].dimension(); ++i) {
                SVec u = comps[static_cast<size_t>(a)].basis_vector(i);
                for (int j = 0; j < comps[static_cast<size_t>(b)].dimension(); ++j) {
                    SVec w = l.bracket(u, comps[static_cast<size_t>(b)].basis_vector(j));
                    if (w.empty())
                        continue;
                    SVec expect_s = w, expect_t = w;
                    for (size_t k = 0; k < w.size(); ++k) {
                        expect_s[k].second = Cyc(es) * w[k].second;
                        expect_t[k].second = Cyc(et) * w[k].second;
                    }
                    if (m.sigma().apply(w) != expect_s || m.tau().apply(w) != expect_t)
                        return {false, "bracket leaves the expected component at (" +
                                           std::to_string(a) + "," + std::to_string(b) + ")"};
                }
            }
        }
    return {true, "16 component pairs"};
}

Outcome e7_contraction_kernel(const E7Model& m)
{
    std::vector<std::vector<Cyc>> ker = kernel_basis(m.contraction());
    if (ker.size() != 42)
        return {false, "kernel dimension " + std::to_string(ker.size())};
    // tau fixes the kernel pointwise
    for (const auto& v : ker) {
        SVec emb;
        for (int i = 0; i < E7Model::kWedges; ++i)
            if (!v[static_cast<size_t>(i)].is_zero())
                emb.emplace_back(E7Model::kSlDim + i, v[static_cast<size_t>(i)]);
        if (m.tau().apply(emb) != emb)
            return {false, "tau moves a kernel vector"};
    }
    return {true, "42-dimensional, fixed pointwise"};
}

Outcome e7_b_tilde(const E7Model& m)
{
    // expected: -(x_i ^ x_j ^ y_i ^ y_j) summed over i < j
    SVec expected;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            expected.emplace_back(m.wedge_index({i, j, 4 + i, 4 + j}), Cyc(-1));
    std::sort(expected.begin(), expected.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (m.b_tilde() != expected)
        return {false, "b~ formula"};
    if (m.tau().apply(m.b_tilde()) != m.b_tilde())
        return {false, "tau does not fix b~"};
    return {true, "6 terms, coefficient -1"};
}

Outcome e7_tau_minus_eigenspace(const E7Model& m)
{
    // (-1)-eigenspace of tau on the wedge block
    const Mat<Cyc>& tm = m.tau().matrix();
    Mat<Cyc> shifted(E7Model::kWedges, E7Model::kWedges);
    for (int i = 0; i < E7Model::kWedges; ++i)
        for (int j = 0; j < E7Model::kWedges; ++j) {
            Cyc v = tm.at(E7Model::kSlDim + i, E7Model::kSlDim + j);
            if (i == j)
                v += Cyc(1);
            shifted.at(i, j) = std::move(v);
        }
    size_t dim = kernel_basis(std::move(shifted)).size();
    if (dim != 27)
        return {false, "dimension " + std::to_string(dim)};
    return {true, "27-dimensional"};
}

Outcome e7_sp_annihilates_b_tilde(const E7Model& m)
{
    auto comps = m.z22_components();
    const Subalgebra& sp = comps[0];
    if (sp.dimension() != 36)
        return {false, "sp component is not 36-dimensional"};
    for (int i = 0; i < sp.dimension(); ++i)
        if (!m.algebra().bracket(sp.basis_vector(i), m.b_tilde()).empty())
            return {false, "a fixed-component element moves b~"};
    return {true, "36 basis elements"};
}

Outcome e7_omega_invariance(const E7Model& m)
{
    // Omega(f.X, Y) = -Omega(X, f.Y) for all sl basis f and wedge pairs
    for (int k = 0; k < E7Model::kSlDim; ++k) {
        // A[s][t] = Omega(f.e_s, e_t) must be antisymmetric
        std::vector<std::vector<std::pair<int, Cyc>>> rows(E7Model::kWedges);
        for (int s = 0; s < E7Model::kWedges; ++s) {
            SVec fx = m.algebra().bracket_basis(k, E7Model::kSlDim + s);
            for (const auto& [idx, c] : fx) {
                int ws = idx - E7Model::kSlDim;
                // Omega(e_ws, e_t) nonzero only at the complementary wedge
                for (int t = 0; t < E7Model::kWedges; ++t) {
                    int os = m.omega_sign(ws, t);
                    if (os != 0)
                        rows[static_cast<size_t>(s)].emplace_back(t, c * Cyc(os));
                }
            }
        }
        for (int s = 0; s < E7Model::kWedges; ++s)
            for (const auto& [t, v] : rows[static_cast<size_t>(s)]) {
                Cyc other;
                for (const auto& [ss, vv] : rows[static_cast<size_t>(t)])
                    if (ss == s)
                        other = vv;
                if (!(v + other).is_zero())
                    return {false, "invariance fails for basis element " + std::to_string(k)};
            }
    }
    return {true, "63 x 70 x 70 triples"};
}

Outcome e7_killing(const E7Model& m)
{
    const LieAlgebra& l = m.algebra();
    int n = l.dim();
    // kappa(e_i, e_j) = sum_k coefficient of e_k in [e_i, [e_j, e_k]]
    Mat<Cyc> gram(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Cyc acc;
            for (int k = 0; k < n; ++k) {
                SVec inner = l.bracket_basis(j, k);
                for (const auto& [mm, c] : inner) {
                    SVec outer = l.bracket_basis(i, mm);
                    for (const auto& [kk, cc] : outer)
                        if (kk == k)
                            acc += c * cc;
                }
            }
            if (!acc.is_zero()) {
                gram.at(i, j) = acc;
                if (i != j)
                    gram.at(j, i) = std::move(acc);
            }
        }
    }
    if (rank(std::move(gram)) != n)
        return {false, "Killing form is degenerate"};
    return {true, "rank 133"};
}

Outcome e7_phi_functorial(const E7Model& m)
{
    if (!m.phi(Mat<Cyc>::identity(8)).is_identity())
        return {false, "phi(I) != id"};
    // phi(iI) = id (the kernel of the action)
    Mat<Cyc> i_id(8, 8);
    for (int k = 0; k < 8; ++k)
        i_id.at(k, k) = Cyc::root_of_unity(4, 1);
    if (!m.phi(i_id).is_identity())
        return {false, "phi(iI) != id"};
    // transvection samples: phi multiplicative and an automorphism
    Mat<Cyc> f = Mat<Cyc>::identity(8), g = Mat<Cyc>::identity(8);
    f.at(0, 1) = Cyc(1);
    g.at(2, 5) = Cyc(-2);
    g.at(6, 3) = Cyc(1);
    AutMap pf = m.phi(f), pg = m.phi(g);
    if (pf.compose(pg).matrix() != m.phi(f * g).matrix())
        return {false, "phi not multiplicative on a sample"};
    AutCheck chk = is_automorphism(m.algebra(), pf);
    if (!chk.ok)
        return {false, "phi(transvection) is not an automorphism: " + chk.reason};
    return {true, "identity, kernel and transvection samples"};
}

Outcome e7_tau_star_samples(const E7Model& m)
{
    // group form of the adjoint rule: tau(f . X) = (f*)^{-1} . tau(X) as a
    // matrix identity on the wedge block, for invertible determinant-1 samples
    std::vector<Mat<Cyc>> samples;
    Mat<Cyc> f = Mat<Cyc>::identity(8);
    f.at(0, 1) = Cyc(1);
    samples.push_back(f);
    f = Mat<Cyc>::identity(8);
    f.at(3, 6) = Cyc(2);
    f.at(1, 4) = Cyc(-1);
    samples.push_back(f);
    const Mat<Cyc>& tm = m.tau().matrix();
    Mat<Cyc> tw(E7Model::kWedges, E7Model::kWedges);
    for (int i = 0; i < E7Model::kWedges; ++i)
        for (int j = 0; j < E7Model::kWedges; ++j)
            tw.at(i, j) = tm.at(E7Model::kSlDim + i, E7Model::kSlDim + j);
    for (const Mat<Cyc>& s : samples) {
        Mat<Cyc> lhs = tw * m.wedge_power(s);
        Mat<Cyc> rhs = m.wedge_power(inverse(E7Model::symplectic_adjoint(s))) * tw;
        if (lhs != rhs)
            return {false, "adjoint rule fails on a sample"};
    }
    return {true, "2 samples"};
}

struct Z42Data {
    AutMap g1, g2, g3, g4, g5;  // phi images of the five listed operators
    AutMap sq1, sq2;            // phi images of the squared order-4 operators
    Mat<Cyc> u1, u2, u3, u4, u5;  // the operators upstairs
};

Z42Data make_z42(const E7Model& m)
{
    E7Model::Z42Gens g = m.z42_generators();
    Z42Data d{m.phi(g.x1, 4), m.phi(g.y1, 4), m.phi(g.x2, 2), m.phi(g.y2, 2),
              m.phi(g.eps_id, 2),
              m.phi(g.x1 * g.x1, 2), m.phi(g.y1 * g.y1, 2),
              g.x1, g.y1, g.x2, g.y2, g.eps_id};
    return d;
}

Outcome e7_z42_table(const E7Model& m, std::uint64_t seed)
{
    E7Model::Z42Table t = m.z42_strong_commutation(seed);
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            bool expected = !((i == 0 && j == 1));
            bool got = t.strongly_commutes[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (got != expected)
                return {false, "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   ") gives " + (got ? "true" : "false")};
            if (t.strongly_commutes[static_cast<size_t>(j)][static_cast<size_t>(i)] != got)
                return {false, "table not symmetric"};
        }
    return {true, "single obstructed pair (1,2)"};
}

Outcome e7_z42_squares(const E7Model& m, const Z42Data& d, int rank_l, std::uint64_t seed)
{
    const AutMap* gens[5] = {&d.g1, &d.g2, &d.g3, &d.g4, &d.g5};
    for (const AutMap* sq : {&d.sq1, &d.sq2})
        for (int i = 0; i < 5; ++i)
            if (!strongly_commute(m.algebra(), *sq, *gens[i], rank_l, seed))
                return {false, "square generator obstructed against generator " + std::to_string(i + 1)};
    return {true, "10 pairs"};
}

Outcome e7_z42_eps_is_sigma(const E7Model& m, const Z42Data& d)
{
    if (d.g5.matrix() != m.sigma().matrix())
        return {false, "phi(eps I) != sigma"};
    return {true, ""};
}

Outcome e7_z42_group_structure(const Z42Data& d)
{
    // classes of the generated subgroup modulo <iI> upstairs: exactly
    // 4*4*2*2*2 = 128 distinct classes
    Cyc i4 = Cyc::root_of_unity(4, 1);
    auto normal_form = [&](const Mat<Cyc>& w) {
        // scale so that the first nonzero entry is 1 (kills the <iI> ambiguity
        // up to a 4th root; powers of i are absorbed by scanning all four)
        std::vector<std::string> best;
        for (int k = 0; k < 4; ++k) {
            Cyc scale = i4.pow(k);
            std::vector<std::string> cur;
            cur.reserve(64);
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 8; ++c)
                    cur.push_back((scale * w.at(r, c)).to_string());
            if (best.empty() || cur < best)
                best = cur;
        }
        return best;
    };
    std::vector<std::vector<std::string>> seen;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 2; ++c)
                for (int e = 0; e < 2; ++e)
                    for (int f = 0; f < 2; ++f) {
                        Mat<Cyc> w = Mat<Cyc>::identity(8);
                        for (int k = 0; k < a; ++k)
                            w = w * d.u1;
                        for (int k = 0; k < b; ++k)
                            w = w * d.u2;
                        for (int k = 0; k < c; ++k)
                            w = w * d.u3;
                        for (int k = 0; k < e; ++k)
                            w = w * d.u4;
                        for (int k = 0; k < f; ++k)
                            w = w * d.u5;
                        seen.push_back(normal_form(w));
                    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        return {false, "collision among the 128 classes"};
    return {true, "128 distinct classes modulo the kernel"};
}

Outcome e7_z42_torus_samples(const E7Model& m, const Z42Data& d, int rank_l, std::uint64_t seed)
{
    for (int k : {1, 8}) {  // a 24th root and a cube root
        Mat<Cyc> t = E7Model::torus_op(Cyc::zeta_pow(k));
        AutMap pt = m.phi(t, 24);
        for (const AutMap* g : {&d.g1, &d.g2, &d.g5})
            if (!strongly_commute(m.algebra(), pt, *g, rank_l, seed))
                return {false, "torus sample obstructed"};
    }
    return {true, "2 torus points x 3 generators"};
}

}  // namespace

std::vector<Claim> verify_e7_model(const SuiteOptions& opt)
{
    Suite s{{}, opt.progress};
    if (opt.progress)
        (*opt.progress) << "[build] constructing the 133-dimensional algebra\n";
    E7Model m;
    const LieAlgebra& l = m.algebra();

    s.run(1, "dimension-133", [&]() -> Outcome {
        bool ok = l.dim() == 133 && E7Model::kSlDim == 63 && E7Model::kWedges == 70;
        return {ok, "63 + 70"};
    });
    s.run(1, "antisymmetry-all-pairs", [&] { return e7_antisymmetry(m); });
    s.run(1, "jacobi-all-triples", [&]() -> Outcome {
        auto fail = l.check_jacobi(opt.workers);
        if (fail)
            return {false, "triple (" + std::to_string(fail->i) + "," + std::to_string(fail->j) +
                               "," + std::to_string(fail->k) + ")"};
        long n = l.dim();
        return {true, std::to_string(n * (n - 1) * (n - 2) / 6) + " triples"};
    });

    s.run(2, "sigma-tau-automorphisms", [&]() -> Outcome {
        AutCheck cs = is_automorphism(l, m.sigma());
        if (!cs.ok)
            return {false, "sigma: " + cs.reason};
        AutCheck ct = is_automorphism(l, m.tau());
        if (!ct.ok)
            return {false, "tau: " + ct.reason};
        if (!m.sigma().declared_order_holds() || m.sigma().is_identity())
            return {false, "sigma does not have order exactly 2"};
        if (!m.tau().declared_order_holds() || m.tau().is_identity())
            return {false, "tau does not have order exactly 2"};
        if (!m.sigma().commutes_with(m.tau()))
            return {false, "sigma and tau do not commute"};
        return {true, "order 2, commuting"};
    });
    s.run(2, "wedge-top-bracket", [&] { return e7_wedge_top_bracket(m); });

    s.run(3, "z22-component-dimensions", [&] { return e7_z22(m); });
    s.run(3, "z22-weyl-crosscheck", [&] { return e7_z22_weyl_crosscheck(); });
    s.run(3, "z22-bracket-containments", [&] { return e7_z22_containments(m); });

    if (opt.progress)
        (*opt.progress) << "[rank] sampling centralizers\n";
    RankResult rank_l = reductive_rank(l, full_subalgebra(l), opt.seed);
    s.run(4, "rank-of-full-algebra", [&]() -> Outcome {
        return {rank_l.value == 7 && rank_l.unanimous,
                "rank " + std::to_string(rank_l.value) + (rank_l.unanimous ? "" : " (unstable)")};
    });
    s.run(4, "fixed-subalgebra-ranks", [&]() -> Outcome {
        Subalgebra fs = fixed_subalgebra(l, {&m.sigma()});
        if (fs.dimension() != 63)
            return {false, "Fix(sigma) has dimension " + std::to_string(fs.dimension())};
        Subalgebra fst = fixed_subalgebra(l, {&m.sigma(), &m.tau()});
        if (fst.dimension() != 36)
            return {false, "Fix(sigma,tau) has dimension " + std::to_string(fst.dimension())};
        RankResult r = reductive_rank(l, fst, opt.seed);
        if (r.value != 4 || !r.unanimous)
            return {false, "rank of Fix(sigma,tau) is " + std::to_string(r.value)};
        return {true, "dim 63 / dim 36, rank 4"};
    });
    s.run(4, "sigma-tau-not-strongly-commuting", [&]() -> Outcome {
        bool sc = strongly_commute(l, m.sigma(), m.tau(), rank_l.value, opt.seed);
        return {!sc, sc ? "unexpectedly strongly commute" : "rank drop detected"};
    });

    if (opt.progress)
        (*opt.progress) << "[quasitorus] strong-commutation table\n";
    Z42Data z = make_z42(m);
    s.run(5, "quasitorus-commutation-table", [&] { return e7_z42_table(m, opt.seed); });
    s.run(5, "quasitorus-squares-unobstructed", [&] { return e7_z42_squares(m, z, rank_l.value, opt.seed); });
    s.run(5, "quasitorus-eps-image-is-sigma", [&] { return e7_z42_eps_is_sigma(m, z); });
    s.run(5, "quasitorus-group-structure", [&] { return e7_z42_group_structure(z); });
    s.run(0, "quasitorus-torus-samples", [&] { return e7_z42_torus_samples(m, z, rank_l.value, opt.seed); });

    s.run(6, "contraction-kernel-fixed-pointwise", [&] { return e7_contraction_kernel(m); });
    s.run(6, "full-contraction-dual-element", [&] { return e7_b_tilde(m); });
    s.run(6, "tau-minus-eigenspace-dimension", [&] { return e7_tau_minus_eigenspace(m); });
    s.run(6, "sp-component-annihilates-dual-element", [&] { return e7_sp_annihilates_b_tilde(m); });

    s.run(0, "omega-invariance", [&] { return e7_omega_invariance(m); });
    s.run(0, "killing-form-nondegenerate", [&] { return e7_killing(m); });
    s.run(0, "phi-functorial-samples", [&] { return e7_phi_functorial(m); });
    s.run(0, "tau-adjoint-rule-samples", [&] { return e7_tau_star_samples(m); });
    return s.claims;
}

std::vector<Claim> verify_all(const SuiteOptions& opt)
{
    std::vector<Claim> all;
    for (auto* suite : {&verify_e7_model, &verify_pauli, &verify_weights, &verify_decisions,
                        &verify_groups}) {
        std::vector<Claim> part = (*suite)(opt);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace liegrade
