#include "liegrade/invariants.hpp"

#include <algorithm>
#include <map>

namespace liegrade {

namespace {

Elt coords(const AbelianGroup& g, std::vector<long> v)
{
    Elt e(v.begin(), v.end());
    return g.reduce(std::move(e));
}

Subgroup span(const AbelianGroup& g, std::vector<std::vector<long>> gens)
{
    std::vector<Elt> es;
    for (auto& v : gens)
        es.push_back(coords(g, std::move(v)));
    return Subgroup(g, std::move(es));
}

std::vector<FineGradingEntry> make_e6_catalog()
{
    std::vector<FineGradingEntry> out;
    auto add = [&](FineGradingEntry e) { out.push_back(std::move(e)); };

    // --- inner ---
    {
        FineGradingEntry e;
        e.algebra = LieType::E6;
        e.id = "Z^6";
        e.universal = AbelianGroup::free(6);
        e.note = "Cartan grading; trivial invariants";
        add(std::move(e));
    }
    {
        FineGradingEntry e;
        e.algebra = LieType::E6;
        e.id = "Z^2xZ2^3-inner";
        e.universal = AbelianGroup(2, {2, 2, 2});
        e.note = "no 3-torsion; trivial invariants";
        add(std::move(e));
    }
    {
        FineGradingEntry e;
        e.algebra = LieType::E6;
        e.id = "Z^2xZ3^2";
        e.universal = AbelianGroup(2, {3, 3});
        e.t = span(e.universal, {{0, 0, 1, 0}, {0, 0, 0, 1}});
        e.note = "Cayley torus times the order-3 matrix pair; T is the 3-torsion "
                 "(coordinates 3,4)";
        add(std::move(e));
    }
    {
        FineGradingEntry e;
        e.algebra = LieType::E6;
        e.id = "Z2^3xZ3^2";
        e.universal = AbelianGroup(0, {2, 2, 2, 3, 3});
        e.t = span(e.universal, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
        e.note = "Cayley Z2^3 times the order-3 matrix pair; T is the 3-torsion "
                 "(coordinates 4,5)";
        add(std::move(e));
    }
    {
        FineGradingEntry e;
        e.algebra = LieType::E6;
        e.id = "Z3^4";
        e.universal = AbelianGroup::elementary(3, 4);
        e.t = span(e.universal, {{1, 0, 0, 0}, {0, 1, 0, 0}});
        e.note = "T is the leading Z3^2 factor (the nontoral order-3 pair of the "
                 "triality construction); the trailing Z3^2 is the radical side";
        add(std::move(e));
    }

    // --- outer (all invariants trivial; h is the distinguished order-2 element) ---
    auto outer = [&](std::string id, AbelianGroup g, std::vector<long> h, std::string note,
                     bool conventional = false, std::optional<Subgroup> cands = std::nullopt) {
        FineGradingEntry e;
        e.algebra = LieType::E6;
        e.id = std::move(id);
        e.universal = std::move(g);
        e.outer = true;
        e.h = coords(e.universal, std::move(h));
        e.h_by_convention = conventional;
        e.h_candidates = std::move(cands);
        e.note = std::move(note);
        add(std::move(e));
    };
    outer("Z^4xZ2", AbelianGroup(4, {2}), {0, 0, 0, 0, 1},
          "h is the unique order-2 element");
    outer("Z^2xZ2^3-outer", AbelianGroup(2, {2, 2, 2}), {0, 0, 1, 0, 0},
          "h in the leading torsion coordinate");
    outer("ZxZ2^5", AbelianGroup(1, {2, 2, 2, 2, 2}), {0, 1, 0, 0, 0, 0},
          "h in the leading torsion coordinate");
    outer("ZxZ2^4", AbelianGroup(1, {2, 2, 2, 2}), {0, 1, 0, 0, 0},
          "h in the leading torsion coordinate");
    outer("Z2xZ3^3", AbelianGroup(0, {2, 3, 3, 3}), {1, 0, 0, 0},
          "h is the unique order-2 element");
    outer("Z2^7", AbelianGroup::elementary(2, 7), {1, 0, 0, 0, 0, 0, 0},
          "h in the leading coordinate");
    outer("Z2^6", AbelianGroup::elementary(2, 6), {1, 0, 0, 0, 0, 0},
          "h in the leading coordinate");
    {
        AbelianGroup g(0, {4, 4, 4});
        Subgroup cands = span(g, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
        outer("Z4^3", g, {2, 0, 0},
              "h stored as twice the first generator; canonical up to equivalence",
              true, cands);
    }
    {
        AbelianGroup g(0, {4, 2, 2, 2, 2});
        Subgroup cands = span(g, {{2, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0},
                                  {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
        outer("Z4xZ2^4", g, {2, 0, 0, 0, 0},
              "h stored as twice the Z4 generator; canonical up to equivalence",
              true, cands);
    }
    return out;
}

std::vector<FineGradingEntry> make_e7_catalog()
{
    std::vector<FineGradingEntry> out;

    // the seven gradings refining the sigma-tau pair: T is the leading Z2^2
    auto sp_family = [&](std::string id, AbelianGroup g, std::vector<std::vector<long>> tgens) {
        FineGradingEntry e;
        e.algebra = LieType::E7;
        e.id = std::move(id);
        e.universal = std::move(g);
        e.t = span(e.universal, std::move(tgens));
        e.note = "sigma-tau factor times a maximal quasitorus of the symplectic "
                 "quotient; T is the order-2 pair (leading torsion coordinates)";
        out.push_back(std::move(e));
    };
    sp_family("Z^4xZ2^2", AbelianGroup(4, {2, 2}),
              {{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
    sp_family("Z^2xZ2^4", AbelianGroup(2, {2, 2, 2, 2}),
              {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
    sp_family("ZxZ2^5", AbelianGroup(1, {2, 2, 2, 2, 2}),
              {{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}});
    sp_family("ZxZ2^6", AbelianGroup(1, {2, 2, 2, 2, 2, 2}),
              {{0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0}});
    sp_family("Z2^7", AbelianGroup::elementary(2, 7),
              {{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}});
    sp_family("Z2^5xZ4", AbelianGroup(0, {2, 2, 2, 2, 2, 4}),
              {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
    sp_family("Z2^8", AbelianGroup::elementary(2, 8),
              {{1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}});

    // trivial-invariant entries
    auto trivial = [&](std::string id, AbelianGroup g, std::string note) {
        FineGradingEntry e;
        e.algebra = LieType::E7;
        e.id = std::move(id);
        e.universal = std::move(g);
        e.note = std::move(note);
        out.push_back(std::move(e));
    };
    trivial("Z^7", AbelianGroup::free(7), "Cartan grading; trivial invariants");
    trivial("ZxZ3^3", AbelianGroup(1, {3, 3, 3}), "no 2-torsion; trivial invariants");
    trivial("Z^3xZ2^3", AbelianGroup(3, {2, 2, 2}),
            "octonion Z2^3 times a torus; trivial invariants");

    // tensor-split quasitori: T is the 2-torsion inside the Z4^2 factor
    {
        FineGradingEntry e;
        e.algebra = LieType::E7;
        e.id = "Z2^3xZ4^2";
        e.universal = AbelianGroup(0, {2, 2, 2, 4, 4});
        e.t = span(e.universal, {{0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}});
        e.note = "tensor-split quasitorus; T is the order-2 subgroup of the Z4^2 factor";
        out.push_back(std::move(e));
    }
    {
        FineGradingEntry e;
        e.algebra = LieType::E7;
        e.id = "ZxZ2xZ4^2";
        e.universal = AbelianGroup(1, {2, 4, 4});
        e.t = span(e.universal, {{0, 0, 2, 0}, {0, 0, 0, 2}});
        e.note = "tensor-split quasitorus with a one-parameter factor; T is the "
                 "order-2 subgroup of the Z4^2 factor";
        out.push_back(std::move(e));
    }

    {
        FineGradingEntry e;
        e.algebra = LieType::E7;
        e.id = "Z2^2xZ3^3";
        e.universal = AbelianGroup(0, {2, 2, 3, 3, 3});
        e.t = span(e.universal, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}});
        e.note = "quaternion pair times the 27-dimensional-algebra Z3^3; T is the 2-torsion";
        out.push_back(std::move(e));
    }
    {
        FineGradingEntry e;
        e.algebra = LieType::E7;
        e.id = "Z2xZ4^3";
        e.universal = AbelianGroup(0, {2, 4, 4, 4});
        e.h = coords(e.universal, {0, 2, 0, 0});
        e.h_by_convention = true;
        e.h_candidates = span(e.universal, {{0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
        e.t = span(e.universal, {{1, 0, 0, 0}, {0, 2, 0, 0}});
        e.note = "56-dimensional structurable-algebra grading; T joins the Z2 factor "
                 "with the order-2 element h of the Z4^3 factor (h stored as twice "
                 "the first Z4 generator, canonical up to equivalence)";
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

const std::vector<FineGradingEntry>& catalog(LieType t)
{
    static const std::vector<FineGradingEntry> e6 = make_e6_catalog();
    static const std::vector<FineGradingEntry> e7 = make_e7_catalog();
    if (t == LieType::E6)
        return e6;
    if (t == LieType::E7)
        return e7;
    throw Error("catalog exists only for E6 and E7");
}

const FineGradingEntry& catalog_entry(LieType t, const std::string& id)
{
    for (const auto& e : catalog(t))
        if (e.id == id)
            return e;
    // allow the bare universal-group string when it is unambiguous
    const FineGradingEntry* found = nullptr;
    for (const auto& e : catalog(t)) {
        if (e.id.rfind(id + "-", 0) == 0) {
            if (found)
                throw Error("entry id '" + id + "' is ambiguous; use -inner or -outer");
            found = &e;
        }
    }
    if (found)
        return *found;
    throw Error("no catalog entry '" + id + "' for " + type_name(t));
}

namespace {

void check_entry_weight(const FineGradingEntry& entry, const Weight& lambda)
{
    RootSystem::get(entry.algebra).check_weight_arity(lambda);
    for (const Int& m : lambda)
        if (m < 0)
            throw Error("weight coefficients must be nonnegative");
}

void check_nu(const FineGradingEntry& entry, const Hom& nu)
{
    if (nu.domain() != entry.universal)
        throw ArityError("nu must be defined on the universal group " +
                         entry.universal.to_string() + " of entry " + entry.id);
}

// Flags verdicts that may hinge on the canonical choice of h: nu kills some
// order-2 candidates but not others.
std::optional<std::string> convention_note(const FineGradingEntry& entry, const Hom& nu)
{
    if (!entry.h_by_convention || !entry.h_candidates)
        return std::nullopt;
    const AbelianGroup& cand = entry.h_candidates->canon().group;
    const auto& gens = entry.h_candidates->canon().gens;
    bool killed = false, kept = false;
    for (const Elt& z : cand.elements(Int(4096))) {
        // realize the abstract element inside the universal group
        Elt g = entry.universal.zero();
        for (int i = 0; i < cand.n(); ++i)
            if (z[static_cast<size_t>(i)] != 0)
                g = entry.universal.add(
                    g, entry.universal.scale(z[static_cast<size_t>(i)], gens[static_cast<size_t>(i)]));
        if (entry.universal.order_of(g) != 2)
            continue;
        if (nu.codomain().is_zero(nu.apply(g)))
            killed = true;
        else
            kept = true;
    }
    if (killed && kept)
        return "the distinguished order-2 element is a convention and nu separates "
               "order-2 candidates; the verdict may depend on that choice";
    return std::nullopt;
}

}  // namespace

BrauerReport brauer_report(const FineGradingEntry& entry, const Hom& nu, const Weight& lambda)
{
    check_entry_weight(entry, lambda);
    check_nu(entry, nu);
    const RootSystem& rs = RootSystem::get(entry.algebra);
    const AbelianGroup& g = nu.codomain();

    BrauerReport rep;
    rep.algebra = entry.algebra;
    rep.entry_id = entry.id;
    rep.lambda = lambda;

    // inertia data: only outer E6 gradings can merge weights
    rep.h_lambda = Subgroup::trivial(g);
    rep.orbit = {lambda};
    if (entry.algebra == LieType::E6 && entry.outer) {
        Weight swapped = e6_diagram_involution(lambda);
        if (swapped != lambda) {
            Elt nh = nu.apply(*entry.h);
            if (!g.is_zero(nh)) {
                rep.h_lambda = Subgroup(g, {nh});
                rep.orbit.push_back(std::move(swapped));
                rep.notes.push_back("outer grading: the two diagram-conjugate weights merge");
            } else {
                rep.notes.push_back("nu kills h: the induced grading is inner");
            }
        }
    }

    QuotientResult q = quotient(g, rep.h_lambda);
    rep.quotient = q.group;
    rep.quotient_projection = q.projection;

    Int cls = rs.center_class(lambda);
    bool support_nontrivial = false;
    if (entry.t && cls != 0) {
        if (nu.is_injective_on(*entry.t))
            support_nontrivial = true;
        else
            rep.notes.push_back("nu is not injective on the distinguished subgroup: invariant trivial");
    } else if (entry.t && cls == 0) {
        rep.notes.push_back("weight class is trivial modulo the root lattice: invariant trivial");
    } else if (!entry.t) {
        rep.notes.push_back("entry carries no distinguished subgroup: invariant trivial");
    }

    if (support_nontrivial) {
        std::vector<Elt> gens;
        for (const Elt& tg : entry.t->generators())
            gens.push_back(rep.quotient_projection.apply(nu.apply(tg)));
        rep.support = Subgroup(rep.quotient, std::move(gens));
        rep.notes.push_back("support is the image of the distinguished subgroup");
    } else {
        rep.support = Subgroup::trivial(rep.quotient);
    }

    Int size = rep.support.order();
    rep.schur_index = sqrt(size);
    if (rep.schur_index * rep.schur_index != size)
        throw Error("support order " + size.get_str() + " is not a perfect square");

    if (auto note = convention_note(entry, nu))
        rep.notes.push_back(*note);

    Int wd = rs.weyl_dim(lambda);
    rep.graded_simple_dim = Int(static_cast<long>(rep.orbit.size())) * rep.schur_index * wd;
    for (const Weight& w : rep.orbit)
        rep.summands.emplace_back(w, rep.schur_index);
    return rep;
}

CompatibilityVerdict module_compatible(const FineGradingEntry& entry, const Hom& nu,
                                       const ModuleSpec& mod)
{
    check_nu(entry, nu);
    const RootSystem& rs = RootSystem::get(entry.algebra);
    for (const auto& [w, mult] : mod.summands) {
        check_entry_weight(entry, w);
        if (mult < 1)
            throw Error("module multiplicities must be positive");
    }

    CompatibilityVerdict v;
    v.compatible = true;

    if (entry.algebra == LieType::E6 && entry.outer) {
        Elt nh = nu.apply(*entry.h);
        if (nu.codomain().is_zero(nh)) {
            v.reasons.push_back("nu kills h, the induced grading is inner and outer-type "
                                "invariants vanish: every module is compatible");
            return v;
        }
        std::map<Weight, Int> mult;
        for (const auto& [w, m] : mod.summands)
            mult[w] += m;
        for (const auto& [w, m] : mult) {
            Weight sw = e6_diagram_involution(w);
            Int other = mult.count(sw) ? mult.at(sw) : Int(0);
            if (m != other) {
                v.compatible = false;
                v.reasons.push_back("multiplicity of a weight differs from its diagram "
                                    "conjugate (outer grading)");
                break;
            }
        }
        if (v.compatible)
            v.reasons.push_back("outer grading: diagram-conjugate multiplicities match");
        return v;
    }

    if (entry.trivial_invariants()) {
        v.reasons.push_back("entry has trivial invariants: every module is compatible");
        return v;
    }
    if (!nu.is_injective_on(*entry.t)) {
        v.reasons.push_back("nu is not injective on the distinguished subgroup: every "
                            "module is compatible");
        return v;
    }
    Int p = rs.class_modulus();
    if (auto note = convention_note(entry, nu))
        v.reasons.push_back(*note);
    for (const auto& [w, m] : mod.summands) {
        if (rs.center_class(w) == 0)
            continue;
        if (m % p != 0) {
            v.compatible = false;
            v.reasons.push_back("a weight with nontrivial class has multiplicity not "
                                "divisible by " + p.get_str());
            return v;
        }
    }
    v.reasons.push_back("all nontrivial-class multiplicities are divisible by " + p.get_str());
    return v;
}

GradedSimpleDescription graded_simple_description(const FineGradingEntry& entry, const Hom& nu,
                                                  const Weight& lambda)
{
    BrauerReport rep = brauer_report(entry, nu, lambda);
    GradedSimpleDescription d;
    d.orbit = rep.orbit;
    d.schur_index = rep.schur_index;
    d.summands = rep.summands;
    d.total_dim = rep.graded_simple_dim;
    return d;
}

}  // namespace liegrade
