// invariants.hpp — the decision layer: the catalog of fine gradings for E6
// and E7, graded Brauer invariants and Schur indices of simple modules under
// any induced grading, module-compatibility verdicts and graded-simple
// module descriptions.
#pragma once

#include "liegrade/abelian.hpp"
#include "liegrade/roots_weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liegrade {

struct FineGradingEntry {
    LieType algebra = LieType::E6;
    std::string id;            // universal-group string, "-inner"/"-outer" where needed
    AbelianGroup universal;    // fixed coordinates, documented in `note`
    bool outer = false;        // meaningful for E6 only (E7 has no outer gradings)
    std::optional<Elt> h;      // distinguished order-2 element (outer E6; one E7 entry)
    std::optional<Subgroup> t; // distinguished subgroup carrying the invariant
    // h was picked canonically among equivalent order-2 candidates; reports
    // flag verdicts that could depend on that choice
    bool h_by_convention = false;
    std::optional<Subgroup> h_candidates;  // where the true h is known to live
    std::string note;

    bool trivial_invariants() const { return !t.has_value(); }
};

// Exactly 14 entries per type.
const std::vector<FineGradingEntry>& catalog(LieType t);
const FineGradingEntry& catalog_entry(LieType t, const std::string& id);

struct ModuleSpec {
    std::vector<std::pair<Weight, Int>> summands;  // (highest weight, multiplicity >= 1)
};

struct BrauerReport {
    LieType algebra;
    std::string entry_id;
    Weight lambda;
    Subgroup h_lambda;          // finite subgroup of the target group G
    AbelianGroup quotient;      // G / H_lambda
    Hom quotient_projection;
    Subgroup support;           // subgroup of the quotient
    Int schur_index;            // sqrt(|support|), one of 1, 2, 3
    std::vector<Weight> orbit;  // {lambda} or {lambda, sigma(lambda)}
    Int graded_simple_dim;      // |orbit| * schur_index * weyl_dim(lambda)
    std::vector<std::pair<Weight, Int>> summands;
    std::vector<std::string> notes;
};

// nu maps the entry's universal group into the grading group; lambda is a
// dominant weight for the entry's algebra type.
BrauerReport brauer_report(const FineGradingEntry& entry, const Hom& nu, const Weight& lambda);

struct CompatibilityVerdict {
    bool compatible = false;
    std::vector<std::string> reasons;
};
CompatibilityVerdict module_compatible(const FineGradingEntry& entry, const Hom& nu,
                                       const ModuleSpec& mod);

struct GradedSimpleDescription {
    std::vector<Weight> orbit;
    Int schur_index;
    std::vector<std::pair<Weight, Int>> summands;
    Int total_dim;
};
GradedSimpleDescription graded_simple_description(const FineGradingEntry& entry, const Hom& nu,
                                                  const Weight& lambda);

}  // namespace liegrade
