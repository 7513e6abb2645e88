// serialize.hpp — JSON views of the core types (canonical key order, schema
// version field on every top-level document).
#pragma once

#include "liegrade/bichar.hpp"
#include "liegrade/cyclotomic.hpp"
#include "liegrade/invariants.hpp"
#include "liegrade/lie_core.hpp"
#include "liegrade/linalg.hpp"

#include <json.hpp>

namespace liegrade {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json int_to_json(const Int& v);  // number when it fits, decimal string otherwise
Int int_from_json(const Json& j);

Json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const Json& j);

Json elt_to_json(const Elt& e);
Elt elt_from_json(const Json& j);

Json hom_to_json(const Hom& h);
Hom hom_from_json(const Json& j);

Json subgroup_to_json(const Subgroup& s);

Json intmat_to_json(const IntMat& m);
IntMat intmat_from_json(const Json& j);

Json cyc_to_json(const Cyc& c);
Json cyc_matrix_to_json(const Mat<Cyc>& m);

Json bichar_to_json(const Bichar& b);
Json brauer_class_to_json(const BrauerClass& c);

Json weight_to_json(const Weight& w);
Weight weight_from_csv(const std::string& csv, LieType t);

Json entry_to_json(const FineGradingEntry& e);
Json report_to_json(const BrauerReport& r);
Json verdict_to_json(const CompatibilityVerdict& v);

ModuleSpec module_from_json(const Json& j, LieType t);

// Structure constants as sparse quadruples [i, j, k, coefficient] with i < j
// and the coefficient written as the 8 comma-separated field coordinates.
Json lie_to_json(const LieAlgebra& l);
LieAlgebra lie_from_json(const Json& j);

}  // namespace liegrade
