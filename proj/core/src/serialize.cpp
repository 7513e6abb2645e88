#include "liegrade/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace liegrade {

Json int_to_json(const Int& v)
{
    if (v.fits_slong_p())
        return static_cast<long>(v.get_si());
    return v.get_str();
}

Int int_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return Int(j.get<std::string>());
    throw Error("expected an integer (number or decimal string)");
}

Json group_to_json(const AbelianGroup& g)
{
    Json factors = Json::array();
    for (const Int& d : g.torsion_orders())
        factors.push_back(int_to_json(d));
    return Json{{"free_rank", g.free_rank()}, {"invariant_factors", factors}};
}

AbelianGroup group_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("free_rank") || !j.contains("invariant_factors"))
        throw Error("group JSON needs free_rank and invariant_factors");
    std::vector<Int> factors;
    for (const auto& f : j.at("invariant_factors"))
        factors.push_back(int_from_json(f));
    return AbelianGroup(j.at("free_rank").get<int>(), std::move(factors));
}

Json elt_to_json(const Elt& e)
{
    Json a = Json::array();
    for (const Int& c : e)
        a.push_back(int_to_json(c));
    return a;
}

Elt elt_from_json(const Json& j)
{
    if (!j.is_array())
        throw Error("element JSON must be an array of integers");
    Elt e;
    for (const auto& c : j)
        e.push_back(int_from_json(c));
    return e;
}

Json intmat_to_json(const IntMat& m)
{
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMat intmat_from_json(const Json& j)
{
    if (!j.is_array())
        throw Error("matrix JSON must be an array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& r : j) {
        if (!r.is_array())
            throw Error("matrix JSON must be an array of rows");
        std::vector<Int> row;
        for (const auto& c : r)
            row.push_back(int_from_json(c));
        rows.push_back(std::move(row));
    }
    return IntMat::from_rows(rows);
}

Json hom_to_json(const Hom& h)
{
    return Json{{"domain", group_to_json(h.domain())},
                {"codomain", group_to_json(h.codomain())},
                {"matrix", intmat_to_json(h.matrix())}};
}

Hom hom_from_json(const Json& j)
{
    return Hom(group_from_json(j.at("domain")), group_from_json(j.at("codomain")),
               intmat_from_json(j.at("matrix")));
}

Json subgroup_to_json(const Subgroup& s)
{
    Json gens = Json::array();
    for (const Elt& g : s.generators())
        gens.push_back(elt_to_json(g));
    const auto& cn = s.canon();
    return Json{{"generators", gens},
                {"order", int_to_json(s.order())},
                {"shape", group_to_json(cn.group)}};
}

Json cyc_to_json(const Cyc& c)
{
    Json a = Json::array();
    for (const std::string& s : c.coord_strings())
        a.push_back(s);
    return a;
}

Json cyc_matrix_to_json(const Mat<Cyc>& m)
{
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json bichar_to_json(const Bichar& b)
{
    return Json{{"group", group_to_json(b.group())},
                {"exponent_matrix", intmat_to_json(b.exponents())},
                {"value_order", int_to_json(b.value_order())}};
}

Json brauer_class_to_json(const BrauerClass& c)
{
    return Json{{"support", subgroup_to_json(c.support)},
                {"beta_on_support", bichar_to_json(c.beta_on_support)},
                {"degree", int_to_json(c.degree)}};
}

Json weight_to_json(const Weight& w)
{
    return elt_to_json(w);
}

Weight weight_from_csv(const std::string& csv, LieType t)
{
    Weight w;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ','))
        w.push_back(Int(tok));
    RootSystem::get(t).check_weight_arity(w);
    return w;
}

Json entry_to_json(const FineGradingEntry& e)
{
    Json j{{"id", e.id},
           {"algebra", type_name(e.algebra)},
           {"universal_group", group_to_json(e.universal)},
           {"universal_group_name", e.universal.to_string()}};
    if (e.algebra == LieType::E6)
        j["kind"] = e.outer ? "outer" : "inner";
    j["distinguished_element"] = e.h ? elt_to_json(*e.h) : Json(nullptr);
    j["distinguished_subgroup"] = e.t ? subgroup_to_json(*e.t) : Json(nullptr);
    j["trivial_invariants"] = e.trivial_invariants();
    if (e.h_by_convention)
        j["h_by_convention"] = true;
    j["note"] = e.note;
    return j;
}

Json report_to_json(const BrauerReport& r)
{
    Json orbit = Json::array();
    for (const Weight& w : r.orbit)
        orbit.push_back(weight_to_json(w));
    Json summands = Json::array();
    for (const auto& [w, k] : r.summands)
        summands.push_back(Json{{"lambda", weight_to_json(w)}, {"multiplicity", int_to_json(k)}});
    return Json{{"schema_version", kSchemaVersion},
                {"algebra", type_name(r.algebra)},
                {"entry", r.entry_id},
                {"lambda", weight_to_json(r.lambda)},
                {"H_lambda", subgroup_to_json(r.h_lambda)},
                {"quotient", group_to_json(r.quotient)},
                {"support", subgroup_to_json(r.support)},
                {"schur_index", int_to_json(r.schur_index)},
                {"orbit", orbit},
                {"graded_simple_dim", int_to_json(r.graded_simple_dim)},
                {"summands", summands},
                {"notes", r.notes}};
}

Json verdict_to_json(const CompatibilityVerdict& v)
{
    return Json{{"compatible", v.compatible}, {"reasons", v.reasons}};
}

namespace {

std::string cyc_csv(const Cyc& c)
{
    std::string s;
    for (const std::string& part : c.coord_strings()) {
        if (!s.empty())
            s += ",";
        s += part;
    }
    return s;
}

Cyc cyc_from_csv(const std::string& s)
{
    std::vector<std::string> parts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ','))
        parts.push_back(tok);
    if (parts.size() == 1)
        parts.resize(Cyc::kDegree, "0");
    return Cyc::from_coord_strings(parts);
}

}  // namespace

Json lie_to_json(const LieAlgebra& l)
{
    Json labels = Json::array();
    bool have_labels = !l.label(0).empty();
    if (have_labels)
        for (int i = 0; i < l.dim(); ++i)
            labels.push_back(l.label(i));
    Json entries = Json::array();
    for (int i = 0; i < l.dim(); ++i)
        for (int j = i + 1; j < l.dim(); ++j)
            for (const auto& [k, c] : l.bracket_basis(i, j))
                entries.push_back(Json::array({i, j, k, cyc_csv(c)}));
    Json doc{{"schema_version", kSchemaVersion}, {"dim", l.dim()}, {"entries", entries}};
    if (have_labels)
        doc["labels"] = labels;
    return doc;
}

LieAlgebra lie_from_json(const Json& j)
{
    int dim = j.at("dim").get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& s : j.at("labels"))
            labels.push_back(s.get<std::string>());
    LieAlgebra l(dim, std::move(labels));
    std::map<std::pair<int, int>, SVec> table;
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 4)
            throw Error("structure-constant entries must be [i, j, k, coefficient]");
        int i = e.at(0).get<int>(), jj = e.at(1).get<int>(), k = e.at(2).get<int>();
        if (i >= jj)
            throw Error("structure-constant entries must have i < j");
        table[{i, jj}].emplace_back(k, cyc_from_csv(e.at(3).get<std::string>()));
    }
    for (auto& [key, v] : table) {
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        l.set_bracket(key.first, key.second, std::move(v));
    }
    return l;
}

ModuleSpec module_from_json(const Json& j, LieType t)
{
    const Json* arr = nullptr;
    if (j.is_array())
        arr = &j;
    else if (j.is_object() && j.contains("module"))
        arr = &j.at("module");
    else
        throw Error("module JSON must be a list or an object with a 'module' list");
    ModuleSpec m;
    for (const auto& item : *arr) {
        Weight w;
        for (const auto& c : item.at("lambda"))
            w.push_back(int_from_json(c));
        RootSystem::get(t).check_weight_arity(w);
        Int mult = item.contains("multiplicity") ? int_from_json(item.at("multiplicity")) : Int(1);
        m.summands.emplace_back(std::move(w), std::move(mult));
    }
    return m;
}

}  // namespace liegrade
