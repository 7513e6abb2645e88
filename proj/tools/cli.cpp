#include "cli.hpp"

#include "liegrade/invariants.hpp"
#include "liegrade/pauli.hpp"
#include "liegrade/serialize.hpp"
#include "liegrade/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace liegrade::cli {

namespace {

LieType parse_type(const std::string& s)
{
    if (s == "E6" || s == "e6")
        return LieType::E6;
    if (s == "E7" || s == "e7")
        return LieType::E7;
    throw Error("unknown algebra type '" + s + "' (expected E6 or E7)");
}

void emit(const Json& doc, const std::string& output_path, std::ostream& out)
{
    std::string text = doc.dump(2) + "\n";
    if (output_path.empty()) {
        out << text;
    } else {
        std::ofstream f(output_path, std::ios::binary);
        if (!f)
            throw Error("cannot open output file " + output_path);
        f << text;
    }
}

int default_workers()
{
    if (const char* env = std::getenv("LIEGRADE_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0)
            return w;
    }
    return 0;  // hardware concurrency
}

Json run_catalog(const std::string& type_str)
{
    LieType t = parse_type(type_str);
    Json entries = Json::array();
    for (const FineGradingEntry& e : catalog(t))
        entries.push_back(entry_to_json(e));
    return Json{{"schema_version", kSchemaVersion},
                {"algebra", type_name(t)},
                {"entries", entries}};
}

Json run_report(const std::string& type_str, const std::string& entry_id, const std::string& nu_str,
                const std::string& target_str, const std::string& lambda_csv,
                const std::string& module_path, bool bourbaki)
{
    LieType t = parse_type(type_str);
    const FineGradingEntry& entry = catalog_entry(t, entry_id);

    Hom nu = Hom::identity(entry.universal);
    if (nu_str != "id") {
        AbelianGroup target = entry.universal;
        if (!target_str.empty())
            target = group_from_json(Json::parse(target_str));
        nu = Hom(entry.universal, target, intmat_from_json(Json::parse(nu_str)));
    } else if (!target_str.empty()) {
        throw Error("--target requires an explicit --nu matrix");
    }

    Weight lambda = weight_from_csv(lambda_csv, t);
    if (bourbaki)
        lambda = from_bourbaki(t, lambda);
    BrauerReport rep = brauer_report(entry, nu, lambda);

    if (bourbaki) {
        // present every weight in the document in Bourbaki numbering
        rep.lambda = to_bourbaki(t, rep.lambda);
        for (Weight& w : rep.orbit)
            w = to_bourbaki(t, w);
        for (auto& [w, k] : rep.summands)
            w = to_bourbaki(t, w);
    }
    Json doc = report_to_json(rep);
    doc["numbering"] = bourbaki ? "bourbaki" : "diagram";

    if (!module_path.empty()) {
        std::ifstream f(module_path);
        if (!f)
            throw Error("cannot read module file " + module_path);
        Json mj = Json::parse(f);
        ModuleSpec mod = module_from_json(mj, t);
        if (bourbaki)
            for (auto& [w, k] : mod.summands)
                w = from_bourbaki(t, w);
        doc["module_compatible"] = verdict_to_json(module_compatible(entry, nu, mod));
    }
    return doc;
}

Json run_pauli(int ell)
{
    PauliAlgebra alg(ell);
    Json degree_map = Json::array();
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j)
            degree_map.push_back(Json{{"degree", Json::array({i, j})},
                                      {"matrix", cyc_matrix_to_json(alg.monomial(i, j))}});
    Bichar b = alg.commutation_bicharacter();
    Json table = Json::array();
    int n2 = ell * ell;
    for (int a = 0; a < n2; ++a) {
        Json row = Json::array();
        for (int c = 0; c < n2; ++c) {
            Elt x = {Int(a / ell), Int(a % ell)};
            Elt y = {Int(c / ell), Int(c % ell)};
            row.push_back(int_to_json(b.pairing_exponent(x, y)));
        }
        table.push_back(std::move(row));
    }
    return Json{{"schema_version", kSchemaVersion},
                {"ell", ell},
                {"epsilon", cyc_to_json(alg.epsilon())},
                {"degree_map", degree_map},
                {"bicharacter", bichar_to_json(b)},
                {"commutation_exponent_table", table}};
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exceptional-Lie-algebra grading calculator"};
    app.require_subcommand(1);

    std::string output_path;
    app.add_option("--output", output_path, "write the JSON document to a file");

    auto* cat = app.add_subcommand("catalog", "list the fine-grading catalog");
    std::string cat_type;
    cat->add_option("--type", cat_type, "algebra type (E6 or E7)")->required();

    auto* rep = app.add_subcommand("report", "graded Brauer invariant of a weight");
    std::string rep_type, rep_entry, rep_nu = "id", rep_target, rep_lambda, rep_module;
    rep->add_option("--type", rep_type, "algebra type (E6 or E7)")->required();
    rep->add_option("--entry", rep_entry, "catalog entry id, e.g. Z2^8")->required();
    rep->add_option("--nu", rep_nu, "coarsening hom: 'id' or a JSON matrix (rows = target gens)");
    rep->add_option("--target", rep_target, "target group JSON for --nu (default: universal group)");
    rep->add_option("--lambda", rep_lambda, "dominant weight, comma-separated")->required();
    rep->add_option("--module", rep_module, "module file (JSON) for a compatibility verdict");
    bool rep_bourbaki = false;
    rep->add_flag("--bourbaki", rep_bourbaki, "read and write weights in Bourbaki node numbering");

    auto* pau = app.add_subcommand("pauli", "Pauli grading of the l x l matrix algebra");
    int ell = 0;
    pau->add_option("--ell", ell, "matrix size (2, 3 or 4)")->required();

    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    int workers = default_workers();
    std::uint64_t seed = kDefaultSeed;
    ver->add_option("suite", suite, "e7-model | pauli | weights | decisions | groups | all")
        ->required();
    ver->add_option("--workers", workers, "worker threads (0 = hardware)");
    ver->add_option("--seed", seed, "rank-sampling seed (testing only)");

    try {
        // CLI11's vector overload expects the arguments reversed
        std::vector<std::string> rargs(args.rbegin(), args.rend());
        app.parse(rargs);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*cat) {
            emit(run_catalog(cat_type), output_path, out);
            return 0;
        }
        if (*rep) {
            emit(run_report(rep_type, rep_entry, rep_nu, rep_target, rep_lambda, rep_module,
                            rep_bourbaki),
                 output_path, out);
            return 0;
        }
        if (*pau) {
            emit(run_pauli(ell), output_path, out);
            return 0;
        }
        if (*ver) {
            SuiteOptions opt;
            opt.workers = workers;
            opt.seed = seed;
            opt.progress = &err;
            std::vector<Claim> claims;
            if (suite == "e7-model")
                claims = verify_e7_model(opt);
            else if (suite == "pauli")
                claims = verify_pauli(opt);
            else if (suite == "weights")
                claims = verify_weights(opt);
            else if (suite == "decisions")
                claims = verify_decisions(opt);
            else if (suite == "groups")
                claims = verify_groups(opt);
            else if (suite == "all")
                claims = verify_all(opt);
            else
                throw Error("unknown suite '" + suite + "'");
            Json arr = Json::array();
            for (const Claim& c : claims) {
                Json j{{"name", c.name}, {"pass", c.pass}};
                if (!c.detail.empty())
                    j["detail"] = c.detail;
                if (c.criterion > 0)
                    j["criterion"] = c.criterion;
                arr.push_back(std::move(j));
            }
            bool ok = all_pass(claims);
            emit(Json{{"schema_version", kSchemaVersion},
                      {"suite", suite},
                      {"pass", ok},
                      {"claims", arr}},
                 output_path, out);
            if (!ok) {
                err << "first failing claim: " << first_failure(claims)->name << "\n";
                return 1;
            }
            return 0;
        }
    } catch (const ArityError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Json::exception& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace liegrade::cli
