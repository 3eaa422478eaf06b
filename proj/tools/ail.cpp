#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ail/assets.hpp"
#include "ail/catalogue.hpp"
#include "ail/checker.hpp"
#include "ail/fh.hpp"
#include "ail/formula.hpp"
#include "ail/generate.hpp"
#include "ail/model_io.hpp"
#include "ail/parser.hpp"
#include "ail/proof.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct GlobalOpts {
    bool json = false;
    bool close_ik = false;
    std::uint64_t seed = 0;
    std::size_t max_worlds = 4;
};

ail::EpistemicModel load_model(const std::string& path, const GlobalOpts& g) {
    ail::LoadOptions opts;
    opts.close_ik = g.close_ik;
    auto m = ail::model_from_file(path, opts);
    ail::require_valid(m);
    return m;
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int emit_bool(const GlobalOpts& g, bool value) {
    if (g.json)
        std::cout << ordered_json{{"result", value}}.dump() << "\n";
    else
        std::cout << (value ? "true" : "false") << "\n";
    return value ? kExitYes : kExitNo;
}

int run_countermodel(const GlobalOpts& g, const std::string& formula_text,
                     const std::string& atoms_csv, const std::string& agents_csv,
                     std::optional<long> deadline_ms) {
    auto f = ail::parse(formula_text);
    ail::SearchBounds bounds;
    bounds.max_worlds = g.max_worlds;
    bounds.atoms = split_csv(atoms_csv);
    bounds.agents = split_csv(agents_csv);
    if (deadline_ms) bounds.deadline = std::chrono::milliseconds(*deadline_ms);
    auto outcome = ail::find_countermodel(f, bounds);

    if (g.json) {
        ordered_json j;
        j["verdict"] = ail::to_string(outcome.verdict);
        j["models_checked"] = outcome.models_checked;
        if (outcome.closure_size) j["closure_size"] = *outcome.closure_size;
        if (outcome.witness_model) {
            j["witness"] = ordered_json::parse(ail::model_to_json(*outcome.witness_model));
            j["witness_world"] = outcome.witness_world;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << ail::to_string(outcome.verdict) << " (" << outcome.models_checked
                  << " models checked)\n";
        if (outcome.closure_size)
            std::cout << "complete search would need up to 2^" << *outcome.closure_size
                      << " worlds (closure size " << *outcome.closure_size << ")\n";
        if (outcome.witness_model) {
            std::cout << "falsified at world " << outcome.witness_world << " of:\n"
                      << ail::model_to_json(*outcome.witness_model) << "\n";
        }
    }
    return outcome.verdict == ail::Verdict::CountermodelFound ? kExitYes : kExitNo;
}

int run_bisim(const GlobalOpts& g, const std::string& m1_path, const std::string& w1,
              const std::string& m2_path, const std::string& w2) {
    auto m1 = load_model(m1_path, g);
    auto m2 = load_model(m2_path, g);
    auto i1 = m1.world_index(w1);
    auto i2 = m2.world_index(w2);
    if (!i1) throw ail::AilError("undeclared world: " + w1);
    if (!i2) throw ail::AilError("undeclared world: " + w2);
    auto rel = ail::find_bisimulation(m1, *i1, m2, *i2);
    if (g.json) {
        ordered_json j;
        j["bisimilar"] = rel.has_value();
        if (rel) {
            ordered_json pairs = ordered_json::array();
            for (auto [a, b] : rel->pairs) pairs.push_back({m1.worlds[a], m2.worlds[b]});
            j["relation"] = pairs;
        }
        std::cout << j.dump(2) << "\n";
    } else if (rel) {
        std::cout << "bisimilar\n";
        for (auto [a, b] : rel->pairs)
            std::cout << "  (" << m1.worlds[a] << "," << m2.worlds[b] << ")\n";
    } else {
        std::cout << "not-bisimilar\n";
    }
    return rel ? kExitYes : kExitNo;
}

int run_prove(const GlobalOpts& g, const std::string& path, bool infer_axiom) {
    auto proof = ail::proof_from_file(path);
    ail::ProofOptions opts;
    opts.infer_axiom = infer_axiom;
    auto result = ail::check_proof(proof, opts);
    if (g.json) {
        ordered_json j;
        j["accepted"] = result.accepted;
        if (!result.accepted) {
            j["line"] = result.line;
            j["reason"] = result.reason;
            j["message"] = result.message;
        }
        std::cout << j.dump(2) << "\n";
    } else if (result.accepted) {
        std::cout << "accepted\n";
    } else {
        std::cout << "rejected at line " << result.line << ": " << result.reason << " ("
                  << result.message << ")\n";
    }
    return result.accepted ? kExitYes : kExitNo;
}

int run_demo(const GlobalOpts& g) {
    auto m = ail::model_from_json(std::string(ail::assets::example4_json()));
    ail::require_valid(m);

    // The bundled three-world exam model, queried at the actual world w.
    const std::vector<std::string> checks = {
        "A[a] p2", "A[a] p3", "A[a] f3", "A[a] p4",
        "A[b] p2", "~A[b] p3", "A[b] f3", "A[b] p4",
        "I[a] f3", "I[b] f3",
        "I[a](p2 & p3 & f3 -> p4)", "I[b](p2 & p3 & f3 -> p4)",
        "I[a] p2", "I[a] p3", "I[b] p2", "I[b] p3",
        "I[a] p4", "I[b] p4",
        "~A[b] p3 & A[b](p2 & f3 & p4) & I[b](p2 & p3 & f3) & I[b](p2 & p3 & f3 -> p4) & I[b] p4 & ~E[b] p4",
        "E[a] p4",
        "E[b] p4",
    };
    // Everything above is expected true at w except the last line.
    bool all_as_expected = true;
    ordered_json rows = ordered_json::array();
    for (std::size_t k = 0; k < checks.size(); ++k) {
        bool expected = k + 1 < checks.size();
        bool actual = ail::satisfies(m, "w", ail::parse(checks[k]));
        all_as_expected &= actual == expected;
        if (g.json)
            rows.push_back({{"formula", checks[k]}, {"value", actual}, {"expected", expected}});
        else
            std::cout << checks[k] << ": " << (actual ? "true" : "false") << "\n";
    }
    if (g.json)
        std::cout << ordered_json{{"world", "w"}, {"checks", rows},
                                  {"all_as_expected", all_as_expected}}
                         .dump(2)
                  << "\n";
    return all_as_expected ? kExitYes : kExitNo;
}

int run_catalogue_cmd(const GlobalOpts& g, const std::string& pool_csv,
                      std::optional<long> deadline_ms) {
    auto rows = ail::parse_catalogue(std::string(ail::assets::catalogue_section34()));
    std::vector<ail::FormulaPtr> pool;
    if (pool_csv.empty()) {
        pool = ail::catalogue_pool();
    } else {
        for (const auto& item : split_csv(pool_csv)) pool.push_back(ail::parse(item));
    }
    ail::SearchBounds bounds;
    bounds.max_worlds = g.max_worlds;
    bounds.agents = {"i"};
    if (deadline_ms) bounds.deadline = std::chrono::milliseconds(*deadline_ms);

    auto results = ail::run_catalogue(rows, pool, bounds);
    bool all_pass = true;
    ordered_json jrows = ordered_json::array();
    for (const auto& r : results) {
        all_pass &= r.pass;
        if (g.json) {
            ordered_json j;
            j["name"] = r.row.name;
            j["expected"] = r.row.expected_valid ? "valid" : "invalid";
            j["pass"] = r.pass;
            j["models_checked"] = r.models_checked;
            if (r.found_countermodel) {
                j["countermodel_instance"] = r.countermodel_instance;
                j["witness_world"] = r.witness_world;
            }
            jrows.push_back(std::move(j));
        } else {
            std::printf("%-28s %-8s %s", r.row.name.c_str(),
                        r.row.expected_valid ? "valid" : "invalid", r.pass ? "PASS" : "FAIL");
            if (!r.pass && r.found_countermodel)
                std::printf("  (countermodel for %s at %s)", r.countermodel_instance.c_str(),
                            r.witness_world.c_str());
            if (!r.pass && !r.found_countermodel) std::printf("  (no countermodel found)");
            std::printf("\n");
        }
    }
    if (g.json)
        std::cout << ordered_json{{"rows", jrows}, {"all_pass", all_pass}}.dump(2) << "\n";
    else
        std::cout << (all_pass ? "all rows PASS" : "some rows FAIL") << "\n";
    return all_pass ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Model checking, countermodel search, proof checking and an\n"
                 "FH-logic bridge for an awareness-based epistemic logic"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    GlobalOpts g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_flag("--close-ik", g.close_ik,
                 "close ik pair lists reflexively/symmetrically/transitively on load");
    app.add_option("--seed", g.seed, "seed for sampling commands");
    app.add_option("--max-worlds", g.max_worlds, "world bound for countermodel search")
        ->check(CLI::PositiveNumber);

    std::string model_path, world, formula_text;
    std::string atoms_csv, agents_csv, pool_csv;
    std::string m1_path, w1, m2_path, w2, proof_path, demo_name = "example4",
                catalogue_name = "section34";
    std::size_t n_worlds = 3;
    bool infer_axiom = false;
    std::optional<long> deadline_ms;
    long deadline_raw = 0;

    auto* c_check = app.add_subcommand("check", "truth of a formula at a pointed model");
    c_check->add_option("-m,--model", model_path, "model file")->required();
    c_check->add_option("-w,--world", world, "world id")->required();
    c_check->add_option("-f,--formula", formula_text, "formula")->required();

    auto* c_valid = app.add_subcommand("valid", "truth at every world of a model");
    c_valid->add_option("-m,--model", model_path, "model file")->required();
    c_valid->add_option("-f,--formula", formula_text, "formula")->required();

    auto* c_counter = app.add_subcommand("countermodel", "bounded search for a falsifying model");
    c_counter->add_option("-f,--formula", formula_text, "formula")->required();
    c_counter->add_option("--atoms", atoms_csv, "atom universe (default: atoms of the formula)");
    c_counter->add_option("--agents", agents_csv, "agent universe (default: agents of the formula)");
    auto* dl1 = c_counter->add_option("--deadline-ms", deadline_raw, "wall-clock budget");

    auto* c_translate = app.add_subcommand("translate", "embed an A/I/E-fragment formula");
    c_translate->add_option("-f,--formula", formula_text, "fragment formula")->required();

    auto* c_bisim = app.add_subcommand("bisim", "decide bisimilarity of two pointed models");
    c_bisim->add_option("--m1", m1_path, "left model file")->required();
    c_bisim->add_option("--w1", w1, "left world")->required();
    c_bisim->add_option("--m2", m2_path, "right model file")->required();
    c_bisim->add_option("--w2", w2, "right world")->required();

    auto* c_fh = app.add_subcommand("fh-check", "fragment satisfaction (E = aware + implicit)");
    c_fh->add_option("-m,--model", model_path, "model file")->required();
    c_fh->add_option("-w,--world", world, "world id")->required();
    c_fh->add_option("-f,--formula", formula_text, "fragment formula")->required();

    auto* c_prove = app.add_subcommand("prove", "verify a Hilbert-style proof file");
    c_prove->add_option("-p,--proof", proof_path, "proof file")->required();
    c_prove->add_flag("--infer-axiom", infer_axiom, "accept any matching schema on axiom lines");

    auto* c_demo = app.add_subcommand("demo", "run the bundled worked example");
    c_demo->add_option("name", demo_name, "demo name (example4)");

    auto* c_catalogue = app.add_subcommand("catalogue", "run the bundled validity catalogue");
    c_catalogue->add_option("name", catalogue_name, "catalogue name (section34)");
    c_catalogue->add_option("--pool", pool_csv, "metavariable pool, comma-separated formulas");
    auto* dl2 = c_catalogue->add_option("--deadline-ms", deadline_raw, "per-search budget");

    auto* c_random = app.add_subcommand("random-model", "emit a seeded random model");
    c_random->add_option("--atoms", atoms_csv, "atom names")->required();
    c_random->add_option("--agents", agents_csv, "agent names")->required();
    c_random->add_option("--worlds", n_worlds, "world count")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitError;
    }

    try {
        if (dl1->count() || dl2->count()) deadline_ms = deadline_raw;

        if (c_check->parsed()) {
            auto m = load_model(model_path, g);
            return emit_bool(g, ail::satisfies(m, world, ail::parse(formula_text)));
        }
        if (c_valid->parsed()) {
            auto m = load_model(model_path, g);
            return emit_bool(g, ail::model_valid(m, ail::parse(formula_text)));
        }
        if (c_counter->parsed())
            return run_countermodel(g, formula_text, atoms_csv, agents_csv, deadline_ms);
        if (c_translate->parsed()) {
            auto f = ail::parse(formula_text);
            auto t = ail::translate_fh(f);
            if (g.json)
                std::cout << ordered_json{{"translation", ail::to_string(t)}}.dump() << "\n";
            else
                std::cout << ail::to_string(t) << "\n";
            return kExitYes;
        }
        if (c_bisim->parsed()) return run_bisim(g, m1_path, w1, m2_path, w2);
        if (c_fh->parsed()) {
            auto m = load_model(model_path, g);
            return emit_bool(g, ail::satisfies_fh(m, world, ail::parse(formula_text)));
        }
        if (c_prove->parsed()) return run_prove(g, proof_path, infer_axiom);
        if (c_demo->parsed()) {
            if (demo_name != "example4")
                throw ail::AilError("unknown demo: " + demo_name + " (try example4)");
            return run_demo(g);
        }
        if (c_catalogue->parsed()) {
            if (catalogue_name != "section34")
                throw ail::AilError("unknown catalogue: " + catalogue_name + " (try section34)");
            return run_catalogue_cmd(g, pool_csv, deadline_ms);
        }
        if (c_random->parsed()) {
            auto m = ail::random_model(split_csv(atoms_csv), split_csv(agents_csv), n_worlds,
                                       g.seed);
            std::cout << ail::model_to_json(m) << "\n";
            return kExitYes;
        }
    } catch (const ail::AilError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
