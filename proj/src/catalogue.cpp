#include "ail/catalogue.hpp"

#include <sstream>

#include "ail/parser.hpp"

namespace ail {

std::vector<CatalogueRow> parse_catalogue(const std::string& text) {
    std::vector<CatalogueRow> rows;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string name, verdict;
        if (!(ls >> name >> verdict)) continue;  // blank
        std::string schema;
        std::getline(ls, schema);
        auto start = schema.find_first_not_of(" \t");
        if (start == std::string::npos)
            throw AilError("catalogue line " + std::to_string(line_no) + ": missing schema");
        schema.erase(0, start);
        if (verdict != "valid" && verdict != "invalid")
            throw AilError("catalogue line " + std::to_string(line_no) +
                           ": verdict must be valid or invalid");
        rows.push_back({name, verdict == "valid", schema});
    }
    return rows;
}

std::vector<FormulaPtr> catalogue_pool() {
    auto p = make_atom("p");
    auto q = make_atom("q");
    return {p, q, make_and(p, q), make_implicit("i", p)};
}

namespace {

// A[i] f <-> A[i] p1 & ... & A[i] pk over the atoms of f, one instance per
// pool formula.
std::vector<SchemaInstance> awareness_reduction_instances(const std::vector<FormulaPtr>& pool,
                                                          const std::vector<std::string>& agents) {
    std::vector<SchemaInstance> out;
    for (const auto& agent : agents)
        for (const auto& pooled : pool) {
            FormulaPtr f = substitute_agent(pooled, "i", agent);
            std::vector<FormulaPtr> conjuncts;
            for (const auto& atom : atoms_of(f))
                conjuncts.push_back(make_aware(agent, make_atom(atom)));
            SchemaInstance inst;
            inst.formula = make_iff(make_aware(agent, f), make_and_all(conjuncts));
            inst.phi = to_string(pooled);
            inst.agent_i = agent;
            out.push_back(std::move(inst));
        }
    return out;
}

}  // namespace

std::vector<CatalogueRowResult> run_catalogue(const std::vector<CatalogueRow>& rows,
                                              const std::vector<FormulaPtr>& pool,
                                              const SearchBounds& bounds) {
    std::vector<std::string> agents = bounds.agents.empty()
                                          ? std::vector<std::string>{"i"}
                                          : bounds.agents;
    std::vector<CatalogueRowResult> results;
    for (const auto& row : rows) {
        std::vector<SchemaInstance> instances;
        if (row.schema_text == "@awareness-reduction") {
            instances = awareness_reduction_instances(pool, agents);
        } else {
            instances = instantiate_schema(parse(row.schema_text), pool, agents);
        }

        CatalogueRowResult r;
        r.row = row;
        r.found_countermodel = false;
        r.exhausted_budget = false;
        r.models_checked = 0;
        r.instance_count = instances.size();
        for (const auto& inst : instances) {
            SearchBounds b;
            b.max_worlds = bounds.max_worlds;
            b.deadline = bounds.deadline;
            SearchOutcome outcome = find_countermodel(inst.formula, b);
            r.models_checked += outcome.models_checked;
            if (outcome.verdict == Verdict::BudgetExhausted) r.exhausted_budget = true;
            if (outcome.verdict == Verdict::CountermodelFound) {
                if (!r.found_countermodel) {
                    r.countermodel_instance = to_string(inst.formula);
                    r.witness_model = outcome.witness_model;
                    r.witness_world = outcome.witness_world;
                }
                r.found_countermodel = true;
                if (!row.expected_valid) break;  // one witness settles an invalid row
            }
        }
        r.pass = row.expected_valid ? (!r.found_countermodel && !r.exhausted_budget)
                                    : r.found_countermodel;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace ail
