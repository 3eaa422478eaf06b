#ifndef AIL_CHECKER_HPP
#define AIL_CHECKER_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ail/formula.hpp"
#include "ail/generate.hpp"
#include "ail/model.hpp"

namespace ail {

struct PointedModel {
    const EpistemicModel* model;
    std::size_t world;
};

/// Memoizing evaluator bound to one model. Results are cached per
/// (subformula, world); a dynamic operator evaluates its operand in a fresh
/// evaluator over the updated model, since the derived relations change.
class Evaluator {
public:
    /// Pre: validate(m) clean. The model must outlive the evaluator.
    explicit Evaluator(const EpistemicModel& m);

    /// Truth per the satisfaction relation. Throws on undeclared
    /// atoms/agents and on dynamic operators under A[..].
    bool satisfies(std::size_t world, const FormulaPtr& f);

    const EpistemicModel& model() const { return *m_; }

private:
    bool eval(std::size_t world, const FormulaPtr& f);
    AtomMask formula_atom_mask(const FormulaPtr& f);

    const EpistemicModel* m_;
    DerivedRelations rels_;
    std::map<std::pair<const Formula*, std::size_t>, bool> memo_;
    std::map<const Formula*, AtomMask> atom_mask_memo_;
    std::vector<FormulaPtr> roots_;
};

/// One-shot satisfaction check; world given by id.
bool satisfies(const EpistemicModel& m, const std::string& world, const FormulaPtr& f);

/// Truth at every world of the model.
bool model_valid(const EpistemicModel& m, const FormulaPtr& f);

struct SearchBounds {
    std::size_t max_worlds = 4;
    /// Universe of the searched models; defaults to At(f).
    std::vector<std::string> atoms;
    /// Defaults to the agents of f, or {"i"} if f mentions none.
    std::vector<std::string> agents;
    /// Optional wall-clock budget.
    std::optional<std::chrono::milliseconds> deadline;
};

enum class Verdict { ValidUpToBound, CountermodelFound, BudgetExhausted };

std::string to_string(Verdict v);

struct SearchOutcome {
    Verdict verdict;
    /// Present iff verdict == CountermodelFound; falsifies the formula.
    std::optional<EpistemicModel> witness_model;
    std::string witness_world;
    std::uint64_t models_checked = 0;
    /// |cl(f)| when f has no dynamic operators: 2^closure_size worlds
    /// suffice for a complete search.
    std::optional<std::size_t> closure_size;
};

/// Deterministic bounded search for a falsifying pointed model: iterates the
/// model enumeration over the bound universes and returns the first world of
/// the first model where f fails. The witness is re-verified with a fresh
/// evaluator before being returned.
SearchOutcome find_countermodel(const FormulaPtr& f, SearchBounds bounds);

/// Fills in defaulted bound fields from the formula (used by the CLI too).
SearchBounds resolve_bounds(const FormulaPtr& f, SearchBounds bounds);

/// Schema instantiation: metavariable atoms "phi" and "psi" range over a
/// formula pool, metavariable agents "i" and "j" over an agent list (agent
/// metavariables inside pool formulas are substituted consistently).
struct SchemaInstance {
    FormulaPtr formula;
    std::string phi;    // printed pool choice, empty when unused
    std::string psi;
    std::string agent_i;
    std::string agent_j;
};

std::vector<SchemaInstance> instantiate_schema(const FormulaPtr& schema,
                                               const std::vector<FormulaPtr>& pool,
                                               const std::vector<std::string>& agents);

/// Default metavariable pool: p, q, p & q, I[i] p, A[i] p.
std::vector<FormulaPtr> default_schema_pool();

struct InstanceReport {
    SchemaInstance instance;
    SearchOutcome outcome;
};

struct SchemaReport {
    std::vector<InstanceReport> instances;
    bool any_countermodel = false;
    bool all_valid_up_to_bound = true;  // false also when a budget ran out
};

/// Runs find_countermodel on every instance of the schema over the pool.
SchemaReport check_schema(const FormulaPtr& schema, const std::vector<FormulaPtr>& pool,
                          const SearchBounds& bounds);

}  // namespace ail

#endif
