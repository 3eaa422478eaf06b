#ifndef AIL_PROOF_HPP
#define AIL_PROOF_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ail/formula.hpp"

namespace ail {

/// Axiom schemata of the Hilbert system, in table order. The S/C suffixes
/// follow the concrete syntax: S is the awareness-indistinguishability box,
/// C the EK box. Patterns use the metavariables phi and psi for formulas,
/// pat for an atom-only metavariable, and agents i and j.
struct SchemaDef {
    std::string name;
    std::string pattern_text;
    FormulaPtr pattern;
};

const std::vector<SchemaDef>& schema_table();

struct Substitution {
    FormulaPtr phi;
    FormulaPtr psi;
    std::string pat;      // atom bound by the atom-only metavariable
    std::string agent_i;
    std::string agent_j;
};

struct AxiomMatch {
    std::string schema;
    Substitution subst;
};

/// All schemata (except the tautology class) whose pattern subsumes f, in
/// table order. Throws on dynamic operators.
std::vector<AxiomMatch> match_axiom(const FormulaPtr& f);

class TautologyCapacityError : public AilError {
public:
    using AilError::AilError;
};

/// Abstracts maximal non-Boolean subformulas into propositional variables
/// (structurally identical subformulas share one) and decides by truth
/// table. Throws TautologyCapacityError above 20 abstracted variables.
bool is_tautology_instance(const FormulaPtr& f);

struct Justification {
    enum class Kind { Axiom, Taut, MP, GI, GSim, GEk } kind;
    std::string schema;  // Axiom
    int from = 0;        // MP antecedent / generalization premise
    int imp = 0;         // MP implication line
    std::string agent;   // generalizations
};

struct ProofLine {
    int number;
    FormulaPtr formula;
    std::string formula_text;
    Justification just;
};

struct Proof {
    std::vector<ProofLine> lines;
};

struct ProofOptions {
    /// Accept an axiom line when any schema matches, not just the named one.
    bool infer_axiom = false;
};

struct ProofResult {
    bool accepted;
    int line = 0;          // first failing line when rejected
    std::string reason;    // machine-readable, e.g. "not-an-instance"
    std::string message;
};

ProofResult check_proof(const Proof& proof, const ProofOptions& opts = {});

/// Proof file: {"lines": [{"n": 1, "formula": "...", "by": {...}}, ...]}
/// where "by" is one of {"axiom": "T_I"}, {"taut": true},
/// {"mp": {"from": j, "imp": k}}, {"gi"|"gsim"|"gek": {"from": j, "agent": "a"}}.
Proof proof_from_json(const std::string& text);
Proof proof_from_file(const std::string& path);

}  // namespace ail

#endif
