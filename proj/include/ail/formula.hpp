#ifndef AIL_FORMULA_HPP
#define AIL_FORMULA_HPP

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ail {

/// Base error type for everything this library throws on bad input.
class AilError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Op {
    Atom,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Aware,     // A[i]
    Implicit,  // I[i]
    Explicit,  // E[i]
    SimBox,    // S[i], box over the awareness-indistinguishability relation
    EkBox,     // C[i], box over the EK-accessibility relation
    AddAware,  // +[i]{..}
    DelAware,  // -[i]{..}
};

bool is_modal(Op op);
bool is_dynamic(Op op);
bool is_boolean(Op op);  // Not/And/Or/Implies/Iff

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable syntax tree node. Built through the make_* factories below;
/// children are shared, so copies are cheap and formulas can be passed
/// around freely between threads.
class Formula {
public:
    Op op;
    std::string name;                  // Atom: atom name; modal/dynamic ops: agent name
    std::vector<std::string> atom_set; // AddAware/DelAware only; sorted, unique
    FormulaPtr lhs;                    // unary ops use lhs only
    FormulaPtr rhs;

    Formula(Op op, std::string name, std::vector<std::string> atom_set,
            FormulaPtr lhs, FormulaPtr rhs)
        : op(op), name(std::move(name)), atom_set(std::move(atom_set)),
          lhs(std::move(lhs)), rhs(std::move(rhs)) {}

    bool is_atom() const { return op == Op::Atom; }
};

bool struct_equal(const FormulaPtr& a, const FormulaPtr& b);
/// Total order on formulas (structural, deterministic); backs std::set.
int struct_compare(const FormulaPtr& a, const FormulaPtr& b);

struct FormulaLess {
    bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
        return struct_compare(a, b) < 0;
    }
};
using FormulaSet = std::set<FormulaPtr, FormulaLess>;

// Factories. Identifier validity (lowercase start) is enforced by the parser
// and the model loader, not here; programmatic construction trusts the caller.
FormulaPtr make_atom(const std::string& name);
FormulaPtr make_not(FormulaPtr f);
FormulaPtr make_and(FormulaPtr a, FormulaPtr b);
FormulaPtr make_or(FormulaPtr a, FormulaPtr b);
FormulaPtr make_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr make_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr make_aware(const std::string& agent, FormulaPtr f);
FormulaPtr make_implicit(const std::string& agent, FormulaPtr f);
FormulaPtr make_explicit(const std::string& agent, FormulaPtr f);
FormulaPtr make_sim_box(const std::string& agent, FormulaPtr f);
FormulaPtr make_ek_box(const std::string& agent, FormulaPtr f);
FormulaPtr make_add_aware(const std::string& agent, std::vector<std::string> atoms, FormulaPtr f);
FormulaPtr make_del_aware(const std::string& agent, std::vector<std::string> atoms, FormulaPtr f);

/// Conjunction of a nonempty list, folded left: ((a & b) & c) ...
FormulaPtr make_and_all(const std::vector<FormulaPtr>& fs);

/// Canonical text with minimal parentheses; parse(to_string(f)) == f.
std::string to_string(const FormulaPtr& f);

/// At(f): atoms occurring in f; for +[i]{Q}/-[i]{Q} the set Q counts as well.
std::set<std::string> atoms_of(const FormulaPtr& f);
/// Agents occurring in modal or dynamic operators of f.
std::set<std::string> agents_of(const FormulaPtr& f);

/// f together with all its subformulas (reflexive).
FormulaSet subformulas(const FormulaPtr& f);

/// True iff f contains a +[i]{..} or -[i]{..} operator anywhere.
bool contains_dynamic(const FormulaPtr& f);
/// True iff some A[i] operand contains a dynamic operator (ill-formed).
bool has_dynamic_under_aware(const FormulaPtr& f);
/// True iff f stays inside the FH fragment: atoms, booleans, A/I/E only.
bool is_fh_formula(const FormulaPtr& f);

/// Rewrites |, -> and <-> into ~/& (fixed scheme: a|b => ~(~a & ~b),
/// a->b => ~(a & ~b), a<->b => desugar(a->b) & desugar(b->a)).
FormulaPtr desugar(const FormulaPtr& f);

/// Closure set cl(f): least set containing f that is closed under
/// subformulas, single negation, and the awareness / implicit / box
/// introspection rules used to bound countermodel sizes. Always finite.
/// Throws AilError when f contains dynamic operators.
FormulaSet closure_cl(const FormulaPtr& f);

/// Replaces every atom occurrence named `atom_name` by `replacement`.
/// Atoms inside +/-{..} sets are not formula positions and stay untouched.
FormulaPtr substitute_atom(const FormulaPtr& f, const std::string& atom_name,
                           const FormulaPtr& replacement);
/// Renames agent `from` to `to` in every modal/dynamic operator.
FormulaPtr substitute_agent(const FormulaPtr& f, const std::string& from,
                            const std::string& to);

}  // namespace ail

#endif
