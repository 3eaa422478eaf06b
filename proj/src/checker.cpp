#include "ail/checker.hpp"

#include <algorithm>

namespace ail {

Evaluator::Evaluator(const EpistemicModel& m) : m_(&m), rels_(derive_relations(m)) {}

AtomMask Evaluator::formula_atom_mask(const FormulaPtr& f) {
    auto it = atom_mask_memo_.find(f.get());
    if (it != atom_mask_memo_.end()) return it->second;
    AtomMask mask = 0;
    for (const auto& name : atoms_of(f)) {
        auto p = m_->atom_index(name);
        if (!p) throw AilError("undeclared atom: " + name);
        mask |= AtomMask{1} << *p;
    }
    atom_mask_memo_[f.get()] = mask;
    return mask;
}

bool Evaluator::satisfies(std::size_t world, const FormulaPtr& f) {
    if (world >= m_->world_count()) throw AilError("world index out of range");
    if (has_dynamic_under_aware(f))
        throw AilError("dynamic operator inside an A[..] operand: " + to_string(f));
    // The memo is keyed by node address; pin the tree so keys stay unique
    // across repeated queries on one evaluator.
    roots_.push_back(f);
    return eval(world, f);
}

bool Evaluator::eval(std::size_t world, const FormulaPtr& f) {
    auto key = std::make_pair(f.get(), world);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool result = false;
    switch (f->op) {
        case Op::Atom: {
            auto p = m_->atom_index(f->name);
            if (!p) throw AilError("undeclared atom: " + f->name);
            result = m_->val(*p, world);
            break;
        }
        case Op::Not:
            result = !eval(world, f->lhs);
            break;
        case Op::And:
            result = eval(world, f->lhs) && eval(world, f->rhs);
            break;
        case Op::Or:
            result = eval(world, f->lhs) || eval(world, f->rhs);
            break;
        case Op::Implies:
            result = !eval(world, f->lhs) || eval(world, f->rhs);
            break;
        case Op::Iff:
            result = eval(world, f->lhs) == eval(world, f->rhs);
            break;
        case Op::Aware: {
            auto i = m_->agent_index(f->name);
            if (!i) throw AilError("undeclared agent: " + f->name);
            AtomMask needed = formula_atom_mask(f->lhs);
            result = (needed & ~m_->awareness[*i][world]) == 0;
            break;
        }
        case Op::Implicit:
        case Op::SimBox:
        case Op::EkBox: {
            auto i = m_->agent_index(f->name);
            if (!i) throw AilError("undeclared agent: " + f->name);
            const Partition& part = f->op == Op::Implicit ? rels_.ik[*i]
                                  : f->op == Op::SimBox   ? rels_.a_equiv[*i]
                                                          : rels_.ek[*i];
            result = true;
            for (std::size_t v = 0; v < m_->world_count(); ++v)
                if (part.same_block(world, v) && !eval(v, f->lhs)) {
                    result = false;
                    break;
                }
            break;
        }
        case Op::Explicit: {
            // A[i] operand, then the EK box over the operand.
            auto i = m_->agent_index(f->name);
            if (!i) throw AilError("undeclared agent: " + f->name);
            AtomMask needed = formula_atom_mask(f->lhs);
            result = (needed & ~m_->awareness[*i][world]) == 0;
            if (result) {
                const Partition& ek = rels_.ek[*i];
                for (std::size_t v = 0; v < m_->world_count(); ++v)
                    if (ek.same_block(world, v) && !eval(v, f->lhs)) {
                        result = false;
                        break;
                    }
            }
            break;
        }
        case Op::AddAware:
        case Op::DelAware: {
            auto i = m_->agent_index(f->name);
            if (!i) throw AilError("undeclared agent: " + f->name);
            EpistemicModel updated = update_awareness(
                *m_, *i, atom_mask(*m_, f->atom_set),
                f->op == Op::AddAware ? AwarenessUpdate::Add : AwarenessUpdate::Remove);
            Evaluator sub(updated);
            result = sub.eval(world, f->lhs);
            break;
        }
    }
    memo_[key] = result;
    return result;
}

bool satisfies(const EpistemicModel& m, const std::string& world, const FormulaPtr& f) {
    auto w = m.world_index(world);
    if (!w) throw AilError("undeclared world: " + world);
    require_valid(m);
    Evaluator ev(m);
    return ev.satisfies(*w, f);
}

bool model_valid(const EpistemicModel& m, const FormulaPtr& f) {
    require_valid(m);
    Evaluator ev(m);
    for (std::size_t w = 0; w < m.world_count(); ++w)
        if (!ev.satisfies(w, f)) return false;
    return true;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::ValidUpToBound: return "valid-up-to-bound";
        case Verdict::CountermodelFound: return "countermodel-found";
        case Verdict::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

SearchBounds resolve_bounds(const FormulaPtr& f, SearchBounds bounds) {
    if (bounds.max_worlds < 1) throw AilError("max_worlds must be at least 1");
    if (bounds.atoms.empty()) {
        auto atoms = atoms_of(f);
        bounds.atoms.assign(atoms.begin(), atoms.end());
    } else {
        for (const auto& a : atoms_of(f))
            if (std::find(bounds.atoms.begin(), bounds.atoms.end(), a) == bounds.atoms.end())
                throw AilError("formula atom " + a + " is outside the search universe");
    }
    if (bounds.agents.empty()) {
        auto agents = agents_of(f);
        bounds.agents.assign(agents.begin(), agents.end());
        if (bounds.agents.empty()) bounds.agents.push_back("i");
    } else {
        for (const auto& g : agents_of(f))
            if (std::find(bounds.agents.begin(), bounds.agents.end(), g) == bounds.agents.end())
                throw AilError("formula agent " + g + " is outside the search universe");
    }
    return bounds;
}

SearchOutcome find_countermodel(const FormulaPtr& f, SearchBounds bounds) {
    bounds = resolve_bounds(f, bounds);

    SearchOutcome out;
    out.verdict = Verdict::ValidUpToBound;
    if (!contains_dynamic(f)) out.closure_size = closure_cl(f).size();

    auto started = std::chrono::steady_clock::now();
    ModelEnumerator en(bounds.atoms, bounds.agents, bounds.max_worlds);
    while (auto m = en.next()) {
        ++out.models_checked;
        if (bounds.deadline && (out.models_checked & 0x3ff) == 0 &&
            std::chrono::steady_clock::now() - started > *bounds.deadline) {
            out.verdict = Verdict::BudgetExhausted;
            return out;
        }
        Evaluator ev(*m);
        for (std::size_t w = 0; w < m->world_count(); ++w) {
            if (!ev.satisfies(w, f)) {
                // Re-verify with a fresh evaluator before reporting.
                Evaluator fresh(*m);
                if (fresh.satisfies(w, f))
                    throw AilError("countermodel failed re-verification");
                out.verdict = Verdict::CountermodelFound;
                out.witness_world = m->worlds[w];
                out.witness_model = std::move(*m);
                return out;
            }
        }
    }
    return out;
}

std::vector<FormulaPtr> default_schema_pool() {
    auto p = make_atom("p");
    auto q = make_atom("q");
    return {p, q, make_and(p, q), make_implicit("i", p), make_aware("i", p)};
}

namespace {

bool mentions_atom(const FormulaPtr& f, const std::string& name) {
    auto atoms = atoms_of(f);
    return atoms.count(name) > 0;
}

}  // namespace

std::vector<SchemaInstance> instantiate_schema(const FormulaPtr& schema,
                                               const std::vector<FormulaPtr>& pool,
                                               const std::vector<std::string>& agents) {
    if (agents.empty()) throw AilError("schema instantiation needs agents");
    bool uses_phi = mentions_atom(schema, "phi");
    bool uses_psi = mentions_atom(schema, "psi");
    bool uses_j = agents_of(schema).count("j") > 0;

    std::vector<SchemaInstance> out;
    auto phis = uses_phi ? pool : std::vector<FormulaPtr>{nullptr};
    auto psis = uses_psi ? pool : std::vector<FormulaPtr>{nullptr};
    auto js = uses_j ? agents : std::vector<std::string>{""};

    for (const auto& gi : agents)
        for (const auto& gj : js)
            for (const auto& fphi : phis)
                for (const auto& fpsi : psis) {
                    FormulaPtr inst = schema;
                    if (fphi) inst = substitute_atom(inst, "phi", fphi);
                    if (fpsi) inst = substitute_atom(inst, "psi", fpsi);
                    inst = substitute_agent(inst, "i", gi);
                    if (uses_j) inst = substitute_agent(inst, "j", gj);
                    SchemaInstance si;
                    si.formula = inst;
                    si.phi = fphi ? to_string(fphi) : "";
                    si.psi = fpsi ? to_string(fpsi) : "";
                    si.agent_i = gi;
                    si.agent_j = uses_j ? gj : "";
                    out.push_back(std::move(si));
                }
    return out;
}

SchemaReport check_schema(const FormulaPtr& schema, const std::vector<FormulaPtr>& pool,
                          const SearchBounds& bounds) {
    std::vector<std::string> agents = bounds.agents.empty()
                                          ? std::vector<std::string>{"i", "j"}
                                          : bounds.agents;
    SchemaReport report;
    for (auto& inst : instantiate_schema(schema, pool, agents)) {
        SearchBounds b;
        b.max_worlds = bounds.max_worlds;
        b.deadline = bounds.deadline;
        InstanceReport ir{inst, find_countermodel(inst.formula, b)};
        if (ir.outcome.verdict == Verdict::CountermodelFound) report.any_countermodel = true;
        if (ir.outcome.verdict != Verdict::ValidUpToBound) report.all_valid_up_to_bound = false;
        report.instances.push_back(std::move(ir));
    }
    return report;
}

}  // namespace ail
