#include "ail/formula.hpp"

#include <algorithm>
#include <deque>

namespace ail {

bool is_modal(Op op) {
    switch (op) {
        case Op::Aware:
        case Op::Implicit:
        case Op::Explicit:
        case Op::SimBox:
        case Op::EkBox:
            return true;
        default:
            return false;
    }
}

bool is_dynamic(Op op) { return op == Op::AddAware || op == Op::DelAware; }

bool is_boolean(Op op) {
    switch (op) {
        case Op::Not:
        case Op::And:
        case Op::Or:
        case Op::Implies:
        case Op::Iff:
            return true;
        default:
            return false;
    }
}

namespace {

FormulaPtr node(Op op, std::string name, std::vector<std::string> atoms,
                FormulaPtr lhs, FormulaPtr rhs) {
    return std::make_shared<Formula>(op, std::move(name), std::move(atoms),
                                     std::move(lhs), std::move(rhs));
}

std::vector<std::string> normalize_atom_set(std::vector<std::string> atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    if (atoms.empty())
        throw AilError("dynamic operator needs a nonempty atom set");
    return atoms;
}

}  // namespace

FormulaPtr make_atom(const std::string& name) {
    return node(Op::Atom, name, {}, nullptr, nullptr);
}
FormulaPtr make_not(FormulaPtr f) {
    return node(Op::Not, "", {}, std::move(f), nullptr);
}
FormulaPtr make_and(FormulaPtr a, FormulaPtr b) {
    return node(Op::And, "", {}, std::move(a), std::move(b));
}
FormulaPtr make_or(FormulaPtr a, FormulaPtr b) {
    return node(Op::Or, "", {}, std::move(a), std::move(b));
}
FormulaPtr make_implies(FormulaPtr a, FormulaPtr b) {
    return node(Op::Implies, "", {}, std::move(a), std::move(b));
}
FormulaPtr make_iff(FormulaPtr a, FormulaPtr b) {
    return node(Op::Iff, "", {}, std::move(a), std::move(b));
}
FormulaPtr make_aware(const std::string& agent, FormulaPtr f) {
    return node(Op::Aware, agent, {}, std::move(f), nullptr);
}
FormulaPtr make_implicit(const std::string& agent, FormulaPtr f) {
    return node(Op::Implicit, agent, {}, std::move(f), nullptr);
}
FormulaPtr make_explicit(const std::string& agent, FormulaPtr f) {
    return node(Op::Explicit, agent, {}, std::move(f), nullptr);
}
FormulaPtr make_sim_box(const std::string& agent, FormulaPtr f) {
    return node(Op::SimBox, agent, {}, std::move(f), nullptr);
}
FormulaPtr make_ek_box(const std::string& agent, FormulaPtr f) {
    return node(Op::EkBox, agent, {}, std::move(f), nullptr);
}
FormulaPtr make_add_aware(const std::string& agent, std::vector<std::string> atoms, FormulaPtr f) {
    return node(Op::AddAware, agent, normalize_atom_set(std::move(atoms)), std::move(f), nullptr);
}
FormulaPtr make_del_aware(const std::string& agent, std::vector<std::string> atoms, FormulaPtr f) {
    return node(Op::DelAware, agent, normalize_atom_set(std::move(atoms)), std::move(f), nullptr);
}

FormulaPtr make_and_all(const std::vector<FormulaPtr>& fs) {
    if (fs.empty())
        throw AilError("make_and_all needs at least one conjunct");
    FormulaPtr acc = fs.front();
    for (std::size_t k = 1; k < fs.size(); ++k)
        acc = make_and(acc, fs[k]);
    return acc;
}

int struct_compare(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return 0;
    if (!a) return -1;
    if (!b) return 1;
    if (a->op != b->op) return static_cast<int>(a->op) < static_cast<int>(b->op) ? -1 : 1;
    if (int c = a->name.compare(b->name); c != 0) return c < 0 ? -1 : 1;
    if (a->atom_set != b->atom_set) return a->atom_set < b->atom_set ? -1 : 1;
    if (int c = struct_compare(a->lhs, b->lhs); c != 0) return c;
    return struct_compare(a->rhs, b->rhs);
}

bool struct_equal(const FormulaPtr& a, const FormulaPtr& b) {
    return struct_compare(a, b) == 0;
}

namespace {

// Binding strength used by the printer; higher binds tighter.
int level(const FormulaPtr& f) {
    switch (f->op) {
        case Op::Atom: return 6;
        case Op::Not:
        case Op::Aware:
        case Op::Implicit:
        case Op::Explicit:
        case Op::SimBox:
        case Op::EkBox:
        case Op::AddAware:
        case Op::DelAware: return 5;
        case Op::And: return 4;
        case Op::Or: return 3;
        case Op::Implies: return 2;
        case Op::Iff: return 1;
    }
    return 0;
}

void print_rec(const FormulaPtr& f, int min_level, std::string& out);

// Prefix operators take their operand bare when it binds at least as
// tightly, otherwise parenthesized with no separating space: "A[b] p" but
// "A[b](p & q)".
void print_prefix_operand(const FormulaPtr& operand, std::string& out) {
    if (level(operand) >= 5) {
        out += ' ';
        print_rec(operand, 5, out);
    } else {
        out += '(';
        print_rec(operand, 1, out);
        out += ')';
    }
}

char modal_letter(Op op) {
    switch (op) {
        case Op::Aware: return 'A';
        case Op::Implicit: return 'I';
        case Op::Explicit: return 'E';
        case Op::SimBox: return 'S';
        case Op::EkBox: return 'C';
        default: return '?';
    }
}

void print_binary(const FormulaPtr& f, int my_level, bool right_assoc,
                  const char* sym, int min_level, std::string& out) {
    bool parens = my_level < min_level;
    if (parens) out += '(';
    print_rec(f->lhs, right_assoc ? my_level + 1 : my_level, out);
    out += ' ';
    out += sym;
    out += ' ';
    print_rec(f->rhs, right_assoc ? my_level : my_level + 1, out);
    if (parens) out += ')';
}

void print_rec(const FormulaPtr& f, int min_level, std::string& out) {
    switch (f->op) {
        case Op::Atom:
            out += f->name;
            return;
        case Op::Not:
            out += '~';
            if (level(f->lhs) >= 5) {
                print_rec(f->lhs, 5, out);
            } else {
                out += '(';
                print_rec(f->lhs, 1, out);
                out += ')';
            }
            return;
        case Op::Aware:
        case Op::Implicit:
        case Op::Explicit:
        case Op::SimBox:
        case Op::EkBox:
            out += modal_letter(f->op);
            out += '[';
            out += f->name;
            out += ']';
            print_prefix_operand(f->lhs, out);
            return;
        case Op::AddAware:
        case Op::DelAware: {
            out += (f->op == Op::AddAware) ? '+' : '-';
            out += '[';
            out += f->name;
            out += "]{";
            for (std::size_t k = 0; k < f->atom_set.size(); ++k) {
                if (k) out += ',';
                out += f->atom_set[k];
            }
            out += '}';
            print_prefix_operand(f->lhs, out);
            return;
        }
        case Op::And:
            print_binary(f, 4, false, "&", min_level, out);
            return;
        case Op::Or:
            print_binary(f, 3, false, "|", min_level, out);
            return;
        case Op::Implies:
            print_binary(f, 2, true, "->", min_level, out);
            return;
        case Op::Iff:
            print_binary(f, 1, false, "<->", min_level, out);
            return;
    }
}

}  // namespace

std::string to_string(const FormulaPtr& f) {
    std::string out;
    print_rec(f, 1, out);
    return out;
}

namespace {

void atoms_rec(const FormulaPtr& f, std::set<std::string>& out) {
    if (!f) return;
    if (f->op == Op::Atom) {
        out.insert(f->name);
        return;
    }
    if (is_dynamic(f->op))
        out.insert(f->atom_set.begin(), f->atom_set.end());
    atoms_rec(f->lhs, out);
    atoms_rec(f->rhs, out);
}

void agents_rec(const FormulaPtr& f, std::set<std::string>& out) {
    if (!f) return;
    if (is_modal(f->op) || is_dynamic(f->op)) out.insert(f->name);
    agents_rec(f->lhs, out);
    agents_rec(f->rhs, out);
}

}  // namespace

std::set<std::string> atoms_of(const FormulaPtr& f) {
    std::set<std::string> out;
    atoms_rec(f, out);
    return out;
}

std::set<std::string> agents_of(const FormulaPtr& f) {
    std::set<std::string> out;
    agents_rec(f, out);
    return out;
}

namespace {

void sub_rec(const FormulaPtr& f, FormulaSet& out) {
    if (!f) return;
    if (!out.insert(f).second) return;
    sub_rec(f->lhs, out);
    sub_rec(f->rhs, out);
}

}  // namespace

FormulaSet subformulas(const FormulaPtr& f) {
    FormulaSet out;
    sub_rec(f, out);
    return out;
}

bool contains_dynamic(const FormulaPtr& f) {
    if (!f) return false;
    if (is_dynamic(f->op)) return true;
    return contains_dynamic(f->lhs) || contains_dynamic(f->rhs);
}

bool has_dynamic_under_aware(const FormulaPtr& f) {
    if (!f) return false;
    if (f->op == Op::Aware && contains_dynamic(f->lhs)) return true;
    return has_dynamic_under_aware(f->lhs) || has_dynamic_under_aware(f->rhs);
}

bool is_fh_formula(const FormulaPtr& f) {
    if (!f) return true;
    switch (f->op) {
        case Op::SimBox:
        case Op::EkBox:
        case Op::AddAware:
        case Op::DelAware:
            return false;
        default:
            return is_fh_formula(f->lhs) && is_fh_formula(f->rhs);
    }
}

FormulaPtr desugar(const FormulaPtr& f) {
    if (!f) return nullptr;
    switch (f->op) {
        case Op::Atom:
            return f;
        case Op::Or: {
            auto a = desugar(f->lhs), b = desugar(f->rhs);
            return make_not(make_and(make_not(a), make_not(b)));
        }
        case Op::Implies: {
            auto a = desugar(f->lhs), b = desugar(f->rhs);
            return make_not(make_and(a, make_not(b)));
        }
        case Op::Iff: {
            auto a = desugar(f->lhs), b = desugar(f->rhs);
            auto fwd = make_not(make_and(a, make_not(b)));
            auto bwd = make_not(make_and(b, make_not(a)));
            return make_and(fwd, bwd);
        }
        default: {
            auto l = desugar(f->lhs), r = desugar(f->rhs);
            if (struct_equal(l, f->lhs) && struct_equal(r, f->rhs)) return f;
            return std::make_shared<Formula>(f->op, f->name, f->atom_set, l, r);
        }
    }
}

namespace {

std::vector<std::string> atoms_in_subformulas(const FormulaPtr& f) {
    std::set<std::string> s;
    for (const auto& g : subformulas(f))
        if (g->op == Op::Atom) s.insert(g->name);
    return {s.begin(), s.end()};
}

}  // namespace

FormulaSet closure_cl(const FormulaPtr& f) {
    if (contains_dynamic(f))
        throw AilError("closure is not defined for dynamic operators: " + to_string(f));

    FormulaSet cl;
    std::deque<FormulaPtr> work{f};
    auto add = [&](const FormulaPtr& g) {
        if (cl.insert(g).second) work.push_back(g);
    };
    add(f);
    while (!work.empty()) {
        FormulaPtr g = work.front();
        work.pop_front();

        if (g->lhs) add(g->lhs);
        if (g->rhs) add(g->rhs);
        if (g->op != Op::Not) add(make_not(g));

        switch (g->op) {
            case Op::Aware: {
                for (const auto& chi : subformulas(g->lhs))
                    add(make_aware(g->name, chi));
                add(make_implicit(g->name, g));
                add(make_implicit(g->name, make_not(g)));
                for (const auto& p : atoms_in_subformulas(g->lhs))
                    add(make_sim_box(g->name, make_atom(p)));
                break;
            }
            case Op::Implicit: {
                const auto& body = g->lhs;
                bool same_shape =
                    (body->op == Op::Implicit && body->name == g->name) ||
                    (body->op == Op::Not && body->lhs->op == Op::Implicit &&
                     body->lhs->name == g->name);
                if (!same_shape) {
                    add(make_implicit(g->name, g));
                    add(make_implicit(g->name, make_not(g)));
                }
                break;
            }
            case Op::SimBox: {
                const auto& body = g->lhs;
                bool same_shape =
                    (body->op == Op::SimBox && body->name == g->name) ||
                    (body->op == Op::Not && body->lhs->op == Op::SimBox &&
                     body->lhs->name == g->name);
                if (!same_shape) {
                    add(make_sim_box(g->name, g));
                    add(make_sim_box(g->name, make_not(g)));
                }
                break;
            }
            case Op::EkBox:
                add(make_sim_box(g->name, make_implicit(g->name, g)));
                break;
            case Op::Explicit:
                add(make_aware(g->name, g->lhs));
                add(make_ek_box(g->name, g->lhs));
                break;
            default:
                break;
        }
    }
    return cl;
}

FormulaPtr substitute_atom(const FormulaPtr& f, const std::string& atom_name,
                           const FormulaPtr& replacement) {
    if (!f) return nullptr;
    if (f->op == Op::Atom) return f->name == atom_name ? replacement : f;
    auto l = substitute_atom(f->lhs, atom_name, replacement);
    auto r = substitute_atom(f->rhs, atom_name, replacement);
    if (struct_equal(l, f->lhs) && struct_equal(r, f->rhs)) return f;
    return std::make_shared<Formula>(f->op, f->name, f->atom_set, l, r);
}

FormulaPtr substitute_agent(const FormulaPtr& f, const std::string& from,
                            const std::string& to) {
    if (!f) return nullptr;
    auto l = substitute_agent(f->lhs, from, to);
    auto r = substitute_agent(f->rhs, from, to);
    std::string name = f->name;
    if ((is_modal(f->op) || is_dynamic(f->op)) && name == from) name = to;
    if (name == f->name && struct_equal(l, f->lhs) && struct_equal(r, f->rhs)) return f;
    return std::make_shared<Formula>(f->op, name, f->atom_set, l, r);
}

}  // namespace ail
