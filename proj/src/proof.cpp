#include "ail/proof.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ail/parser.hpp"

namespace ail {

const std::vector<SchemaDef>& schema_table() {
    static const std::vector<SchemaDef> table = [] {
        std::vector<std::pair<std::string, std::string>> defs = {
            {"AN", "A[i] phi <-> A[i] ~phi"},
            {"AC", "A[i](phi & psi) <-> A[i] phi & A[i] psi"},
            {"AA", "A[i] phi <-> A[i] A[j] phi"},
            {"AI", "A[i] phi <-> A[i] I[j] phi"},
            {"A_S", "A[i] phi <-> A[i] S[j] phi"},
            {"A_C", "A[i] phi <-> A[i] C[j] phi"},
            {"AE", "A[i] phi <-> A[i] E[j] phi"},
            {"IA", "A[i] phi -> I[i] A[i] phi"},
            {"INA", "~A[i] phi -> I[i] ~A[i] phi"},
            {"AA_S", "A[i] pat & pat -> S[i] pat"},
            {"K_I", "I[i](phi -> psi) -> (I[i] phi -> I[i] psi)"},
            {"T_I", "I[i] phi -> phi"},
            {"5_I", "~I[i] phi -> I[i] ~I[i] phi"},
            {"K_S", "S[i](phi -> psi) -> (S[i] phi -> S[i] psi)"},
            {"T_S", "S[i] phi -> phi"},
            {"5_S", "~S[i] phi -> S[i] ~S[i] phi"},
            {"K_C", "C[i](phi -> psi) -> (C[i] phi -> C[i] psi)"},
            {"MIX", "C[i] phi -> phi & S[i] I[i] C[i] phi"},
            {"IND", "C[i](phi -> S[i] I[i] phi) -> (phi -> C[i] phi)"},
            {"EA_C", "E[i] phi <-> A[i] phi & C[i] phi"},
        };
        std::vector<SchemaDef> out;
        for (auto& [name, text] : defs) out.push_back({name, text, parse(text)});
        return out;
    }();
    return table;
}

namespace {

bool bind_formula(FormulaPtr& slot, const FormulaPtr& f) {
    if (!slot) {
        slot = f;
        return true;
    }
    return struct_equal(slot, f);
}

bool bind_name(std::string& slot, const std::string& name) {
    if (slot.empty()) {
        slot = name;
        return true;
    }
    return slot == name;
}

bool match_rec(const FormulaPtr& pattern, const FormulaPtr& f, Substitution& s) {
    if (pattern->op == Op::Atom) {
        if (pattern->name == "phi") return bind_formula(s.phi, f);
        if (pattern->name == "psi") return bind_formula(s.psi, f);
        if (pattern->name == "pat")
            return f->op == Op::Atom && bind_name(s.pat, f->name);
        return f->op == Op::Atom && f->name == pattern->name;
    }
    if (f->op != pattern->op) return false;
    if (is_modal(pattern->op)) {
        bool agent_ok = pattern->name == "i"   ? bind_name(s.agent_i, f->name)
                        : pattern->name == "j" ? bind_name(s.agent_j, f->name)
                                               : pattern->name == f->name;
        if (!agent_ok) return false;
    }
    if (pattern->lhs && !match_rec(pattern->lhs, f->lhs, s)) return false;
    if (pattern->rhs && !match_rec(pattern->rhs, f->rhs, s)) return false;
    return true;
}

}  // namespace

std::vector<AxiomMatch> match_axiom(const FormulaPtr& f) {
    if (contains_dynamic(f))
        throw AilError("axiom matching is defined for dynamic-free formulas only");
    std::vector<AxiomMatch> out;
    for (const auto& def : schema_table()) {
        Substitution s;
        if (match_rec(def.pattern, f, s)) out.push_back({def.name, s});
    }
    return out;
}

namespace {

void collect_vars(const FormulaPtr& f, std::map<FormulaPtr, std::size_t, FormulaLess>& vars) {
    if (is_boolean(f->op)) {
        collect_vars(f->lhs, vars);
        if (f->rhs) collect_vars(f->rhs, vars);
        return;
    }
    if (vars.find(f) == vars.end()) {
        std::size_t id = vars.size();
        vars.emplace(f, id);
    }
}

bool eval_abstracted(const FormulaPtr& f,
                     const std::map<FormulaPtr, std::size_t, FormulaLess>& vars,
                     std::uint32_t assignment) {
    switch (f->op) {
        case Op::Not:
            return !eval_abstracted(f->lhs, vars, assignment);
        case Op::And:
            return eval_abstracted(f->lhs, vars, assignment) &&
                   eval_abstracted(f->rhs, vars, assignment);
        case Op::Or:
            return eval_abstracted(f->lhs, vars, assignment) ||
                   eval_abstracted(f->rhs, vars, assignment);
        case Op::Implies:
            return !eval_abstracted(f->lhs, vars, assignment) ||
                   eval_abstracted(f->rhs, vars, assignment);
        case Op::Iff:
            return eval_abstracted(f->lhs, vars, assignment) ==
                   eval_abstracted(f->rhs, vars, assignment);
        default:
            return (assignment >> vars.at(f)) & 1u;
    }
}

}  // namespace

bool is_tautology_instance(const FormulaPtr& f) {
    std::map<FormulaPtr, std::size_t, FormulaLess> vars;
    collect_vars(f, vars);
    if (vars.size() > 20)
        throw TautologyCapacityError("tautology check limited to 20 abstracted variables, got " +
                                     std::to_string(vars.size()));
    const std::uint32_t end = std::uint32_t{1} << vars.size();
    for (std::uint32_t a = 0; a < end; ++a)
        if (!eval_abstracted(f, vars, a)) return false;
    return true;
}

namespace {

ProofResult reject(int line, std::string reason, std::string message) {
    return {false, line, std::move(reason), std::move(message)};
}

}  // namespace

ProofResult check_proof(const Proof& proof, const ProofOptions& opts) {
    std::map<int, FormulaPtr> by_number;
    int previous = 0;
    for (const auto& line : proof.lines) {
        const int n = line.number;
        if (n <= previous)
            return reject(n, "line-order", "line numbers must be strictly increasing");
        previous = n;
        if (contains_dynamic(line.formula))
            return reject(n, "dynamic-operator", "proofs cover the dynamic-free language only");

        auto cited = [&](int ref) -> FormulaPtr {
            auto it = by_number.find(ref);
            return it == by_number.end() ? nullptr : it->second;
        };

        switch (line.just.kind) {
            case Justification::Kind::Axiom: {
                auto matches = match_axiom(line.formula);
                if (opts.infer_axiom) {
                    if (matches.empty())
                        return reject(n, "not-an-instance",
                                      "no axiom schema matches " + to_string(line.formula));
                    break;
                }
                bool known = false;
                for (const auto& def : schema_table()) known |= def.name == line.just.schema;
                if (!known)
                    return reject(n, "unknown-schema", "no schema named " + line.just.schema);
                bool ok = false;
                for (const auto& m : matches) ok |= m.schema == line.just.schema;
                if (!ok)
                    return reject(n, "not-an-instance",
                                  to_string(line.formula) + " is not an instance of " +
                                      line.just.schema);
                break;
            }
            case Justification::Kind::Taut: {
                try {
                    if (!is_tautology_instance(line.formula))
                        return reject(n, "not-a-tautology",
                                      to_string(line.formula) + " is not a propositional tautology");
                } catch (const TautologyCapacityError& e) {
                    return reject(n, "taut-capacity", e.what());
                }
                break;
            }
            case Justification::Kind::MP: {
                FormulaPtr antecedent = cited(line.just.from);
                FormulaPtr implication = cited(line.just.imp);
                if (!antecedent || !implication)
                    return reject(n, "bad-reference", "mp cites a missing or later line");
                auto expected = desugar(make_implies(antecedent, line.formula));
                if (!struct_equal(desugar(implication), expected))
                    return reject(n, "mp-mismatch",
                                  "line " + std::to_string(line.just.imp) +
                                      " is not (line " + std::to_string(line.just.from) +
                                      " -> this line)");
                break;
            }
            case Justification::Kind::GI:
            case Justification::Kind::GSim:
            case Justification::Kind::GEk: {
                FormulaPtr premise = cited(line.just.from);
                if (!premise)
                    return reject(n, "bad-reference", "generalization cites a missing line");
                FormulaPtr expected =
                    line.just.kind == Justification::Kind::GI
                        ? make_implicit(line.just.agent, premise)
                        : line.just.kind == Justification::Kind::GSim
                              ? make_sim_box(line.just.agent, premise)
                              : make_ek_box(line.just.agent, premise);
                if (!struct_equal(desugar(line.formula), desugar(expected)))
                    return reject(n, "generalization-mismatch",
                                  "line is not the stated box over line " +
                                      std::to_string(line.just.from));
                break;
            }
        }
        by_number[n] = line.formula;
    }
    return {true, 0, "", ""};
}

namespace {

using nlohmann::json;

[[noreturn]] void bad_proof(const std::string& msg) { throw AilError("proof file: " + msg); }

Justification parse_just(const json& by) {
    if (!by.is_object() || by.size() != 1)
        bad_proof("\"by\" must be an object with exactly one key");
    Justification j{};
    if (by.contains("axiom")) {
        j.kind = Justification::Kind::Axiom;
        if (!by["axiom"].is_string()) bad_proof("axiom name must be a string");
        j.schema = by["axiom"].get<std::string>();
        return j;
    }
    if (by.contains("taut")) {
        j.kind = Justification::Kind::Taut;
        return j;
    }
    if (by.contains("mp")) {
        const auto& mp = by["mp"];
        if (!mp.is_object() || !mp.contains("from") || !mp.contains("imp"))
            bad_proof("mp needs {\"from\": j, \"imp\": k}");
        j.kind = Justification::Kind::MP;
        j.from = mp["from"].get<int>();
        j.imp = mp["imp"].get<int>();
        return j;
    }
    for (auto [key, kind] : {std::pair<const char*, Justification::Kind>{"gi", Justification::Kind::GI},
                             {"gsim", Justification::Kind::GSim},
                             {"gek", Justification::Kind::GEk}}) {
        if (by.contains(key)) {
            const auto& g = by[key];
            if (!g.is_object() || !g.contains("from") || !g.contains("agent"))
                bad_proof(std::string(key) + " needs {\"from\": j, \"agent\": \"a\"}");
            j.kind = kind;
            j.from = g["from"].get<int>();
            j.agent = g["agent"].get<std::string>();
            return j;
        }
    }
    bad_proof("unknown justification kind");
}

}  // namespace

Proof proof_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        bad_proof(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array())
        bad_proof("top level must be {\"lines\": [...]}");
    Proof proof;
    for (const auto& entry : j["lines"]) {
        if (!entry.is_object() || !entry.contains("n") || !entry.contains("formula") ||
            !entry.contains("by"))
            bad_proof("each line needs \"n\", \"formula\" and \"by\"");
        ProofLine line;
        line.number = entry["n"].get<int>();
        line.formula_text = entry["formula"].get<std::string>();
        line.formula = parse(line.formula_text);
        line.just = parse_just(entry["by"]);
        proof.lines.push_back(std::move(line));
    }
    return proof;
}

Proof proof_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AilError("cannot open proof file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return proof_from_json(buf.str());
}

}  // namespace ail
