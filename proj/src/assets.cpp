#include "ail/assets.hpp"

namespace ail::assets {

std::string_view example4_json() {
    static constexpr std::string_view text = R"json({
  "worlds": ["w", "v", "u"],
  "agents": ["a", "b"],
  "atoms": ["p2", "p3", "f3", "p4"],
  "valuation": {
    "p2": ["w", "v", "u"],
    "p3": ["w"],
    "f3": ["w", "v", "u"],
    "p4": ["w", "v"]
  },
  "ik": {
    "a": {"pairs": [["v", "u"]], "closed": false},
    "b": {"pairs": [["v", "u"]], "closed": false}
  },
  "awareness": {
    "a": {
      "w": ["p2", "p3", "f3", "p4"],
      "v": ["p2", "p3", "f3", "p4"],
      "u": ["p2", "p3", "f3", "p4"]
    },
    "b": {
      "w": ["p2", "f3", "p4"],
      "v": ["p2", "f3", "p4"],
      "u": ["p2", "f3", "p4"]
    }
  }
}
)json";
    return text;
}

std::string_view separation_pair_json() {
    static constexpr std::string_view text = R"json({
  "m1": {
    "worlds": ["w", "v", "u"],
    "agents": ["i"],
    "atoms": ["p", "q"],
    "valuation": {"p": ["w", "v"], "q": ["w"]},
    "ik": {"i": {"pairs": [["v", "u"]], "closed": false}},
    "awareness": {"i": {"w": ["p"], "v": ["p"], "u": ["p"]}}
  },
  "w1": "w",
  "m2": {
    "worlds": ["s"],
    "agents": ["i"],
    "atoms": ["p", "q"],
    "valuation": {"p": ["s"], "q": ["s"]},
    "ik": {"i": {"pairs": [], "closed": false}},
    "awareness": {"i": {"s": ["p"]}}
  },
  "w2": "s"
}
)json";
    return text;
}

std::string_view catalogue_section34() {
    static constexpr std::string_view text =
        R"json(# Operator-law catalogue. Each row: name, expected verdict, schema.
# "valid"   - exhaustive search up to the world bound must find no countermodel
# "invalid" - the search must produce a (re-verified) countermodel
# Metavariables: phi, psi over the formula pool; agent metavariable i.
# The row "@awareness-reduction" expands to  A[i] f <-> A[i] p1 & ... & A[i] pk
# over the atoms of each pool formula f.

awareness_reduction          valid    @awareness-reduction
awareness_introspection      valid    A[i] phi -> I[i] A[i] phi
unawareness_introspection    valid    ~A[i] phi -> I[i] ~A[i] phi
awareness_explicitly_known   valid    A[i] phi -> E[i] A[i] phi
unawareness_never_explicit   valid    ~E[i] ~A[i] phi
explicit_implies_implicit    valid    E[i] phi -> I[i] phi & A[i] phi
truth_implicit               valid    I[i] phi -> phi
truth_explicit               valid    E[i] phi -> phi
pos_introspection_implicit   valid    I[i] phi -> I[i] I[i] phi
pos_introspection_explicit   valid    E[i] phi -> E[i] E[i] phi
neg_introspection_implicit   valid    ~I[i] phi -> I[i] ~I[i] phi
weak_neg_introspection       valid    ~E[i] phi & A[i] phi -> E[i] ~E[i] phi
mix5a                        valid    ~I[i] phi & A[i] phi -> E[i] ~I[i] phi
explicit_characterization    valid    E[i] phi <-> A[i] phi & C[i] phi
ek_implies_chain             valid    C[i] phi -> S[i] I[i] phi & I[i] phi & S[i] phi
order_ek_to_sim_implicit     valid    C[i] phi & A[i] phi -> S[i] I[i] phi & A[i] phi
order_sim_implicit_to_impl   valid    S[i] I[i] phi & A[i] phi -> I[i] phi & A[i] phi
implicit_aware_to_sim        valid    I[i] phi & A[i] phi -> S[i] phi
aware_implicit_not_explicit  invalid  I[i] phi & A[i] phi -> E[i] phi
mp_closure                   invalid  I[i] phi & I[i](phi -> psi) -> (A[i] psi -> E[i] psi)
neg_introspection_explicit   invalid  ~E[i] phi -> E[i] ~E[i] phi
mix4                         invalid  I[i] phi -> E[i] I[i] phi
mix5                         invalid  ~I[i] phi -> E[i] ~I[i] phi
mix4a                        invalid  I[i] phi & A[i] phi -> E[i] I[i] phi
sim_converse_implicit        invalid  S[i] phi -> I[i] phi
sim_converse_aware           invalid  S[i] phi -> A[i] phi
)json";
    return text;
}

std::string_view proof_explicit_implies_ek_json() {
    static constexpr std::string_view text = R"json({
  "lines": [
    {"n": 1, "formula": "E[a] p <-> A[a] p & C[a] p", "by": {"axiom": "EA_C"}},
    {"n": 2, "formula": "(E[a] p <-> A[a] p & C[a] p) -> (E[a] p -> C[a] p)", "by": {"taut": true}},
    {"n": 3, "formula": "E[a] p -> C[a] p", "by": {"mp": {"from": 1, "imp": 2}}}
  ]
}
)json";
    return text;
}

std::string_view proof_gi_example_json() {
    static constexpr std::string_view text = R"json({
  "lines": [
    {"n": 1, "formula": "I[a] p -> p", "by": {"axiom": "T_I"}},
    {"n": 2, "formula": "I[a](I[a] p -> p)", "by": {"gi": {"from": 1, "agent": "a"}}}
  ]
}
)json";
    return text;
}

std::string_view proof_ek_truth_json() {
    static constexpr std::string_view text = R"json({
  "lines": [
    {"n": 1, "formula": "C[a] p -> p & S[a] I[a] C[a] p", "by": {"axiom": "MIX"}},
    {"n": 2, "formula": "(C[a] p -> p & S[a] I[a] C[a] p) -> (C[a] p -> p)", "by": {"taut": true}},
    {"n": 3, "formula": "C[a] p -> p", "by": {"mp": {"from": 1, "imp": 2}}}
  ]
}
)json";
    return text;
}

}  // namespace ail::assets
