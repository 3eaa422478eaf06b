#include "doctest.h"

#include "ail/assets.hpp"
#include "ail/checker.hpp"
#include "ail/parser.hpp"
#include "ail/proof.hpp"
#include "support/mutations.hpp"

using namespace ail;

TEST_CASE("axiom matching") {
    auto matches = match_axiom(parse("I[a] p -> p"));
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].schema == "T_I");
    CHECK(to_string(matches[0].subst.phi) == "p");
    CHECK(matches[0].subst.agent_i == "a");

    matches = match_axiom(parse("A[a] p <-> A[a] ~p"));
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].schema == "AN");

    CHECK(match_axiom(parse("p -> I[a] p")).empty());

    // Agent metavariables may share a concrete agent.
    CHECK(match_axiom(parse("A[a] p <-> A[a] I[a] p"))[0].schema == "AI");

    // The indistinguishability-transfer axiom is atom-only.
    CHECK(!match_axiom(parse("A[a] p & p -> S[a] p")).empty());
    CHECK(match_axiom(parse("A[a](p & q) & (p & q) -> S[a](p & q)")).empty());

    // Inconsistent metavariable use is rejected.
    CHECK(match_axiom(parse("I[a] p -> q")).empty());
    CHECK(match_axiom(parse("E[a] p <-> A[a] p & C[a] q")).empty());

    CHECK_THROWS_AS(match_axiom(parse("+[i]{p} p -> p")), AilError);
}

TEST_CASE("every schema self-recognizes its instances") {
    std::vector<FormulaPtr> pool = {parse("p"), parse("q & r"), parse("I[b] p")};
    for (const auto& def : schema_table()) {
        for (const auto& inst : instantiate_schema(def.pattern, pool, {"a", "b"})) {
            if (contains_dynamic(inst.formula)) continue;
            // "pat" survives instantiation as an atom named pat; that is a
            // legitimate atom instance of the schema.
            bool found = false;
            for (const auto& m : match_axiom(inst.formula)) found |= m.schema == def.name;
            CHECK_MESSAGE(found, def.name << ": " << to_string(inst.formula));
        }
    }
}

TEST_CASE("tautology instances by abstraction") {
    CHECK(is_tautology_instance(parse("E[a] p | ~E[a] p")));
    // (x <-> y & z) -> (x -> z) over three abstracted variables; truth-table
    // verified by hand before freezing.
    CHECK(is_tautology_instance(parse("(E[a] p <-> A[a] p & C[a] p) -> (E[a] p -> C[a] p)")));
    // Modal truth is opaque to the abstraction.
    CHECK_FALSE(is_tautology_instance(parse("E[a] p -> p")));
    // Shared subformulas share a variable.
    CHECK(is_tautology_instance(parse("I[a](p & q) -> I[a](p & q)")));
    CHECK_FALSE(is_tautology_instance(parse("I[a](p & q) -> I[a](q & p)")));
}

TEST_CASE("tautology capacity limit") {
    std::string big = "p0";
    for (int k = 1; k <= 21; ++k) big += " | p" + std::to_string(k);
    CHECK_THROWS_AS(is_tautology_instance(parse(big)), TautologyCapacityError);
}

TEST_CASE("bundled proofs are accepted") {
    for (auto text : {assets::proof_explicit_implies_ek_json(), assets::proof_gi_example_json(),
                      assets::proof_ek_truth_json()}) {
        auto proof = proof_from_json(std::string(text));
        auto result = check_proof(proof);
        CHECK_MESSAGE(result.accepted, result.message);
    }
}

TEST_CASE("rejections carry the line and a reason") {
    // Not an instance of the named schema.
    Proof p;
    p.lines.push_back({1, parse("p -> I[a] p"), "p -> I[a] p",
                       {Justification::Kind::Axiom, "T_I", 0, 0, ""}});
    auto r = check_proof(p);
    CHECK_FALSE(r.accepted);
    CHECK(r.line == 1);
    CHECK(r.reason == "not-an-instance");

    // Unknown schema name.
    p.lines[0].just.schema = "T_X";
    CHECK(check_proof(p).reason == "unknown-schema");

    // Forward citation.
    Proof fwd;
    fwd.lines.push_back({1, parse("I[a] p -> p"), "", {Justification::Kind::Axiom, "T_I", 0, 0, ""}});
    fwd.lines.push_back({2, parse("p"), "", {Justification::Kind::MP, "", 3, 1, ""}});
    CHECK(check_proof(fwd).reason == "bad-reference");

    // Line numbering must increase.
    Proof order;
    order.lines.push_back({2, parse("I[a] p -> p"), "", {Justification::Kind::Axiom, "T_I", 0, 0, ""}});
    order.lines.push_back({1, parse("I[a] p -> p"), "", {Justification::Kind::Axiom, "T_I", 0, 0, ""}});
    CHECK(check_proof(order).reason == "line-order");

    // Dynamic operators are outside the proof system.
    Proof dyn;
    dyn.lines.push_back({1, parse("+[a]{p} p -> p"), "", {Justification::Kind::Taut, "", 0, 0, ""}});
    CHECK(check_proof(dyn).reason == "dynamic-operator");
}

TEST_CASE("infer-axiom mode tries every schema") {
    Proof p;
    p.lines.push_back({1, parse("I[a] p -> p"), "", {Justification::Kind::Axiom, "AN", 0, 0, ""}});
    CHECK_FALSE(check_proof(p).accepted);  // wrong name
    ProofOptions opts;
    opts.infer_axiom = true;
    CHECK(check_proof(p, opts).accepted);  // T_I matches

    p.lines[0].formula = parse("p -> I[a] p");
    CHECK_FALSE(check_proof(p, opts).accepted);  // nothing matches
}

TEST_CASE("single-token mutations are rejected") {
    std::size_t total = 0;
    for (auto text : {assets::proof_explicit_implies_ek_json(), assets::proof_gi_example_json(),
                      assets::proof_ek_truth_json()}) {
        auto proof = proof_from_json(std::string(text));
        REQUIRE(check_proof(proof).accepted);
        for (const auto& mutated : testing::single_token_mutations(proof)) {
            ++total;
            auto r = check_proof(mutated);
            if (r.accepted) {
                std::string dump;
                for (const auto& l : mutated.lines) dump += to_string(l.formula) + " ; ";
                FAIL_CHECK("mutation accepted: " << dump);
            }
        }
    }
    CHECK(total >= 100);
}

TEST_CASE("accepted conclusions survive countermodel search") {
    SearchBounds b;
    b.max_worlds = 3;
    for (auto text : {assets::proof_explicit_implies_ek_json(), assets::proof_gi_example_json(),
                      assets::proof_ek_truth_json()}) {
        auto proof = proof_from_json(std::string(text));
        auto conclusion = proof.lines.back().formula;
        CHECK(find_countermodel(conclusion, b).verdict == Verdict::ValidUpToBound);
    }
}

TEST_CASE("proof files reject malformed input") {
    CHECK_THROWS_AS(proof_from_json("{}"), AilError);
    CHECK_THROWS_AS(proof_from_json(R"({"lines": [{"n": 1}]})"), AilError);
    CHECK_THROWS_AS(proof_from_json(R"({"lines": [{"n": 1, "formula": "p", "by": {}}]})"),
                    AilError);
    CHECK_THROWS_AS(
        proof_from_json(R"({"lines": [{"n": 1, "formula": "p &", "by": {"taut": true}}]})"),
        AilError);
}
