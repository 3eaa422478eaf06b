#include <algorithm>
#include <set>

#include "doctest.h"

#include "ail/assets.hpp"
#include "ail/generate.hpp"
#include "ail/model.hpp"
#include "ail/model_io.hpp"
#include "support/oracles.hpp"

using namespace ail;

namespace {

EpistemicModel example4() {
    return model_from_json(std::string(assets::example4_json()));
}

std::vector<std::vector<std::string>> named_blocks(const EpistemicModel& m, const Partition& p) {
    std::vector<std::vector<std::string>> out;
    for (const auto& block : p.blocks()) {
        std::vector<std::string> names;
        for (auto w : block) names.push_back(m.worlds[w]);
        out.push_back(names);
    }
    return out;
}

}  // namespace

TEST_CASE("example4 loads and validates") {
    auto m = example4();
    CHECK(validate(m).empty());
    CHECK(m.world_count() == 3);
    // The pair lists close to: identity plus v~u, for both agents.
    auto part = ik_partition(m, *m.agent_index("a"));
    CHECK(named_blocks(m, part) ==
          std::vector<std::vector<std::string>>{{"w"}, {"v", "u"}});
}

TEST_CASE("single reflexive world validates") {
    EpistemicModel m;
    m.worlds = {"w"};
    m.agents = {"i"};
    m.atoms = {"p"};
    m.valuation = {{true}};
    m.ik = {{{true}}};
    m.awareness = {{1}};
    CHECK(validate(m).empty());
}

TEST_CASE("ka violation is reported with agent and worlds") {
    EpistemicModel m;
    m.worlds = {"w", "v"};
    m.agents = {"i"};
    m.atoms = {"p"};
    m.valuation = {{true, false}};
    m.ik = {{{true, true}, {true, true}}};
    m.awareness = {{1, 0}};  // related worlds, different awareness
    auto violations = validate(m);
    REQUIRE(!violations.empty());
    bool found = false;
    for (const auto& v : violations)
        found |= v.condition == "ka" && v.agent == "i" &&
                 v.worlds == std::vector<std::string>{"w", "v"};
    CHECK(found);
}

TEST_CASE("strict pair lists are not silently closed") {
    // v~u given one-directionally and without reflexive pairs.
    std::string text = R"({
      "worlds": ["w", "v"], "agents": ["i"], "atoms": ["p"],
      "valuation": {"p": ["w"]},
      "ik": {"i": {"pairs": [["w", "v"]], "closed": true}},
      "awareness": {"i": {"w": ["p"], "v": ["p"]}}
    })";
    auto m = model_from_json(text);
    auto violations = validate(m);
    std::set<std::string> kinds;
    for (const auto& v : violations) kinds.insert(v.condition);
    CHECK(kinds.count("ik-reflexive") == 1);
    CHECK(kinds.count("ik-symmetric") == 1);

    LoadOptions close;
    close.close_ik = true;
    CHECK(validate(model_from_json(text, close)).empty());
}

TEST_CASE("ik accepts partition blocks") {
    std::string text = R"({
      "worlds": ["w", "v", "u"], "agents": ["i"], "atoms": [],
      "valuation": {},
      "ik": {"i": {"blocks": [["v", "u"]]}},
      "awareness": {"i": {}}
    })";
    auto m = model_from_json(text);
    CHECK(validate(m).empty());
    CHECK(named_blocks(m, ik_partition(m, 0)) ==
          std::vector<std::vector<std::string>>{{"w"}, {"v", "u"}});
}

TEST_CASE("a-equivalence on the bundled example") {
    auto m = example4();
    // Fully aware agent: every world on its own.
    CHECK(named_blocks(m, a_equivalence(m, *m.agent_index("a"))) ==
          std::vector<std::vector<std::string>>{{"w"}, {"v"}, {"u"}});
    // Agent unaware of the distinguishing atom merges w and v.
    CHECK(named_blocks(m, a_equivalence(m, *m.agent_index("b"))) ==
          std::vector<std::vector<std::string>>{{"w", "v"}, {"u"}});
}

TEST_CASE("a-equivalence with empty awareness everywhere is total") {
    EpistemicModel m;
    m.worlds = {"w", "v", "u"};
    m.agents = {"i"};
    m.atoms = {"p"};
    m.valuation = {{true, false, true}};
    m.ik = {{{true, false, false}, {false, true, false}, {false, false, true}}};
    m.awareness = {{0, 0, 0}};
    CHECK(a_equivalence(m, 0).block_count() == 1);
}

TEST_CASE("ek accessibility on the bundled example") {
    auto m = example4();
    CHECK(named_blocks(m, ek_accessibility(m, *m.agent_index("b"))) ==
          std::vector<std::vector<std::string>>{{"w", "v", "u"}});
    CHECK(named_blocks(m, ek_accessibility(m, *m.agent_index("a"))) ==
          std::vector<std::vector<std::string>>{{"w"}, {"v", "u"}});
}

TEST_CASE("ek equals the closure oracle in both composition orders") {
    std::mt19937_64 eng(11);
    for (int k = 0; k < 250; ++k) {
        auto n = 1 + rand_below(eng, 5);
        auto m = random_model({"p", "q"}, {"a", "b"}, n, eng());
        REQUIRE(validate(m).empty());
        for (std::size_t i = 0; i < m.agent_count(); ++i) {
            auto part = ek_accessibility(m, i);
            auto oracle = testing::ek_closure_oracle(m, i);
            auto swapped = testing::ek_closure_oracle_swapped(m, i);
            for (std::size_t w = 0; w < m.world_count(); ++w)
                for (std::size_t v = 0; v < m.world_count(); ++v) {
                    CHECK(part.same_block(w, v) == oracle[w][v]);
                    CHECK(oracle[w][v] == swapped[w][v]);
                }
        }
    }
}

TEST_CASE("derived relations are equivalences and respect their definitions") {
    std::mt19937_64 eng(12);
    for (int k = 0; k < 150; ++k) {
        auto m = random_model({"p", "q", "r"}, {"a"}, 1 + rand_below(eng, 5), eng());
        auto d = derive_relations(m);
        const auto& a_eq = d.a_equiv[0];
        for (std::size_t w = 0; w < m.world_count(); ++w)
            for (std::size_t v = 0; v < m.world_count(); ++v) {
                // Partition pair query vs the defining condition.
                CHECK(a_eq.same_block(w, v) == testing::a_equiv_pairs(m, 0)[w][v]);
                // Coarsening: ik and a-equivalence blocks sit inside ek blocks.
                if (d.ik[0].same_block(w, v) || a_eq.same_block(w, v))
                    CHECK(d.ek[0].same_block(w, v));
            }
    }
}

TEST_CASE("partition membership agrees with find") {
    std::mt19937_64 eng(13);
    auto m = random_model({"p"}, {"a", "b"}, 6, eng());
    for (std::size_t i = 0; i < 2; ++i) {
        auto part = ek_accessibility(m, i);
        for (std::size_t w = 0; w < m.world_count(); ++w) {
            auto block = part.block_of(w);
            for (std::size_t v = 0; v < m.world_count(); ++v) {
                bool in_block = std::find(block.begin(), block.end(), v) != block.end();
                CHECK(in_block == part.same_block(w, v));
            }
        }
    }
}

TEST_CASE("enumeration counts") {
    ModelEnumerator en({"p"}, {"i"}, 1);
    std::size_t count = 0;
    while (auto m = en.next()) {
        CHECK(validate(*m).empty());
        ++count;
    }
    CHECK(count == 4);  // 2 valuations x 1 partition x 2 awareness sets

    ModelEnumerator empty_atoms({}, {"i"}, 1);
    count = 0;
    while (empty_atoms.next()) ++count;
    CHECK(count == 1);

    // Stream total matches the closed-form count per world size.
    ModelEnumerator en2({"p"}, {"i", "j"}, 2);
    count = 0;
    while (en2.next()) ++count;
    CHECK(count == ModelEnumerator::count_for_worlds(1, 1, 2) +
                       ModelEnumerator::count_for_worlds(2, 1, 2));
}

TEST_CASE("enumeration is deterministic and yields valid distinct models") {
    ModelEnumerator a({"p"}, {"i"}, 3);
    ModelEnumerator b({"p"}, {"i"}, 3);
    std::set<std::string> seen;
    std::size_t count = 0;
    while (true) {
        auto ma = a.next();
        auto mb = b.next();
        CHECK(ma.has_value() == mb.has_value());
        if (!ma) break;
        CHECK(*ma == *mb);
        CHECK(validate(*ma).empty());
        CHECK(seen.insert(model_to_json(*ma, 0)).second);
        ++count;
    }
    CHECK(count > 100);
}

TEST_CASE("random models are valid and seed-deterministic") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto m1 = random_model({"p", "q"}, {"a", "b"}, 4, seed);
        auto m2 = random_model({"p", "q"}, {"a", "b"}, 4, seed);
        CHECK(validate(m1).empty());
        CHECK(m1 == m2);
    }
    CHECK(!(random_model({"p"}, {"a"}, 3, 1) == random_model({"p"}, {"a"}, 3, 2)));

    RandomModelOptions opts;
    opts.distinct_valuations = true;
    opts.constant_awareness = true;
    auto m = random_model({"p", "q", "r"}, {"a"}, 5, 9, opts);
    CHECK(validate(m).empty());
    std::set<std::string> vals;
    for (std::size_t w = 0; w < m.world_count(); ++w) {
        std::string v;
        for (std::size_t p = 0; p < m.atom_count(); ++p) v += m.val(p, w) ? '1' : '0';
        vals.insert(v);
        CHECK(m.awareness[0][w] == m.awareness[0][0]);
    }
    CHECK(vals.size() == m.world_count());
}

TEST_CASE("update_awareness set algebra") {
    auto m = example4();
    std::size_t b = *m.agent_index("b");
    AtomMask q = atom_mask(m, {"p3", "p4"});

    auto added = update_awareness(m, b, q, AwarenessUpdate::Add);
    auto round = update_awareness(added, b, q, AwarenessUpdate::Remove);
    for (std::size_t w = 0; w < m.world_count(); ++w)
        CHECK(round.awareness[b][w] == (m.awareness[b][w] & ~q));

    auto removed = update_awareness(m, b, q, AwarenessUpdate::Remove);
    auto back = update_awareness(removed, b, q, AwarenessUpdate::Add);
    for (std::size_t w = 0; w < m.world_count(); ++w)
        CHECK(back.awareness[b][w] == (m.awareness[b][w] | q));

    // Frame, valuation and the other agent are untouched.
    CHECK(added.worlds == m.worlds);
    CHECK(added.valuation == m.valuation);
    CHECK(added.ik == m.ik);
    CHECK(added.awareness[*m.agent_index("a")] == m.awareness[*m.agent_index("a")]);
    CHECK(validate(added).empty());

    CHECK_THROWS_AS(update_awareness(m, b, AtomMask{1} << 10, AwarenessUpdate::Add), AilError);
}

TEST_CASE("awareness update refines a-equivalence on the bundled example") {
    auto m = example4();
    std::size_t b = *m.agent_index("b");
    auto updated = update_awareness(m, b, atom_mask(m, {"p3"}), AwarenessUpdate::Add);
    // Aware of everything now: w and v split on the newly aware atom.
    CHECK(named_blocks(updated, a_equivalence(updated, b)) ==
          std::vector<std::vector<std::string>>{{"w"}, {"v"}, {"u"}});
}

TEST_CASE("model json round trip") {
    std::mt19937_64 eng(17);
    for (int k = 0; k < 40; ++k) {
        auto m = random_model({"p", "q"}, {"a", "b"}, 1 + rand_below(eng, 4), eng());
        auto back = model_from_json(model_to_json(m));
        CHECK(m == back);
    }
    auto m = example4();
    CHECK(model_from_json(model_to_json(m)) == m);
}

TEST_CASE("loader rejects malformed input") {
    CHECK_THROWS_AS(model_from_json("{"), AilError);
    CHECK_THROWS_AS(model_from_json(R"({"worlds": [], "agents": [], "atoms": [], "ik": {}})"),
                    AilError);
    CHECK_THROWS_AS(model_from_json(R"({
        "worlds": ["w"], "agents": ["i"], "atoms": ["p"],
        "valuation": {"zz": ["w"]},
        "ik": {"i": {"pairs": []}}, "awareness": {}
    })"),
                    AilError);
    CHECK_THROWS_AS(model_from_json(R"({
        "worlds": ["w"], "agents": ["Bad"], "atoms": [],
        "valuation": {}, "ik": {"Bad": {"pairs": []}}, "awareness": {}
    })"),
                    AilError);
}
