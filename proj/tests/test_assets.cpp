// The bundled strings double as files under assets/; keep them identical.
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "ail/assets.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string kAssetDir = AIL_ASSET_DIR;

}  // namespace

TEST_CASE("asset files match the embedded copies") {
    CHECK(slurp(kAssetDir + "/example4.json") == ail::assets::example4_json());
    CHECK(slurp(kAssetDir + "/separation_pair.json") == ail::assets::separation_pair_json());
    CHECK(slurp(kAssetDir + "/catalogue_section34.txt") == ail::assets::catalogue_section34());
    CHECK(slurp(kAssetDir + "/proofs/explicit_implies_ek.json") ==
          ail::assets::proof_explicit_implies_ek_json());
    CHECK(slurp(kAssetDir + "/proofs/gi_example.json") == ail::assets::proof_gi_example_json());
    CHECK(slurp(kAssetDir + "/proofs/ek_truth.json") == ail::assets::proof_ek_truth_json());
}
