#ifndef AIL_ASSETS_HPP
#define AIL_ASSETS_HPP

#include <string_view>

/// Bundled demo inputs, embedded so the CLI works without a data directory.
/// The same content ships as files under assets/.
namespace ail::assets {

/// Three-world geometry-exam model: two agents, one unaware of the
/// proposition needed to finish the derivation.
std::string_view example4_json();

/// Pointed-model pair that is bisimilar (hence indistinguishable for the
/// A/I/E fragment) but separated by E[i] p under full satisfaction.
std::string_view separation_pair_json();

/// Operator-law catalogue with expected search verdicts.
std::string_view catalogue_section34();

std::string_view proof_explicit_implies_ek_json();
std::string_view proof_gi_example_json();
std::string_view proof_ek_truth_json();

}  // namespace ail::assets

#endif
