#ifndef AIL_MODEL_IO_HPP
#define AIL_MODEL_IO_HPP

#include <string>

#include "ail/model.hpp"

namespace ail {

struct LoadOptions {
    /// Take the reflexive-symmetric-transitive closure of every "pairs"
    /// relation regardless of its "closed" flag (the --close-ik behavior).
    bool close_ik = false;
};

/// Reads a model from its JSON text. Structural problems (bad shape,
/// undeclared ids, bad identifiers) throw AilError; semantic conditions
/// (equivalence relation, ka) are left to validate().
///
/// Per-agent "ik" entries are either
///   {"pairs": [["w","v"], ...], "closed": bool}   pairs; closed defaults to
///       true (verbatim, validated strictly); false applies the closure
/// or
///   {"blocks": [["w","v"], ...]}                  partition blocks; worlds
///       not mentioned become singletons
EpistemicModel model_from_json(const std::string& text, const LoadOptions& opts = {});
EpistemicModel model_from_file(const std::string& path, const LoadOptions& opts = {});

/// Serializes in the same schema (pairs form, one chain per block,
/// "closed": false).
std::string model_to_json(const EpistemicModel& m, int indent = 2);

}  // namespace ail

#endif
