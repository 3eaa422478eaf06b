#ifndef AIL_CATALOGUE_HPP
#define AIL_CATALOGUE_HPP

#include <string>
#include <vector>

#include "ail/checker.hpp"

namespace ail {

struct CatalogueRow {
    std::string name;
    bool expected_valid;
    std::string schema_text;  // "@awareness-reduction" expands per pool entry
};

/// Parses the bundled catalogue format: one row per line,
/// `name  valid|invalid  schema`, '#' comments and blank lines skipped.
std::vector<CatalogueRow> parse_catalogue(const std::string& text);

struct CatalogueRowResult {
    CatalogueRow row;
    bool pass;
    bool found_countermodel;
    bool exhausted_budget;
    std::uint64_t models_checked;
    /// First falsified instance (text) and its witness, when any.
    std::string countermodel_instance;
    std::optional<EpistemicModel> witness_model;
    std::string witness_world;
    std::size_t instance_count;
};

/// Runs every row through the instantiate-and-search pipeline. A "valid" row
/// passes when every instance survives the bound; an "invalid" row passes
/// when some instance yields a (re-verified) countermodel.
std::vector<CatalogueRowResult> run_catalogue(const std::vector<CatalogueRow>& rows,
                                              const std::vector<FormulaPtr>& pool,
                                              const SearchBounds& bounds);

/// Pool used by the bundled catalogue run: p, q, p & q, I[i] p.
std::vector<FormulaPtr> catalogue_pool();

}  // namespace ail

#endif
