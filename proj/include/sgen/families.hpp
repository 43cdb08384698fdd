#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgen/family_types.hpp"

namespace sgen {

/// Parses a selector like {"A","1","1"} or {"St","4"}; nullopt for unknown
/// kinds; usage_error for parameter values outside the family constraints.
std::optional<FamilyId> parse_selector(const std::vector<std::string>& tokens);

/// Throws usage_error when params violate the family constraints.
void validate_params(const FamilyId& id);

BuiltFamily build_family(const FamilyId& id);

/// Dimension of the family from the closed-form count (independent of the
/// builders).
std::size_t family_dimension_formula(const FamilyId& id);

struct CatalogEntry {
  std::string selector;
  std::string constraints;
};

std::vector<CatalogEntry> family_catalog();
std::string catalog_out_of_scope_note();

/// The default desk-scale certification matrix.
std::vector<FamilyId> acceptance_matrix();

}  // namespace sgen
