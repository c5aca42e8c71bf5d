// Built-in catalog of named codes.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot {

struct CatalogEntry {
  std::string name;
  GaussCode code;
  std::string notes;
};

const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> catalog_lookup(const std::string& name);

}  // namespace vknot
