#include "vknot/catalog.hpp"

namespace vknot {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    auto add = [&](const char* name, const char* text, const char* notes) {
      out.push_back({name, parse_gauss(text), notes});
    };
    add("unknot", "()", "crossingless circle");
    add("trefoil", "O1+ U2+ O3+ U1+ O2+ U3+",
        "right-handed trefoil, 3 crossings, classical (supporting genus 0)");
    add("figure-eight", "O1+ U2+ O3- U4- O2+ U1+ O4- U3-",
        "figure-eight knot, 4 crossings, classical (supporting genus 0)");
    add("virtual-trefoil", "O1+ U2+ U1+ O2+",
        "virtual trefoil: trefoil with one crossing virtualized; supporting genus 1");
    add("kishino", "O1+ U2- U1+ O2- O3- U4+ U3- O4+",
        "Kishino knot, 4 classical crossings; welded-trivial, quandle-trivial, "
        "supporting genus 2");
    return out;
  }();
  return entries;
}

std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
  for (const auto& entry : catalog())
    if (entry.name == name) return entry;
  return std::nullopt;
}

}  // namespace vknot
