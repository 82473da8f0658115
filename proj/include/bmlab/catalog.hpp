// The sixty classical Bol-Moufang identities F1..F60.

#ifndef BMLAB_CATALOG_HPP
#define BMLAB_CATALOG_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bmlab/identity.hpp"

namespace bmlab {

struct CatalogEntry {
  std::string label;   // "F1" .. "F60"
  std::string text;    // as printed in the classification table, '.' for the dot
  std::string abbrev;  // "left Moufang", "LC identity", ... or empty
  Identity identity;
};

// All sixty entries in classification-table row order.
std::span<CatalogEntry const> catalog();

class UnknownLabel : public std::out_of_range {
 public:
  explicit UnknownLabel(std::string_view label)
      : std::out_of_range("no catalog identity labelled '" + std::string(label) + "'") {}
};

// Case-insensitive ("f17" works). Throws UnknownLabel.
CatalogEntry const& catalog_entry(std::string_view label);

// Label of the catalog entry equivalent to `id`, if any.
std::optional<std::string> catalog_label(Identity const& id);

// A catalog label ("F7") or an inline identity ("xy.zx = (xy.z)x").
Identity resolve_identity(std::string_view spec);

// [{label, text, abbrev, lhs_perm, rhs_perm, double_slots}, ...]
nlohmann::json catalog_json();

}  // namespace bmlab

#endif  // BMLAB_CATALOG_HPP
