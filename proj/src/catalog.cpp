#include "bmlab/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <vector>

namespace bmlab {

namespace {

struct RawEntry {
  char const* label;
  char const* text;
  char const* abbrev;
};

// Rows in the order of the classification table (grouped by unit profile).
constexpr RawEntry kRaw[] = {
      {"F1", "xy.zx = (xy.z)x", ""},
      {"F3", "xy.zx = x(y.zx)", ""},
      {"F5", "(xy.z)x = (x.yz)x", ""},
      {"F10", "x(y.zx) = x(yz.x)", ""},
      {"F11", "xy.xz = (xy.x)z", ""},
      {"F12", "xy.xz = (x.yx)z", ""},
      {"F14", "xy.xz = x(y.xz)", ""},
      {"F18", "(x.yx)z = x(yx.z)", ""},
      {"F20", "x(yx.z) = x(y.xz)", ""},
      {"F21", "yx.zx = (yx.z)x", ""},
      {"F23", "yx.zx = y(xz.x)", ""},
      {"F24", "yx.zx = y(x.zx)", ""},
      {"F25", "(yx.z)x = (y.xz)x", ""},
      {"F28", "(y.xz)x = y(xz.x)", ""},
      {"F31", "yx.xz = (yx.x)z", ""},
      {"F32", "yx.xz = (y.xx)z", ""},
      {"F33", "yx.xz = y(xx.z)", ""},
      {"F34", "yx.xz = y(x.xz)", ""},
      {"F47", "(x.xy)z = x(xy.z)", ""},
      {"F50", "x(x.yz) = x(xy.z)", ""},
      {"F55", "(yz.x)x = (y.zx)x", ""},
      {"F58", "(y.zx)x = y(zx.x)", ""},
      {"F4", "xy.zx = x(yz.x)", "middle Moufang"},
      {"F2", "xy.zx = (x.yz)x", "middle Moufang"},
      {"F6", "(xy.z)x = x(y.zx)", "extra identity"},
      {"F13", "xy.xz = x(yx.z)", "extra identity"},
      {"F17", "(xy.x)z = x(y.xz)", "left Moufang"},
      {"F22", "yx.zx = (y.xz)x", "extra identity"},
      {"F27", "(yx.z)x = y(x.zx)", "right Moufang"},
      {"F38", "(y.xx)z = y(xx.z)", ""},
      {"F41", "xx.yz = (x.xy)z", "LC identity"},
      {"F53", "yz.xx = y(zx.x)", "RC identity"},
      {"F7", "(xy.z)x = x(yz.x)", ""},
      {"F16", "(xy.x)z = x(yx.z)", ""},
      {"F26", "(yx.z)x = y(xz.x)", "right Bol"},
      {"F36", "(yx.x)z = y(xx.z)", "RC identity"},
      {"F40", "y(xx.z) = y(x.xz)", ""},
      {"F42", "xx.yz = (xx.y)z", ""},
      {"F43", "xx.yz = x(x.yz)", ""},
      {"F44", "xx.yz = x(xy.z)", ""},
      {"F45", "(x.xy)z = (xx.y)z", ""},
      {"F48", "(xx.y)z = x(x.yz)", "LC identity"},
      {"F49", "(xx.y)z = x(xy.z)", ""},
      {"F8", "(x.yz)x = x(y.zx)", ""},
      {"F19", "(x.yx)z = x(y.xz)", "left Bol"},
      {"F29", "(y.xz)x = y(x.zx)", ""},
      {"F35", "(yx.x)z = (y.xx)z", ""},
      {"F39", "(y.xx)z = y(x.xz)", "LC identity"},
      {"F51", "yz.xx = (yz.x)x", ""},
      {"F52", "yz.xx = (y.zx)x", ""},
      {"F54", "yz.xx = y(z.xx)", ""},
      {"F57", "(yz.x)x = y(z.xx)", "RC identity"},
      {"F59", "(y.zx)x = y(z.xx)", ""},
      {"F60", "y(zx.x) = y(z.xx)", ""},
      {"F9", "(x.yz)x = x(yz.x)", ""},
      {"F15", "(xy.x)z = (x.yx)z", ""},
      {"F30", "y(xz.x) = y(x.zx)", ""},
      {"F37", "(yx.x)z = y(x.xz)", "C identity"},
      {"F46", "(x.xy)z = x(x.yz)", "LC identity"},
      {"F56", "(yz.x)x = y(zx.x)", "RC identity"},
};

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> entries;
  entries.reserve(std::size(kRaw));
  for (auto const& raw : kRaw) {
    Term lhs = parse_term(std::string_view(raw.text).substr(0, std::string_view(raw.text).find('=')));
    Term rhs = parse_term(std::string_view(raw.text).substr(std::string_view(raw.text).find('=') + 1));
    Identity id{std::move(lhs), std::move(rhs), std::string(raw.label)};
    check_bol_moufang(id);
    entries.push_back({raw.label, raw.text, raw.abbrev, std::move(id)});
  }
  return entries;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

}  // namespace

std::span<CatalogEntry const> catalog() {
  static std::vector<CatalogEntry> const entries = build();
  return entries;
}

CatalogEntry const& catalog_entry(std::string_view label) {
  auto const wanted = upper(label);
  for (auto const& e : catalog()) {
    if (e.label == wanted) return e;
  }
  throw UnknownLabel(label);
}

std::optional<std::string> catalog_label(Identity const& id) {
  for (auto const& e : catalog()) {
    if (equivalent(e.identity, id)) return e.label;
  }
  return std::nullopt;
}

Identity resolve_identity(std::string_view spec) {
  auto const first = spec.find_first_not_of(" \t");
  if (first != std::string_view::npos && (spec[first] == 'F' || spec[first] == 'f')) {
    auto const last = spec.find_last_not_of(" \t");
    return catalog_entry(spec.substr(first, last - first + 1)).identity;
  }
  return parse_identity(spec);
}

nlohmann::json catalog_json() {
  auto out = nlohmann::json::array();
  for (auto const& e : catalog()) {
    auto const type = identity_type(e.identity);
    out.push_back({{"label", e.label},
                   {"text", e.text},
                   {"abbrev", e.abbrev},
                   {"lhs_perm", type.lhs_perm.to_string()},
                   {"rhs_perm", type.rhs_perm.to_string()},
                   {"double_slots", type.double_slots}});
  }
  return out;
}

}  // namespace bmlab
