#include "bmlab/fixtures.hpp"

#include <filesystem>

#include "bmlab/catalog.hpp"

namespace bmlab {

namespace {

// f = left unit, e = right unit, as stated by each theorem.
FixtureClaim const kClaims[] = {
    {"F7", "f7.qg", true, false, false},   {"F9", "f9.qg", false, false, false},
    {"F15", "f9.qg", false, false, false}, {"F16", "f7.qg", true, false, false},
    {"F19", "f19.qg", false, true, false}, {"F35", "f35.qg", false, true, false},
    {"F36", "f7.qg", true, false, false},  {"F37", "f9.qg", false, false, false},
    {"F38", "f38.qg", true, true, false},  {"F41", "f41.qg", true, true, false},
    {"F42", "f7.qg", true, false, false},  {"F43", "f43.qg", true, false, false},
    {"F44", "f7.qg", true, false, false},  {"F45", "f43.qg", true, false, false},
    {"F46", "f9.qg", false, false, false}, {"F48", "f48.qg", true, false, false},
    {"F49", "f7.qg", true, false, false},
};

}  // namespace

std::string default_fixture_dir() { return BMLAB_DEFAULT_FIXTURE_DIR; }

std::span<FixtureClaim const> fixture_claims() { return kClaims; }

FixtureMap load_fixtures(std::string const& dir) {
  std::map<std::string, CayleyTable> by_file;
  FixtureMap out;
  for (auto const& claim : kClaims) {
    auto it = by_file.find(claim.file);
    if (it == by_file.end()) {
      auto const path = (std::filesystem::path(dir) / claim.file).string();
      try {
        it = by_file.emplace(claim.file, load_table(path)).first;
      } catch (TableError const& e) {
        throw FixtureInvalid(claim.label, e.what());
      }
    }
    out[claim.label].push_back(it->second);
  }
  return out;
}

FixtureCertificate verify_fixture(std::string const& label, FixtureMap const& fixtures) {
  auto const it = fixtures.find(label);
  if (it == fixtures.end() || it->second.empty()) {
    throw FixtureContradictsPaper(label, "no fixture table loaded");
  }
  FixtureClaim const* claim = nullptr;
  for (auto const& c : kClaims) {
    if (c.label == label) claim = &c;
  }
  if (!claim) throw FixtureContradictsPaper(label, "no theorem claim recorded");

  auto const& table = it->second.front();
  FixtureCertificate cert{label, table, satisfies(table, catalog_entry(label).identity),
                          classify(table)};
  auto const& p = cert.profile;
  if (!cert.sat.holds) {
    auto const& f = *cert.sat.failing_assignment;
    std::string detail = "identity fails at x=" + std::to_string(f[0]) + " y=" + std::to_string(f[1]) +
                         " z=" + std::to_string(f[2]);
    // A grid printed transposed is the commonest transcription slip; say so.
    if (satisfies(parastrophe12(table), catalog_entry(label).identity).holds) {
      detail += " (the transposed grid satisfies it)";
    }
    throw FixtureContradictsPaper(label, detail);
  }
  if (p.left_unit.has_value() != claim->left_unit) {
    throw FixtureContradictsPaper(label, claim->left_unit ? "left unit missing"
                                                          : "unexpected left unit");
  }
  if (p.right_unit.has_value() != claim->right_unit) {
    throw FixtureContradictsPaper(label, claim->right_unit ? "right unit missing"
                                                           : "unexpected right unit");
  }
  if (p.is_group != claim->associative) {
    throw FixtureContradictsPaper(label, claim->associative ? "not associative"
                                                            : "unexpectedly associative");
  }
  return cert;
}

nlohmann::json to_json(FixtureCertificate const& c) {
  return {{"label", c.label},
          {"order", c.table.order()},
          {"table", c.table.to_grid()},
          {"sat", to_json(c.sat)},
          {"units", to_json(c.profile)}};
}

}  // namespace bmlab
