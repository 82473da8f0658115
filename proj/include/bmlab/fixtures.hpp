// Counterexample tables from the theorems, with the unit facts each theorem
// states about its identity.

#ifndef BMLAB_FIXTURES_HPP
#define BMLAB_FIXTURES_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bmlab/cayley_table.hpp"
#include "bmlab/evaluator.hpp"

namespace bmlab {

std::string default_fixture_dir();

struct FixtureClaim {
  std::string label;  // owning identity
  std::string file;   // shared grids are stored once
  bool left_unit;
  bool right_unit;
  bool associative;
};

std::span<FixtureClaim const> fixture_claims();

class FixtureInvalid : public std::runtime_error {
 public:
  FixtureInvalid(std::string const& label, std::string const& reason)
      : std::runtime_error("fixture for " + label + " is invalid: " + reason) {}
};

class FixtureContradictsPaper : public std::runtime_error {
 public:
  FixtureContradictsPaper(std::string const& label, std::string const& detail)
      : std::runtime_error("fixture for " + label + " contradicts its theorem: " + detail) {}
};

using FixtureMap = std::map<std::string, std::vector<CayleyTable>>;

// Reads every fixture file, validating each grid as a Latin square.
// Throws FixtureInvalid.
FixtureMap load_fixtures(std::string const& dir = default_fixture_dir());

struct FixtureCertificate {
  std::string label;
  CayleyTable table;
  SatReport sat;
  UnitProfile profile;
};

// Checks that the fixture satisfies its identity and matches the claimed
// unit facts. Throws FixtureContradictsPaper.
FixtureCertificate verify_fixture(std::string const& label, FixtureMap const& fixtures);

nlohmann::json to_json(FixtureCertificate const& c);

}  // namespace bmlab

#endif  // BMLAB_FIXTURES_HPP
