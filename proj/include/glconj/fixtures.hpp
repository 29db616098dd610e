#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "glconj/conjugacy.hpp"
#include "glconj/int_matrix.hpp"

namespace glconj {

class FixtureError : public Error {
 public:
  using Error::Error;
};

struct FixtureLocal {
  std::uint64_t prime = 0;
  IntMatrix T;
};

struct FixturePair {
  std::string name;
  IntMatrix X, Y;
  std::optional<VerdictStatus> expect;
  std::optional<VerdictReason> expect_reason;
  std::vector<FixtureLocal> local;
  std::optional<IntMatrix> conjugator;
  /// Set for graph fixtures: X and Y must equal Paley / Peisert on F_{p^2}.
  std::optional<std::uint32_t> graph_p;
};

struct FixtureCorpus {
  std::filesystem::path dir;
  std::vector<FixturePair> pairs;

  const FixturePair& at(const std::string& name) const;
};

/// GLCONJ_FIXTURES from the environment, else the source tree's fixtures/.
std::filesystem::path default_fixture_dir();

/// Reads manifest.json and re-verifies every stored certificate (and every
/// graph fixture against a fresh construction). Throws FixtureError.
FixtureCorpus load_fixtures(const std::filesystem::path& dir = default_fixture_dir());

}  // namespace glconj
