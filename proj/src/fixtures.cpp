#include "glconj/fixtures.hpp"

#include <cstdlib>
#include <fstream>

#include "glconj/galois.hpp"
#include "glconj/io.hpp"

#ifndef GLCONJ_FIXTURE_DIR
#define GLCONJ_FIXTURE_DIR "fixtures"
#endif

namespace glconj {

namespace {

VerdictStatus status_from(const std::string& s) {
  for (auto v : {VerdictStatus::Conjugate, VerdictStatus::NotConjugate, VerdictStatus::Unknown})
    if (to_string(v) == s) return v;
  throw FixtureError("unknown status " + s);
}

VerdictReason reason_from(const std::string& s) {
  for (auto v : {VerdictReason::ExplicitConjugator, VerdictReason::TheoremLocalPasses,
                 VerdictReason::CharpolyMismatch, VerdictReason::LocalObstruction,
                 VerdictReason::BqfCertificate, VerdictReason::AssumptionUnverified})
    if (to_string(v) == s) return v;
  throw FixtureError("unknown reason " + s);
}

}  // namespace

const FixturePair& FixtureCorpus::at(const std::string& name) const {
  for (const auto& p : pairs)
    if (p.name == name) return p;
  throw FixtureError("no fixture named " + name);
}

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("GLCONJ_FIXTURES"); env && *env) return env;
  return GLCONJ_FIXTURE_DIR;
}

FixtureCorpus load_fixtures(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw FixtureError("missing " + (dir / "manifest.json").string());
  Json manifest;
  try {
    manifest = Json::parse(in);
  } catch (const Json::exception& e) {
    throw FixtureError(std::string("bad manifest: ") + e.what());
  }
  auto load = [&](const Json& name) { return read_matrix(dir / name.get<std::string>()); };

  FixtureCorpus corpus{dir, {}};
  for (const auto& entry : manifest.at("pairs")) {
    FixturePair f;
    f.name = entry.at("name").get<std::string>();
    f.X = load(entry.at("X"));
    f.Y = load(entry.at("Y"));
    if (entry.contains("expect")) f.expect = status_from(entry["expect"].get<std::string>());
    if (entry.contains("reason")) f.expect_reason = reason_from(entry["reason"].get<std::string>());
    if (entry.contains("graph_p")) f.graph_p = entry["graph_p"].get<std::uint32_t>();
    for (const auto& l : entry.value("local", Json::array())) {
      FixtureLocal loc{integer_from_json(l.at("p")).get_ui(), load(l.at("T"))};
      if (!verify_conjugator(loc.T, f.X, f.Y, loc.prime))
        throw FixtureError(f.name + ": local certificate at " + std::to_string(loc.prime) + " fails");
      f.local.push_back(std::move(loc));
    }
    if (entry.contains("conjugator")) {
      f.conjugator = load(entry["conjugator"]);
      if (!verify_conjugator(*f.conjugator, f.X, f.Y))
        throw FixtureError(f.name + ": conjugator fails");
    }
    if (f.graph_p) {
      auto field = field_build(*f.graph_p, 2);
      if (f.X != paley_adjacency(field) || f.Y != peisert_adjacency(field))
        throw FixtureError(f.name + ": stored graphs differ from construction");
    }
    corpus.pairs.push_back(std::move(f));
  }
  return corpus;
}

}  // namespace glconj
