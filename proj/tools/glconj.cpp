#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "glconj/conjugacy.hpp"
#include "glconj/fixtures.hpp"
#include "glconj/galois.hpp"
#include "glconj/io.hpp"
#include "glconj/linalg.hpp"
#include "glconj/padic.hpp"
#include "glconj/spectral.hpp"

using namespace glconj;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kMalformed = 1, kUnsupported = 2, kNegative = 3, kUnknown = 4;

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

void emit_matrix(const IntMatrix& a, const std::string& out, bool json) {
  if (out.empty())
    std::cout << (json ? to_json(a).dump() + "\n" : format_matrix(a));
  else
    write_matrix(out, a, json);
}

int cmd_snf(const std::string& file, const std::string& transforms, bool json) {
  IntMatrix a = read_matrix(file);
  if (!transforms.empty()) {
    auto d = snf(a);
    fs::create_directories(transforms);
    write_matrix(fs::path(transforms) / "U.txt", d.U);
    write_matrix(fs::path(transforms) / "D.txt", d.D);
    write_matrix(fs::path(transforms) / "V.txt", d.V);
  }
  auto inv = smith_invariants(a);
  if (json) {
    Json arr = Json::array();
    for (const auto& d : inv) arr.push_back(to_json(d));
    print({{"invariants", arr}, {"rank", inv.size()}, {"rows", a.rows()}, {"cols", a.cols()}});
    return kOk;
  }
  for (std::size_t i = 0; i < inv.size(); ++i) std::cout << (i ? " " : "") << inv[i].get_str();
  std::cout << "\n";
  return kOk;
}

int cmd_spectrum(const std::string& file, const std::string& emit) {
  auto s = split_spectrum(read_matrix(file));
  if (!emit.empty()) {
    fs::create_directories(emit);
    for (std::size_t i = 0; i < s.size(); ++i)
      write_matrix(fs::path(emit) / ("E" + std::to_string(i + 1) + ".txt"), s.E[i]);
  }
  print(to_json(s));
  return kOk;
}

int cmd_assume(const std::string& file) {
  auto r = check_assumption(read_matrix(file));
  print(to_json(r));
  return r.holds() ? kOk : kNegative;
}

int cmd_decide(const std::string& xf, const std::string& yf, const DecideOptions& opt,
               const std::string& conj_out) {
  auto v = decide(read_matrix(xf), read_matrix(yf), opt);
  print(to_json(v));
  if (!conj_out.empty() && v.conjugator) write_matrix(conj_out, *v.conjugator);
  if (v.unsupported) return kUnsupported;
  switch (v.status) {
    case VerdictStatus::Conjugate:
      return kOk;
    case VerdictStatus::NotConjugate:
      return kNegative;
    case VerdictStatus::Unknown:
      return kUnknown;
  }
  return kUnknown;
}

int cmd_graph(bool peisert, std::uint32_t p, std::uint32_t t, std::uint64_t beta_exp,
              const std::string& out, bool json) {
  auto f = field_build(p, 2 * t);
  emit_matrix(peisert ? peisert_adjacency(f, beta_exp) : paley_adjacency(f), out, json);
  return kOk;
}

int cmd_lemma(std::uint32_t p) {
  auto r = verify_smith_lemma(p);
  print(to_json(r));
  return r.pass ? kOk : kNegative;
}

int cmd_jacobi(std::uint32_t p, std::uint32_t precision, bool json) {
  auto r = jacobi_report(p, precision);
  if (json) {
    print(to_json(r));
  } else {
    std::printf("%6s %6s %6s %9s %s\n", "j", "s(j)", "c(j)", "valuation", "match");
    for (const auto& rec : r.records) {
      const bool match = rec.c_j && *rec.c_j == rec.valuation;
      std::printf("%6llu %6u %6s %9u %s\n", static_cast<unsigned long long>(rec.j),
                  digit_sum(static_cast<std::int64_t>(rec.j), p),
                  rec.c_j ? std::to_string(*rec.c_j).c_str() : "-", rec.valuation, match ? "yes" : "NO");
    }
    std::printf("products alpha_j alpha_{j+k} = p^2: %s\n", r.products_match ? "yes" : "NO");
    std::printf("cases c=0: %zu  c=1: %zu  expected: %s\n", r.counts.c0, r.counts.c1,
                r.counts_match ? "yes" : "NO");
  }
  return r.pass() ? kOk : kNegative;
}

int cmd_lift(const std::string& file, const std::string& q, bool json) {
  emit_matrix(sl_lift(read_matrix(file), parse_integer(q)), "", json);
  return kOk;
}

int cmd_fixtures(const std::string& dir) {
  using clock = std::chrono::steady_clock;
  auto corpus = load_fixtures(dir.empty() ? default_fixture_dir() : fs::path(dir));
  int failed = 0;
  auto line = [&](bool ok, const std::string& name, const std::string& what, double secs) {
    if (!ok) ++failed;
    std::printf("%s  %-18s %-44s %8.2fs\n", ok ? "PASS" : "FAIL", name.c_str(), what.c_str(), secs);
  };
  for (const auto& f : corpus.pairs) {
    line(true, f.name, "certificates re-verified (" + std::to_string(f.local.size()) + " local" +
                           (f.conjugator ? ", global)" : ")"), 0.0);
    auto t0 = clock::now();
    auto v = decide(f.X, f.Y);
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    bool ok = (!f.expect || v.status == *f.expect) && (!f.expect_reason || v.reason == *f.expect_reason);
    if (v.conjugator) ok = ok && verify_conjugator(*v.conjugator, f.X, f.Y);
    line(ok, f.name, "decide " + to_string(v.status) + " (" + to_string(v.reason) + ")", secs);
  }
  for (std::uint32_t p : {3u, 7u, 11u}) {
    auto t0 = clock::now();
    auto r = verify_smith_lemma(p);
    line(r.pass, "lemma p=" + std::to_string(p), "E2/E3 Smith invariants of both graphs",
         std::chrono::duration<double>(clock::now() - t0).count());
  }
  for (std::uint32_t p : {3u, 7u}) {
    auto t0 = clock::now();
    auto r = jacobi_report(p);
    line(r.pass(), "jacobi p=" + std::to_string(p), "valuations, products and case counts",
         std::chrono::duration<double>(clock::now() - t0).count());
  }
  std::printf("%s: %d failure(s)\n", failed ? "FAIL" : "PASS", failed);
  return failed ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral matrix conjugacy over GL_n(Z)"};
  app.require_subcommand(1);
  int code = kOk;
  bool json = false;

  std::string file, file2, dir, out, qstr;
  std::uint32_t p = 0, t = 1, precision = 4;
  std::uint64_t beta_exp = 1;
  DecideOptions opt;

  auto* snf_cmd = app.add_subcommand("snf", "Smith invariants of a matrix");
  snf_cmd->add_option("matrix", file)->required();
  snf_cmd->add_option("--transforms", dir, "write U, D, V with U A V = D into this directory");
  snf_cmd->add_flag("--json", json);
  snf_cmd->callback([&] { code = cmd_snf(file, dir, json); });

  auto* spec_cmd = app.add_subcommand("spectrum", "eigenvalues, multiplicities, q_i and E_i");
  spec_cmd->add_option("matrix", file)->required();
  spec_cmd->add_option("--emit-idempotents", dir, "write E1.txt, E2.txt, ... into this directory");
  spec_cmd->callback([&] { code = cmd_spectrum(file, dir); });

  auto* assume_cmd = app.add_subcommand("assume", "Smith-group assumption report");
  assume_cmd->add_option("matrix", file)->required();
  assume_cmd->callback([&] { code = cmd_assume(file); });

  auto* decide_cmd = app.add_subcommand("decide", "decide GL_n(Z)-conjugacy of X and Y");
  decide_cmd->add_option("X", file)->required();
  decide_cmd->add_option("Y", file2)->required();
  decide_cmd->add_option("--budget", opt.local_budget, "random samples per local test")->capture_default_str();
  decide_cmd->add_option("--search-budget", opt.search_budget, "combination trials in conjugator search")
      ->capture_default_str();
  decide_cmd->add_option("--seed", opt.seed)->capture_default_str();
  decide_cmd->add_option("--explicit-up-to", opt.explicit_up_to,
                         "also search for a conjugator on the theorem route up to this size")
      ->capture_default_str();
  decide_cmd->add_option("--conjugator-out", out, "write the global conjugator here");
  decide_cmd->callback([&] { code = cmd_decide(file, file2, opt, out); });

  for (bool peisert : {false, true}) {
    auto* g = app.add_subcommand(peisert ? "peisert" : "paley",
                                 peisert ? "Peisert graph adjacency on F_{p^{2t}}" : "Paley graph adjacency on F_{p^{2t}}");
    g->add_option("p", p)->required();
    g->add_option("--t", t)->capture_default_str();
    g->add_option("--out", out);
    g->add_flag("--json", json);
    if (peisert) g->add_option("--beta-exp", beta_exp, "use beta^e as the coset generator")->capture_default_str();
    g->callback([&, peisert] { code = cmd_graph(peisert, p, t, beta_exp, out, json); });
  }

  auto* lemma_cmd = app.add_subcommand("verify-lemma", "Smith invariants of E2, E3 on F_{p^2}");
  lemma_cmd->add_option("p", p)->required();
  lemma_cmd->callback([&] { code = cmd_lemma(p); });

  auto* jac_cmd = app.add_subcommand("jacobi", "valuations of the Jacobi sums alpha_j");
  jac_cmd->add_option("p", p)->required();
  jac_cmd->add_option("--precision", precision)->capture_default_str();
  jac_cmd->add_flag("--json", json);
  jac_cmd->callback([&] { code = cmd_jacobi(p, precision, json); });

  auto* lift_cmd = app.add_subcommand("lift-sl", "lift M in SL_n(Z/q) to SL_n(Z)");
  lift_cmd->add_option("matrix", file)->required();
  lift_cmd->add_option("q", qstr)->required();
  lift_cmd->add_flag("--json", json);
  lift_cmd->callback([&] { code = cmd_lift(file, qstr, json); });

  auto* fix_cmd = app.add_subcommand("fixtures", "run the fixture corpus");
  fix_cmd->add_option("--dir", dir);
  fix_cmd->callback([&] { code = cmd_fixtures(dir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  } catch (const NotSplit& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const DetNotOne& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const FixtureError& e) {
    std::cerr << "fixture error: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return code;
}
