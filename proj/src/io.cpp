#include "glconj/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace glconj {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t parse_dimension(const std::string& tok) {
  if (tok.empty() || tok.size() > 9)
    throw ParseError("bad dimension '" + tok + "'");
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad dimension '" + tok + "'");
  return std::stoul(tok);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_from_json(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_string()) return parse_dimension(j.get<std::string>());
  throw ParseError("expected a count");
}

template <class E, std::size_t N>
E enum_from_string(const std::string& s, const E (&values)[N]) {
  for (E v : values)
    if (to_string(v) == s) return v;
  throw ParseError("unknown value '" + s + "'");
}

constexpr VerdictStatus kStatuses[] = {VerdictStatus::Conjugate, VerdictStatus::NotConjugate,
                                       VerdictStatus::Unknown};
constexpr VerdictReason kReasons[] = {
    VerdictReason::ExplicitConjugator, VerdictReason::TheoremLocalPasses,
    VerdictReason::CharpolyMismatch,   VerdictReason::LocalObstruction,
    VerdictReason::BqfCertificate,     VerdictReason::AssumptionUnverified};
constexpr LocalStatus kLocalStatuses[] = {LocalStatus::Pass, LocalStatus::Fail, LocalStatus::Undecided};
constexpr LocalMethod kLocalMethods[] = {LocalMethod::Sampled, LocalMethod::Exhaustive,
                                         LocalMethod::Supplied};
constexpr UnitProof kProofs[] = {UnitProof::Witness, UnitProof::DefiniteMinimum,
                                 UnitProof::CycleExclusion, UnitProof::FactorSystem};

BinaryQuadraticForm form_from_json(const Json& j) {
  return {integer_from_json(field(j, "a")), integer_from_json(field(j, "b")),
          integer_from_json(field(j, "c"))};
}

Json pair_to_json(const std::pair<Integer, Integer>& p) { return Json::array({to_json(p.first), to_json(p.second)}); }

std::pair<Integer, Integer> pair_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a pair");
  return {integer_from_json(j[0]), integer_from_json(j[1])};
}

}  // namespace

Integer parse_integer(std::string_view s) {
  std::string t(s);
  std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (start == t.size()) throw ParseError("bad integer '" + t + "'");
  for (std::size_t i = start; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw ParseError("bad integer '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  return Integer(t, 10);
}

IntMatrix parse_matrix(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty matrix input");
  if (text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(j);
  }
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  std::istringstream header(line);
  std::string r, c, extra;
  if (!(header >> r >> c) || (header >> extra)) throw ParseError("header must be 'rows cols'");
  const std::size_t rows = parse_dimension(r), cols = parse_dimension(c);
  IntMatrix a(rows, cols);
  std::string tok;
  std::size_t k = 0;
  while (in >> tok) {
    if (k == rows * cols) throw ParseError("too many entries");
    a.entries()[k++] = parse_integer(tok);
  }
  if (k != rows * cols) throw ParseError("expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(k));
  return a;
}

IntMatrix read_matrix(const std::filesystem::path& path) { return parse_matrix(read_file(path)); }

std::string format_matrix(const IntMatrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += a(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

void write_matrix(const std::filesystem::path& path, const IntMatrix& a, bool json) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << (json ? to_json(a).dump() + "\n" : format_matrix(a));
}

Json to_json(const Integer& v) { return v.get_str(); }

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.dump(), 10);
  throw ParseError("expected a decimal string");
}

Json to_json(const IntMatrix& a) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_json(a(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = count_from_json(field(j, "rows")), cols = count_from_json(field(j, "cols"));
  const Json& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows) throw ParseError("entries must have 'rows' rows");
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!e[i].is_array() || e[i].size() != cols) throw ParseError("entry row has wrong length");
    for (std::size_t k = 0; k < cols; ++k) a(i, k) = integer_from_json(e[i][k]);
  }
  return a;
}

Json to_json(const AssumptionReport& r) {
  Json idx = Json::array();
  for (const auto& e : r.per_index)
    idx.push_back({{"eigenvalue", to_json(e.eigenvalue)},
                   {"q", to_json(e.q)},
                   {"smith_exponent", to_json(e.smith_exponent)},
                   {"rank", e.rank}});
  Json j{{"clause_a", r.clause_a}, {"clause_b", r.clause_b}, {"holds", r.holds()}, {"per_index", idx}};
  j["witness_index_for_b"] = r.witness_index_for_b ? Json(*r.witness_index_for_b) : Json(nullptr);
  return j;
}

AssumptionReport assumption_from_json(const Json& j) {
  AssumptionReport r;
  r.clause_a = field(j, "clause_a").get<bool>();
  r.clause_b = field(j, "clause_b").get<bool>();
  for (const auto& e : field(j, "per_index"))
    r.per_index.push_back({integer_from_json(field(e, "eigenvalue")), integer_from_json(field(e, "q")),
                           integer_from_json(field(e, "smith_exponent")), count_from_json(field(e, "rank"))});
  if (j.contains("witness_index_for_b") && !j["witness_index_for_b"].is_null())
    r.witness_index_for_b = count_from_json(j["witness_index_for_b"]);
  return r;
}

Json to_json(const BinaryQuadraticForm& f) {
  return {{"a", to_json(f.a)}, {"b", to_json(f.b)}, {"c", to_json(f.c)}};
}

Json to_json(const LocalVerdict& v) {
  Json j{{"p", std::to_string(v.prime)},
         {"status", to_string(v.status)},
         {"method", to_string(v.method)},
         {"trials", std::to_string(v.trials)}};
  if (v.certificate) j["T"] = to_json(*v.certificate);
  return j;
}

LocalVerdict local_verdict_from_json(const Json& j) {
  LocalVerdict v;
  v.prime = integer_from_json(field(j, "p")).get_ui();
  v.status = enum_from_string(field(j, "status").get<std::string>(), kLocalStatuses);
  if (j.contains("method")) v.method = enum_from_string(j["method"].get<std::string>(), kLocalMethods);
  if (j.contains("trials")) v.trials = integer_from_json(j["trials"]).get_ui();
  if (j.contains("T")) v.certificate = matrix_from_json(j["T"]);
  return v;
}

Json to_json(const Verdict& v) {
  Json cert = Json::object();
  if (v.conjugator) cert["conjugator"] = to_json(*v.conjugator);
  cert["local"] = Json::array();
  for (const auto& l : v.local) cert["local"].push_back(to_json(l));
  if (v.bqf) {
    const auto& rep = v.bqf->representation;
    Json b = to_json(v.bqf->form);
    b["proof"] = to_string(rep.proof);
    b["represents_unit"] = rep.represents;
    b["discriminant"] = to_json(v.bqf->form.discriminant());
    if (rep.witness) b["witness"] = pair_to_json(*rep.witness);
    b["reduced"] = to_json(rep.reduced);
    if (rep.proof == UnitProof::CycleExclusion) b["cycle_length"] = rep.cycle_length;
    if (rep.factors)
      b["factors"] = Json::array({pair_to_json(rep.factors->first), pair_to_json(rep.factors->second)});
    cert["bqf"] = std::move(b);
  }
  Json j{{"status", to_string(v.status)}, {"reason", to_string(v.reason)}, {"certificates", std::move(cert)}};
  if (v.assumption) {
    j["assumption"] = to_json(*v.assumption);
    j["assumption_subject"] = std::string(1, v.assumption_subject);
  }
  j["unsupported"] = v.unsupported;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.status = enum_from_string(field(j, "status").get<std::string>(), kStatuses);
  v.reason = enum_from_string(field(j, "reason").get<std::string>(), kReasons);
  const Json& cert = field(j, "certificates");
  if (cert.contains("conjugator")) v.conjugator = matrix_from_json(cert["conjugator"]);
  for (const auto& l : field(cert, "local")) v.local.push_back(local_verdict_from_json(l));
  if (cert.contains("bqf")) {
    const Json& b = cert["bqf"];
    BqfCertificate c;
    c.form = form_from_json(b);
    c.representation.proof = enum_from_string(field(b, "proof").get<std::string>(), kProofs);
    c.representation.represents = b.value("represents_unit", false);
    if (b.contains("witness")) c.representation.witness = pair_from_json(b["witness"]);
    if (b.contains("reduced")) c.representation.reduced = form_from_json(b["reduced"]);
    if (b.contains("cycle_length")) c.representation.cycle_length = count_from_json(b["cycle_length"]);
    if (b.contains("factors")) {
      const Json& f = b["factors"];
      if (!f.is_array() || f.size() != 2) throw ParseError("factors must be two pairs");
      c.representation.factors = std::make_pair(pair_from_json(f[0]), pair_from_json(f[1]));
    }
    v.bqf = c;
  }
  if (j.contains("assumption")) {
    v.assumption = assumption_from_json(j["assumption"]);
    const auto s = j.value("assumption_subject", std::string("X"));
    v.assumption_subject = s.empty() ? 'X' : s[0];
  }
  v.unsupported = j.value("unsupported", false);
  v.detail = j.value("detail", std::string());
  return v;
}

Json to_json(const SplitSpectrum& s, bool with_idempotents) {
  Json parts = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    Json e{{"eigenvalue", to_json(s.eigenvalues[i])}, {"multiplicity", s.multiplicities[i]}, {"q", to_json(s.q[i])}};
    if (with_idempotents) e["E"] = to_json(s.E[i]);
    parts.push_back(std::move(e));
  }
  Json coeffs = Json::array();
  const auto minpoly = s.minimal_polynomial();
  for (const auto& c : minpoly.coefficients()) coeffs.push_back(to_json(c));
  return {{"n", s.n}, {"minimal_polynomial", coeffs}, {"eigenspaces", parts}};
}

Json to_json(const SnfDecomposition& d) {
  Json inv = Json::array();
  for (const auto& x : d.invariants) inv.push_back(to_json(x));
  return {{"invariants", inv}, {"U", to_json(d.U)}, {"D", to_json(d.D)}, {"V", to_json(d.V)}};
}

Json to_json(const SmithLemmaReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json counts = Json::object();
    for (const auto& [d, c] : e.invariant_counts) counts[d.get_str()] = c;
    entries.push_back({{"name", e.name},
                       {"invariant_counts", counts},
                       {"ones", e.count_one},
                       {"p", e.count_p},
                       {"p2", e.count_p2},
                       {"other", e.count_other},
                       {"pass", e.pass}});
  }
  return {{"p", r.p},
          {"expected", {{"ones", 1}, {"p", r.expected_p}, {"p2", r.expected_p2}}},
          {"entries", entries},
          {"pass", r.pass}};
}

Json to_json(const JacobiReport& r) {
  Json rows = Json::array();
  for (const auto& rec : r.records) {
    Json alpha = Json::array();
    for (auto c : rec.alpha) alpha.push_back(std::to_string(c));
    Json row{{"j", rec.j},
             {"s_j", digit_sum(static_cast<std::int64_t>(rec.j), r.p)},
             {"valuation", rec.valuation},
             {"alpha", alpha}};
    row["c_j"] = rec.c_j ? Json(*rec.c_j) : Json(nullptr);
    row["match"] = rec.c_j && *rec.c_j == rec.valuation;
    rows.push_back(std::move(row));
  }
  return {{"p", r.p},
          {"precision", r.precision},
          {"records", rows},
          {"valuations_match", r.valuations_match},
          {"products_match", r.products_match},
          {"counts", {{"c0", r.counts.c0}, {"c1", r.counts.c1}}},
          {"counts_match", r.counts_match},
          {"pass", r.pass()}};
}

}  // namespace glconj
