#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "glconj/conjugacy.hpp"
#include "glconj/galois.hpp"
#include "glconj/int_matrix.hpp"
#include "glconj/linalg.hpp"
#include "glconj/padic.hpp"
#include "glconj/spectral.hpp"

namespace glconj {

using Json = nlohmann::ordered_json;

class ParseError : public Error {
 public:
  using Error::Error;
};

Integer parse_integer(std::string_view s);

/// "rows cols" then rows * cols decimal integers. Input starting with '{' is
/// read as the JSON form {"rows", "cols", "entries"}.
IntMatrix parse_matrix(std::string_view text);
IntMatrix read_matrix(const std::filesystem::path& path);

std::string format_matrix(const IntMatrix& a);
void write_matrix(const std::filesystem::path& path, const IntMatrix& a, bool json = false);

Json to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json to_json(const IntMatrix& a);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const AssumptionReport& r);
AssumptionReport assumption_from_json(const Json& j);

Json to_json(const BinaryQuadraticForm& f);
Json to_json(const LocalVerdict& v);
LocalVerdict local_verdict_from_json(const Json& j);

/// {status, reason, certificates: {conjugator?, local: [{p, status, T?}], bqf?}}
/// plus the assumption report and diagnostics.
Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json to_json(const SplitSpectrum& s, bool with_idempotents = false);
Json to_json(const SnfDecomposition& d);
Json to_json(const SmithLemmaReport& r);
Json to_json(const JacobiReport& r);

}  // namespace glconj
