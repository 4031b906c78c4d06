#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "curvforge/curvature.hpp"
#include "curvforge/jacobi_family.hpp"
#include "curvforge/osserman.hpp"
#include "curvforge/polynomial.hpp"

namespace curvforge::io {

using Json = nlohmann::json;

/// Reads and parses a JSON file. InputError carries the byte position of a
/// parse failure.
Json read_file(const std::filesystem::path& path);
Json parse(const std::string& text);

/// "p/q", or "p" when q = 1. Integer JSON numbers are accepted on input,
/// floating-point numbers are not.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);
Json to_json(const Matrix& m);
/// Rectangular nested arrays; InputError on ragged input.
Matrix matrix_from_json(const Json& j);

/// From "metric" (Gram matrix), else "signature" [p, q], else "dim" n
/// (Euclidean).
ScalarProduct space_from_json(const Json& doc);

/// {"dim", "metric", "components"} with components nested four deep. The
/// sparse form {"entries": [{"i","j","k","l","v"}]} is accepted on input;
/// unlisted components are zero.
Json to_json(const CurvatureTensor& r);
CurvatureTensor tensor_from_json(const Json& doc);

/// {"metric", "mu", "structures": [{"kind", "matrix"}]}
Json to_json(const CliffordSpec& spec);
CliffordSpec clifford_spec_from_json(const Json& doc);

/// Family descriptor {"kind": ...}:
///   from_tensor          "tensor", optional "domain" ("nonnull_only" | "total")
///   clifford             the CliffordSpec fields
///   eigen_substitution   "tensor", "mu", optional "samples", "seed"
///   table                space fields, "entries": [{"x", "k"}]
///   epsilon_id           space fields
///   zero                 space fields
JacobiFamily family_from_json(const Json& doc);

Json to_json(const Polynomial& p);
Json to_json(const Witness& w);
Json to_json(const AxiomReport& report);
Json to_json(const SymmetryReport& report);
Json to_json(const OssermanVerdict& verdict);
Json to_json(const SpectralDecomposition& decomposition);
Json to_json(const ProportionalityReport& report);

/// Two-space indentation, trailing newline.
std::string dump(const Json& j);

}  // namespace curvforge::io
