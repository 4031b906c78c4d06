#include "curvforge/io.hpp"

#include <fstream>
#include <sstream>

#include "curvforge/error.hpp"

namespace curvforge::io {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

std::size_t index_from_json(const Json& j, std::size_t n, const char* key) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      static_cast<std::size_t>(j.get<std::int64_t>()) >= n) {
    throw InputError(std::string("index \"") + key + "\" out of range");
  }
  return j.get<std::size_t>();
}

std::string_view kind_name(StructureKind kind) {
  return kind == StructureKind::complex ? "complex" : "product";
}

Json residual_to_json(const std::variant<Rational, Vector, Matrix>& residual) {
  return std::visit([](const auto& value) { return to_json(value); }, residual);
}

}  // namespace

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw InputError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a vector (array), got " + j.dump());
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return Vector(std::move(coords));
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a matrix (array of rows)");
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InputError("matrix rows are ragged");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

ScalarProduct space_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("expected a JSON object");
  if (doc.contains("metric")) {
    const Matrix g = matrix_from_json(doc.at("metric"));
    if (!g.is_square()) throw InputError("metric must be square");
    if (doc.contains("dim") && doc.at("dim") != Json(g.rows())) {
      throw InputError("\"dim\" disagrees with the metric");
    }
    return ScalarProduct(g);
  }
  if (doc.contains("signature")) {
    const Json& s = doc.at("signature");
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_unsigned() ||
        !s[1].is_number_unsigned()) {
      throw InputError("\"signature\" must be [p, q]");
    }
    return ScalarProduct::diagonal(s[0].get<std::size_t>(), s[1].get<std::size_t>());
  }
  if (doc.contains("dim")) {
    const Json& n = doc.at("dim");
    if (!n.is_number_unsigned() || n.get<std::size_t>() == 0) {
      throw InputError("\"dim\" must be a positive integer");
    }
    return ScalarProduct::euclidean(n.get<std::size_t>());
  }
  throw InputError("no \"metric\", \"signature\" or \"dim\" given");
}

Json to_json(const CurvatureTensor& r) {
  const std::size_t n = r.dim();
  Json components = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json a = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json b = Json::array();
      for (std::size_t k = 0; k < n; ++k) {
        Json c = Json::array();
        for (std::size_t l = 0; l < n; ++l) c.push_back(to_json(r(i, j, k, l)));
        b.push_back(std::move(c));
      }
      a.push_back(std::move(b));
    }
    components.push_back(std::move(a));
  }
  return Json{{"dim", n}, {"metric", to_json(r.space().metric())}, {"components", components}};
}

CurvatureTensor tensor_from_json(const Json& doc) {
  const ScalarProduct g = space_from_json(doc);
  const std::size_t n = g.dim();
  std::vector<Rational> c(n * n * n * n);
  if (doc.contains("components")) {
    const Json& a = doc.at("components");
    auto check = [n](const Json& level) {
      if (!level.is_array() || level.size() != n) {
        throw InputError("components must be nested four deep with length " + std::to_string(n));
      }
    };
    check(a);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      check(a[i]);
      for (std::size_t j = 0; j < n; ++j) {
        check(a[i][j]);
        for (std::size_t k = 0; k < n; ++k) {
          check(a[i][j][k]);
          for (std::size_t l = 0; l < n; ++l) c[idx++] = rational_from_json(a[i][j][k][l]);
        }
      }
    }
  } else if (doc.contains("entries")) {
    const Json& entries = doc.at("entries");
    if (!entries.is_array()) throw InputError("\"entries\" must be an array");
    for (const auto& e : entries) {
      const std::size_t i = index_from_json(require(e, "i"), n, "i");
      const std::size_t j = index_from_json(require(e, "j"), n, "j");
      const std::size_t k = index_from_json(require(e, "k"), n, "k");
      const std::size_t l = index_from_json(require(e, "l"), n, "l");
      c[((i * n + j) * n + k) * n + l] = rational_from_json(require(e, "v"));
    }
  } else {
    throw InputError("tensor needs \"components\" or \"entries\"");
  }
  return CurvatureTensor(g, std::move(c));
}

Json to_json(const CliffordSpec& spec) {
  Json mu = Json::array();
  for (const auto& m : spec.coefficients) mu.push_back(to_json(m));
  Json structures = Json::array();
  for (const auto& s : spec.structures) {
    structures.push_back({{"kind", kind_name(s.kind)}, {"matrix", to_json(s.matrix)}});
  }
  return Json{{"metric", to_json(spec.space.metric())}, {"mu", mu}, {"structures", structures}};
}

CliffordSpec clifford_spec_from_json(const Json& doc) {
  CliffordSpec spec{space_from_json(doc), {}, {}};
  const Json& mu = require(doc, "mu");
  if (!mu.is_array()) throw InputError("\"mu\" must be an array");
  for (const auto& m : mu) spec.coefficients.push_back(rational_from_json(m));
  if (doc.contains("structures")) {
    for (const auto& s : doc.at("structures")) {
      const Json& kind = require(s, "kind");
      CliffordStructure structure{matrix_from_json(require(s, "matrix")), StructureKind::complex};
      if (kind == "product") {
        structure.kind = StructureKind::product;
      } else if (kind != "complex") {
        throw InputError("structure kind must be \"complex\" or \"product\"");
      }
      spec.structures.push_back(std::move(structure));
    }
  }
  return spec;
}

JacobiFamily family_from_json(const Json& doc) {
  const Json& kind_json = require(doc, "kind");
  if (!kind_json.is_string()) throw InputError("\"kind\" must be a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "from_tensor") {
    FamilyDomain domain = FamilyDomain::nonnull_only;
    if (doc.contains("domain")) {
      const Json& d = doc.at("domain");
      if (d == "total") {
        domain = FamilyDomain::total;
      } else if (d != "nonnull_only") {
        throw InputError("\"domain\" must be \"total\" or \"nonnull_only\"");
      }
    }
    return jacobi_family_of(tensor_from_json(require(doc, "tensor")), domain);
  }
  if (kind == "clifford") return clifford_family(clifford_spec_from_json(doc));
  if (kind == "eigen_substitution") {
    SubstitutionOptions options;
    if (doc.contains("samples")) options.samples = doc.at("samples").get<std::size_t>();
    if (doc.contains("seed")) options.seed = doc.at("seed").get<std::uint64_t>();
    std::vector<Rational> mu;
    for (const auto& m : require(doc, "mu")) mu.push_back(rational_from_json(m));
    return eigen_substitute(tensor_from_json(require(doc, "tensor")), mu, options);
  }
  if (kind == "table") {
    const ScalarProduct g = space_from_json(doc);
    std::vector<std::pair<Vector, Endomorphism>> entries;
    for (const auto& e : require(doc, "entries")) {
      entries.emplace_back(vector_from_json(require(e, "x")), matrix_from_json(require(e, "k")));
    }
    return JacobiFamily::table(g, std::move(entries));
  }
  if (kind == "epsilon_id") return JacobiFamily::epsilon_identity(space_from_json(doc));
  if (kind == "zero") return JacobiFamily::zero(space_from_json(doc));
  throw InputError("unknown family kind \"" + kind + "\"");
}

Json to_json(const Polynomial& p) {
  Json coefficients = Json::array();
  for (const auto& c : p.coefficients()) coefficients.push_back(to_json(c));
  return Json{{"coefficients", coefficients}, {"text", to_string(p, "x")}};
}

Json to_json(const Witness& w) {
  Json vectors = Json::array();
  for (const auto& v : w.vectors) vectors.push_back(to_json(v));
  Json out{{"axiom", to_string(w.axiom)},
           {"identity", identity_of(w.axiom)},
           {"vectors", vectors},
           {"residual", residual_to_json(w.residual)}};
  if (w.scale) out["scale"] = to_json(*w.scale);
  return out;
}

Json to_json(const AxiomReport& report) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(to_json(w));
  Json out{{"self_adjoint", report.self_adjoint_ok},
           {"compatibility", report.compatible_ok},
           {"annihilation", report.annihilation_ok},
           {"homogeneity", report.homogeneity_ok},
           {"cocycle", report.cocycle_ok},
           {"checks", report.checks},
           {"violations", report.violations},
           {"witnesses", witnesses}};
  if (const auto failure = report.first_failure()) {
    out["first_failure"] = to_string(*failure);
  } else {
    out["first_failure"] = nullptr;
  }
  return out;
}

Json to_json(const SymmetryReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"identity", to_string(v.identity)},
                          {"indices", v.indices},
                          {"residual", to_json(v.residual)}});
  }
  return Json{{"verified", report.verified()},
              {"antisymmetry_first_pair", report.antisymmetry_first_pair_ok},
              {"antisymmetry_second_pair", report.antisymmetry_second_pair_ok},
              {"first_bianchi", report.first_bianchi_ok},
              {"pair_exchange", report.pair_exchange_ok},
              {"violation_count", report.violation_count},
              {"violations", violations}};
}

Json to_json(const OssermanVerdict& verdict) {
  Json out{{"is_osserman", verdict.is_osserman},
           {"reference_char_poly", to_json(verdict.reference_char_poly)},
           {"k_root", verdict.k_root ? Json(*verdict.k_root) : Json(nullptr)},
           {"diagonalizable", verdict.diagonalizable},
           {"samples_used", verdict.samples_used},
           {"seed", verdict.seed}};
  if (verdict.counterexample) {
    out["counterexample"] = {{"x", to_json(verdict.counterexample->first)},
                             {"char_poly", to_json(verdict.counterexample->second)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

Json to_json(const SpectralDecomposition& d) {
  Json spaces = Json::array();
  for (const auto& e : d.eigenspaces) {
    Json s{{"multiplicity", e.multiplicity},
           {"semisimple", e.semisimple},
           {"nondegenerate", e.nondegenerate}};
    if (e.value) {
      s["value"] = to_json(*e.value);
      Json basis = Json::array();
      for (const auto& v : e.basis) basis.push_back(to_json(v));
      s["basis"] = basis;
    } else {
      s["approx_value"] = e.approx_value;
      s["approx_imag"] = e.approx_imag;
      s["approx_basis"] = e.approx_basis;
    }
    spaces.push_back(std::move(s));
  }
  return Json{{"x", to_json(d.base_vector)},
              {"epsilon", to_json(d.epsilon)},
              {"exact", d.exact},
              {"k", d.k()},
              {"diagonalizable", d.diagonalizable()},
              {"eigenspaces", spaces}};
}

Json to_json(const ProportionalityReport& report) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json item{{"x", to_json(w.x)}, {"y", to_json(w.y)}, {"index", w.index}};
    if (w.lhs) {
      item["lhs"] = to_json(*w.lhs);
      item["rhs"] = to_json(*w.rhs);
    } else {
      item["lhs_approx"] = w.lhs_approx;
      item["rhs_approx"] = w.rhs_approx;
    }
    witnesses.push_back(std::move(item));
  }
  return Json{{"holds", report.holds},
              {"exact", report.exact},
              {"pairs_checked", report.pairs_checked},
              {"witnesses", witnesses}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace curvforge::io
