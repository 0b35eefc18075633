#pragma once

#include <string>
#include <variant>

#include "fordspine/path.hpp"
#include "fordspine/scene.hpp"

namespace fordspine {

using RepConfig = std::variant<Representation, RepPath>;

namespace detail {

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error&) {
    throw SchemaError("$");
  }
}

/// A polynomial is a list of complex coefficients, constant term first; a
/// bare complex number is accepted as a constant.
inline Polynomial json_poly(const Json& j, const std::string& path) {
  if (j.is_array() && j.size() == 2 && j[0].is_number()) return Polynomial::constant(json_complex(j, path));
  if (!j.is_array() || j.empty()) throw SchemaError(path);
  Polynomial p;
  for (std::size_t k = 0; k < j.size(); ++k) p.coeffs.push_back(json_complex(j[k], path + "[" + std::to_string(k) + "]"));
  return p;
}

inline std::array<Polynomial, 4> json_poly_matrix(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(path);
  std::array<Polynomial, 4> m;
  for (std::size_t r = 0; r < 2; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != 2) throw SchemaError(rp);
    for (std::size_t c = 0; c < 2; ++c) m[2 * r + c] = json_poly(j[r][c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

inline MoebiusMap json_matrix(const Json& j, const std::string& path, GroupWord word, const Tolerances& tol) {
  const auto m = json_poly_matrix(j, path);
  for (std::size_t k = 0; k < 4; ++k) {
    if (m[k].coeffs.size() != 1) throw SchemaError(path);
  }
  try {
    return MoebiusMap(m[0].at(0), m[1].at(0), m[2].at(0), m[3].at(0), std::move(word), tol);
  } catch (const FordError&) {
    throw SchemaError(path);
  }
}

inline bool has_standard(const Json& j) { return j.contains("a") || j.contains("b") || j.contains("c"); }

}  // namespace detail

/// Representation from a parsed config object (standard form or raw matrices).
inline Representation representation_from_json(const Json& j, const Tolerances& tol = default_tolerances()) {
  if (!j.is_object()) throw SchemaError("$");
  if (detail::has_standard(j)) {
    for (const char* k : {"a", "b", "c"}) {
      if (!j.contains(k)) throw SchemaError(k);
    }
    return standard_representation(json_complex(j["a"], "a"), json_complex(j["b"], "b"), json_complex(j["c"], "c"), tol);
  }
  for (const char* k : {"alpha", "beta", "gamma"}) {
    if (!j.contains(k)) throw SchemaError(j.contains("alpha") || j.contains("beta") || j.contains("gamma") ? k : "c");
  }
  return normalize_representation(detail::json_matrix(j["alpha"], "alpha", GroupWord::alpha(), tol),
                                  detail::json_matrix(j["beta"], "beta", GroupWord::beta(), tol),
                                  detail::json_matrix(j["gamma"], "gamma", GroupWord::gamma(), tol), tol);
}

inline RepPath path_from_json(const Json& j) {
  RepPath p;
  if (!j.is_object() || !j.contains("t_range")) throw SchemaError("t_range");
  const Json& range = j["t_range"];
  if (!range.is_array() || range.size() != 2 || !range[0].is_number() || !range[1].is_number()) throw SchemaError("t_range");
  p.t_start = range[0].get<double>();
  p.t_end = range[1].get<double>();
  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer() || j["samples"].get<int>() < 2) throw SchemaError("samples");
    p.samples = j["samples"].get<int>();
  }
  if (!j.contains("entries") || !j["entries"].is_object()) throw SchemaError("entries");
  const Json& e = j["entries"];
  if (detail::has_standard(e)) {
    p.form = RepPath::Form::Standard;
    for (const char* k : {"a", "b", "c"}) {
      if (!e.contains(k)) throw SchemaError(std::string("entries.") + k);
    }
    p.a = detail::json_poly(e["a"], "entries.a");
    p.b = detail::json_poly(e["b"], "entries.b");
    p.c = detail::json_poly(e["c"], "entries.c");
  } else {
    p.form = RepPath::Form::Matrices;
    const char* names[] = {"alpha", "beta", "gamma"};
    for (std::size_t g = 0; g < 3; ++g) {
      const std::string path = std::string("entries.") + names[g];
      if (!e.contains(names[g])) throw SchemaError(path);
      p.matrix[g] = detail::json_poly_matrix(e[names[g]], path);
    }
  }
  return p;
}

/// Parses a representation or a path config and validates it.
///
/// A path is recognized by its "t_range" key. Representations come back
/// normalized; path samples are normalized when evaluated, but the start of
/// the path is evaluated here so invalid data fails early.
inline RepConfig parse_rep_config(const std::string& text, const Tolerances& tol = default_tolerances()) {
  const Json j = detail::parse_text(text);
  if (!j.is_object()) throw SchemaError("$");
  if (j.contains("t_range")) {
    RepPath p = path_from_json(j);
    (void)p.at(p.t_start, tol);
    return p;
  }
  return representation_from_json(j, tol);
}

}  // namespace fordspine
