#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "nambu/extensions.hpp"
#include "nambu/tstar.hpp"

namespace nambu::io {

/// Files use one-based indices and rationals as "p/q" strings. This is the only
/// place where indices are translated. Every loader error is ErrorKind::Parse with
/// the offending field path in the message.
using Json = nlohmann::ordered_json;

Json scalar_json(const Scalar& s);
Scalar scalar_from(const Json& j, const std::string& path);
Json vec_json(const Vec& v);
Json matrix_json(const Matrix& m);  // row-major
Matrix matrix_from(const Json& j, size_t rows, size_t cols, const std::string& path);
Json tuple_json(const Tuple& t);    // one-based
Tuple tuple_from(const Json& j, size_t dim, const std::string& path);

struct AlgebraFile {
  HomSuperAlgebra algebra;
  std::optional<Matrix> form;
  std::optional<Json> representation;
  std::optional<Json> theta;
  std::optional<Json> cocycle;
};

/// name, n, dim, parity, alpha (column j = alpha(e_j)), bracket, optional form.
Json algebra_json(const HomSuperAlgebra& a, const Matrix* form = nullptr);
/// Re-canonicalizes bracket tuples; checks parity values and homogeneity of each value.
AlgebraFile algebra_from(const Json& j, const std::string& path = "");

/// {"parity", "alpha", "rho": [{wedge, matrix}]}; the twist is stored as "alpha".
Json representation_json(const Representation& r, const HomSuperAlgebra& a);
Representation representation_from(const Json& j, const HomSuperAlgebra& a,
                                    const std::string& path);

/// Sparse cochain: {"m", "entries": [{"wedges": [[..]], "arg", "out", "value"}]}.
Json cochain_json(const HomSuperAlgebra& a, size_t dim_v, size_t m, const Vec& f);
Vec cochain_from(const Json& j, const HomSuperAlgebra& a, size_t dim_v, size_t m,
                 const std::string& path);

/// {"base", "fiber": {"parity", "alpha"}, "module": {"rho"}, "cocycle"}.
Json datum_json(const ExtensionDatum& d);
ExtensionDatum datum_from(const Json& j);

Json subspace_json(const Subspace& s);
Json report_json(const Report& r);
Json certificate_json(const Certificate& c);

/// Parses text; syntax errors report line and column.
Json parse(const std::string& text, const std::string& source);
Json read_file(const std::string& path);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);
void write_file(const std::string& path, const Json& j);

}  // namespace nambu::io
