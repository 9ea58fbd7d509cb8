#include "nambu/io.hpp"

#include <fstream>
#include <sstream>

#include "nambu/algebra.hpp"
#include "nambu/errors.hpp"

namespace nambu::io {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  fail(ErrorKind::Parse, (path.empty() ? "" : path + ": ") + msg);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string sub(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

size_t count_from(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad(path, "expected a non-negative integer");
  return j.get<size_t>();
}

size_t index_from(const Json& j, size_t dim, const std::string& path) {
  size_t v = count_from(j, path);
  if (v < 1 || v > dim) bad(path, "index " + std::to_string(v) + " outside 1.." + std::to_string(dim));
  return v - 1;
}

std::vector<int> parity_from(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) {
    size_t p = count_from(j[i], at(path, i));
    if (p > 1) bad(at(path, i), "parity must be 0 or 1");
    out.push_back(static_cast<int>(p));
  }
  return out;
}

}  // namespace

Json scalar_json(const Scalar& s) { return s.str(); }

Scalar scalar_from(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const Error& e) {
      bad(path, e.detail());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  bad(path, "expected a rational string");
}

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const Scalar& s : v) out.push_back(scalar_json(s));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) out.push_back(vec_json(m.row(i)));
  return out;
}

Matrix matrix_from(const Json& j, size_t rows, size_t cols, const std::string& path) {
  if (!j.is_array() || j.size() != rows)
    bad(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      bad(at(path, i), "expected " + std::to_string(cols) + " entries");
    for (size_t k = 0; k < cols; ++k) m(i, k) = scalar_from(j[i][k], at(at(path, i), k));
  }
  return m;
}

Json tuple_json(const Tuple& t) {
  Json out = Json::array();
  for (int i : t) out.push_back(i + 1);
  return out;
}

Tuple tuple_from(const Json& j, size_t dim, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an index array");
  Tuple t;
  for (size_t i = 0; i < j.size(); ++i)
    t.push_back(static_cast<int>(index_from(j[i], dim, at(path, i))));
  return t;
}

Json algebra_json(const HomSuperAlgebra& a, const Matrix* form) {
  Json j;
  j["name"] = a.name();
  j["n"] = a.arity();
  j["dim"] = a.dim();
  j["parity"] = a.parity();
  j["alpha"] = matrix_json(a.alpha());
  Json br = Json::array();
  for (const auto& [t, v] : a.entries()) {
    Json val = Json::object();
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) val[std::to_string(i + 1)] = scalar_json(v[i]);
    if (val.empty()) continue;
    br.push_back({{"args", tuple_json(t)}, {"value", val}});
  }
  j["bracket"] = br;
  if (form) j["form"] = matrix_json(*form);
  return j;
}

AlgebraFile algebra_from(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an algebra object");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  const size_t n = count_from(field(j, "n", path), sub(path, "n"));
  if (n < 2) bad(sub(path, "n"), "arity must be at least 2");
  GradedSpace sp{parity_from(field(j, "parity", path), sub(path, "parity"))};
  const size_t dim = sp.dim();
  if (j.contains("dim") && count_from(j["dim"], sub(path, "dim")) != dim)
    bad(sub(path, "dim"), "dim disagrees with parity length");
  Matrix alpha = j.contains("alpha") ? matrix_from(j["alpha"], dim, dim, sub(path, "alpha"))
                                     : Matrix::identity(dim);
  std::vector<std::pair<Tuple, Vec>> entries;
  const Json& br = field(j, "bracket", path);
  if (!br.is_array()) bad(sub(path, "bracket"), "expected an array");
  for (size_t e = 0; e < br.size(); ++e) {
    const std::string p = at(sub(path, "bracket"), e);
    Tuple t = tuple_from(field(br[e], "args", p), dim, sub(p, "args"));
    if (t.size() != n) bad(sub(p, "args"), "expected " + std::to_string(n) + " indices");
    const Json& val = field(br[e], "value", p);
    if (!val.is_object()) bad(sub(p, "value"), "expected a map from output index to rational");
    Vec v(dim);
    int tp = 0;
    for (int i : t) tp ^= sp.p(i);
    for (const auto& [key, s] : val.items()) {
      size_t o = 0;
      try {
        size_t used = 0;
        o = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        bad(sub(p, "value"), "output key \"" + key + "\" is not an index");
      }
      if (o < 1 || o > dim) bad(sub(p, "value"), "output index " + key + " out of range");
      v[o - 1] = scalar_from(s, sub(sub(p, "value"), key));
      if (!v[o - 1].is_zero() && sp.p(o - 1) != tp)
        bad(p, "value on e" + key + " breaks homogeneity for " + tuple_str(t));
    }
    entries.push_back({t, v});
  }
  AlgebraFile out;
  try {
    out.algebra = HomSuperAlgebra::from_any_tuples(name, sp, static_cast<int>(n), entries, alpha);
  } catch (const Error& e) {
    bad(sub(path, "bracket"), e.detail());
  }
  if (j.contains("form")) out.form = matrix_from(j["form"], dim, dim, sub(path, "form"));
  if (j.contains("representation")) out.representation = j["representation"];
  if (j.contains("theta")) out.theta = j["theta"];
  if (j.contains("cocycle")) out.cocycle = j["cocycle"];
  return out;
}

Json representation_json(const Representation& r, const HomSuperAlgebra& a) {
  Json j;
  j["parity"] = r.target.parity;
  j["alpha"] = matrix_json(r.nu);
  Json rho = Json::array();
  const WedgeBasis& W = a.wedge();
  for (size_t w = 0; w < W.size(); ++w)
    if (!r.rho[w].is_zero())
      rho.push_back({{"wedge", tuple_json(W.element(w))}, {"matrix", matrix_json(r.rho[w])}});
  j["rho"] = rho;
  return j;
}

Representation representation_from(const Json& j, const HomSuperAlgebra& a,
                                    const std::string& path) {
  Representation r;
  r.target.parity = parity_from(field(j, "parity", path), sub(path, "parity"));
  const size_t dv = r.dim();
  r.nu = j.contains("alpha") ? matrix_from(j["alpha"], dv, dv, sub(path, "alpha"))
                             : Matrix::identity(dv);
  const WedgeBasis& W = a.wedge();
  r.rho.assign(W.size(), Matrix(dv, dv));
  std::vector<bool> seen(W.size(), false);
  const Json& rho = field(j, "rho", path);
  if (!rho.is_array()) bad(sub(path, "rho"), "expected an array");
  for (size_t e = 0; e < rho.size(); ++e) {
    const std::string p = at(sub(path, "rho"), e);
    Tuple t = tuple_from(field(rho[e], "wedge", p), a.dim(), sub(p, "wedge"));
    if (t.size() != W.degree()) bad(sub(p, "wedge"), "wrong wedge degree");
    auto [s, pos] = W.lookup(t);
    Matrix m = matrix_from(field(rho[e], "matrix", p), dv, dv, sub(p, "matrix"));
    if (s == 0) {
      if (!m.is_zero()) bad(p, "nonzero value on a vanishing wedge");
      continue;
    }
    Matrix val = m.scaled(Scalar(s));
    if (seen[pos] && !(r.rho[pos] == val)) bad(p, "inconsistent duplicate wedge");
    seen[pos] = true;
    r.rho[pos] = val;
  }
  return r;
}

Json cochain_json(const HomSuperAlgebra& a, size_t dim_v, size_t m, const Vec& f) {
  const WedgeBasis& W = a.wedge();
  const size_t d = a.dim();
  Json entries = Json::array();
  for (size_t idx = 0; idx < f.size(); ++idx) {
    if (f[idx].is_zero()) continue;
    size_t rest = idx;
    const size_t o = rest % dim_v;
    rest /= dim_v;
    const size_t z = rest % d;
    rest /= d;
    std::vector<size_t> ws(m);
    for (size_t i = m; i-- > 0;) {
      ws[i] = rest % W.size();
      rest /= W.size();
    }
    Json wj = Json::array();
    for (size_t w : ws) wj.push_back(tuple_json(W.element(w)));
    entries.push_back({{"wedges", wj}, {"arg", z + 1}, {"out", o + 1}, {"value", scalar_json(f[idx])}});
  }
  Json j;
  j["m"] = m;
  j["entries"] = entries;
  return j;
}

Vec cochain_from(const Json& j, const HomSuperAlgebra& a, size_t dim_v, size_t m,
                 const std::string& path) {
  const WedgeBasis& W = a.wedge();
  const size_t d = a.dim();
  if (j.contains("m") && count_from(j["m"], sub(path, "m")) != m)
    bad(sub(path, "m"), "expected an " + std::to_string(m) + "-cochain");
  size_t raw = d * dim_v;
  for (size_t i = 0; i < m; ++i) raw *= W.size();
  Vec f(raw);
  std::vector<bool> seen(raw, false);
  const Json& entries = field(j, "entries", path);
  if (!entries.is_array()) bad(sub(path, "entries"), "expected an array");
  for (size_t e = 0; e < entries.size(); ++e) {
    const std::string p = at(sub(path, "entries"), e);
    const Json& wj = field(entries[e], "wedges", p);
    if (!wj.is_array() || wj.size() != m)
      bad(sub(p, "wedges"), "expected " + std::to_string(m) + " wedge tuples");
    int sign = 1;
    size_t idx = 0;
    for (size_t i = 0; i < m; ++i) {
      Tuple t = tuple_from(wj[i], d, at(sub(p, "wedges"), i));
      if (t.size() != W.degree()) bad(at(sub(p, "wedges"), i), "wrong wedge degree");
      auto [s, pos] = W.lookup(t);
      sign *= s;
      idx = idx * W.size() + pos;
    }
    const size_t z = index_from(field(entries[e], "arg", p), d, sub(p, "arg"));
    const size_t o = index_from(field(entries[e], "out", p), dim_v, sub(p, "out"));
    Scalar v = scalar_from(field(entries[e], "value", p), sub(p, "value"));
    if (sign == 0) {
      if (!v.is_zero()) bad(p, "nonzero value on a vanishing wedge");
      continue;
    }
    idx = (idx * d + z) * dim_v + o;
    Scalar val = Scalar(sign) * v;
    if (seen[idx] && !(f[idx] == val)) bad(p, "inconsistent duplicate entry");
    seen[idx] = true;
    f[idx] = val;
  }
  return f;
}

Json datum_json(const ExtensionDatum& d) {
  Json j;
  j["base"] = algebra_json(d.base);
  j["fiber"] = {{"parity", d.module.target.parity}, {"alpha", matrix_json(d.module.nu)}};
  Json mod = representation_json(d.module, d.base);
  j["module"] = {{"rho", mod["rho"]}};
  j["cocycle"] = cochain_json(d.base, d.module.dim(), 1, d.cocycle);
  return j;
}

ExtensionDatum datum_from(const Json& j) {
  ExtensionDatum d;
  d.base = algebra_from(field(j, "base", ""), "base").algebra;
  const Json& fib = field(j, "fiber", "");
  Json mod = field(j, "module", "");
  if (!mod.is_object()) bad("module", "expected an object");
  mod["parity"] = field(fib, "parity", "fiber");
  if (fib.contains("alpha")) mod["alpha"] = fib["alpha"];
  d.module = representation_from(mod, d.base, "module");
  d.cocycle = cochain_from(field(j, "cocycle", ""), d.base, d.module.dim(), 1, "cocycle");
  return d;
}

Json subspace_json(const Subspace& s) {
  Json j;
  j["dim"] = s.dim();
  j["basis"] = matrix_json(s.basis());
  return j;
}

Json report_json(const Report& r) {
  Json j;
  j["pass"] = r.ok();
  Json cs = Json::array();
  for (const Check& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.pass) cj["witness"] = c.witness;
    cs.push_back(cj);
  }
  j["checks"] = cs;
  return j;
}

Json certificate_json(const Certificate& c) {
  const size_t h = c.rec.g1.dim();
  Json j;
  j["input"] = c.input;
  j["nilpotent_length"] = c.k;
  j["g1_nilpotent_length"] = c.k1;
  j["length_bound"] = c.bound;
  j["odd"] = c.odd;
  j["J"] = subspace_json(c.j);
  j["I"] = subspace_json(c.i);
  if (c.odd) j["embedding"] = matrix_json(c.embedding);
  j["g1"] = algebra_json(c.rec.g1);
  j["theta"] = cochain_json(c.rec.g1, h, 1, c.rec.theta);
  j["phi"] = matrix_json(c.rec.phi);
  j["checks"] = report_json(c.checks);
  return j;
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorKind::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                               ": invalid JSON");
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::Parse, path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::Parse, path + ": cannot write");
  out << dump(j);
}

}  // namespace nambu::io
