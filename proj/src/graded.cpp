#include "nambu/graded.hpp"

#include <functional>

#include "nambu/errors.hpp"

namespace nambu {

std::string tuple_str(const Tuple& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
  return s + ")";
}

Subspace GradedSpace::part(int par) const {
  std::vector<Vec> vs;
  for (size_t i = 0; i < dim(); ++i)
    if (parity[i] == par) vs.push_back(unit_vec(dim(), i));
  return Subspace::span(dim(), vs);
}

Straightened straighten(const Tuple& indices, const std::vector<int>& parity) {
  Straightened r{1, indices};
  Tuple& t = r.canonical;
  for (int i : t)
    require(i >= 0 && static_cast<size_t>(i) < parity.size(), ErrorKind::IndexOutOfRange,
            "index " + std::to_string(i + 1) + " out of range");
  for (size_t i = 1; i < t.size(); ++i)
    for (size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
      if (!(parity[t[j - 1]] & parity[t[j]])) r.sign = -r.sign;
      std::swap(t[j - 1], t[j]);
    }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1] && parity[t[i]] == 0) {
      r.sign = 0;
      break;
    }
  return r;
}

std::vector<Tuple> canonical_tuples(const std::vector<int>& parity, size_t length) {
  std::vector<Tuple> out;
  Tuple cur;
  const int d = static_cast<int>(parity.size());
  std::function<void(int)> rec = [&](int start) {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < d; ++i) {
      if (!cur.empty() && cur.back() == i && parity[i] == 0) continue;
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

WedgeBasis::WedgeBasis(const std::vector<int>& parity, size_t degree)
    : space_parity_(parity), degree_(degree), elems_(canonical_tuples(parity, degree)) {
  for (size_t i = 0; i < elems_.size(); ++i) {
    int p = 0;
    for (int k : elems_[i]) p ^= parity[k];
    par_.push_back(p);
    index_[elems_[i]] = i;
  }
}

std::pair<int, size_t> WedgeBasis::lookup(const Tuple& t) const {
  require(t.size() == degree_, ErrorKind::DimensionMismatch, "wedge lookup degree");
  auto s = straighten(t, space_parity_);
  if (s.sign == 0) return {0, 0};
  return {s.sign, index_.at(s.canonical)};
}

Vec WedgeBasis::wedge_of(const std::vector<Vec>& vectors) const {
  require(vectors.size() == degree_, ErrorKind::DimensionMismatch, "wedge_of degree");
  Vec out(size());
  Tuple t(degree_);
  std::function<void(size_t, const Scalar&)> rec = [&](size_t k, const Scalar& coef) {
    if (k == degree_) {
      auto [sg, pos] = lookup(t);
      if (sg > 0) out[pos] += coef;
      else if (sg < 0) out[pos] -= coef;
      return;
    }
    const Vec& v = vectors[k];
    require(v.size() == space_parity_.size(), ErrorKind::DimensionMismatch, "wedge_of vector");
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      t[k] = static_cast<int>(i);
      rec(k + 1, coef * v[i]);
    }
  };
  rec(0, Scalar(1));
  return out;
}

Matrix WedgeBasis::induced(const Matrix& m) const {
  Matrix r(size(), size());
  for (size_t w = 0; w < size(); ++w) {
    std::vector<Vec> cols;
    for (int k : elems_[w]) cols.push_back(m.col(k));
    r.set_col(w, wedge_of(cols));
  }
  return r;
}

HomSuperAlgebra::HomSuperAlgebra(std::string name, GradedSpace space, int n,
                                 const Entries& entries, Matrix alpha)
    : name_(std::move(name)), space_(std::move(space)), n_(n), alpha_(std::move(alpha)) {
  require(n >= 2, ErrorKind::DimensionMismatch, "arity must be at least 2");
  const size_t d = dim();
  require(alpha_.rows() == d && alpha_.cols() == d, ErrorKind::DimensionMismatch,
          "alpha must be dim x dim");
  for (int p : space_.parity)
    require(p == 0 || p == 1, ErrorKind::Parse, "parity entries must be 0 or 1");
  for (const auto& [t, v] : entries) {
    require(t.size() == static_cast<size_t>(n), ErrorKind::DimensionMismatch,
            "bracket entry arity " + tuple_str(t));
    require(v.size() == d, ErrorKind::DimensionMismatch, "bracket entry length " + tuple_str(t));
    auto s = straighten(t, space_.parity);
    require(s.sign == 1 && s.canonical == t, ErrorKind::Parse,
            "bracket key not canonical: " + tuple_str(t));
    if (!nambu::is_zero(v)) entries_[t] = v;
  }
  wedge_ = WedgeBasis(space_.parity, static_cast<size_t>(n - 1));
  ad_.reserve(wedge_.size());
  for (size_t w = 0; w < wedge_.size(); ++w) {
    Matrix m(d, d);
    Tuple t = wedge_.element(w);
    t.push_back(0);
    for (size_t z = 0; z < d; ++z) {
      t.back() = static_cast<int>(z);
      m.set_col(z, basis_bracket(t));
    }
    ad_.push_back(std::move(m));
  }
  alpha_wedge_ = wedge_.induced(alpha_);
}

HomSuperAlgebra HomSuperAlgebra::from_any_tuples(
    std::string name, GradedSpace space, int n,
    const std::vector<std::pair<Tuple, Vec>>& entries, Matrix alpha) {
  Entries canon;
  for (const auto& [t, v] : entries) {
    auto s = straighten(t, space.parity);
    if (s.sign == 0) {
      require(nambu::is_zero(v), ErrorKind::Parse,
              "nonzero value on vanishing tuple " + tuple_str(t));
      continue;
    }
    Vec val = s.sign > 0 ? v : Scalar(-1) * v;
    auto it = canon.find(s.canonical);
    if (it != canon.end()) {
      require(it->second == val, ErrorKind::Parse,
              "sign-inconsistent duplicate entry " + tuple_str(t));
      continue;
    }
    canon[s.canonical] = val;
  }
  return HomSuperAlgebra(std::move(name), std::move(space), n, canon, std::move(alpha));
}

Vec HomSuperAlgebra::basis_bracket(const Tuple& t) const {
  require(t.size() == static_cast<size_t>(n_), ErrorKind::DimensionMismatch, "bracket arity");
  auto s = straighten(t, space_.parity);
  if (s.sign == 0) return Vec(dim());
  auto it = entries_.find(s.canonical);
  if (it == entries_.end()) return Vec(dim());
  return s.sign > 0 ? it->second : Scalar(-1) * it->second;
}

Matrix HomSuperAlgebra::ad_of(const Vec& x) const {
  require(x.size() == wedge_.size(), ErrorKind::DimensionMismatch, "ad_of");
  Matrix m(dim(), dim());
  for (size_t w = 0; w < x.size(); ++w)
    if (!x[w].is_zero()) m = m + ad_[w].scaled(x[w]);
  return m;
}

Vec HomSuperAlgebra::act(const Vec& x, const Vec& z) const {
  require(x.size() == wedge_.size(), ErrorKind::DimensionMismatch, "act");
  Vec out(dim());
  for (size_t w = 0; w < x.size(); ++w)
    if (!x[w].is_zero()) axpy(out, x[w], ad_[w] * z);
  return out;
}

Vec HomSuperAlgebra::bracket(const std::vector<Vec>& args) const {
  require(args.size() == static_cast<size_t>(n_), ErrorKind::DimensionMismatch,
          "bracket expects " + std::to_string(n_) + " arguments");
  for (const auto& a : args)
    require(a.size() == dim(), ErrorKind::DimensionMismatch, "bracket argument length");
  std::vector<Vec> head(args.begin(), args.end() - 1);
  return act(wedge_.wedge_of(head), args.back());
}

bool HomSuperAlgebra::is_abelian() const { return entries_.empty(); }

}  // namespace nambu
