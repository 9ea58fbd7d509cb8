#include "nambu/representation.hpp"

#include <functional>

#include "nambu/algebra.hpp"
#include "nambu/errors.hpp"

namespace nambu {

namespace {

int tuple_parity(const Tuple& t, const std::vector<int>& par) {
  int p = 0;
  for (int i : t) p ^= par[i];
  return p;
}

Scalar koszul(bool negative) { return negative ? Scalar(-1) : Scalar(1); }

// Bilinear extension of a basis table.
Vec table_pair(const std::vector<std::vector<Vec>>& tab, const Vec& x, const Vec& y, size_t w) {
  Vec out(w);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) axpy(out, x[i] * y[j], tab[i][j]);
  }
  return out;
}

}  // namespace

Vec fundamental_bracket_basis(const HomSuperAlgebra& a, size_t w, size_t u) {
  const WedgeBasis& W = a.wedge();
  const Tuple& y = W.element(u);
  const int px = W.parity(w);
  std::vector<Vec> alpha_y;
  for (int k : y) alpha_y.push_back(a.alpha().col(k));
  Vec out(W.size());
  int before = 0;
  for (size_t i = 0; i < y.size(); ++i) {
    std::vector<Vec> args = alpha_y;
    args[i] = a.ad(w).col(y[i]);
    axpy(out, koszul(px & before), W.wedge_of(args));
    before ^= a.p(y[i]);
  }
  return out;
}

std::vector<std::vector<Vec>> fundamental_table(const HomSuperAlgebra& a) {
  const size_t n = a.wedge().size();
  std::vector<std::vector<Vec>> tab(n, std::vector<Vec>(n));
  for (size_t w = 0; w < n; ++w)
    for (size_t u = 0; u < n; ++u) tab[w][u] = fundamental_bracket_basis(a, w, u);
  return tab;
}

Vec fundamental_bracket(const HomSuperAlgebra& a, const Vec& x, const Vec& y) {
  const size_t n = a.wedge().size();
  require(x.size() == n && y.size() == n, ErrorKind::DimensionMismatch, "wedge coordinates");
  Vec out(n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j)
      if (!y[j].is_zero()) axpy(out, x[i] * y[j], fundamental_bracket_basis(a, i, j));
  }
  return out;
}

Report verify_bracket_identities(const HomSuperAlgebra& a) {
  const WedgeBasis& W = a.wedge();
  const size_t n = W.size();
  const auto tab = fundamental_table(a);
  const Matrix& aw = a.alpha_wedge();
  Report rep;
  std::string wit;
  for (size_t x = 0; x < n && wit.empty(); ++x)
    for (size_t y = 0; y < n; ++y) {
      Scalar s = koszul(W.parity(x) & W.parity(y));
      Matrix lhs = a.ad_of(aw.col(x)) * a.ad(y);
      Matrix rhs = (a.ad_of(aw.col(y)) * a.ad(x)).scaled(s) + a.ad_of(tab[x][y]) * a.alpha();
      if (lhs != rhs) {
        wit = "x=" + tuple_str(W.element(x)) + " y=" + tuple_str(W.element(y));
        break;
      }
    }
  rep.add("action", wit.empty(), wit);

  wit.clear();
  for (size_t x = 0; x < n && wit.empty(); ++x)
    for (size_t y = 0; y < n && wit.empty(); ++y) {
      Scalar s = koszul(W.parity(x) & W.parity(y));
      for (size_t z = 0; z < n; ++z) {
        Vec lhs = table_pair(tab, aw.col(x), tab[y][z], n);
        Vec rhs = s * table_pair(tab, aw.col(y), tab[x][z], n);
        axpy(rhs, 1, table_pair(tab, tab[x][y], aw.col(z), n));
        if (lhs != rhs) {
          wit = "x=" + tuple_str(W.element(x)) + " y=" + tuple_str(W.element(y)) +
                " z=" + tuple_str(W.element(z));
          break;
        }
      }
    }
  rep.add("jacobi", wit.empty(), wit);

  wit.clear();
  for (size_t x = 0; x < n && wit.empty(); ++x)
    for (size_t y = 0; y < n; ++y) {
      Scalar s = koszul(W.parity(x) & W.parity(y));
      Matrix lhs = a.ad_of(tab[x][y]) * a.alpha();
      Matrix rhs = (a.ad_of(tab[y][x]) * a.alpha()).scaled(-s);
      if (lhs != rhs) {
        wit = "x=" + tuple_str(W.element(x)) + " y=" + tuple_str(W.element(y));
        break;
      }
    }
  rep.add("skew action", wit.empty(), wit);
  return rep;
}

Matrix Representation::of(const Vec& x) const {
  require(x.size() == rho.size(), ErrorKind::DimensionMismatch, "wedge coordinates");
  Matrix out(dim(), dim());
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out = out + rho[i].scaled(x[i]);
  return out;
}

Representation adjoint_rep(const HomSuperAlgebra& a) {
  Representation r{a.space(), {}, a.alpha()};
  for (size_t w = 0; w < a.wedge().size(); ++w) r.rho.push_back(a.ad(w));
  return r;
}

Representation zero_rep(const HomSuperAlgebra& a, const GradedSpace& v, const Matrix& nu) {
  return Representation{v, std::vector<Matrix>(a.wedge().size(), Matrix(v.dim(), v.dim())), nu};
}

Report verify_representation(const Representation& r, const HomSuperAlgebra& a) {
  const WedgeBasis& W = a.wedge();
  const size_t dv = r.dim(), d = a.dim();
  const auto& pv = r.target.parity;
  require(r.rho.size() == W.size(), ErrorKind::DimensionMismatch, "one rho matrix per wedge element");
  require(r.nu.rows() == dv && r.nu.cols() == dv, ErrorKind::DimensionMismatch, "nu shape");
  for (const Matrix& m : r.rho)
    require(m.rows() == dv && m.cols() == dv, ErrorKind::DimensionMismatch, "rho shape");
  Report rep;

  std::string wit;
  for (size_t w = 0; w < W.size() && wit.empty(); ++w)
    for (size_t i = 0; i < dv && wit.empty(); ++i)
      for (size_t j = 0; j < dv; ++j)
        if (!r.rho[w](i, j).is_zero() && pv[i] != (pv[j] ^ W.parity(w))) {
          wit = "rho" + tuple_str(W.element(w)) + " entry (" + std::to_string(i + 1) + "," +
                std::to_string(j + 1) + ")";
          break;
        }
  if (wit.empty() && !is_even_map(r.nu, pv, pv)) wit = "nu is not even";
  rep.add("grading", wit.empty(), wit);

  const auto tab = fundamental_table(a);
  const Matrix& aw = a.alpha_wedge();
  wit.clear();
  for (size_t x = 0; x < W.size() && wit.empty(); ++x)
    for (size_t y = 0; y < W.size(); ++y) {
      Scalar s = koszul(W.parity(x) & W.parity(y));
      Matrix lhs = r.of(aw.col(x)) * r.rho[y];
      Matrix rhs = (r.of(aw.col(y)) * r.rho[x]).scaled(s) + r.of(tab[x][y]) * r.nu;
      if (lhs != rhs) {
        wit = "x=" + tuple_str(W.element(x)) + " y=" + tuple_str(W.element(y));
        break;
      }
    }
  rep.add("commutator", wit.empty(), wit);

  wit.clear();
  const size_t n = static_cast<size_t>(a.arity());
  std::vector<Vec> alpha_e, e;
  for (size_t i = 0; i < d; ++i) {
    alpha_e.push_back(a.alpha().col(i));
    e.push_back(unit_vec(d, i));
  }
  const auto xs = canonical_tuples(a.parity(), n - 2);
  Tuple y(n);
  std::function<void(size_t, const Tuple&)> rec = [&](size_t k, const Tuple& x) {
    if (!wit.empty()) return;
    if (k < n) {
      for (size_t i = 0; i < d; ++i) {
        y[k] = static_cast<int>(i);
        rec(k + 1, x);
      }
      return;
    }
    const int px = tuple_parity(x, a.parity());
    std::vector<Vec> args;
    for (int i : x) args.push_back(alpha_e[i]);
    args.push_back(a.basis_bracket(y));
    Matrix lhs = r.of(W.wedge_of(args)) * r.nu;
    Matrix rhs(dv, dv);
    for (size_t i = 0; i < n; ++i) {
      int others = 0, after = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        others ^= a.p(y[j]);
        if (j > i) after ^= a.p(y[j]);
      }
      bool neg = ((n - 1 - i) % 2 == 1) ^ static_cast<bool>(px & others) ^
                 static_cast<bool>(a.p(y[i]) & after);
      std::vector<Vec> outer, inner;
      for (size_t j = 0; j < n; ++j)
        if (j != i) outer.push_back(alpha_e[y[j]]);
      for (int j : x) inner.push_back(e[j]);
      inner.push_back(e[y[i]]);
      Matrix term = r.of(W.wedge_of(outer)) * r.of(W.wedge_of(inner));
      rhs = rhs + term.scaled(koszul(neg));
    }
    if (lhs != rhs) wit = "x=" + tuple_str(x) + " y=" + tuple_str(y);
  };
  for (const Tuple& x : xs) rec(0, x);
  rep.add("bracket", wit.empty(), wit);
  return rep;
}

Vec module_bracket(const HomSuperAlgebra& a, const Representation& r,
                   const std::vector<Vec>& args, const std::vector<bool>& in_module) {
  const size_t n = static_cast<size_t>(a.arity());
  require(args.size() == n && in_module.size() == n, ErrorKind::DimensionMismatch,
          "module bracket takes n arguments");
  size_t count = 0, k = 0;
  for (size_t i = 0; i < n; ++i)
    if (in_module[i]) {
      ++count;
      k = i;
    }
  require(count >= 1 && count <= 2, ErrorKind::DimensionMismatch, "one or two module slots");
  for (size_t i = 0; i < n; ++i)
    require(args[i].size() == (in_module[i] ? r.dim() : a.dim()), ErrorKind::DimensionMismatch,
            "argument length");
  Vec out(r.dim());
  if (count == 2) return out;
  const WedgeBasis& W = a.wedge();
  const auto& pv = r.target.parity;
  Tuple t;
  std::function<void(size_t, const Scalar&)> rec = [&](size_t j, const Scalar& coef) {
    if (j == n) return;
    if (j == k) {
      rec(j + 1, coef);
      return;
    }
    for (size_t b = 0; b < a.dim(); ++b) {
      if (args[j][b].is_zero()) continue;
      t.push_back(static_cast<int>(b));
      Scalar c = coef * args[j][b];
      if (t.size() == n - 1) {
        auto [s, pos] = W.lookup(t);
        if (s != 0) {
          for (size_t o = 0; o < r.dim(); ++o) {
            if (args[k][o].is_zero()) continue;
            // v passes every slot after position k
            bool neg = false;
            size_t ti = 0;
            for (size_t q = 0; q < n; ++q) {
              if (q == k) continue;
              if (q > k) neg ^= !(pv[o] & a.p(t[ti]));
              ++ti;
            }
            Scalar cc = c * args[k][o] * Scalar(s) * koszul(neg);
            for (size_t i = 0; i < r.dim(); ++i)
              if (!r.rho[pos](i, o).is_zero()) out[i] += cc * r.rho[pos](i, o);
          }
        }
      } else {
        rec(j + 1, c);
      }
      t.pop_back();
    }
  };
  rec(0, Scalar(1));
  return out;
}

}  // namespace nambu
