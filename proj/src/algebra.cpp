#include "nambu/algebra.hpp"

#include <functional>

#include "nambu/errors.hpp"

namespace nambu {

namespace {

int tuple_parity(const Tuple& t, const std::vector<int>& par) {
  int p = 0;
  for (int i : t) p ^= par[i];
  return p;
}

// Calls fn on every tuple in [0,d)^len.
void for_all_tuples(size_t d, size_t len, const std::function<bool(const Tuple&)>& fn) {
  if (d == 0 && len > 0) return;
  Tuple t(len, 0);
  while (true) {
    if (!fn(t)) return;
    size_t k = len;
    while (k > 0) {
      --k;
      if (static_cast<size_t>(++t[k]) < d) break;
      t[k] = 0;
      if (k == 0) return;
    }
    if (len == 0) return;
  }
}

std::vector<Matrix> ad_alpha_table(const HomSuperAlgebra& a) {
  std::vector<Matrix> out;
  for (size_t w = 0; w < a.wedge().size(); ++w) out.push_back(a.ad_of(a.alpha_wedge().col(w)));
  return out;
}

}  // namespace

bool is_even_map(const Matrix& f, const std::vector<int>& dom, const std::vector<int>& cod) {
  for (size_t i = 0; i < f.rows(); ++i)
    for (size_t j = 0; j < f.cols(); ++j)
      if (cod[i] != dom[j] && !f(i, j).is_zero()) return false;
  return true;
}

Report verify_algebra(const HomSuperAlgebra& a) {
  Report rep;
  const auto& par = a.parity();
  const size_t d = a.dim();
  const size_t n = static_cast<size_t>(a.arity());

  rep.add("alpha even", is_even_map(a.alpha(), par, par), "alpha mixes parities");

  {
    std::string w;
    for (const auto& [t, v] : a.entries()) {
      int p = tuple_parity(t, par);
      for (size_t k = 0; k < d && w.empty(); ++k)
        if (par[k] != p && !v[k].is_zero())
          w = tuple_str(t) + " has a component on e" + std::to_string(k + 1) + " of wrong parity";
      if (!w.empty()) break;
    }
    rep.add("homogeneity", w.empty(), w);
  }

  {
    std::string w;
    for_all_tuples(d, n, [&](const Tuple& t) {
      for (size_t i = 0; i + 1 < n; ++i) {
        Tuple s = t;
        std::swap(s[i], s[i + 1]);
        Vec lhs = a.basis_bracket(t);
        Vec rhs = a.basis_bracket(s);
        if (!(par[t[i]] & par[t[i + 1]])) rhs = Scalar(-1) * rhs;
        if (lhs != rhs) {
          w = tuple_str(t) + " vs swap at " + std::to_string(i + 1);
          return false;
        }
      }
      return true;
    });
    rep.add("super-skew", w.empty(), w);
  }

  const auto adal = ad_alpha_table(a);
  const auto& W = a.wedge();
  {
    std::string wit;
    for (size_t w = 0; w < W.size() && wit.empty(); ++w) {
      const int px = W.parity(w);
      for_all_tuples(d, n, [&](const Tuple& y) {
        Vec lhs = adal[w] * a.basis_bracket(y);
        Vec rhs(d);
        int before = 0;
        for (size_t i = 0; i < n; ++i) {
          int sign = (px & before) ? -1 : 1;
          before ^= par[y[i]];
          Vec v = a.ad(w).col(y[i]);
          if (nambu::is_zero(v)) continue;
          int pv = px ^ par[y[i]];
          int after = 0;
          Tuple rest;
          for (size_t j = 0; j < n; ++j)
            if (j != i) rest.push_back(y[j]);
          for (size_t j = i + 1; j < n; ++j) after ^= par[y[j]];
          if ((n - 1 - i) % 2) sign = -sign;
          if (pv & after) sign = -sign;
          auto [ls, pos] = W.lookup(rest);
          if (ls == 0) continue;
          axpy(rhs, Scalar(sign * ls), adal[pos] * v);
        }
        if (lhs != rhs) {
          wit = "x=" + tuple_str(W.element(w)) + " y=" + tuple_str(y) + ": lhs=" + vec_str(lhs) +
                " rhs=" + vec_str(rhs);
          return false;
        }
        return true;
      });
    }
    rep.add("fundamental identity", wit.empty(), wit);
  }

  {
    std::string wit;
    for (const Tuple& t : canonical_tuples(par, n)) {
      Vec lhs = a.alpha() * a.basis_bracket(t);
      Tuple head(t.begin(), t.end() - 1);
      auto [s, pos] = W.lookup(head);
      Vec rhs = s == 0 ? Vec(d) : Scalar(s) * (adal[pos] * a.alpha().col(t.back()));
      if (lhs != rhs) {
        wit = tuple_str(t) + ": alpha[..]=" + vec_str(lhs) + " [alpha ..]=" + vec_str(rhs);
        break;
      }
    }
    rep.add("multiplicativity", wit.empty(), wit);
  }
  return rep;
}

Report verify_morphism(const Matrix& f, const HomSuperAlgebra& a, const HomSuperAlgebra& b) {
  require(f.rows() == b.dim() && f.cols() == a.dim(), ErrorKind::DimensionMismatch,
          "morphism shape must be dim(b) x dim(a)");
  require(a.arity() == b.arity(), ErrorKind::DimensionMismatch, "arity mismatch");
  Report rep;
  rep.add("even", is_even_map(f, a.parity(), b.parity()), "map mixes parities");
  std::string wit;
  for (const Tuple& t : canonical_tuples(a.parity(), static_cast<size_t>(a.arity()))) {
    Vec lhs = f * a.basis_bracket(t);
    std::vector<Vec> imgs;
    for (int k : t) imgs.push_back(f.col(k));
    Vec rhs = b.bracket(imgs);
    if (lhs != rhs) {
      wit = tuple_str(t) + ": f[..]=" + vec_str(lhs) + " [f..]'=" + vec_str(rhs);
      break;
    }
  }
  rep.add("bracket", wit.empty(), wit);
  Matrix l = f * a.alpha(), r = b.alpha() * f;
  rep.add("twist", l == r, "f alpha=" + l.str() + " alpha' f=" + r.str());
  return rep;
}

HomSuperAlgebra twist_by_endomorphism(const HomSuperAlgebra& a, const Matrix& rho) {
  require(a.alpha() == Matrix::identity(a.dim()), ErrorKind::EndomorphismCheckFailed,
          "twisting needs alpha = id");
  Report m = verify_morphism(rho, a, a);
  require(m.ok(), ErrorKind::EndomorphismCheckFailed, m.str());
  HomSuperAlgebra::Entries e;
  for (const auto& [t, v] : a.entries()) e[t] = rho * v;
  HomSuperAlgebra out(a.name() + "_twisted", a.space(), a.arity(), e, rho);
  Report post = verify_algebra(out);
  require(post.ok(), ErrorKind::PostCheckFailed, "twisted algebra: " + post.str());
  return out;
}

int vec_parity(const Vec& v, const GradedSpace& space) {
  int p = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (p == -1) p = space.p(i);
    else if (p != space.p(i)) return -1;
  }
  return p;
}

bool is_graded(const Subspace& h, const GradedSpace& space) {
  Subspace h0 = h.intersect(space.part(0)), h1 = h.intersect(space.part(1));
  return h0.dim() + h1.dim() == h.dim();
}

std::vector<Vec> homogeneous_basis(const Subspace& h, const GradedSpace& space) {
  require(h.ambient() == space.dim(), ErrorKind::DimensionMismatch, "subspace ambient");
  Subspace h0 = h.intersect(space.part(0)), h1 = h.intersect(space.part(1));
  require(h0.dim() + h1.dim() == h.dim(), ErrorKind::NonGradedSubspace,
          "subspace is not spanned by homogeneous vectors");
  auto out = h0.vectors();
  for (auto& v : h1.vectors()) out.push_back(v);
  return out;
}

Subspace bracket_span(const HomSuperAlgebra& a, const std::vector<std::vector<Vec>>& slots) {
  require(slots.size() == static_cast<size_t>(a.arity()), ErrorKind::DimensionMismatch,
          "bracket_span arity");
  std::vector<Vec> out;
  std::vector<Vec> args(slots.size());
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == slots.size()) {
      Vec v = a.bracket(args);
      if (!nambu::is_zero(v)) out.push_back(std::move(v));
      return;
    }
    for (const auto& v : slots[k]) {
      args[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return Subspace::span(a.dim(), out);
}

namespace {

// Spans of [h, e_J] for homogeneous h and wedge basis J, via ad.
Subspace ideal_products(const HomSuperAlgebra& a, const std::vector<Vec>& hs) {
  std::vector<Vec> out;
  for (const auto& h : hs)
    for (size_t w = 0; w < a.wedge().size(); ++w) {
      Vec v = a.ad(w) * h;
      if (!nambu::is_zero(v)) out.push_back(std::move(v));
    }
  return Subspace::span(a.dim(), out);
}

// Nondecreasing index tuples over a homogeneous list; each bracket of the list
// is +- one of these (or zero) by super-skew symmetry.
Subspace self_products(const HomSuperAlgebra& a, const std::vector<Vec>& hs) {
  const size_t n = static_cast<size_t>(a.arity());
  std::vector<Vec> out;
  std::vector<Vec> args(n);
  std::function<void(size_t, size_t)> rec = [&](size_t k, size_t start) {
    if (k == n) {
      Vec v = a.bracket(args);
      if (!nambu::is_zero(v)) out.push_back(std::move(v));
      return;
    }
    for (size_t i = start; i < hs.size(); ++i) {
      args[k] = hs[i];
      rec(k + 1, i);
    }
  };
  rec(0, 0);
  return Subspace::span(a.dim(), out);
}

}  // namespace

bool is_hom_subalgebra(const Subspace& h, const HomSuperAlgebra& a) {
  auto hs = homogeneous_basis(h, a.space());
  if (!h.contains(image(a.alpha(), h))) return false;
  return h.contains(self_products(a, hs));
}

bool is_hom_ideal(const Subspace& h, const HomSuperAlgebra& a) {
  auto hs = homogeneous_basis(h, a.space());
  if (!h.contains(image(a.alpha(), h))) return false;
  return h.contains(ideal_products(a, hs));
}

bool is_hom_ideal_in_slot(const Subspace& h, const HomSuperAlgebra& a, int slot) {
  auto hs = homogeneous_basis(h, a.space());
  if (!h.contains(image(a.alpha(), h))) return false;
  std::vector<Vec> units;
  for (size_t i = 0; i < a.dim(); ++i) units.push_back(unit_vec(a.dim(), i));
  std::vector<std::vector<Vec>> slots(static_cast<size_t>(a.arity()), units);
  slots[static_cast<size_t>(slot)] = hs;
  return h.contains(bracket_span(a, slots));
}

Series derived_series(const HomSuperAlgebra& a) {
  Series s;
  s.terms.push_back(Subspace::full(a.dim()));
  while (true) {
    const Subspace& cur = s.terms.back();
    if (cur.dim() == 0) {
      s.length = s.terms.size() - 1;
      return s;
    }
    Subspace next = self_products(a, homogeneous_basis(cur, a.space()));
    if (next == cur) return s;
    s.terms.push_back(next);
  }
}

Series lower_central_series(const HomSuperAlgebra& a) {
  Series s;
  s.terms.push_back(Subspace::full(a.dim()));
  while (true) {
    const Subspace& cur = s.terms.back();
    if (cur.dim() == 0) {
      s.length = s.terms.size();
      return s;
    }
    Subspace next = ideal_products(a, homogeneous_basis(cur, a.space()));
    if (next == cur) return s;
    s.terms.push_back(next);
  }
}

std::optional<size_t> solvable_length(const HomSuperAlgebra& a) { return derived_series(a).length; }
std::optional<size_t> nilpotent_length(const HomSuperAlgebra& a) {
  return lower_central_series(a).length;
}

HomSuperAlgebra direct_sum(const HomSuperAlgebra& a, const HomSuperAlgebra& b) {
  require(a.arity() == b.arity(), ErrorKind::DimensionMismatch, "direct sum arity mismatch");
  const size_t da = a.dim(), db = b.dim(), d = da + db;
  GradedSpace sp;
  sp.parity = a.parity();
  sp.parity.insert(sp.parity.end(), b.parity().begin(), b.parity().end());
  HomSuperAlgebra::Entries e;
  for (const auto& [t, v] : a.entries()) {
    Vec w(d);
    for (size_t k = 0; k < da; ++k) w[k] = v[k];
    e[t] = w;
  }
  for (const auto& [t, v] : b.entries()) {
    Tuple s = t;
    for (int& k : s) k += static_cast<int>(da);
    Vec w(d);
    for (size_t k = 0; k < db; ++k) w[da + k] = v[k];
    e[s] = w;
  }
  Matrix al(d, d);
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < da; ++j) al(i, j) = a.alpha()(i, j);
  for (size_t i = 0; i < db; ++i)
    for (size_t j = 0; j < db; ++j) al(da + i, da + j) = b.alpha()(i, j);
  return HomSuperAlgebra(a.name() + "+" + b.name(), sp, a.arity(), e, al);
}

HomSuperAlgebra zero_algebra(int n) { return HomSuperAlgebra("zero", GradedSpace{}, n, {}, Matrix()); }

HomSuperAlgebra abelian_algebra(const std::vector<int>& parity, int n, const Matrix& alpha) {
  return HomSuperAlgebra("abelian", GradedSpace{parity}, n, {}, alpha);
}

Quotient quotient(const HomSuperAlgebra& a, const Subspace& ideal) {
  require(ideal.ambient() == a.dim(), ErrorKind::DimensionMismatch, "quotient ambient");
  require(is_hom_ideal(ideal, a), ErrorKind::NotAnIdeal, "quotient by a non-ideal");
  const size_t d = a.dim();
  Quotient q;
  q.complement = ideal.complement_indices();
  const size_t k = q.complement.size();
  Matrix basis(d, d);  // columns: complement units, then ideal basis
  for (size_t j = 0; j < k; ++j) basis(q.complement[j], j) = 1;
  for (size_t j = 0; j < ideal.dim(); ++j) basis.set_col(k + j, ideal.vector(j));
  Matrix inv = inverse(basis);
  q.projection = Matrix(k, d);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < d; ++j) q.projection(i, j) = inv(i, j);
  GradedSpace sp;
  for (size_t c : q.complement) sp.parity.push_back(a.p(c));
  HomSuperAlgebra::Entries e;
  for (const Tuple& t : canonical_tuples(sp.parity, static_cast<size_t>(a.arity()))) {
    Tuple lifted;
    for (int i : t) lifted.push_back(static_cast<int>(q.complement[i]));
    Vec v = q.projection * a.basis_bracket(lifted);
    if (!nambu::is_zero(v)) e[t] = v;
  }
  Matrix incl(d, k);
  for (size_t j = 0; j < k; ++j) incl(q.complement[j], j) = 1;
  Matrix al = q.projection * a.alpha() * incl;
  q.algebra = HomSuperAlgebra(a.name() + "/I", sp, a.arity(), e, al);
  Report post = verify_morphism(q.projection, a, q.algebra);
  require(post.ok(), ErrorKind::PostCheckFailed, "quotient projection: " + post.str());
  return q;
}

Report verify_metric(const HomSuperAlgebra& a, const BilinearForm& form) {
  const Matrix& G = form.gram;
  const auto& par = a.parity();
  const size_t d = a.dim();
  require(G.rows() == d && G.cols() == d, ErrorKind::DimensionMismatch, "gram shape");
  Report rep;
  auto scan = [&](const std::string& name, auto&& bad) {
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        if (bad(i, j)) {
          rep.fail(name, "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
          return;
        }
    rep.pass(name);
  };
  scan("consistent", [&](size_t i, size_t j) { return par[i] != par[j] && !G(i, j).is_zero(); });
  scan("supersymmetric", [&](size_t i, size_t j) {
    Scalar r = (par[i] & par[j]) ? -G(j, i) : G(j, i);
    return G(i, j) != r;
  });
  {
    std::string wit;
    const auto& W = a.wedge();
    for (size_t w = 0; w < W.size() && wit.empty(); ++w) {
      const Matrix& M = a.ad(w);
      Matrix L = M.transpose() * G;  // L(y,z) = <x.y, z>
      Matrix R = G * M;               // R(y,z) = <y, x.z>
      for (size_t y = 0; y < d && wit.empty(); ++y)
        for (size_t z = 0; z < d; ++z) {
          Scalar r = (W.parity(w) & par[y]) ? R(y, z) : -R(y, z);
          if (L(y, z) != r) {
            wit = "x=" + tuple_str(W.element(w)) + " y=e" + std::to_string(y + 1) + " z=e" +
                  std::to_string(z + 1) + ": <[x,y],z>=" + L(y, z).str() +
                  " -+<y,[x,z]>=" + r.str();
            break;
          }
        }
    }
    rep.add("invariant", wit.empty(), wit);
  }
  rep.add("nondegenerate", rank(G) == d, "rank " + std::to_string(rank(G)) + " < " + std::to_string(d));
  {
    Matrix S = a.alpha().transpose() * G;  // S(i,j) = <alpha e_i, e_j>
    Matrix T = G * a.alpha();              // T(i,j) = <e_i, alpha e_j>
    scan("alpha-symmetric", [&](size_t i, size_t j) { return S(i, j) != T(i, j); });
  }
  return rep;
}

}  // namespace nambu
