#include "nambu/cohomology.hpp"

#include <algorithm>
#include <functional>

#include "nambu/errors.hpp"
#include "nambu/parallel.hpp"

namespace nambu {

namespace {

using Sparse = std::vector<std::pair<size_t, Scalar>>;

Sparse sparse(const Vec& v) {
  Sparse s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back({i, v[i]});
  return s;
}

Matrix power(const Matrix& m, size_t k) {
  Matrix out = Matrix::identity(m.rows());
  for (size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

Scalar koszul(bool negative) { return negative ? Scalar(-1) : Scalar(1); }

void merge_into(Sparse& acc, Sparse& dst) {
  std::sort(acc.begin(), acc.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  dst.clear();
  for (size_t i = 0; i < acc.size();) {
    size_t j = i;
    Scalar s = 0;
    while (j < acc.size() && acc[j].first == acc[i].first) s += acc[j++].second;
    if (!s.is_zero()) dst.push_back({acc[i].first, s});
    i = j;
  }
}

}  // namespace

Vec SparseOp::apply(const Vec& v) const {
  require(v.size() == cols, ErrorKind::DimensionMismatch, "sparse operator input");
  Vec out(rows);
  for (size_t i = 0; i < rows; ++i)
    for (const auto& [j, c] : row[i])
      if (!v[j].is_zero()) out[i] += c * v[j];
  return out;
}

Matrix SparseOp::dense() const {
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (const auto& [j, c] : row[i]) m(i, j) = c;
  return m;
}

CochainComplex::CochainComplex(HomSuperAlgebra a, Representation r)
    : a_(std::move(a)), r_(std::move(r)) {
  W_ = a_.wedge().size();
  d_ = a_.dim();
  dv_ = r_.dim();
  require(r_.rho.size() == W_, ErrorKind::DimensionMismatch, "representation wedge size");
  for (size_t w = 0; w < W_; ++w) alpha_w_.push_back(sparse(a_.alpha_wedge().col(w)));
  for (size_t z = 0; z < d_; ++z) alpha_g_.push_back(sparse(a_.alpha().col(z)));
  const auto tab = fundamental_table(a_);
  fb_.assign(W_, {});
  act_.assign(W_, {});
  for (size_t w = 0; w < W_; ++w) {
    for (size_t u = 0; u < W_; ++u) fb_[w].push_back(sparse(tab[w][u]));
    for (size_t z = 0; z < d_; ++z) act_[w].push_back(sparse(a_.ad(w).col(z)));
  }
}

size_t CochainComplex::raw_dim(size_t m) const {
  size_t n = d_ * dv_;
  for (size_t i = 0; i < m; ++i) n *= W_;
  return n;
}

std::vector<size_t> CochainComplex::decode(size_t m, size_t idx) const {
  std::vector<size_t> out(m + 2);
  out[m + 1] = idx % dv_;
  idx /= dv_;
  out[m] = idx % d_;
  idx /= d_;
  for (size_t i = m; i-- > 0;) {
    out[i] = idx % W_;
    idx /= W_;
  }
  return out;
}

size_t CochainComplex::encode(const std::vector<size_t>& wedges, size_t z, size_t o) const {
  size_t idx = 0;
  for (size_t w : wedges) idx = idx * W_ + w;
  return (idx * d_ + z) * dv_ + o;
}

int CochainComplex::raw_parity(size_t m, size_t idx) const {
  auto t = decode(m, idx);
  int p = r_.target.p(t[m + 1]) ^ a_.p(t[m]);
  for (size_t i = 0; i < m; ++i) p ^= a_.wedge().parity(t[i]);
  return p;
}

SparseOp CochainComplex::build_compatibility(size_t m) const {
  SparseOp op;
  op.rows = op.cols = raw_dim(m);
  op.row.resize(op.rows);
  if (op.rows == 0) return op;
  const size_t inputs = raw_dim(m) / dv_;
  parallel_for(inputs, [&](size_t t) {
    auto key = decode(m, t * dv_);
    std::vector<size_t> ws(key.begin(), key.begin() + static_cast<long>(m));
    const size_t z = key[m];
    std::vector<Sparse> acc(dv_);
    const size_t base = encode(ws, z, 0);
    for (size_t o = 0; o < dv_; ++o)
      for (size_t q = 0; q < dv_; ++q)
        if (!r_.nu(o, q).is_zero()) acc[o].push_back({base + q, r_.nu(o, q)});
    // - f(alpha w_1, ..., alpha w_m, alpha z)
    std::vector<size_t> ks(m);
    std::function<void(size_t, const Scalar&)> rec = [&](size_t i, const Scalar& c) {
      if (i == m) {
        for (const auto& [zz, cz] : alpha_g_[z]) {
          size_t b = encode(ks, zz, 0);
          for (size_t o = 0; o < dv_; ++o) acc[o].push_back({b + o, -(c * cz)});
        }
        return;
      }
      for (const auto& [k, ck] : alpha_w_[ws[i]]) {
        ks[i] = k;
        rec(i + 1, c * ck);
      }
    };
    rec(0, Scalar(1));
    for (size_t o = 0; o < dv_; ++o) merge_into(acc[o], op.row[base + o]);
  });
  return op;
}

const SparseOp& CochainComplex::compatibility(size_t m) const {
  auto it = compat_.find(m);
  if (it == compat_.end()) it = compat_.emplace(m, build_compatibility(m)).first;
  return it->second;
}

bool CochainComplex::is_cochain(size_t m, const Vec& f) const {
  return is_zero(compatibility(m).apply(f));
}

const Subspace& CochainComplex::cochains(size_t m, int parity) const {
  auto key = std::make_pair(m, parity);
  auto it = cochains_.find(key);
  if (it != cochains_.end()) return it->second;
  const size_t n = raw_dim(m);
  Subspace out;
  if (parity < 0) {
    out = cochains(m, 0).sum(cochains(m, 1));
  } else {
    std::vector<size_t> cols;
    for (size_t i = 0; i < n; ++i)
      if (raw_parity(m, i) == parity) cols.push_back(i);
    std::vector<Vec> basis;
    const bool trivial =
        a_.alpha() == Matrix::identity(d_) && r_.nu == Matrix::identity(dv_);
    if (trivial) {
      for (size_t c : cols) basis.push_back(unit_vec(n, c));
    } else {
      std::vector<size_t> pos(n, n);
      for (size_t k = 0; k < cols.size(); ++k) pos[cols[k]] = k;
      const SparseOp& K = compatibility(m);
      Matrix A(cols.size(), cols.size());
      for (size_t k = 0; k < cols.size(); ++k)
        for (const auto& [j, c] : K.row[cols[k]])
          if (pos[j] < n) A(k, pos[j]) = c;
      for (const Vec& v : nullspace(A).vectors()) {
        Vec full(n);
        for (size_t k = 0; k < cols.size(); ++k) full[cols[k]] = v[k];
        basis.push_back(full);
      }
    }
    out = Subspace::span(n, basis);
  }
  return cochains_.emplace(key, std::move(out)).first->second;
}

const Subspace& CochainComplex::skew_cochains(int parity) const {
  auto it = skew_.find(parity);
  if (it != skew_.end()) return it->second;
  Subspace out;
  if (parity < 0) {
    out = skew_cochains(0).sum(skew_cochains(1));
  } else {
    // One generator per canonical n-tuple and output basis vector.
    const size_t n = raw_dim(1);
    const auto& par = a_.parity();
    std::map<std::pair<Tuple, size_t>, Vec> gens;
    for (size_t w = 0; w < W_; ++w)
      for (size_t z = 0; z < d_; ++z) {
        Tuple t = a_.wedge().element(w);
        t.push_back(static_cast<int>(z));
        auto s = straighten(t, par);
        if (s.sign == 0) continue;
        for (size_t o = 0; o < dv_; ++o) {
          size_t idx = encode({w}, z, o);
          if (raw_parity(1, idx) != parity) continue;
          auto& g = gens[{s.canonical, o}];
          if (g.empty()) g.assign(n, Scalar(0));
          g[idx] = s.sign;
        }
      }
    std::vector<Vec> skew;
    for (auto& [k, v] : gens) skew.push_back(v);
    const bool trivial =
        a_.alpha() == Matrix::identity(d_) && r_.nu == Matrix::identity(dv_);
    if (trivial || skew.empty()) {
      out = Subspace::span(n, skew);
    } else {
      // combinations of the generators killed by the compatibility operator
      const SparseOp& K = compatibility(1);
      std::vector<Vec> images;
      for (const Vec& g : skew) images.push_back(K.apply(g));
      Matrix M = Matrix::from_cols(images, n);
      std::vector<Vec> basis;
      for (const Vec& c : nullspace(M).vectors()) {
        Vec f(n);
        for (size_t k = 0; k < skew.size(); ++k)
          if (!c[k].is_zero()) axpy(f, c[k], skew[k]);
        basis.push_back(f);
      }
      out = Subspace::span(n, basis);
    }
  }
  return skew_.emplace(parity, std::move(out)).first->second;
}

SparseOp CochainComplex::build_coboundary(size_t m, int parity) const {
  const WedgeBasis& Wb = a_.wedge();
  const auto& pv = r_.target.parity;
  const size_t n = static_cast<size_t>(a_.arity());
  const Matrix awm = power(a_.alpha_wedge(), m);
  const Matrix agm = power(a_.alpha(), m);
  std::vector<Matrix> rm;
  for (size_t w = 0; w < W_; ++w) rm.push_back(r_.of(awm.col(w)));
  // modcol[(w*d + z)*(n-1) + i] column q = [a^m x_1, .., e_q (slot i), .., a^m x_{n-1}, a^m z]
  std::vector<Matrix> modcol(W_ * d_ * (n - 1), Matrix(dv_, dv_));
  parallel_for(W_ * d_, [&](size_t wz) {
    const size_t w = wz / d_, z = wz % d_;
    const Tuple& x = Wb.element(w);
    for (size_t i = 0; i + 1 < n; ++i) {
      Matrix& M = modcol[wz * (n - 1) + i];
      for (size_t q = 0; q < dv_; ++q) {
        std::vector<Vec> args;
        std::vector<bool> in_mod(n, false);
        for (size_t j = 0; j + 1 < n; ++j) args.push_back(j == i ? unit_vec(dv_, q) : agm.col(x[j]));
        args.push_back(agm.col(z));
        in_mod[i] = true;
        M.set_col(q, module_bracket(a_, r_, args, in_mod));
      }
    }
  });

  SparseOp op;
  op.rows = raw_dim(m + 1);
  op.cols = raw_dim(m);
  op.row.resize(op.rows);
  if (op.rows == 0) return op;
  std::vector<char> colpar(op.cols);
  for (size_t c = 0; c < op.cols; ++c) colpar[c] = static_cast<char>(raw_parity(m, c));
  const size_t inputs = op.rows / dv_;
  parallel_for(inputs, [&](size_t t) {
    auto key = decode(m + 1, t * dv_);
    const std::vector<size_t> w(key.begin(), key.begin() + static_cast<long>(m + 1));
    const size_t z = key[m + 1];
    std::vector<int> pw(m + 1);
    int pin = a_.p(z);
    for (size_t i = 0; i <= m; ++i) {
      pw[i] = Wb.parity(w[i]);
      pin ^= pw[i];
    }
    std::vector<Sparse> acc(dv_);
    auto want = [&](size_t o) { return (pin ^ pv[o]) == parity; };
    auto col_ok = [&](size_t col) { return colpar[col] == parity; };

    // f evaluated on sparse arguments, output component passed through unchanged
    std::vector<size_t> ks(m);
    auto expand = [&](const std::vector<const Sparse*>& slots, const Sparse& zslot,
                      const Scalar& sign) {
      std::function<void(size_t, const Scalar&)> rec = [&](size_t i, const Scalar& c) {
        if (i == m) {
          for (const auto& [zz, cz] : zslot) {
            size_t b = encode(ks, zz, 0);
            Scalar cc = c * cz;
            for (size_t o = 0; o < dv_; ++o)
              if (want(o) && col_ok(b + o)) acc[o].push_back({b + o, cc});
          }
          return;
        }
        for (const auto& [k, ck] : *slots[i]) {
          ks[i] = k;
          rec(i + 1, c * ck);
        }
      };
      rec(0, sign);
    };

    // [x_i, x_j]_alpha replacing x_j, alpha on the rest
    for (size_t i = 0; i <= m; ++i)
      for (size_t j = i + 1; j <= m; ++j) {
        int between = 0;
        for (size_t l = i + 1; l < j; ++l) between ^= pw[l];
        Scalar sign = koszul(((i + 1) % 2 == 1) ^ static_cast<bool>(pw[i] & between));
        std::vector<const Sparse*> slots;
        for (size_t l = 0; l <= m; ++l) {
          if (l == i) continue;
          slots.push_back(l == j ? &fb_[w[i]][w[j]] : &alpha_w_[w[l]]);
        }
        expand(slots, alpha_g_[z], sign);
      }
    // x_i . z in the last slot
    for (size_t i = 0; i <= m; ++i) {
      int after = 0;
      for (size_t l = i + 1; l <= m; ++l) after ^= pw[l];
      Scalar sign = koszul(((i + 1) % 2 == 1) ^ static_cast<bool>(pw[i] & after));
      std::vector<const Sparse*> slots;
      for (size_t l = 0; l <= m; ++l)
        if (l != i) slots.push_back(&alpha_w_[w[l]]);
      expand(slots, act_[w[i]][z], sign);
    }
    // alpha^m(x_i) . f(.., ^i, .., z)
    for (size_t i = 0; i <= m; ++i) {
      int before = parity;
      for (size_t l = 0; l < i; ++l) before ^= pw[l];
      Scalar sign = koszul((i % 2 == 1) ^ static_cast<bool>(pw[i] & before));
      std::vector<size_t> rest;
      for (size_t l = 0; l <= m; ++l)
        if (l != i) rest.push_back(w[l]);
      const size_t b = encode(rest, z, 0);
      const Matrix& R = rm[w[i]];
      for (size_t o = 0; o < dv_; ++o) {
        if (!want(o)) continue;
        for (size_t q = 0; q < dv_; ++q)
          if (!R(o, q).is_zero() && col_ok(b + q)) acc[o].push_back({b + q, sign * R(o, q)});
      }
    }
    // (f(x_1..x_m, ~) . x_{m+1}) bullet alpha^m(z)
    {
      const Tuple& x = Wb.element(w[m]);
      int pf = parity;
      for (size_t l = 0; l < m; ++l) pf ^= pw[l];
      const std::vector<size_t> head(w.begin(), w.begin() + static_cast<long>(m));
      int before = 0;
      for (size_t i = 0; i + 1 < n; ++i) {
        Scalar sign = koszul((m % 2 == 1) ^ static_cast<bool>(pf & before));
        before ^= a_.p(x[i]);
        const Matrix& M = modcol[(w[m] * d_ + z) * (n - 1) + i];
        const size_t b = encode(head, static_cast<size_t>(x[i]), 0);
        for (size_t o = 0; o < dv_; ++o) {
          if (!want(o)) continue;
          for (size_t q = 0; q < dv_; ++q)
            if (!M(o, q).is_zero() && col_ok(b + q)) acc[o].push_back({b + q, sign * M(o, q)});
        }
      }
    }
    const size_t out_base = t * dv_;
    for (size_t o = 0; o < dv_; ++o) merge_into(acc[o], op.row[out_base + o]);
  });
  return op;
}

const SparseOp& CochainComplex::raw_coboundary(size_t m, int parity) const {
  require(parity == 0 || parity == 1, ErrorKind::DimensionMismatch, "raw coboundary parity");
  auto key = std::make_pair(m, parity);
  auto it = delta_.find(key);
  if (it == delta_.end()) it = delta_.emplace(key, build_coboundary(m, parity)).first;
  return it->second;
}

Vec CochainComplex::coboundary(size_t m, const Vec& f) const {
  require(f.size() == raw_dim(m), ErrorKind::DimensionMismatch, "cochain size");
  require(is_cochain(m, f), ErrorKind::NotACochain, "twist compatibility fails on input");
  Vec out(raw_dim(m + 1));
  for (int p = 0; p < 2; ++p) {
    Vec part(f.size());
    bool any = false;
    for (size_t i = 0; i < f.size(); ++i)
      if (!f[i].is_zero() && raw_parity(m, i) == p) {
        part[i] = f[i];
        any = true;
      }
    if (any) out = out + raw_coboundary(m, p).apply(part);
  }
  return out;
}

Matrix CochainComplex::coboundary_matrix(size_t m, int parity) const {
  if (parity < 0) {
    Matrix m0 = coboundary_matrix(m, 0), m1 = coboundary_matrix(m, 1);
    Matrix out(m0.rows() + m1.rows(), m0.cols() + m1.cols());
    for (size_t i = 0; i < m0.rows(); ++i)
      for (size_t j = 0; j < m0.cols(); ++j) out(i, j) = m0(i, j);
    for (size_t i = 0; i < m1.rows(); ++i)
      for (size_t j = 0; j < m1.cols(); ++j) out(m0.rows() + i, m0.cols() + j) = m1(i, j);
    return out;
  }
  const Subspace& src = cochains(m, parity);
  const Subspace& dst = cochains(m + 1, parity);
  const SparseOp& D = raw_coboundary(m, parity);
  Matrix out(dst.dim(), src.dim());
  for (size_t j = 0; j < src.dim(); ++j) {
    auto c = dst.coordinates(D.apply(src.vector(j)));
    require(c.has_value(), ErrorKind::PostCheckFailed,
            "coboundary leaves the compatible cochains (degree " + std::to_string(m + 1) + ")");
    out.set_col(j, *c);
  }
  return out;
}

std::vector<Vec> CochainComplex::square_on_basis(size_t m, int parity) const {
  std::vector<Vec> out;
  for (int p = 0; p < 2; ++p) {
    if (parity >= 0 && p != parity) continue;
    const Subspace& src = cochains(m, p);
    const SparseOp& D0 = raw_coboundary(m, p);
    const SparseOp& D1 = raw_coboundary(m + 1, p);
    for (size_t j = 0; j < src.dim(); ++j) out.push_back(D1.apply(D0.apply(src.vector(j))));
  }
  return out;
}

CohomologyDims CochainComplex::dims(size_t m, int parity) const {
  if (parity < 0) {
    CohomologyDims a = dims(m, 0), b = dims(m, 1);
    return {a.c + b.c, a.z + b.z, a.b + b.b, a.h + b.h, a.b_in_z && b.b_in_z};
  }
  CohomologyDims out;
  const Subspace& cm = cochains(m, parity);
  out.c = cm.dim();
  const SparseOp& D = raw_coboundary(m, parity);
  std::vector<Vec> images;
  for (size_t j = 0; j < cm.dim(); ++j) images.push_back(D.apply(cm.vector(j)));
  out.z = out.c - Subspace::span(raw_dim(m + 1), images).dim();
  if (m > 0) {
    const Subspace& prev = cochains(m - 1, parity);
    const SparseOp& Dp = raw_coboundary(m - 1, parity);
    std::vector<Vec> bs;
    for (size_t j = 0; j < prev.dim(); ++j) {
      Vec b = Dp.apply(prev.vector(j));
      if (!is_zero(D.apply(b))) out.b_in_z = false;
      bs.push_back(std::move(b));
    }
    out.b = Subspace::span(raw_dim(m), bs).dim();
  }
  out.h = out.z >= out.b ? out.z - out.b : 0;
  return out;
}

Subspace cochain_space(const HomSuperAlgebra& a, const Representation& r, size_t m, int parity) {
  return CochainComplex(a, r).cochains(m, parity);
}

Vec coboundary(const HomSuperAlgebra& a, const Representation& r, size_t m, const Vec& f) {
  return CochainComplex(a, r).coboundary(m, f);
}

Matrix coboundary_matrix(const HomSuperAlgebra& a, const Representation& r, size_t m, int parity) {
  return CochainComplex(a, r).coboundary_matrix(m, parity);
}

CohomologyDims cohomology_dims(const HomSuperAlgebra& a, const Representation& r, size_t m,
                               int parity) {
  return CochainComplex(a, r).dims(m, parity);
}

}  // namespace nambu
