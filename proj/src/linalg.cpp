#include "nambu/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>

#include "nambu/errors.hpp"

namespace nambu {

Vec zero_vec(size_t n) { return Vec(n); }

Vec unit_vec(size_t n, size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector add");
  Vec r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector sub");
  Vec r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vec& a, const Scalar& s, const Vec& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "axpy");
  if (s.is_zero()) return;
  for (size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) Scalar::fma(a[i], s, b[i]);
}

Scalar dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "dot");
  Scalar r;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) Scalar::fma(r, a[i], b[i]);
  return r;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, size_t rows) {
  Matrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Matrix::row(size_t i) const {
  return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vec Matrix::col(size_t j) const {
  Vec v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_row(size_t i, const Vec& v) {
  require(v.size() == cols_, ErrorKind::DimensionMismatch, "set_row");
  std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
}

void Matrix::set_col(size_t j, const Vec& v) {
  require(v.size() == rows_, ErrorKind::DimensionMismatch, "set_col");
  for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, ErrorKind::DimensionMismatch, "matrix product");
  Matrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) Scalar::fma(r(i, j), a, o(k, j));
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  require(cols_ == v.size(), ErrorKind::DimensionMismatch, "matrix-vector product");
  Vec r(rows_);
  for (size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (size_t i = 0; i < rows_; ++i)
      if (!(*this)(i, k).is_zero()) Scalar::fma(r[i], (*this)(i, k), v[k]);
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch, "matrix add");
  Matrix r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch, "matrix sub");
  Matrix r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.cols_, ErrorKind::DimensionMismatch, "vstack");
  Matrix r(a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), r.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), r.data_.begin() + a.data_.size());
  return r;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) os << (i ? "," : "") << vec_str(row(i));
  os << "]";
  return os.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Matrix& a = res.reduced;
  const size_t R = a.rows(), C = a.cols();
  size_t r = 0;
  std::vector<size_t> nz;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t p = r;
    while (p < R && a(p, c).is_zero()) ++p;
    if (p == R) continue;
    if (p != r)
      for (size_t j = 0; j < C; ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = Scalar(1) / a(r, c);
    nz.clear();
    for (size_t j = c; j < C; ++j)
      if (!a(r, j).is_zero()) {
        a(r, j) *= inv;
        nz.push_back(j);
      }
    for (size_t i = 0; i < R; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = -a(i, c);
      for (size_t j : nz) Scalar::fma(a(i, j), f, a(r, j));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
  require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto r = rref(aug);
  require(r.rank == n && (n == 0 || r.pivots[n - 1] == n - 1), ErrorKind::DimensionMismatch,
          "matrix is singular");
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  require(a.rows() == b.size(), ErrorKind::DimensionMismatch, "solve");
  const size_t C = a.cols();
  Matrix aug(a.rows(), C + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < C; ++j) aug(i, j) = a(i, j);
    aug(i, C) = b[i];
  }
  auto r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == C) return std::nullopt;
  Vec x(C);
  for (size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, C);
  return x;
}

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& vectors) {
  return from_rows(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::from_rows(const Matrix& rows) {
  auto r = rref(rows);
  Subspace s(rows.cols());
  s.basis_ = Matrix(r.rank, rows.cols());
  for (size_t i = 0; i < r.rank; ++i)
    for (size_t j = 0; j < rows.cols(); ++j) s.basis_(i, j) = r.reduced(i, j);
  return s;
}

Subspace Subspace::full(size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  return s;
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  for (size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  require(v.size() == ambient(), ErrorKind::DimensionMismatch, "coordinates");
  // rref rows: the coefficient of row i is the pivot entry of v.
  Vec c(dim());
  Vec rest = v;
  for (size_t i = 0; i < dim(); ++i) {
    size_t p = 0;
    while (basis_(i, p).is_zero()) ++p;
    c[i] = rest[p];
    if (!c[i].is_zero()) axpy(rest, -c[i], basis_.row(i));
  }
  if (!nambu::is_zero(rest)) return std::nullopt;
  return c;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& o) const {
  require(o.ambient() == ambient(), ErrorKind::DimensionMismatch, "contains");
  for (size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.vector(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  require(o.ambient() == ambient(), ErrorKind::DimensionMismatch, "subspace sum");
  return from_rows(Matrix::vstack(basis_, o.basis_));
}

Subspace Subspace::annihilator() const { return nullspace(basis_); }

Subspace Subspace::intersect(const Subspace& o) const {
  require(o.ambient() == ambient(), ErrorKind::DimensionMismatch, "subspace intersection");
  Matrix a = annihilator().basis(), b = o.annihilator().basis();
  return nullspace(Matrix::vstack(a, b));
}

std::vector<size_t> Subspace::complement_indices() const {
  std::vector<bool> piv(ambient(), false);
  for (size_t i = 0; i < dim(); ++i) {
    size_t p = 0;
    while (basis_(i, p).is_zero()) ++p;
    piv[p] = true;
  }
  // Non-pivot unit vectors complete an rref basis, and they are the lex-first choice.
  std::vector<size_t> out;
  for (size_t j = 0; j < ambient(); ++j)
    if (!piv[j]) out.push_back(j);
  return out;
}

namespace {

// Modular nullspace. Rows are cleared of denominators, reduced mod 31-bit primes,
// combined by CRT and lifted by rational reconstruction. A candidate basis is
// accepted only if it lies in the rational kernel: its vectors are independent
// (identity on the free columns) and their number is a mod-p nullity, which is
// never below the rational one.

uint64_t inv_mod(uint64_t a, uint64_t p) {
  uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

struct ModRref {
  std::vector<size_t> pivots;
  std::vector<std::vector<uint64_t>> rows;  // reduced, first pivots.size() rows
};

ModRref rref_mod(const std::vector<std::vector<mpz_class>>& a, size_t C, uint64_t p) {
  ModRref res;
  std::vector<std::vector<uint64_t>>& m = res.rows;
  m.assign(a.size(), std::vector<uint64_t>(C));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < C; ++j)
      if (sgn(a[i][j]) != 0) m[i][j] = mpz_fdiv_ui(a[i][j].get_mpz_t(), p);
  size_t r = 0;
  std::vector<size_t> nz;
  for (size_t c = 0; c < C && r < m.size(); ++c) {
    size_t q = r;
    while (q < m.size() && m[q][c] == 0) ++q;
    if (q == m.size()) continue;
    std::swap(m[q], m[r]);
    const uint64_t inv = inv_mod(m[r][c], p);
    nz.clear();
    for (size_t j = c; j < C; ++j)
      if (m[r][j]) {
        m[r][j] = m[r][j] * inv % p;
        nz.push_back(j);
      }
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const uint64_t f = p - m[i][c];
      for (size_t j : nz) m[i][j] = (m[i][j] + f * m[r][j]) % p;
    }
    res.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return res;
}

// u mod M -> a/b with |a|, b <= sqrt(M/2).
std::optional<Scalar> rational_reconstruct(const mpz_class& u, const mpz_class& M,
                                           const mpz_class& bound) {
  mpz_class r0 = M, r1 = u, s0 = 0, s1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (abs(s1) > bound || s1 == 0) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return Scalar(mpq_class(r1, s1));
}

std::optional<std::vector<Vec>> nullspace_modular(const Matrix& m) {
  const size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<mpz_class>> ints(R, std::vector<mpz_class>(C));
  for (size_t i = 0; i < R; ++i) {
    mpz_class l = 1;
    for (size_t j = 0; j < C; ++j)
      if (!m(i, j).is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    for (size_t j = 0; j < C; ++j)
      if (!m(i, j).is_zero()) ints[i][j] = m(i, j).raw().get_num() * (l / m(i, j).raw().get_den());
  }
  std::vector<size_t> pivots, free;
  std::vector<std::vector<mpz_class>> res;  // res[k][f]: entry of pivot row k at free column f
  mpz_class M = 0;
  mpz_class prime = mpz_class(1) << 30;
  for (int round = 0; round < 64; ++round) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const uint64_t p = prime.get_ui();
    ModRref mr = rref_mod(ints, C, p);
    const bool better = M == 0 || mr.pivots.size() > pivots.size() ||
                        (mr.pivots.size() == pivots.size() && mr.pivots < pivots);
    if (!better && mr.pivots != pivots) continue;  // unlucky prime
    if (M == 0 || (better && mr.pivots != pivots)) {
      pivots = mr.pivots;
      free.clear();
      std::vector<bool> is_piv(C, false);
      for (size_t q : pivots) is_piv[q] = true;
      for (size_t f = 0; f < C; ++f)
        if (!is_piv[f]) free.push_back(f);
      res.assign(pivots.size(), std::vector<mpz_class>(free.size()));
      for (size_t k = 0; k < pivots.size(); ++k)
        for (size_t f = 0; f < free.size(); ++f) res[k][f] = mr.rows[k][free[f]];
      M = p;
    } else {
      // CRT: x = x + M * ((r - x) * M^{-1} mod p)
      const uint64_t minv = inv_mod(mpz_fdiv_ui(M.get_mpz_t(), p), p);
      for (size_t k = 0; k < pivots.size(); ++k)
        for (size_t f = 0; f < free.size(); ++f) {
          mpz_class& x = res[k][f];
          uint64_t xr = mpz_fdiv_ui(x.get_mpz_t(), p);
          uint64_t t = (mr.rows[k][free[f]] + p - xr) % p * minv % p;
          x += M * t;
        }
      M *= p;
    }
    if (free.empty()) return std::vector<Vec>{};
    mpz_class bound;
    mpz_class half = M / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    std::vector<Vec> vs;
    bool lifted = true;
    for (size_t f = 0; f < free.size() && lifted; ++f) {
      Vec v(C);
      v[free[f]] = 1;
      for (size_t k = 0; k < pivots.size(); ++k) {
        if (sgn(res[k][f]) == 0) continue;
        auto q = rational_reconstruct(res[k][f], M, bound);
        if (!q) {
          lifted = false;
          break;
        }
        v[pivots[k]] = -*q;
      }
      vs.push_back(std::move(v));
    }
    if (!lifted) continue;
    bool kernel = true;
    for (size_t i = 0; i < R && kernel; ++i)
      for (const Vec& v : vs) {
        Scalar acc;
        for (size_t j = 0; j < C; ++j)
          if (!v[j].is_zero() && !m(i, j).is_zero()) Scalar::fma(acc, m(i, j), v[j]);
        if (!acc.is_zero()) {
          kernel = false;
          break;
        }
      }
    if (kernel) return vs;
  }
  return std::nullopt;
}

}  // namespace

Subspace nullspace(const Matrix& m) {
  const size_t C = m.cols();
  if (m.rows() * C >= 16384) {
    if (auto vs = nullspace_modular(m)) return Subspace::span(C, *vs);
  }
  auto r = rref(m);
  std::vector<bool> is_piv(C, false);
  for (size_t p : r.pivots) is_piv[p] = true;
  std::vector<Vec> vs;
  for (size_t f = 0; f < C; ++f) {
    if (is_piv[f]) continue;
    Vec v(C);
    v[f] = 1;
    for (size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
    vs.push_back(std::move(v));
  }
  return Subspace::span(C, vs);
}

Subspace image(const Matrix& m, const Subspace& s) {
  require(m.cols() == s.ambient(), ErrorKind::DimensionMismatch, "image");
  std::vector<Vec> vs;
  for (size_t i = 0; i < s.dim(); ++i) vs.push_back(m * s.vector(i));
  return Subspace::span(m.rows(), vs);
}

Subspace column_space(const Matrix& m) { return Subspace::from_rows(m.transpose()); }

Subspace preimage(const Matrix& m, const Subspace& s) {
  require(m.rows() == s.ambient(), ErrorKind::DimensionMismatch, "preimage");
  Matrix ann = s.annihilator().basis();
  return nullspace(ann * m);
}

Subspace orthogonal_complement(const Subspace& s, const Matrix& gram) {
  require(gram.rows() == s.ambient() && gram.cols() == s.ambient(), ErrorKind::DimensionMismatch,
          "orthogonal_complement");
  return nullspace(s.basis() * gram);
}

std::vector<Scalar> charpoly(const Matrix& m) {
  // Faddeev-LeVerrier.
  require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "charpoly");
  const size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix M(n, n);
  for (size_t k = 1; k <= n; ++k) {
    Matrix next = m * M;
    for (size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    M = next;
    Matrix AM = m * M;
    Scalar tr;
    for (size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<mpz_class> divisors(mpz_class x) {
  x = abs(x);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= x; ++d) {
    if (x % d == 0) {
      small.push_back(d);
      if (d * d != x) large.push_back(x / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Scalar eval_poly(const std::vector<Scalar>& c, const Scalar& x) {
  Scalar r;
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

}  // namespace

std::vector<Scalar> rational_roots(const std::vector<Scalar>& coeffs) {
  std::vector<Scalar> c = coeffs;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  std::vector<Scalar> roots;
  if (c.size() <= 1) return roots;
  size_t shift = 0;
  while (c[shift].is_zero()) ++shift;
  if (shift > 0) roots.push_back(Scalar(0));
  c.erase(c.begin(), c.begin() + static_cast<long>(shift));
  if (c.size() > 1) {
    mpz_class l = 1;
    for (auto& s : c) l = lcm(l, s.den());
    std::vector<mpz_class> ic;
    for (auto& s : c) ic.push_back(mpq_class(s.raw() * l).get_num());
    for (auto& p : divisors(ic.front()))
      for (auto& q : divisors(ic.back()))
        for (int sg : {1, -1}) {
          Scalar cand(mpq_class(sg * p, q));
          if (eval_poly(c, cand).is_zero() &&
              std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace nambu
