#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nambu/linalg.hpp"

namespace nambu {

/// Zero-based basis index tuple.
using Tuple = std::vector<int>;

std::string tuple_str(const Tuple& t);  // one-based, for reports

struct GradedSpace {
  std::vector<int> parity;
  size_t dim() const { return parity.size(); }
  int p(size_t i) const { return parity[i]; }
  /// The coordinate subspace g_0 or g_1.
  Subspace part(int par) const;
};

struct Straightened {
  int sign = 0;  // -1, 0, +1
  Tuple canonical;
};

/// Sorts a tuple by adjacent swaps, each one contributing -(-1)^{p_i p_j}.
/// Sign 0 iff an even index repeats.
Straightened straighten(const Tuple& indices, const std::vector<int>& parity);

/// Canonical tuples of a super-exterior power, in lex order.
class WedgeBasis {
 public:
  WedgeBasis() = default;
  WedgeBasis(const std::vector<int>& parity, size_t degree);

  size_t degree() const { return degree_; }
  size_t size() const { return elems_.size(); }
  const Tuple& element(size_t i) const { return elems_[i]; }
  int parity(size_t i) const { return par_[i]; }
  /// (sign, position) of an arbitrary tuple; sign 0 means the wedge vanishes.
  std::pair<int, size_t> lookup(const Tuple& t) const;
  /// Coordinates of v_1 ^ ... ^ v_k for arbitrary vectors (multilinear expansion).
  Vec wedge_of(const std::vector<Vec>& vectors) const;
  /// Matrix of the induced map on the wedge power (column w = image of w).
  Matrix induced(const Matrix& m) const;

 private:
  std::vector<int> space_parity_;
  size_t degree_ = 0;
  std::vector<Tuple> elems_;
  std::vector<int> par_;
  std::map<Tuple, size_t> index_;
};

/// Enumerates all nondecreasing tuples of the given length over [0, dim),
/// keeping only those straighten() accepts (no repeated even index).
std::vector<Tuple> canonical_tuples(const std::vector<int>& parity, size_t length);

/// Finite-dimensional multiplicative Hom-superalgebra given by structure
/// constants on canonical tuples. Construction does not validate the axioms;
/// call verify_algebra for that.
class HomSuperAlgebra {
 public:
  using Entries = std::map<Tuple, Vec>;

  HomSuperAlgebra() = default;
  HomSuperAlgebra(std::string name, GradedSpace space, int n, const Entries& entries,
                  Matrix alpha);
  /// Accepts entries on arbitrary tuples and canonicalizes them. Throws Parse on
  /// sign-inconsistent duplicates or a nonzero value on a vanishing tuple.
  static HomSuperAlgebra from_any_tuples(std::string name, GradedSpace space, int n,
                                         const std::vector<std::pair<Tuple, Vec>>& entries,
                                         Matrix alpha);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const GradedSpace& space() const { return space_; }
  const std::vector<int>& parity() const { return space_.parity; }
  int p(size_t i) const { return space_.parity[i]; }
  size_t dim() const { return space_.dim(); }
  int arity() const { return n_; }
  const Entries& entries() const { return entries_; }
  const Matrix& alpha() const { return alpha_; }

  const WedgeBasis& wedge() const { return wedge_; }
  /// ad of the w-th wedge basis element: column z is w . e_z.
  const Matrix& ad(size_t w) const { return ad_[w]; }
  /// ad of an arbitrary wedge vector.
  Matrix ad_of(const Vec& wedge_coords) const;
  /// Induced alpha on the wedge power.
  const Matrix& alpha_wedge() const { return alpha_wedge_; }

  /// Bracket of basis vectors in any order.
  Vec basis_bracket(const Tuple& t) const;
  /// Bracket of arbitrary vectors.
  Vec bracket(const std::vector<Vec>& args) const;
  /// x . z for a wedge vector x.
  Vec act(const Vec& wedge_coords, const Vec& z) const;
  bool is_abelian() const;

 private:
  std::string name_;
  GradedSpace space_;
  int n_ = 2;
  Entries entries_;
  Matrix alpha_;
  WedgeBasis wedge_;
  std::vector<Matrix> ad_;
  Matrix alpha_wedge_;
};

/// Gram matrix of a bilinear form: gram(i,j) = <e_i, e_j>.
struct BilinearForm {
  Matrix gram;
  Scalar pair(const Vec& x, const Vec& y) const { return dot(x, gram * y); }
};

}  // namespace nambu
