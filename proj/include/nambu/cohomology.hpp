#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "nambu/representation.hpp"

namespace nambu {

/// Row-sparse matrix, used for coboundary operators on raw cochain tensors.
struct SparseOp {
  size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<size_t, Scalar>>> row;
  Vec apply(const Vec& v) const;
  Matrix dense() const;
};

struct CohomologyDims {
  size_t c = 0;  // dim C^m
  size_t z = 0;  // dim Z^m
  size_t b = 0;  // dim B^m (0 for m = 0)
  size_t h = 0;  // z - b
  bool b_in_z = true;
};

/// m-cochains are tensors over (wedge basis)^m x basis(g) x basis(V). The raw index of
/// f(w_1,...,w_m, z) component o is ((w_1 W + w_2) W + ... + w_m) d + z) dim V + o.
/// Parity of a raw coordinate is |w_1|+...+|w_m|+|z|+|o|, i.e. the |f| of a cochain
/// supported there. Parity arguments take 0, 1, or -1 for both.
class CochainComplex {
 public:
  CochainComplex(HomSuperAlgebra a, Representation r);

  const HomSuperAlgebra& algebra() const { return a_; }
  const Representation& rep() const { return r_; }

  size_t raw_dim(size_t m) const;
  int raw_parity(size_t m, size_t idx) const;
  /// (w_1, ..., w_m, z, o)
  std::vector<size_t> decode(size_t m, size_t idx) const;
  size_t encode(const std::vector<size_t>& wedges, size_t z, size_t o) const;

  /// Twist compatibility nu f(x, z) = f(alpha x, alpha z) as an operator whose kernel is C^m.
  const SparseOp& compatibility(size_t m) const;
  bool is_cochain(size_t m, const Vec& f) const;
  /// C^m of the given parity, as a subspace of the raw tensors.
  const Subspace& cochains(size_t m, int parity) const;
  /// 1-cochains coming from a super-skew n-linear map g^n -> V.
  const Subspace& skew_cochains(int parity) const;

  /// delta^m on raw tensors of a fixed parity (rows raw_dim(m+1), cols raw_dim(m)).
  const SparseOp& raw_coboundary(size_t m, int parity) const;
  /// delta^m f, splitting f into parity components. Throws NotACochain.
  Vec coboundary(size_t m, const Vec& f) const;
  /// Matrix of delta^m from the C^m basis to the C^{m+1} basis.
  /// Throws PostCheckFailed if an image leaves C^{m+1}.
  Matrix coboundary_matrix(size_t m, int parity) const;
  /// delta^{m+1} delta^m applied to each C^m basis vector, as raw columns.
  /// Equals the product coboundary_matrix(m+1) * coboundary_matrix(m) up to the
  /// (injective) coordinate map of C^{m+2}, without computing the C^{m+2} basis.
  std::vector<Vec> square_on_basis(size_t m, int parity) const;
  CohomologyDims dims(size_t m, int parity) const;

 private:
  SparseOp build_coboundary(size_t m, int parity) const;
  SparseOp build_compatibility(size_t m) const;

  HomSuperAlgebra a_;
  Representation r_;
  size_t W_, d_, dv_;
  std::vector<std::vector<std::pair<size_t, Scalar>>> alpha_w_, alpha_g_;
  std::vector<std::vector<std::vector<std::pair<size_t, Scalar>>>> fb_, act_;
  mutable std::map<size_t, SparseOp> compat_;
  mutable std::map<std::pair<size_t, int>, Subspace> cochains_;
  mutable std::map<int, Subspace> skew_;
  mutable std::map<std::pair<size_t, int>, SparseOp> delta_;
};

Subspace cochain_space(const HomSuperAlgebra& a, const Representation& r, size_t m, int parity);
Vec coboundary(const HomSuperAlgebra& a, const Representation& r, size_t m, const Vec& f);
Matrix coboundary_matrix(const HomSuperAlgebra& a, const Representation& r, size_t m, int parity);
CohomologyDims cohomology_dims(const HomSuperAlgebra& a, const Representation& r, size_t m,
                               int parity);

}  // namespace nambu
