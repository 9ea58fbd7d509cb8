#include "nambu/extensions.hpp"

#include "nambu/algebra.hpp"
#include "nambu/errors.hpp"

namespace nambu {

void validate_datum(const ExtensionDatum& d) {
  const HomSuperAlgebra& b = d.base;
  Report r = verify_representation(d.module, b);
  require(r.ok(), ErrorKind::NotARepresentation, r.str());
  CochainComplex cx(b, d.module);
  require(d.cocycle.size() == cx.raw_dim(1), ErrorKind::DimensionMismatch, "cocycle size");
  require(cx.is_cochain(1, d.cocycle), ErrorKind::NotACochain, "cocycle is not compatible");
  for (size_t i = 0; i < d.cocycle.size(); ++i)
    require(d.cocycle[i].is_zero() || cx.raw_parity(1, i) == 0, ErrorKind::CocycleNotEven,
            "cocycle has an odd component");
  require(cx.skew_cochains(0).contains(d.cocycle), ErrorKind::CocycleNotSkew,
          "cocycle is not super-skew in its n arguments");
  require(is_zero(cx.coboundary(1, d.cocycle)), ErrorKind::CocycleNotClosed, "delta f != 0");
}

HomSuperAlgebra build_extension(const ExtensionDatum& d, bool validated) {
  if (validated) validate_datum(d);
  const HomSuperAlgebra& b = d.base;
  const size_t da = d.module.dim(), db = b.dim(), dg = da + db;
  const size_t n = static_cast<size_t>(b.arity());
  require(d.cocycle.size() == b.wedge().size() * db * da, ErrorKind::DimensionMismatch,
          "cocycle size");
  GradedSpace sp = d.fiber();
  sp.parity.insert(sp.parity.end(), b.parity().begin(), b.parity().end());

  HomSuperAlgebra::Entries e;
  for (const Tuple& t : canonical_tuples(sp.parity, n)) {
    Vec v(dg);
    size_t fiber = 0, at = 0;
    for (size_t i = 0; i < n; ++i)
      if (static_cast<size_t>(t[i]) < da) {
        ++fiber;
        at = i;
      }
    if (fiber >= 2) continue;
    if (fiber == 1) {
      std::vector<Vec> args;
      std::vector<bool> in_module(n, false);
      for (size_t i = 0; i < n; ++i) {
        if (i == at) {
          args.push_back(unit_vec(da, t[i]));
          in_module[i] = true;
        } else {
          args.push_back(unit_vec(db, t[i] - da));
        }
      }
      Vec m = module_bracket(b, d.module, args, in_module);
      for (size_t o = 0; o < da; ++o) v[o] = m[o];
    } else {
      Tuple tb;
      for (int i : t) tb.push_back(i - static_cast<int>(da));
      Vec br = b.basis_bracket(tb);
      for (size_t i = 0; i < db; ++i) v[da + i] = br[i];
      auto [s, pos] = b.wedge().lookup(Tuple(tb.begin(), tb.end() - 1));
      if (s != 0)
        for (size_t o = 0; o < da; ++o)
          v[o] = Scalar(s) * d.cocycle[(pos * db + tb[n - 1]) * da + o];
    }
    if (!is_zero(v)) e[t] = v;
  }
  Matrix al(dg, dg);
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < da; ++j) al(i, j) = d.module.nu(i, j);
  for (size_t i = 0; i < db; ++i)
    for (size_t j = 0; j < db; ++j) al(da + i, da + j) = b.alpha()(i, j);
  return HomSuperAlgebra("ext(" + b.name() + ")", sp, b.arity(), e, al);
}

Matrix extension_inclusion(const ExtensionDatum& d) {
  const size_t da = d.module.dim(), dg = da + d.base.dim();
  Matrix m(dg, da);
  for (size_t i = 0; i < da; ++i) m(i, i) = 1;
  return m;
}

Matrix extension_projection(const ExtensionDatum& d) {
  const size_t da = d.module.dim(), db = d.base.dim();
  Matrix m(db, da + db);
  for (size_t i = 0; i < db; ++i) m(i, da + i) = 1;
  return m;
}

Section find_section(const HomSuperAlgebra& g, const Matrix& pi, const HomSuperAlgebra& b) {
  const size_t dg = g.dim(), db = b.dim();
  require(pi.rows() == db && pi.cols() == dg, ErrorKind::DimensionMismatch, "projection shape");
  // unknowns: tau(i, j) with matching parity, row-major
  std::vector<std::pair<size_t, size_t>> vars;
  std::map<std::pair<size_t, size_t>, size_t> index;
  for (size_t i = 0; i < dg; ++i)
    for (size_t j = 0; j < db; ++j)
      if (g.p(i) == b.p(j)) {
        index[{i, j}] = vars.size();
        vars.push_back({i, j});
      }
  const size_t nv = vars.size();
  std::vector<Vec> rows;
  Vec rhs;
  // (pi tau)(r, j) = delta
  for (size_t r = 0; r < db; ++r)
    for (size_t j = 0; j < db; ++j) {
      Vec row(nv);
      for (size_t i = 0; i < dg; ++i) {
        auto it = index.find({i, j});
        if (it != index.end()) row[it->second] += pi(r, i);
      }
      rows.push_back(row);
      rhs.push_back(r == j ? Scalar(1) : Scalar(0));
    }
  // (alpha tau - tau beta)(r, j) = 0
  for (size_t r = 0; r < dg; ++r)
    for (size_t j = 0; j < db; ++j) {
      Vec row(nv);
      for (size_t i = 0; i < dg; ++i) {
        auto it = index.find({i, j});
        if (it != index.end()) row[it->second] += g.alpha()(r, i);
      }
      for (size_t k = 0; k < db; ++k) {
        auto it = index.find({r, k});
        if (it != index.end()) row[it->second] -= b.alpha()(k, j);
      }
      rows.push_back(row);
      rhs.push_back(Scalar(0));
    }
  auto sol = solve(Matrix::from_rows(rows, nv), rhs);
  require(sol.has_value(), ErrorKind::NoCompatibleSection,
          "no even tau with pi tau = id and alpha tau = tau beta");
  Section s{Matrix(dg, db)};
  for (size_t v = 0; v < nv; ++v) s.tau(vars[v].first, vars[v].second) = (*sol)[v];
  return s;
}

ExtractedDatum extract_cocycle(const HomSuperAlgebra& g, const Subspace& ideal, const Matrix& pi,
                               const HomSuperAlgebra& b, const Section& s) {
  const size_t dg = g.dim(), db = b.dim(), da = ideal.dim();
  const Matrix& tau = s.tau;
  require(tau.rows() == dg && tau.cols() == db, ErrorKind::SectionInvalid, "tau shape");
  require(pi * tau == Matrix::identity(db), ErrorKind::SectionInvalid, "pi tau != id");
  require(g.alpha() * tau == tau * b.alpha(), ErrorKind::SectionInvalid, "alpha tau != tau beta");
  require(is_even_map(tau, b.parity(), g.parity()), ErrorKind::SectionInvalid, "tau is not even");
  require(is_hom_ideal(ideal, g), ErrorKind::NotAnIdeal, "fiber must be a Hom-ideal");

  const std::vector<Vec> fib = homogeneous_basis(ideal, g.space());
  const Matrix fmat = Matrix::from_cols(fib, dg);
  if (g.arity() >= 2 && da > 0) {
    std::vector<Vec> units;
    for (size_t k = 0; k < dg; ++k) units.push_back(unit_vec(dg, k));
    std::vector<std::vector<Vec>> slots(static_cast<size_t>(g.arity()), units);
    slots[slots.size() - 1] = fib;
    slots[slots.size() - 2] = fib;
    require(bracket_span(g, slots).dim() == 0, ErrorKind::NotAnIdeal, "fiber is not abelian");
  }
  auto coords = [&](const Vec& v) {
    auto c = solve(fmat, v);
    require(c.has_value(), ErrorKind::SectionInvalid, "value outside the fiber");
    return *c;
  };
  ExtractedDatum out;
  out.module.target.parity.resize(da);
  for (size_t o = 0; o < da; ++o)
    for (size_t i = 0; i < dg; ++i)
      if (!fib[o][i].is_zero()) {
        out.module.target.parity[o] = g.p(i);
        break;
      }
  out.module.nu = Matrix(da, da);
  for (size_t o = 0; o < da; ++o) out.module.nu.set_col(o, coords(g.alpha() * fib[o]));

  const WedgeBasis& W = b.wedge();
  std::vector<Vec> tcol;
  for (size_t j = 0; j < db; ++j) tcol.push_back(tau.col(j));
  out.cocycle = Vec(W.size() * db * da);
  for (size_t w = 0; w < W.size(); ++w) {
    std::vector<Vec> args;
    for (int t : W.element(w)) args.push_back(tcol[t]);
    // module: [tau B, a]
    Matrix rho(da, da);
    for (size_t o = 0; o < da; ++o) {
      std::vector<Vec> full = args;
      full.push_back(fib[o]);
      rho.set_col(o, coords(g.bracket(full)));
    }
    out.module.rho.push_back(rho);
    for (size_t z = 0; z < db; ++z) {
      std::vector<Vec> full = args;
      full.push_back(tcol[z]);
      Tuple t = W.element(w);
      t.push_back(static_cast<int>(z));
      Vec f = g.bracket(full) - tau * b.basis_bracket(t);
      Vec c = coords(f);
      for (size_t o = 0; o < da; ++o) out.cocycle[(w * db + z) * da + o] = c[o];
    }
  }
  CochainComplex cx(b, out.module);
  require(cx.is_cochain(1, out.cocycle), ErrorKind::PostCheckFailed,
          "extracted cocycle is not compatible");
  require(is_zero(cx.coboundary(1, out.cocycle)), ErrorKind::PostCheckFailed,
          "extracted cocycle is not closed");
  return out;
}

Report verify_exact_sequence(const std::vector<HomSuperAlgebra>& objs,
                             const std::vector<Matrix>& maps) {
  require(maps.size() + 1 == objs.size(), ErrorKind::DimensionMismatch,
          "need one more object than maps");
  Report rep;
  for (size_t i = 0; i < maps.size(); ++i) {
    require(maps[i].rows() == objs[i + 1].dim() && maps[i].cols() == objs[i].dim(),
            ErrorKind::DimensionMismatch, "map " + std::to_string(i + 1) + " shape");
    Report m = verify_morphism(maps[i], objs[i], objs[i + 1]);
    rep.add("map " + std::to_string(i + 1) + " morphism", m.ok(), m.str());
  }
  for (size_t i = 0; i + 1 < maps.size(); ++i) {
    Subspace im = column_space(maps[i]);
    Subspace ker = nullspace(maps[i + 1]);
    rep.add("exact at node " + std::to_string(i + 1), im == ker,
            "image dim " + std::to_string(im.dim()) + ", kernel dim " + std::to_string(ker.dim()));
  }
  return rep;
}

bool cohomologous(const HomSuperAlgebra& b, const Representation& module, const Vec& f1,
                  const Vec& f2) {
  CochainComplex cx(b, module);
  const Subspace& c0 = cx.cochains(0, -1);
  std::vector<Vec> images;
  for (const Vec& v : c0.vectors()) images.push_back(cx.coboundary(0, v));
  return Subspace::span(cx.raw_dim(1), images).contains(f1 - f2);
}

}  // namespace nambu
