#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "nambu/algebra.hpp"
#include "nambu/cohomology.hpp"
#include "nambu/errors.hpp"
#include "nambu/extensions.hpp"
#include "nambu/io.hpp"
#include "nambu/random.hpp"
#include "nambu/tstar.hpp"

using namespace nambu;
using io::Json;

namespace {

enum Exit { kPass = 0, kFail = 1, kPrecondition = 2, kField = 3, kParse = 4 };

bool g_json = false;

void emit(const Json& j) { std::cout << io::dump(j); }

int finish(const Report& r, const std::string& title, Json extra = Json::object()) {
  if (g_json) {
    Json j = extra;
    j["report"] = io::report_json(r);
    emit(j);
  } else {
    std::cout << title << "\n" << r.str() << (r.ok() ? "PASS\n" : "FAIL\n");
  }
  return r.ok() ? kPass : kFail;
}

io::AlgebraFile load(const std::string& path) {
  return io::algebra_from(io::read_file(path), "");
}

Representation pick_rep(const std::string& spec, const io::AlgebraFile& f) {
  const HomSuperAlgebra& a = f.algebra;
  if (spec == "adjoint") return adjoint_rep(a);
  if (spec == "coadjoint") {
    CoadjointRep co = coadjoint_rep(a);
    require(co.exists, ErrorKind::CoadjointMissing, co.witness);
    return co.rep;
  }
  if (spec == "module") {
    require(f.representation.has_value(), ErrorKind::Parse, "file has no representation block");
    return io::representation_from(*f.representation, a, "representation");
  }
  return io::representation_from(io::read_file(spec), a, spec);
}

// A theta argument: "zero", or a file holding a cochain (optionally under "theta").
Vec load_theta(const std::string& spec, const HomSuperAlgebra& g) {
  if (spec == "zero") return zero_theta(g);
  Json j = io::read_file(spec);
  if (j.is_object() && j.contains("theta")) j = j["theta"];
  return io::cochain_from(j, g, g.dim(), 1, spec);
}

int cmd_verify(const std::string& file, bool metric) {
  io::AlgebraFile f = load(file);
  Report r = verify_algebra(f.algebra);
  r.merge(verify_bracket_identities(f.algebra), "identities: ");
  if (metric || f.form) {
    require(f.form.has_value(), ErrorKind::NotMetric, "--metric needs a \"form\" block");
    r.merge(verify_metric(f.algebra, BilinearForm{*f.form}), "metric: ");
  }
  if (f.representation) {
    Representation rep = io::representation_from(*f.representation, f.algebra, "representation");
    r.merge(verify_representation(rep, f.algebra), "representation: ");
  }
  return finish(r, f.algebra.name());
}

int cmd_cohomology(const std::string& file, size_t m, const std::string& rep_spec,
                   const std::string& parity, const std::string& dump) {
  io::AlgebraFile f = load(file);
  Representation rep = pick_rep(rep_spec, f);
  CochainComplex cx(f.algebra, rep);
  std::vector<int> pars;
  if (parity == "even" || parity == "both") pars.push_back(0);
  if (parity == "odd" || parity == "both") pars.push_back(1);
  Json out = Json::array(), basis = Json::object();
  for (int p : pars) {
    CohomologyDims d = cx.dims(m, p);
    const std::string label = p == 0 ? "even" : "odd";
    if (g_json) {
      out.push_back({{"parity", label}, {"C", d.c}, {"Z", d.z}, {"B", d.b}, {"H", d.h}});
    } else {
      std::cout << (pars.size() > 1 ? label + ": " : "") << "C=" << d.c << " Z=" << d.z
                << " B=" << d.b << (m == 0 ? " (no delta^-1)" : "") << " H=" << d.h << "\n";
    }
    if (!dump.empty()) {
      const Subspace& cm = cx.cochains(m, p);
      const SparseOp& D = cx.raw_coboundary(m, p);
      std::vector<Vec> images;
      for (size_t j = 0; j < cm.dim(); ++j) images.push_back(D.apply(cm.vector(j)));
      Json cj = Json::array(), zj = Json::array();
      for (size_t j = 0; j < cm.dim(); ++j)
        cj.push_back(io::cochain_json(f.algebra, rep.dim(), m, cm.vector(j)));
      for (const Vec& c : nullspace(Matrix::from_cols(images, cx.raw_dim(m + 1))).vectors()) {
        Vec z(cx.raw_dim(m));
        for (size_t j = 0; j < c.size(); ++j)
          if (!c[j].is_zero()) axpy(z, c[j], cm.vector(j));
        zj.push_back(io::cochain_json(f.algebra, rep.dim(), m, z));
      }
      basis[label] = {{"cochains", cj}, {"cocycles", zj}};
    }
  }
  if (g_json) emit(out);
  if (!dump.empty()) io::write_file(dump, basis);
  return kPass;
}

int cmd_series(const std::string& file) {
  io::AlgebraFile f = load(file);
  auto nil = nilpotent_length(f.algebra);
  auto sol = solvable_length(f.algebra);
  if (g_json) {
    Json j;
    j["nilpotent"] = nil ? Json(*nil) : Json(nullptr);
    j["solvable"] = sol ? Json(*sol) : Json(nullptr);
    emit(j);
  } else {
    std::cout << (nil ? "nilpotent k=" + std::to_string(*nil) : std::string("not nilpotent"))
              << ", "
              << (sol ? "solvable k=" + std::to_string(*sol) : std::string("not solvable"))
              << "\n";
  }
  return kPass;
}

int cmd_twist(const std::string& file, const std::string& endo, const std::string& out) {
  io::AlgebraFile f = load(file);
  Json j = io::read_file(endo);
  if (j.is_object() && j.contains("matrix")) j = j["matrix"];
  const size_t d = f.algebra.dim();
  HomSuperAlgebra t = twist_by_endomorphism(f.algebra, io::matrix_from(j, d, d, endo));
  Json tj = io::algebra_json(t);
  if (out.empty()) emit(tj);
  else io::write_file(out, tj);
  return kPass;
}

int cmd_extend(const std::string& file, bool raw, const std::string& out) {
  ExtensionDatum d = io::datum_from(io::read_file(file));
  HomSuperAlgebra g = build_extension(d, !raw);
  HomSuperAlgebra a = abelian_algebra(d.module.target.parity, d.base.arity(), d.module.nu);
  Report r = verify_algebra(g);
  r.merge(verify_exact_sequence({a, g, d.base}, {extension_inclusion(d), extension_projection(d)}),
          "sequence: ");
  if (!out.empty()) io::write_file(out, io::algebra_json(g));
  return finish(r, g.name());
}

int cmd_tstar(const std::string& file, const std::string& theta_spec, bool validated,
              const std::string& out) {
  io::AlgebraFile f = load(file);
  Vec theta = load_theta(theta_spec, f.algebra);
  TStarExtension t = tstar_extend(f.algebra, theta, validated);
  const HomSuperAlgebra& g = t.result.algebra;
  Report r = verify_algebra(g);
  r.merge(verify_metric(g, t.result.form), "metric: ");
  if (!out.empty()) io::write_file(out, io::algebra_json(g, &t.result.form.gram));
  return finish(r, g.name());
}

int cmd_equiv(const std::string& file, const std::string& t1, const std::string& t2) {
  io::AlgebraFile f = load(file);
  Vec a = load_theta(t1, f.algebra), b = load_theta(t2, f.algebra);
  EquivalenceResult e = equivalence(f.algebra, a, b);
  if (g_json) {
    Json j;
    j["kind"] = equivalence_name(e.kind);
    if (e.kind != EquivalenceKind::Inequivalent) {
      const size_t d = f.algebra.dim();
      j["theta_prime"] = io::cochain_json(f.algebra, d, 0, e.theta_prime);
      j["induced_form"] = io::matrix_json(e.induced_form);
    }
    emit(j);
  } else {
    std::cout << equivalence_name(e.kind) << "\n";
  }
  return kPass;
}

int cmd_decompose(const std::string& file, const std::string& out) {
  io::AlgebraFile f = load(file);
  require(f.form.has_value(), ErrorKind::NotMetric, "decompose needs a \"form\" block");
  Certificate c = decompose(MetricAlgebra{f.algebra, BilinearForm{*f.form}});
  Json cj = io::certificate_json(c);
  if (!out.empty()) io::write_file(out, cj);
  if (g_json) {
    emit(cj);
  } else {
    std::cout << c.input << ": k=" << c.k << " g1 length " << c.k1 << " (bound " << c.bound
              << "), dim J=" << c.j.dim() << ", dim I=" << c.i.dim() << (c.odd ? ", odd" : "")
              << "\n"
              << c.checks.str() << (c.checks.ok() ? "PASS\n" : "FAIL\n");
  }
  return c.checks.ok() ? kPass : kFail;
}

int cmd_fuzz(uint64_t seed, int count, int n, int max_dim) {
  Rng rng(seed);
  Report total;
  for (int i = 0; i < count; ++i) {
    HomSuperAlgebra a = random_valid_algebra(rng, n, max_dim);
    const std::string tag = "#" + std::to_string(i) + " " + a.name() + ": ";
    Report r = verify_algebra(a);
    r.merge(verify_bracket_identities(a), "identities: ");
    CochainComplex ad(a, adjoint_rep(a));
    for (size_t m : {0, 1})
      for (const Vec& v : ad.square_on_basis(m, -1))
        if (!is_zero(v)) {
          r.fail("adjoint delta^2 m=" + std::to_string(m), "nonzero on a basis cochain");
          break;
        }
    CoadjointRep co = coadjoint_rep(a);
    if (co.exists && co.twist_compatible) {
      TStarExtension t = tstar_extend(a, zero_theta(a), true);
      r.merge(verify_algebra(t.result.algebra), "T*0: ");
      r.merge(verify_metric(t.result.algebra, t.result.form), "T*0 metric: ");
      if (nilpotent_length(a)) r.merge(tstar_series_laws(a, zero_theta(a)), "T*0 series: ");
    }
    total.merge(r, tag);
    if (!g_json) std::cout << tag << (r.ok() ? "PASS" : "FAIL") << "\n";
  }
  if (g_json) {
    emit(io::report_json(total));
  } else {
    std::cout << count << " algebras, " << (total.ok() ? "all PASS" : "failures") << "\n";
    if (!total.ok())
      for (const Check& c : total.checks)
        if (!c.pass) std::cout << "FAIL " << c.name << ": " << c.witness << "\n";
  }
  return total.ok() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for n-ary multiplicative Hom-Nambu-Lie superalgebras"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "machine-readable output");

  std::string file, out, rep = "adjoint", parity = "even", dump, endo, theta = "zero", t1, t2;
  size_t m = 1;
  bool metric = false, raw = false, validated = false;
  uint64_t seed = 1;
  int count = 20, arity = 2, max_dim = 4;
  std::function<int()> run;

  auto* verify = app.add_subcommand("verify", "check axioms, identities and optional form");
  verify->add_option("file", file)->required();
  verify->add_flag("--metric", metric, "require and check the form");
  verify->callback([&] { run = [&] { return cmd_verify(file, metric); }; });

  auto* coh = app.add_subcommand("cohomology", "dimensions of C, Z, B, H");
  coh->add_option("file", file)->required();
  coh->add_option("--m", m, "cochain degree")->capture_default_str();
  coh->add_option("--rep", rep, "adjoint | coadjoint | module | representation file")
      ->capture_default_str();
  coh->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd", "both"}))
      ->capture_default_str();
  coh->add_option("--dump", dump, "write cochain and cocycle bases");
  coh->callback([&] { run = [&] { return cmd_cohomology(file, m, rep, parity, dump); }; });

  auto* series = app.add_subcommand("series", "nilpotent and solvable lengths");
  series->add_option("file", file)->required();
  series->callback([&] { run = [&] { return cmd_series(file); }; });

  auto* twist = app.add_subcommand("twist", "twist an algebra by a self-morphism");
  twist->add_option("file", file)->required();
  twist->add_option("--endo", endo, "matrix file (column j = image of e_j)")->required();
  twist->add_option("-o,--out", out);
  twist->callback([&] { run = [&] { return cmd_twist(file, endo, out); }; });

  auto* extend = app.add_subcommand("extend", "build an abelian extension from a datum");
  extend->add_option("file", file)->required();
  extend->add_flag("--raw", raw, "skip cocycle validation");
  extend->add_option("-o,--out", out);
  extend->callback([&] { run = [&] { return cmd_extend(file, raw, out); }; });

  auto* tstar = app.add_subcommand("tstar", "T*-extension g + g*");
  tstar->add_option("file", file)->required();
  tstar->add_option("--theta", theta, "zero or a cochain file")->capture_default_str();
  tstar->add_flag("--validated", validated, "reject non-closed or non-cyclic theta");
  tstar->add_option("-o,--out", out);
  tstar->callback([&] { run = [&] { return cmd_tstar(file, theta, validated, out); }; });

  auto* equiv = app.add_subcommand("equiv", "compare two T*-extensions of one algebra");
  equiv->add_option("file", file)->required();
  equiv->add_option("theta1", t1)->required();
  equiv->add_option("theta2", t2)->required();
  equiv->callback([&] { run = [&] { return cmd_equiv(file, t1, t2); }; });

  auto* dec = app.add_subcommand("decompose", "certificate g = T*_theta(g1) (+ line)");
  dec->add_option("file", file)->required();
  dec->add_option("-o,--out", out);
  dec->callback([&] { run = [&] { return cmd_decompose(file, out); }; });

  auto* fuzz = app.add_subcommand("fuzz", "seeded sweep over random twisted algebras");
  fuzz->add_option("--seed", seed)->capture_default_str();
  fuzz->add_option("--count", count)->capture_default_str();
  fuzz->add_option("--n", arity)->check(CLI::IsMember({2, 3}))->capture_default_str();
  fuzz->add_option("--max-dim", max_dim)->capture_default_str();
  fuzz->callback([&] { run = [&] { return cmd_fuzz(seed, count, arity, max_dim); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kParse;
  }
  try {
    return run();
  } catch (const NeedsFieldExtension& e) {
    std::cerr << e.what() << "\n";
    return kField;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? kParse : kPrecondition;
  }
}
