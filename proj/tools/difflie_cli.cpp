#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "difflie/cohomology.hpp"
#include "difflie/deformations.hpp"
#include "difflie/extensions.hpp"
#include "difflie/homotopy.hpp"
#include "difflie/json_io.hpp"
#include "difflie/linfty.hpp"
#include "difflie/random.hpp"

using namespace difflie;

namespace {

constexpr int kOk = 0;
constexpr int kResidual = 1;
constexpr int kInput = 2;

struct Options {
  std::string path;
  std::string flavor = "difflie";
  std::string weight;
  std::string json_out;
  int max_degree = 4;
  int order = 0;
  int max_arity = 4;
  std::uint64_t seed = 1;
};

struct Outcome {
  Json report;
  bool ok = true;
};

Json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Scalar weight_of(const Options& o, const Scalar& fallback) {
  if (o.weight.empty()) return fallback;
  try {
    return parse_scalar(o.weight);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

DiffLieAlgebra algebra_of(const Options& o, const Json& j) {
  DiffLieAlgebra A = diff_lie_from_json(j);
  A.weight = weight_of(o, A.weight);
  return A;
}

Json one_based(const std::vector<int>& t) {
  Json out = Json::array();
  for (int i : t) out.push_back(i + 1);
  return out;
}

void note(Json& list, const char* identity, const std::vector<int>& args, const Vector& r) {
  if (!is_zero(r)) list.push_back(Json{{"identity", identity}, {"args", one_based(args)}, {"residual", to_json(r)}});
}

Outcome check_axioms(const Options& o) {
  const Json j = load(o.path);
  const DiffLieAlgebra A = algebra_of(o, j);
  const int n = A.dim();
  Json nonzero = Json::array();
  const Residuals jac = jacobi_residual(A.algebra);
  std::size_t k = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) note(nonzero, "jacobi", {a, b, c}, jac[k++]);
  const Residuals der = weighted_derivation_residual(A);
  k = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) note(nonzero, "weighted_derivation", {a, b}, der[k++]);
  Json report{{"command", "check-axioms"}, {"weight", to_json(A.weight)}, {"jacobi_ok", all_zero(jac)},
              {"derivation_ok", all_zero(der)}};
  bool ok = all_zero(jac) && all_zero(der);
  if (has_representation(j)) {
    const DiffRepresentation rep = representation_from_json(j, A);
    const Residuals hom = rep_homomorphism_residual(A.algebra, rep);
    k = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) note(nonzero, "representation_homomorphism", {a, b}, hom[k++]);
    const Residuals comp = rep_compatibility_residual(A, rep);
    for (int a = 0; a < n; ++a) note(nonzero, "representation_compatibility", {a}, comp[static_cast<std::size_t>(a)]);
    const bool rep_ok = all_zero(hom) && all_zero(comp);
    report["representation_ok"] = rep_ok;
    ok = ok && rep_ok;
  }
  report["nonzero"] = nonzero;
  return {report, ok};
}

Outcome cohomology(const Options& o) {
  const Json j = load(o.path);
  const DiffLieAlgebra A = algebra_of(o, j);
  Flavor f;
  try {
    f = parse_flavor(o.flavor);
  } catch (const std::exception&) {
    throw InputError("unknown flavor " + o.flavor);
  }
  const CochainComplexSpec spec{A, representation_from_json(j, A), o.max_degree, f};
  Json report{{"command", "cohomology"}, {"flavor", flavor_name(f)}};
  try {
    const ComplexReport r = complex_report(spec);
    report["dims_C"] = r.dims_C;
    report["dims_H"] = r.dims_H;
    report["d_squared_ok"] = r.d_squared_ok;
    return {report, r.d_squared_ok};
  } catch (const CompositionNonzero&) {
    report["d_squared_ok"] = false;
    return {report, false};
  }
}

Outcome mc_check(const Options& o) {
  const Json j = load(o.path);
  Json report{{"command", "mc-check"}};
  if (j.contains("g")) {
    RelativeInput in = relative_from_json(j);
    in.weight = weight_of(o, in.weight);
    const RelativeMcReport r = mc_check_relative(in.triple, in.D, in.weight);
    report["mode"] = "relative";
    report["weight"] = to_json(in.weight);
    report["maurer_cartan"] = r.maurer_cartan;
    report["structure_ok"] = r.structure_ok;
    report["residual"] = to_json(r.residual);
    return {report, r.maurer_cartan};
  }
  const DiffLieAlgebra A = algebra_of(o, j);
  const McReport r = mc_check_absolute(A.algebra.bracket, AltMap::from_matrix(A.d), A.weight);
  report["mode"] = "absolute";
  report["weight"] = to_json(A.weight);
  report["maurer_cartan"] = r.maurer_cartan;
  report["structure_ok"] = r.structure_ok;
  report["residual"] = to_json(r.residual);
  return {report, r.maurer_cartan};
}

Outcome twist(const Options& o) {
  const Json j = load(o.path);
  const DiffLieAlgebra A = algebra_of(o, j);
  const int n = A.dim();
  Json report{{"command", "twist"}, {"weight", to_json(A.weight)}};
  const AbsoluteStructure base(n, A.weight);
  const FormalElement alpha = FormalElement::shifted(A.algebra.bracket) + FormalElement::plain(AltMap::from_matrix(A.d));
  const FormalElement mc = mc_residual(base, alpha);
  report["maurer_cartan"] = mc.is_zero();
  if (!mc.is_zero()) {
    report["residual"] = to_json(mc);
    return {report, false};
  }
  // Linear in (f, g): basis cochains in each slot separately.
  Json bridge = Json::array();
  std::size_t checked = 0;
  const int top = std::min(o.max_degree, 3);
  for (int deg = 1; deg <= top; ++deg) {
    const AltMap f0(deg, n, n), g0(deg - 1, n, n);
    for (int slot = 0; slot < 2; ++slot) {
      const AltMap& shape = slot == 0 ? f0 : g0;
      for (std::size_t t = 0; t < shape.num_tuples(); ++t)
        for (int c = 0; c < n; ++c) {
          AltMap f = f0, g = g0;
          (slot == 0 ? f : g).coeff(t, c) = 1;
          const FormalElement r = twist_bridge_residual(A, f, g);
          ++checked;
          if (!r.is_zero())
            bridge.push_back(Json{{"degree", deg}, {"slot", slot == 0 ? "f" : "g"}, {"tuple", one_based(shape.tuple(t))},
                                  {"output", c + 1}, {"residual", to_json(r)}});
        }
    }
  }
  const TwistedAlgebra T(base, alpha);
  FixtureGenerator gen(o.seed);
  std::size_t squares = 0, square_failures = 0;
  for (int a = 1; a <= 3; ++a)
    for (const bool shifted : {true, false}) {
      const FormalElement x = shifted ? FormalElement::shifted(gen.random_map(a, n, n))
                                      : FormalElement::plain(gen.random_map(a - 1, n, n));
      ++squares;
      if (!T.bracket({T.bracket({x})}).is_zero()) ++square_failures;
    }
  report["bridge_checked"] = checked;
  report["bridge_nonzero"] = bridge;
  report["l1_squared_checked"] = squares;
  report["l1_squared_nonzero"] = square_failures;
  return {report, bridge.empty() && square_failures == 0};
}

Outcome key_formula(const Options& o) {
  const Json j = load(o.path);
  if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<int>() < 1)
    throw InputError("field \"dim\" must be a positive integer");
  const int n = j.at("dim").get<int>();
  if (!j.contains("f")) throw InputError("missing field \"f\"");
  const AltMap f = altmap_from_json(j.at("f"), n, n);
  std::vector<AltMap> xis;
  if (j.contains("xi")) {
    if (!j.at("xi").is_array()) throw InputError("\"xi\" must be a list of cochains");
    for (const Json& x : j.at("xi")) xis.push_back(altmap_from_json(x, n, n));
  }
  const KeyFormulaReport r = key_formula_check(f, xis);
  const bool ok = r.ok();
  Json report{{"command", "key-formula"}, {"iterated", to_json(r.iterated)}, {"closed", to_json(r.closed)},
              {"stray", to_json(r.stray)}, {"difference", to_json(r.iterated - r.closed)}, {"ok", ok}};
  return {report, ok};
}

Json morphism_block(const std::vector<FormalElement>& res) {
  Json nonzero = Json::array();
  for (std::size_t k = 0; k < res.size(); ++k)
    if (!res[k].is_zero()) nonzero.push_back(Json{{"sample_tuple", k}, {"residual", to_json(res[k])}});
  return Json{{"checked", res.size()}, {"nonzero", nonzero}};
}

Outcome morphism_check(const Options& o) {
  const Json j = load(o.path);
  auto dim = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<int>() < 1)
      throw InputError(std::string("field \"") + key + "\" must be a positive integer");
    return j.at(key).get<int>();
  };
  const int g = dim("g_dim"), h = dim("h_dim");
  const Scalar lambda = weight_of(o, j.contains("weight") ? scalar_from_json(j.at("weight")) : Scalar(0));
  const int max_n = o.order > 0 ? o.order : 3;
  FixtureGenerator gen(o.seed);
  Json report{{"command", "morphism-check"}, {"weight", to_json(lambda)}, {"max_n", max_n}};

  const AbsoluteStructure abs_g(g, lambda);
  const auto rel_gg = relative_structure(g, g, lambda);
  std::vector<FormalElement> s1;
  for (int copy = 0; copy < 2; ++copy) {
    for (int a = 1; a <= 2; ++a) s1.push_back(FormalElement::shifted(gen.random_map(a, g, g)));
    for (int a = 0; a <= 2; ++a) s1.push_back(FormalElement::plain(gen.random_map(a, g, g)));
  }
  const auto r1 = morphism_residual(abs_g, *rel_gg, [g](const FormalElement& x) { return absolute_to_relative(x, g); }, s1,
                                    max_n);

  const auto rel_gh = relative_structure(g, h, lambda);
  const AbsoluteStructure abs_gh(g + h, lambda);
  std::vector<FormalElement> s2;
  for (int copy = 0; copy < 2; ++copy) {
    for (int a = 1; a <= 2; ++a) s2.push_back(FormalElement::shifted(project_relative_M(gen.random_map(a, g + h, g + h), g)));
    for (int a = 0; a <= 2; ++a) s2.push_back(FormalElement::plain(gen.random_map(a, g, h)));
  }
  const auto r2 = morphism_residual(*rel_gh, abs_gh,
                                    [g, h](const FormalElement& x) { return relative_to_absolute(x, g, h); }, s2, max_n);

  report["absolute_to_relative"] = morphism_block(r1);
  report["relative_to_absolute"] = morphism_block(r2);
  const bool ok = report["absolute_to_relative"]["nonzero"].empty() && report["relative_to_absolute"]["nonzero"].empty();
  return {report, ok};
}

Outcome extension_build(const Options& o) {
  const Json j = load(o.path);
  const DiffLieAlgebra A = algebra_of(o, j);
  const DiffRepresentation rep = representation_from_json(j, A);
  if (!j.contains("psi") || !j.contains("chi")) throw InputError("extension build needs \"psi\" and \"chi\"");
  const AltMap psi = altmap_from_json(j.at("psi"), A.dim(), rep.space_dim);
  const AltMap chi = altmap_from_json(j.at("chi"), A.dim(), rep.space_dim);
  if (psi.arity() != 2 || chi.arity() != 1) throw InputError("\"psi\" has arity 2 and \"chi\" arity 1");
  Json report{{"command", "extension build"}};
  try {
    report["extension"] = to_json(build_extension(A, rep, psi, chi));
    report["cocycle"] = true;
    return {report, true};
  } catch (const NotCocycle& e) {
    report["cocycle"] = false;
    report["residual"] = to_json(e.residual());
    return {report, false};
  }
}

Outcome extension_extract(const Options& o) {
  const AbelianExtension E = extension_from_json(load(o.path));
  const ExtensionReport c = check_extension(E);
  Json report{{"command", "extension extract"},
              {"checks",
               {{"total_valid", c.total_valid},
                {"p_i_zero", c.p_i_zero},
                {"p_s_identity", c.p_s_identity},
                {"exact", c.exact},
                {"p_homomorphism", c.p_homomorphism},
                {"v_abelian", c.v_abelian},
                {"d_preserves_v", c.d_preserves_v},
                {"p_d", c.p_d}}}};
  if (!c.ok()) return {report, false};
  const ExtensionCocycle x = extract_cocycle(E);
  report["representation"] = to_json(x.rep);
  report["psi"] = to_json(x.psi);
  report["chi"] = to_json(x.chi);
  return {report, true};
}

Outcome extension_classify(const Options& o) {
  const Json j = load(o.path);
  const DiffLieAlgebra A = algebra_of(o, j);
  const DiffRepresentation rep = representation_from_json(j, A);
  const bool valid = is_diff_lie(A) && is_diff_rep(A, rep);
  Json report{{"command", "extension classify"}, {"valid_input", valid}};
  if (!valid) return {report, false};
  report["dim_H2"] = classify(A, rep);
  return {report, true};
}

TruncatedDeformation deformation_of(const Options& o) {
  TruncatedDeformation D = deformation_from_json(load(o.path));
  D.base.weight = weight_of(o, D.base.weight);
  return D;
}

Outcome deform_verify(const Options& o) {
  const TruncatedDeformation D = deformation_of(o);
  const int through = o.order > 0 ? std::min(o.order, D.order) : D.order;
  const DeformationResiduals r = deformation_residuals(D);
  Json orders = Json::array();
  for (int k = 0; k <= through; ++k)
    orders.push_back(Json{{"order", k},
                          {"jacobi_ok", all_zero(r.jacobi[static_cast<std::size_t>(k)])},
                          {"operator_ok", all_zero(r.operator_[static_cast<std::size_t>(k)])}});
  const bool ok = r.zero_through(through);
  Json report{{"command", "deform verify"}, {"checked_through", through}, {"orders", orders}, {"ok", ok}};
  if (r.zero_through(1)) {
    const Infinitesimal inf = infinitesimal(D);
    report["infinitesimal"] = Json{{"mu_1", to_json(inf.pair.f)}, {"d_1", to_json(inf.pair.g)}};
  }
  return {report, ok};
}

Outcome deform_rigidify(const Options& o) {
  const TruncatedDeformation D = deformation_of(o);
  Json report{{"command", "deform rigidify"}};
  try {
    TruncatedDeformation result;
    const FormalIso Phi = rigidify(D, &result);
    report["trivial"] = is_trivial(result);
    report["iso"] = to_json(Phi);
    report["result"] = to_json(result);
    return {report, true};
  } catch (const NotDeformation& e) {
    report["error"] = "not_a_deformation";
    report["order"] = e.order();
  } catch (const Obstructed& e) {
    report["error"] = "obstructed";
    report["order"] = e.order();
    report["class"] = Json{{"mu", to_json(e.representative().f)}, {"d", to_json(e.representative().g)}};
  }
  return {report, false};
}

Outcome homotopy_check(const Options& o) {
  HomotopyDiffLie H = homotopy_from_json(load(o.path));
  H.weight = weight_of(o, H.weight);
  try {
    H.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const HomotopyMcReport r = homotopy_mc_check(H, o.max_arity);
  Json report{{"command", "homotopy-check"},
              {"max_arity", o.max_arity},
              {"maurer_cartan", r.maurer_cartan},
              {"residual_families_zero", r.residual_families_zero},
              {"forms_agree", r.forms_agree},
              {"failing_arity", r.failing_arity}};
  return {report, r.maurer_cartan && r.residual_families_zero && r.forms_agree};
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("path", o.path, "input JSON file")->required();
  cmd->add_option("--weight", o.weight, "override the weight, as \"p/q\"");
  cmd->add_option("--seed", o.seed, "seed for sampled residuals");
  cmd->add_option("--json-out", o.json_out, "write the report to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for weighted differential Lie algebras"};
  app.require_subcommand(1);
  Options o;
  using Runner = Outcome (*)(const Options&);
  Runner run = nullptr;
  auto command = [&](CLI::App* parent, const char* name, const char* help, Runner r) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    add_common(cmd, o);
    cmd->callback([&run, r] { run = r; });
    return cmd;
  };

  command(&app, "check-axioms", "Jacobi, weighted derivation and representation residuals", check_axioms);
  CLI::App* coh = command(&app, "cohomology", "cochain complex dimensions", cohomology);
  coh->add_option("--flavor", o.flavor, "ce, do, difflie or tilde");
  coh->add_option("--max-degree", o.max_degree, "top cochain degree")->check(CLI::Range(1, 8));
  command(&app, "mc-check", "Maurer-Cartan check, absolute or relative (input with \"g\")", mc_check);
  CLI::App* tw = command(&app, "twist", "twist by (s mu, d) and compare with the DiffLie differential", twist);
  tw->add_option("--max-degree", o.max_degree, "top cochain degree for the bridge check")->check(CLI::Range(1, 8));
  command(&app, "key-formula", "iterated circle products against the closed form", key_formula);
  CLI::App* mor = command(&app, "morphism-check", "strict maps between the relative and absolute structures", morphism_check);
  mor->add_option("--order", o.order, "largest bracket arity to compare")->check(CLI::Range(1, 6));
  CLI::App* ext = app.add_subcommand("extension", "abelian extensions");
  ext->require_subcommand(1);
  command(ext, "build", "build the extension of a 2-cocycle", extension_build);
  command(ext, "extract", "read the cocycle off an extension", extension_extract);
  command(ext, "classify", "dimension of the tilde second cohomology", extension_classify);
  CLI::App* def = app.add_subcommand("deform", "formal deformations");
  def->require_subcommand(1);
  command(def, "verify", "deformation equations order by order", deform_verify)
      ->add_option("--order", o.order, "check through this order")
      ->check(CLI::Range(1, 64));
  command(def, "rigidify", "clear orders by formal isomorphisms", deform_rigidify);
  command(&app, "homotopy-check", "homotopy differential Lie identities", homotopy_check)
      ->add_option("--max-arity", o.max_arity, "largest arity checked")
      ->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  Outcome out;
  try {
    out = run(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  }
  out.report["ok"] = out.ok;
  const std::string text = out.report.dump(2) + "\n";
  if (o.json_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.json_out);
    if (!f) {
      std::cerr << "cannot write " << o.json_out << "\n";
      return kInput;
    }
    f << text;
  }
  return out.ok ? kOk : kResidual;
}
