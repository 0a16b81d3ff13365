#include "difflie/json_io.hpp"

#include <sstream>

namespace difflie {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key, int lo) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long>() < lo) fail(std::string("field \"") + key + "\" must be an integer >= " + std::to_string(lo));
  return v.get<int>();
}

int index_from(const Json& j, int dim) {
  if (!j.is_number_integer()) fail("index must be an integer");
  const long i = j.get<long>();
  if (i < 1 || i > dim) fail("index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
  return static_cast<int>(i - 1);
}

int index_from(const std::string& s, int dim) {
  std::size_t used = 0;
  long i = 0;
  try {
    i = std::stol(s, &used);
  } catch (const std::exception&) {
    fail("malformed index \"" + s + "\"");
  }
  if (used != s.size()) fail("malformed index \"" + s + "\"");
  return index_from(Json(i), dim);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string join(const std::vector<int>& t, char sep) {
  std::string s;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k > 0) s.push_back(sep);
    s += std::to_string(t[k] + 1);
  }
  return s;
}

std::vector<Matrix> rho_from_json(const Json& j, int g_dim, int v_dim) {
  std::vector<Matrix> rho(static_cast<std::size_t>(g_dim),
                          Matrix(static_cast<std::size_t>(v_dim), static_cast<std::size_t>(v_dim)));
  if (!j.is_object()) fail("\"rho\" must be an object keyed by basis index");
  for (const auto& [key, m] : j.items()) rho[static_cast<std::size_t>(index_from(key, g_dim))] = matrix_from_json(m, v_dim, v_dim);
  return rho;
}

Json rho_to_json(const std::vector<Matrix>& rho) {
  Json out = Json::object();
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (!rho[i].is_zero()) out[std::to_string(i + 1)] = to_json(rho[i]);
  return out;
}

Matrix optional_matrix(const Json& j, const char* key, int rows, int cols) {
  if (j.contains(key)) return matrix_from_json(j.at(key), rows, cols);
  return Matrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
}

Scalar optional_weight(const Json& j) { return j.contains("weight") ? scalar_from_json(j.at("weight")) : Scalar(0); }

LieAlgebra lie_from_json(const Json& j) {
  const int n = int_field(j, "dim", 1);
  LieAlgebra L(n);
  if (!j.contains("brackets")) return L;
  const Json& b = j.at("brackets");
  if (!b.is_array()) fail("\"brackets\" must be a list");
  for (const Json& e : b) {
    if (!e.is_array() || e.size() != 3) fail("bracket entries are [i, j, [coefficients]]");
    const int x = index_from(e[0], n), y = index_from(e[1], n);
    if (x == y) fail("bracket [x_i, x_i] must not be given");
    L.set_bracket(x, y, vector_from_json(e[2], n));
  }
  return L;
}

GradedMap graded_from_json(const Json& j, const GradedVectorSpace& l, int arity, int degree) {
  GradedMap f(l, arity, degree);
  if (!j.is_object()) fail("graded maps are objects keyed by \"i,j,...\"");
  for (const auto& [key, v] : j.items()) {
    std::vector<int> t;
    for (const auto& part : split(key, ',')) t.push_back(index_from(part, l.dim()));
    if (static_cast<int>(t.size()) != arity) fail("key \"" + key + "\" has the wrong arity");
    try {
      f.set(t, vector_from_json(v, l.dim()));
    } catch (const std::invalid_argument& e) {
      fail("key \"" + key + "\": " + e.what());
    }
  }
  return f;
}

}  // namespace

Json to_json(const Scalar& a) { return to_string(a); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(to_json(a));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail("scalars must be integers or \"p/q\" strings");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Vector vector_from_json(const Json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) fail("expected a vector of length " + std::to_string(dim));
  Vector v;
  for (const Json& a : j) v.push_back(scalar_from_json(a));
  return v;
}

Matrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    fail("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  std::vector<std::vector<Scalar>> r;
  for (const Json& row : j) r.push_back(vector_from_json(row, cols));
  return Matrix::from_rows(r, static_cast<std::size_t>(cols));
}

Json to_json(const AltMap& f) {
  Json coeffs = Json::object();
  for (std::size_t t = 0; t < f.num_tuples(); ++t) {
    const Vector v = f.at(t);
    if (!is_zero(v)) coeffs[join(f.tuple(t), '<')] = to_json(v);
  }
  return Json{{"arity", f.arity()}, {"coeffs", coeffs}};
}

AltMap altmap_from_json(const Json& j, int src_dim, int tgt_dim) {
  const int k = int_field(j, "arity", 0);
  AltMap f(k, src_dim, tgt_dim);
  if (!j.contains("coeffs")) return f;
  const Json& c = j.at("coeffs");
  if (!c.is_object()) fail("\"coeffs\" must be an object");
  for (const auto& [key, v] : c.items()) {
    std::vector<int> t;
    if (k > 0)
      for (const auto& part : split(key, '<')) t.push_back(index_from(part, src_dim));
    if (static_cast<int>(t.size()) != k) fail("cochain key \"" + key + "\" has the wrong arity");
    for (std::size_t a = 1; a < t.size(); ++a)
      if (t[a - 1] >= t[a]) fail("cochain key \"" + key + "\" is not strictly increasing");
    f.set(t, vector_from_json(v, tgt_dim));
  }
  return f;
}

Json to_json(const DiffLieAlgebra& A) {
  Json brackets = Json::array();
  for (int i = 0; i < A.dim(); ++i)
    for (int k = i + 1; k < A.dim(); ++k) {
      const Vector v = A.algebra.br_basis(i, k);
      if (!is_zero(v)) brackets.push_back(Json{i + 1, k + 1, to_json(v)});
    }
  return Json{{"dim", A.dim()}, {"weight", to_json(A.weight)}, {"brackets", brackets}, {"d", to_json(A.d)}};
}

DiffLieAlgebra diff_lie_from_json(const Json& j) {
  LieAlgebra L = lie_from_json(j);
  const int n = L.dim;
  return DiffLieAlgebra{std::move(L), optional_matrix(j, "d", n, n), optional_weight(j)};
}

bool has_representation(const Json& j) { return j.is_object() && j.contains("rep_dim"); }

Json to_json(const DiffRepresentation& rep) {
  return Json{{"rep_dim", rep.space_dim}, {"rho", rho_to_json(rep.rho)}, {"dV", to_json(rep.dV)}};
}

DiffRepresentation representation_from_json(const Json& j, const DiffLieAlgebra& A) {
  if (!has_representation(j)) return adjoint_rep(A);
  DiffRepresentation rep;
  rep.space_dim = int_field(j, "rep_dim", 0);
  rep.rho = j.contains("rho") ? rho_from_json(j.at("rho"), A.dim(), rep.space_dim)
                              : std::vector<Matrix>(static_cast<std::size_t>(A.dim()),
                                                    Matrix(static_cast<std::size_t>(rep.space_dim),
                                                           static_cast<std::size_t>(rep.space_dim)));
  rep.dV = optional_matrix(j, "dV", rep.space_dim, rep.space_dim);
  return rep;
}

RelativeInput relative_from_json(const Json& j) {
  RelativeInput in;
  in.triple.g = lie_from_json(field(j, "g"));
  in.triple.h = lie_from_json(field(j, "h"));
  const int g = in.triple.g.dim, h = in.triple.h.dim;
  in.triple.rho = j.contains("rho") ? rho_from_json(j.at("rho"), g, h)
                                    : std::vector<Matrix>(static_cast<std::size_t>(g),
                                                          Matrix(static_cast<std::size_t>(h), static_cast<std::size_t>(h)));
  in.D = optional_matrix(j, "D", h, g);
  in.weight = optional_weight(j);
  return in;
}

Json to_json(const TruncatedDeformation& D) {
  Json out = to_json(D.base);
  Json mu = Json::array(), d = Json::array();
  for (int k = 1; k <= D.order; ++k) {
    mu.push_back(to_json(D.mu[static_cast<std::size_t>(k)]));
    d.push_back(to_json(D.d[static_cast<std::size_t>(k)]));
  }
  out["deformation"] = Json{{"order", D.order}, {"mu", mu}, {"d", d}};
  return out;
}

TruncatedDeformation deformation_from_json(const Json& j) {
  const DiffLieAlgebra A = diff_lie_from_json(j);
  const Json& def = field(j, "deformation");
  const int order = int_field(def, "order", 1);
  TruncatedDeformation D = constant_deformation(A, order);
  const int n = A.dim();
  for (const char* key : {"mu", "d"}) {
    if (!def.contains(key)) continue;
    const Json& list = def.at(key);
    if (!list.is_array() || static_cast<int>(list.size()) > order)
      fail(std::string("\"") + key + "\" must list at most `order` terms, starting at order 1");
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (std::string(key) == "mu") {
        const AltMap m = altmap_from_json(list[k], n, n);
        if (m.arity() != 2) fail("deformation brackets have arity 2");
        D.mu[k + 1] = m;
      } else {
        D.d[k + 1] = matrix_from_json(list[k], n, n);
      }
    }
  }
  return D;
}

Json to_json(const FormalIso& Phi) {
  Json series = Json::array();
  for (const auto& m : Phi.phi) series.push_back(to_json(m));
  return Json{{"order", Phi.order}, {"phi", series}};
}

Json to_json(const GradedMap& f) {
  Json out = Json::object();
  for (const auto& [t, v] : f.table())
    if (!is_zero(v)) out[join(t, ',')] = to_json(v);
  return out;
}

Json to_json(const HomotopyDiffLie& H) {
  Json comps = Json::array();
  for (const auto& [deg, dim] : H.space.components()) comps.push_back(Json{deg, dim});
  Json mu = Json::array(), D = Json::array();
  for (const auto& m : H.mu) mu.push_back(to_json(m));
  for (const auto& m : H.D) D.push_back(to_json(m));
  return Json{{"components", comps}, {"weight", to_json(H.weight)}, {"mu", mu}, {"D", D}};
}

HomotopyDiffLie homotopy_from_json(const Json& j) {
  const Json& comps = field(j, "components");
  if (!comps.is_array() || comps.empty()) fail("\"components\" must be a non-empty list of [degree, dim]");
  std::vector<std::pair<int, int>> c;
  for (const Json& e : comps) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() || e[1].get<int>() < 0)
      fail("components are [degree, dim] integer pairs");
    c.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  const GradedVectorSpace l(c);
  const Json& mu = field(j, "mu");
  const Json& D = field(j, "D");
  if (!mu.is_array() || !D.is_array()) fail("\"mu\" and \"D\" must be lists indexed by arity");
  const int bound = static_cast<int>(std::max(mu.size(), D.size()));
  HomotopyDiffLie H = empty_homotopy(l, optional_weight(j), bound);
  for (std::size_t k = 0; k < mu.size(); ++k) H.mu[k] = graded_from_json(mu[k], l, static_cast<int>(k) + 1, 1);
  for (std::size_t k = 0; k < D.size(); ++k) H.D[k] = graded_from_json(D[k], l, static_cast<int>(k) + 1, 0);
  return H;
}

Json to_json(const AbelianExtension& E) {
  return Json{{"base", to_json(E.base)}, {"v_dim", E.v_dim}, {"total", to_json(E.total)},
              {"i", to_json(E.i)},       {"p", to_json(E.p)},  {"s", to_json(E.s)}};
}

AbelianExtension extension_from_json(const Json& j) {
  AbelianExtension E;
  E.base = diff_lie_from_json(field(j, "base"));
  E.total = diff_lie_from_json(field(j, "total"));
  E.v_dim = int_field(j, "v_dim", 0);
  const int g = E.base.dim(), t = E.total.dim();
  if (!j.at("base").contains("weight")) E.base.weight = E.total.weight;
  E.i = matrix_from_json(field(j, "i"), t, E.v_dim);
  E.p = matrix_from_json(field(j, "p"), g, t);
  E.s = matrix_from_json(field(j, "s"), t, g);
  return E;
}

Json to_json(const FormalElement& x) {
  Json out = Json::array();
  for (const auto& p : x.pieces())
    out.push_back(Json{{"kind", p.kind == PieceKind::Shifted ? "shifted" : "plain"}, {"map", to_json(p.map)}});
  return out;
}

Json to_json(const Residuals& r) {
  Json out = Json::array();
  for (const auto& v : r) out.push_back(to_json(v));
  return out;
}

}  // namespace difflie
