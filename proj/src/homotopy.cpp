#include "difflie/homotopy.hpp"

#include <algorithm>
#include <functional>

#include "difflie/combinatorics.hpp"
#include "difflie/nr_bracket.hpp"

namespace difflie {

namespace {

using BasisFn = std::function<Vector(const std::vector<int>&)>;

GradedMap zero_map(const GradedVectorSpace& l, int arity, int degree) { return GradedMap(l, arity, degree); }

const GradedMap* component(const std::vector<GradedMap>& family, int i) {
  if (i < 1 || i > static_cast<int>(family.size())) return nullptr;
  const GradedMap& f = family[static_cast<std::size_t>(i - 1)];
  return f.is_zero() ? nullptr : &f;
}

// Extends a basis-tuple function multilinearly over homogeneous arguments.
Vector multilinear(const GradedVectorSpace& l, const BasisFn& f, const std::vector<Vector>& args) {
  for (const auto& a : args) {
    if (static_cast<int>(a.size()) != l.dim()) throw DimensionMismatch("argument length");
    l.degree_of_vector(a);
  }
  Vector out(static_cast<std::size_t>(l.dim()), Scalar(0));
  std::vector<int> picked;
  std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t k, const Scalar& c) {
    if (k == args.size()) {
      axpy(out, c, f(picked));
      return;
    }
    for (int i = 0; i < l.dim(); ++i) {
      const Scalar& a = args[k][static_cast<std::size_t>(i)];
      if (sgn(a) == 0) continue;
      picked.push_back(i);
      rec(k + 1, c * a);
      picked.pop_back();
    }
  };
  rec(0, Scalar(1));
  return out;
}

DegreeVector degrees_of(const GradedVectorSpace& l, const std::vector<int>& x) {
  DegreeVector d;
  for (int i : x) d.push_back(l.degree_of(i));
  return d;
}

std::vector<int> slice(const std::vector<int>& x, const Permutation& sigma, int from, int len) {
  std::vector<int> out;
  for (int k = from; k < from + len; ++k) out.push_back(x[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])]);
  return out;
}

std::vector<Vector> units(const GradedVectorSpace& l, const std::vector<int>& idx) {
  std::vector<Vector> out;
  for (int i : idx) out.push_back(unit_vector(static_cast<std::size_t>(l.dim()), static_cast<std::size_t>(i)));
  return out;
}

// sum over Sh(j, n-j) of eps outer(inner(first j), rest).
Vector insert_one(const GradedVectorSpace& l, const GradedMap& outer, const GradedMap& inner, const std::vector<int>& x) {
  const int n = static_cast<int>(x.size());
  const int j = inner.arity();
  Vector out(static_cast<std::size_t>(l.dim()), Scalar(0));
  const DegreeVector degs = degrees_of(l, x);
  for (const auto& sigma : shuffles({j, n - j})) {
    const Vector v = inner.on_basis(slice(x, sigma, 0, j));
    if (is_zero(v)) continue;
    std::vector<Vector> a{v};
    for (const auto& u : units(l, slice(x, sigma, j, n - j))) a.push_back(u);
    axpy(out, koszul_sign(sigma, degs), outer.evaluate(a));
  }
  return out;
}

Vector linfty_on_basis(const HomotopyDiffLie& H, const std::vector<int>& x) {
  const int n = static_cast<int>(x.size());
  Vector out(static_cast<std::size_t>(H.space.dim()), Scalar(0));
  for (int i = 1; i <= n; ++i) {
    const GradedMap* inner = component(H.mu, i);
    const GradedMap* outer = component(H.mu, n - i + 1);
    if (inner && outer) axpy(out, 1, insert_one(H.space, *outer, *inner, x));
  }
  return out;
}

// Ordered compositions of t into `parts` positive parts each at most `cap`.
void compositions(int t, int parts, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (t == 0) out.push_back(cur);
    return;
  }
  for (int m = 1; m <= cap && m <= t - (parts - 1); ++m) {
    cur.push_back(m);
    compositions(t - m, parts - 1, cap, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int t, int parts, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(t, parts, cap, cur, out);
  return out;
}

bool leaders_increase(const Permutation& sigma, const std::vector<int>& blocks) {
  int offset = 0;
  int last = -1;
  for (int b : blocks) {
    const int leader = sigma[static_cast<std::size_t>(offset)];
    if (leader < last) return false;
    last = leader;
    offset += b;
  }
  return true;
}

Vector diff_on_basis(const HomotopyDiffLie& H, const std::vector<int>& x) {
  const GradedVectorSpace& l = H.space;
  const int n = static_cast<int>(x.size());
  const int B = H.bound();
  const DegreeVector degs = degrees_of(l, x);
  Vector out(static_cast<std::size_t>(l.dim()), Scalar(0));
  for (int p = 2; p - 1 <= n; ++p) {
    const Scalar coeff = power(H.weight, p - 2);
    if (sgn(coeff) == 0) continue;
    for (int t = p - 1; t <= n; ++t) {
      const GradedMap* mu = component(H.mu, n - t + p - 1);
      if (!mu) continue;
      // ms = (m_{p-1}, ..., m_1) in the order the D outputs enter mu.
      for (const auto& ms : compositions(t, p - 1, B)) {
        std::vector<const GradedMap*> Ds;
        for (int m : ms) Ds.push_back(component(H.D, m));
        if (std::find(Ds.begin(), Ds.end(), nullptr) != Ds.end()) continue;
        std::vector<int> blocks = ms;
        blocks.push_back(n - t);
        for (const auto& sigma : shuffles(blocks)) {
          if (!leaders_increase(sigma, ms)) continue;
          std::vector<Vector> a;
          int offset = 0;
          for (std::size_t k = 0; k < ms.size(); ++k) {
            a.push_back(Ds[k]->on_basis(slice(x, sigma, offset, ms[k])));
            offset += ms[k];
          }
          for (const auto& u : units(l, slice(x, sigma, t, n - t))) a.push_back(u);
          axpy(out, coeff * koszul_sign(sigma, degs), mu->evaluate(a));
        }
      }
    }
  }
  for (int j = 1; j <= n; ++j) {
    const GradedMap* mu = component(H.mu, j);
    const GradedMap* D = component(H.D, n - j + 1);
    if (mu && D) axpy(out, -1, insert_one(l, *D, *mu, x));
  }
  return out;
}

}  // namespace

int HomotopyDiffLie::bound() const { return static_cast<int>(std::max(mu.size(), D.size())); }

void HomotopyDiffLie::validate() const {
  auto check = [this](const std::vector<GradedMap>& family, int degree) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      const GradedMap& f = family[i];
      if (f.arity() != static_cast<int>(i) + 1) throw DimensionMismatch("homotopy family arity");
      if (f.kind() != Symmetry::Symmetric) throw DimensionMismatch("homotopy family must be symmetric");
      if (f.space().basis_degrees() != space.basis_degrees()) throw DimensionMismatch("homotopy family space");
      if (f.degree() != degree) throw std::invalid_argument("homotopy family degree");
    }
  };
  check(mu, 1);
  check(D, 0);
}

HomotopyDiffLie empty_homotopy(const GradedVectorSpace& space, const Scalar& weight, int bound) {
  HomotopyDiffLie H{space, {}, {}, weight};
  for (int i = 1; i <= bound; ++i) {
    H.mu.push_back(zero_map(space, i, 1));
    H.D.push_back(zero_map(space, i, 0));
  }
  return H;
}

Vector linfty_residual(const HomotopyDiffLie& H, const std::vector<Vector>& args) {
  H.validate();
  return multilinear(H.space, [&H](const std::vector<int>& x) { return linfty_on_basis(H, x); }, args);
}

Vector homotopy_diff_residual(const HomotopyDiffLie& H, const std::vector<Vector>& args) {
  H.validate();
  return multilinear(H.space, [&H](const std::vector<int>& x) { return diff_on_basis(H, x); }, args);
}

GradedMap multi_insert(const GradedMap& f, const std::vector<const GradedMap*>& Ds) {
  const GradedVectorSpace& l = f.space();
  const int r = static_cast<int>(Ds.size());
  if (r > f.arity()) throw ArityMismatch("multi_insert: more operators than inputs");
  std::vector<int> blocks;
  int t = 0;
  for (const GradedMap* D : Ds) {
    if (D->degree() != 0) throw std::invalid_argument("multi_insert expects degree-0 operators");
    blocks.push_back(D->arity());
    t += D->arity();
  }
  const int rest = f.arity() - r;
  blocks.push_back(rest);
  GradedMap out(l, t + rest, f.degree(), Symmetry::Symmetric);
  const auto sh = shuffles(blocks);
  for (const auto& x : sorted_tuples(l, t + rest, Symmetry::Symmetric)) {
    const DegreeVector degs = degrees_of(l, x);
    Vector acc(static_cast<std::size_t>(l.dim()), Scalar(0));
    for (const auto& sigma : sh) {
      std::vector<Vector> a;
      int offset = 0;
      for (int k = 0; k < r; ++k) {
        a.push_back(Ds[static_cast<std::size_t>(k)]->on_basis(slice(x, sigma, offset, blocks[static_cast<std::size_t>(k)])));
        offset += blocks[static_cast<std::size_t>(k)];
      }
      for (const auto& u : units(l, slice(x, sigma, t, rest))) a.push_back(u);
      axpy(acc, koszul_sign(sigma, degs), f.evaluate(a));
    }
    if (!is_zero(acc)) out.set(x, acc);
  }
  return out;
}

GradedMap linfty_map(const HomotopyDiffLie& H, int n) {
  H.validate();
  GradedMap out = zero_map(H.space, n, 2);
  for (int a = 1; a <= n; ++a) {
    const GradedMap* outer = component(H.mu, a);
    const GradedMap* inner = component(H.mu, n - a + 1);
    if (outer && inner) out = out + graded_circ_bar(*outer, *inner);
  }
  return out;
}

GradedMap homotopy_diff_map(const HomotopyDiffLie& H, int n) {
  H.validate();
  const int B = H.bound();
  GradedMap out = zero_map(H.space, n, 1);
  // p = 2: the bracket [mu, D].
  for (int a = 1; a <= n; ++a) {
    const GradedMap* mu = component(H.mu, a);
    const GradedMap* D = component(H.D, n - a + 1);
    if (mu && D) out = out + graded_nr_bracket(*mu, *D);
  }
  // p >= 3: 1/(p-1)! lambda^{p-2} over ordered tuples of D arities.
  for (int p = 3; p - 1 <= n; ++p) {
    const Scalar coeff = power(H.weight, p - 2) / factorial(p - 1);
    if (sgn(coeff) == 0) continue;
    for (int t = p - 1; t <= n; ++t) {
      const GradedMap* mu = component(H.mu, n - t + p - 1);
      if (!mu) continue;
      for (const auto& ms : compositions(t, p - 1, B)) {
        std::vector<const GradedMap*> Ds;
        for (int m : ms) Ds.push_back(component(H.D, m));
        if (std::find(Ds.begin(), Ds.end(), nullptr) != Ds.end()) continue;
        out = out + multi_insert(*mu, Ds).scaled(coeff);
      }
    }
  }
  return out;
}

HomotopyMcReport homotopy_mc_check(const HomotopyDiffLie& H, int max_n) {
  H.validate();
  HomotopyMcReport rep;
  rep.maurer_cartan = true;
  rep.residual_families_zero = true;
  rep.forms_agree = true;
  for (int n = 1; n <= max_n; ++n) {
    const GradedMap L = linfty_map(H, n);
    const GradedMap E = homotopy_diff_map(H, n);
    if (!L.is_zero() || !E.is_zero()) rep.maurer_cartan = false;
    bool arity_zero = true;
    for (const auto& x : sorted_tuples(H.space, n, Symmetry::Symmetric)) {
      const Vector r1 = linfty_on_basis(H, x);
      const Vector r2 = diff_on_basis(H, x);
      if (!is_zero(r1) || !is_zero(r2)) arity_zero = false;
      if (r1 != L.on_basis(x) || r2 != E.on_basis(x)) rep.forms_agree = false;
    }
    if (!arity_zero) {
      rep.residual_families_zero = false;
      if (rep.failing_arity == 0) rep.failing_arity = n;
    }
  }
  return rep;
}

HomotopyDiffLie two_term_homotopy(const DiffLieAlgebra& A, const DiffRepresentation& V, const Vector& v0) {
  const int a = A.dim();
  const int m = V.space_dim;
  if (static_cast<int>(v0.size()) != m) throw DimensionMismatch("v0 length");
  const GradedVectorSpace g({{0, a}, {1, m}});
  const auto N = static_cast<std::size_t>(a + m);
  auto embed_V = [&](const Vector& v) {
    Vector out(N, Scalar(0));
    for (int k = 0; k < m; ++k) out[static_cast<std::size_t>(a + k)] = v[static_cast<std::size_t>(k)];
    return out;
  };
  GradedMap bracket(g, 2, 0, Symmetry::Exterior);
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j) {
      Vector v = A.algebra.bracket.on_basis({i, j});
      v.resize(N, Scalar(0));
      bracket.set({i, j}, v);
    }
  for (int i = 0; i < a; ++i)
    for (int k = 0; k < m; ++k) bracket.set({i, a + k}, embed_V(V.rho[static_cast<std::size_t>(i)].column(static_cast<std::size_t>(k))));
  GradedMap differential(g, 1, 1, Symmetry::Exterior);
  GradedMap op(g, 1, 0, Symmetry::Exterior);
  for (int i = 0; i < a; ++i) {
    differential.set({i}, embed_V(V.rho[static_cast<std::size_t>(i)] * v0));
    Vector v = A.d.column(static_cast<std::size_t>(i));
    v.resize(N, Scalar(0));
    op.set({i}, v);
  }
  for (int k = 0; k < m; ++k) op.set({a + k}, embed_V(V.dV.column(static_cast<std::size_t>(k))));
  const GradedVectorSpace l = g.suspension();
  HomotopyDiffLie H{l, {suspend_alt_to_sym(differential), suspend_alt_to_sym(bracket)},
                    {suspend_alt_to_sym(op), zero_map(l, 2, 0)}, A.weight};
  H.validate();
  return H;
}

HomotopyDiffLie concentrated_homotopy(const DiffLieAlgebra& A) {
  const GradedVectorSpace l = GradedVectorSpace::concentrated(-1, A.dim());
  HomotopyDiffLie H{l,
                    {zero_map(l, 1, 1), suspend_alt_to_sym(graded_from_alt(A.algebra.bracket))},
                    {suspend_alt_to_sym(graded_from_alt(AltMap::from_matrix(A.d))), zero_map(l, 2, 0)},
                    A.weight};
  H.validate();
  return H;
}

}  // namespace difflie
