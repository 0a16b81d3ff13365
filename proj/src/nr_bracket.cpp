#include "difflie/nr_bracket.hpp"

#include "difflie/combinatorics.hpp"

namespace difflie {

AltMap circ_bar(const AltMap& f, const AltMap& g) {
  if (f.src_dim() != f.tgt_dim() || g.src_dim() != g.tgt_dim() || f.src_dim() != g.src_dim())
    throw DimensionMismatch("circ_bar needs maps on one space");
  const int n = f.src_dim();
  const int a_f = f.arity();
  const int a_g = g.arity();
  if (a_f + a_g < 1) throw ArityMismatch("circ_bar of two arity-0 maps");
  // An arity-0 f has no slot to receive g.
  if (a_f == 0) return AltMap(a_g - 1, n, n);
  AltMap out(a_f + a_g - 1, n, n);
  if (out.num_tuples() == 0) return out;
  const auto sh = shuffles({a_g, a_f - 1});
  std::vector<int> gin(static_cast<std::size_t>(a_g));
  std::vector<int> fin(static_cast<std::size_t>(a_f));
  for (std::size_t t = 0; t < out.num_tuples(); ++t) {
    const auto x = out.tuple(t);
    Vector acc(static_cast<std::size_t>(n), Scalar(0));
    for (const auto& sigma : sh) {
      for (int k = 0; k < a_g; ++k) gin[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])];
      for (int k = 1; k < a_f; ++k)
        fin[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(sigma[static_cast<std::size_t>(a_g + k - 1)])];
      const Vector gv = g.on_basis(gin);
      const Scalar s = signature(sigma);
      for (int c = 0; c < n; ++c) {
        if (sgn(gv[static_cast<std::size_t>(c)]) == 0) continue;
        fin[0] = c;
        f.add_on_basis(acc, s * gv[static_cast<std::size_t>(c)], fin);
      }
    }
    for (int k = 0; k < n; ++k) out.coeff(t, k) = acc[static_cast<std::size_t>(k)];
  }
  return out;
}

AltMap nr_bracket(const AltMap& f, const AltMap& g) {
  const int p = nr_degree(f);
  const int q = nr_degree(g);
  AltMap fg = circ_bar(f, g);
  AltMap gf = circ_bar(g, f);
  return (p * q) % 2 == 0 ? fg - gf : fg + gf;
}

GradedMap graded_circ_bar(const GradedMap& f, const GradedMap& g) {
  if (f.kind() != Symmetry::Symmetric || g.kind() != Symmetry::Symmetric)
    throw std::invalid_argument("graded circ_bar expects symmetric maps");
  if (f.space().basis_degrees() != g.space().basis_degrees()) throw DimensionMismatch("graded circ_bar spaces differ");
  const auto& space = f.space();
  const int m = g.arity();
  const int n = f.arity();
  GradedMap out(space, m + n - 1, f.degree() + g.degree(), Symmetry::Symmetric);
  const auto sh = shuffles({m, n - 1});
  std::vector<int> gin(static_cast<std::size_t>(m));
  std::vector<int> fin(static_cast<std::size_t>(n));
  for (const auto& v : sorted_tuples(space, m + n - 1, Symmetry::Symmetric)) {
    DegreeVector degs;
    for (int i : v) degs.push_back(space.degree_of(i));
    Vector acc(static_cast<std::size_t>(space.dim()), Scalar(0));
    for (const auto& sigma : sh) {
      for (int k = 0; k < m; ++k) gin[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])];
      for (int k = 1; k < n; ++k)
        fin[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(sigma[static_cast<std::size_t>(m + k - 1)])];
      const Vector gv = g.on_basis(gin);
      if (difflie::is_zero(gv)) continue;
      const Scalar e = koszul_sign(sigma, degs);
      for (int c = 0; c < space.dim(); ++c) {
        if (sgn(gv[static_cast<std::size_t>(c)]) == 0) continue;
        fin[0] = c;
        f.add_on_basis(acc, e * gv[static_cast<std::size_t>(c)], fin);
      }
    }
    if (!difflie::is_zero(acc)) out.set(v, acc);
  }
  return out;
}

GradedMap graded_nr_bracket(const GradedMap& f, const GradedMap& g) {
  const int p = f.degree();
  const int q = g.degree();
  GradedMap fg = graded_circ_bar(f, g);
  GradedMap gf = graded_circ_bar(g, f);
  return ((p * q) % 2 == 0) ? fg - gf : fg + gf;
}

}  // namespace difflie
