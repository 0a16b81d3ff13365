#include "difflie/extensions.hpp"

#include "difflie/random.hpp"

namespace difflie {

namespace {

Matrix hstack(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r) m(a.rows() + r, c) = b(r, c);
  }
  return m;
}

Matrix rows_range(const Matrix& a, std::size_t from, std::size_t count) {
  Matrix m(count, a.cols());
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(from + r, c);
  return m;
}

// Retraction t with t i = Id and t s = 0.
Matrix retraction(const AbelianExtension& E) {
  const Matrix inv = inverse_matrix(hstack(E.s, E.i));
  return rows_range(inv, E.s.cols(), E.i.cols());
}

}  // namespace

ExtensionReport check_extension(const AbelianExtension& E) {
  ExtensionReport r;
  const int n = E.base.dim();
  const int m = E.v_dim;
  const int N = E.total.dim();
  const auto un = static_cast<std::size_t>(n);
  const auto um = static_cast<std::size_t>(m);
  const auto uN = static_cast<std::size_t>(N);
  if (E.i.rows() != uN || E.i.cols() != um || E.p.rows() != un || E.p.cols() != uN || E.s.rows() != uN ||
      E.s.cols() != un)
    return r;
  r.total_valid = is_diff_lie(E.total);
  r.p_i_zero = (E.p * E.i).is_zero();
  r.p_s_identity = E.p * E.s == Matrix::identity(un);
  r.exact = N == n + m && rank(E.i) == um && rank(E.p) == un;
  r.p_homomorphism = true;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      const Vector lhs = E.p * E.total.algebra.br_basis(a, b);
      const Vector rhs = E.base.algebra.br(E.p.column(static_cast<std::size_t>(a)), E.p.column(static_cast<std::size_t>(b)));
      r.p_homomorphism = r.p_homomorphism && lhs == rhs;
    }
  r.v_abelian = true;
  for (std::size_t a = 0; a < um; ++a)
    for (std::size_t b = a + 1; b < um; ++b)
      r.v_abelian = r.v_abelian && is_zero(E.total.algebra.br(E.i.column(a), E.i.column(b)));
  r.d_preserves_v = (E.p * E.total.d * E.i).is_zero();
  r.p_d = E.p * E.total.d == E.base.d * E.p;
  return r;
}

ExtensionCocycle extract_cocycle(const AbelianExtension& E) {
  if (!check_extension(E).ok()) throw InvalidExtension("extension invariants fail");
  const int n = E.base.dim();
  const int m = E.v_dim;
  const Matrix t = retraction(E);
  ExtensionCocycle c;
  c.rep.space_dim = m;
  for (int x = 0; x < n; ++x) {
    Matrix r(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    const Vector sx = E.s.column(static_cast<std::size_t>(x));
    for (int v = 0; v < m; ++v)
      r.set_column(static_cast<std::size_t>(v), t * E.total.algebra.br(sx, E.i.column(static_cast<std::size_t>(v))));
    c.rep.rho.push_back(r);
  }
  c.rep.dV = t * E.total.d * E.i;
  c.psi = AltMap(2, n, m);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Vector w = E.total.algebra.br(E.s.column(static_cast<std::size_t>(x)), E.s.column(static_cast<std::size_t>(y)));
      axpy(w, -1, E.s * E.base.algebra.br_basis(x, y));
      c.psi.set({x, y}, t * w);
    }
  c.chi = AltMap::from_matrix(t * (E.total.d * E.s - E.s * E.base.d));
  return c;
}

AbelianExtension extension_from_data(const DiffLieAlgebra& g, const DiffRepresentation& rep, const AltMap& psi,
                                     const AltMap& chi) {
  const int n = g.dim();
  const int m = rep.space_dim;
  const auto un = static_cast<std::size_t>(n);
  const auto um = static_cast<std::size_t>(m);
  AbelianExtension E;
  E.base = g;
  E.v_dim = m;
  LieAlgebra total(n + m);
  for (int a = 0; a < n + m; ++a)
    for (int b = a + 1; b < n + m; ++b) {
      Vector v(un + um, Scalar(0));
      if (b < n) {
        const Vector br = g.algebra.br_basis(a, b);
        const Vector ps = psi.on_basis({a, b});
        for (std::size_t k = 0; k < un; ++k) v[k] = br[k];
        for (std::size_t k = 0; k < um; ++k) v[un + k] = ps[k];
      } else if (a < n) {
        const Vector act = rep.rho[static_cast<std::size_t>(a)].column(static_cast<std::size_t>(b - n));
        for (std::size_t k = 0; k < um; ++k) v[un + k] = act[k];
      }
      total.set_bracket(a, b, v);
    }
  const Matrix chi_m = chi.to_matrix();
  const Matrix d = Matrix::block(g.d, Matrix(un, um), chi_m, rep.dV);
  E.total = DiffLieAlgebra{total, d, g.weight};
  E.i = vstack(Matrix(un, um), Matrix::identity(um));
  E.p = hstack(Matrix::identity(un), Matrix(un, um));
  E.s = vstack(Matrix::identity(un), Matrix(um, un));
  return E;
}

AbelianExtension build_extension(const DiffLieAlgebra& g, const DiffRepresentation& rep, const AltMap& psi,
                                 const AltMap& chi) {
  CochainComplexSpec spec{g, rep, 3, Flavor::DiffLie};
  const Vector r = cocycle_residual(spec, 2, CocyclePair{psi, chi});
  if (!is_zero(r)) throw NotCocycle(r);
  return extension_from_data(g, rep, psi, chi);
}

AbelianExtension normalize(const AbelianExtension& E) {
  const Matrix B = hstack(E.s, E.i);
  const Matrix Binv = inverse_matrix(B);
  AbelianExtension out = E;
  out.total.algebra = change_basis(E.total.algebra, B);
  out.total.d = Binv * E.total.d * B;
  const auto un = static_cast<std::size_t>(E.base.dim());
  const auto um = static_cast<std::size_t>(E.v_dim);
  out.i = vstack(Matrix(un, um), Matrix::identity(um));
  out.p = E.p * B;
  out.s = vstack(Matrix::identity(un), Matrix(um, un));
  return out;
}

AbelianExtension with_section_shift(const AbelianExtension& E, const Matrix& phi) {
  AbelianExtension out = E;
  out.s = E.s + E.i * phi;
  return out;
}

bool equivalence_witness(const AbelianExtension& E1, const AbelianExtension& E2, const Matrix& phi) {
  if (E1.base.dim() != E2.base.dim() || E1.v_dim != E2.v_dim) return false;
  const AbelianExtension A = normalize(E1);
  const AbelianExtension B = normalize(E2);
  const auto un = static_cast<std::size_t>(A.base.dim());
  const auto um = static_cast<std::size_t>(A.v_dim);
  if (phi.rows() != um || phi.cols() != un) return false;
  const Matrix zeta = Matrix::block(Matrix::identity(un), Matrix(un, um), phi, Matrix::identity(um));
  if (!(zeta * A.i == B.i) || !(B.p * zeta == A.p)) return false;
  if (!(zeta * A.total.d == B.total.d * zeta)) return false;
  const int N = A.total.dim();
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      const Vector lhs = zeta * A.total.algebra.br_basis(a, b);
      const Vector rhs = B.total.algebra.br(zeta.column(static_cast<std::size_t>(a)), zeta.column(static_cast<std::size_t>(b)));
      if (lhs != rhs) return false;
    }
  return true;
}

std::optional<Matrix> find_equivalence(const AbelianExtension& E1, const AbelianExtension& E2) {
  if (E1.base.dim() != E2.base.dim() || E1.v_dim != E2.v_dim) return std::nullopt;
  const ExtensionCocycle c1 = extract_cocycle(E1);
  const ExtensionCocycle c2 = extract_cocycle(E2);
  if (c1.rep.rho != c2.rep.rho || !(c1.rep.dV == c2.rep.dV)) return std::nullopt;
  const CochainComplexSpec spec = tilde_spec(E1.base, c1.rep);
  const Vector target = pack_pair(CocyclePair{c1.psi - c2.psi, c1.chi - c2.chi});
  const auto x = coboundary_preimage(spec, 2, target);
  if (!x) return std::nullopt;
  const Matrix phi = AltMap::from_flat(1, E1.base.dim(), E1.v_dim, *x).to_matrix();
  if (!equivalence_witness(E1, E2, phi)) return std::nullopt;
  return phi;
}

CochainComplexSpec tilde_spec(const DiffLieAlgebra& g, const DiffRepresentation& rep) {
  return CochainComplexSpec{g, rep, 3, Flavor::DiffLieTilde};
}

std::size_t classify(const DiffLieAlgebra& g, const DiffRepresentation& rep) { return cohomology_dims(tilde_spec(g, rep))[2]; }

}  // namespace difflie
