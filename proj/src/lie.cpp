#include "difflie/lie.hpp"

namespace difflie {

bool all_zero(const Residuals& r) {
  for (const auto& v : r)
    if (!is_zero(v)) return false;
  return true;
}

Vector flatten(const Matrix& m) { return m.entries(); }

LieAlgebra::LieAlgebra(int n, AltMap b) : dim(n), bracket(std::move(b)) {
  if (bracket.arity() != 2 || bracket.src_dim() != n || bracket.tgt_dim() != n)
    throw DimensionMismatch("bracket must be an arity-2 map on the algebra");
}

void LieAlgebra::set_bracket(int i, int j, const Vector& value) {
  if (i == j) throw std::invalid_argument("[x_i, x_i] is fixed to zero");
  if (i < j)
    bracket.set({i, j}, value);
  else
    bracket.set({j, i}, scale(-1, value));
}

Vector LieAlgebra::br(const Vector& x, const Vector& y) const { return bracket.evaluate({x, y}); }

Matrix LieAlgebra::ad(int i) const {
  Matrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j) m.set_column(static_cast<std::size_t>(j), br_basis(i, j));
  return m;
}

Matrix LieAlgebra::ad_vector(const Vector& x) const {
  Matrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i)
    if (sgn(x[static_cast<std::size_t>(i)]) != 0) m = m + ad(i).scaled(x[static_cast<std::size_t>(i)]);
  return m;
}

namespace {

Matrix combine(const std::vector<Matrix>& mats, const Vector& x, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (sgn(x[i]) != 0) m = m + mats[i].scaled(x[i]);
  return m;
}

}  // namespace

Matrix DiffRepresentation::act(const Vector& x) const {
  return combine(rho, x, static_cast<std::size_t>(space_dim));
}

Matrix LieActTriple::act(const Vector& x) const { return combine(rho, x, static_cast<std::size_t>(h.dim)); }

Residuals jacobi_residual(const LieAlgebra& L) {
  Residuals out;
  const auto n = static_cast<std::size_t>(L.dim);
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j)
      for (int k = j + 1; k < L.dim; ++k) {
        Vector xi = unit_vector(n, static_cast<std::size_t>(i));
        Vector xj = unit_vector(n, static_cast<std::size_t>(j));
        Vector xk = unit_vector(n, static_cast<std::size_t>(k));
        Vector r = L.br(L.br(xi, xj), xk);
        axpy(r, 1, L.br(L.br(xj, xk), xi));
        axpy(r, 1, L.br(L.br(xk, xi), xj));
        out.push_back(r);
      }
  return out;
}

Residuals weighted_derivation_residual(const DiffLieAlgebra& A) {
  Residuals out;
  const auto n = static_cast<std::size_t>(A.dim());
  for (int i = 0; i < A.dim(); ++i)
    for (int j = i + 1; j < A.dim(); ++j) {
      Vector xi = unit_vector(n, static_cast<std::size_t>(i));
      Vector xj = unit_vector(n, static_cast<std::size_t>(j));
      Vector dxi = A.d * xi;
      Vector dxj = A.d * xj;
      Vector r = A.d * A.algebra.br(xi, xj);
      axpy(r, -1, A.algebra.br(dxi, xj));
      axpy(r, -1, A.algebra.br(xi, dxj));
      axpy(r, -A.weight, A.algebra.br(dxi, dxj));
      out.push_back(r);
    }
  return out;
}

Residuals rep_homomorphism_residual(const LieAlgebra& g, const DiffRepresentation& rep) {
  Residuals out;
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      const Matrix& a = rep.rho[static_cast<std::size_t>(i)];
      const Matrix& b = rep.rho[static_cast<std::size_t>(j)];
      out.push_back(flatten(rep.act(g.br_basis(i, j)) - (a * b - b * a)));
    }
  return out;
}

Residuals rep_compatibility_residual(const DiffLieAlgebra& A, const DiffRepresentation& rep) {
  Residuals out;
  const auto n = static_cast<std::size_t>(A.dim());
  for (int i = 0; i < A.dim(); ++i) {
    const Matrix& r = rep.rho[static_cast<std::size_t>(i)];
    Matrix rd = rep.act(A.d * unit_vector(n, static_cast<std::size_t>(i)));
    Matrix res = rep.dV * r - rd - r * rep.dV - (rd * rep.dV).scaled(A.weight);
    out.push_back(flatten(res));
  }
  return out;
}

Residuals representation_residual(const DiffLieAlgebra& A, const DiffRepresentation& rep) {
  Residuals out = rep_homomorphism_residual(A.algebra, rep);
  for (auto& v : rep_compatibility_residual(A, rep)) out.push_back(std::move(v));
  return out;
}

bool is_lie(const LieAlgebra& L) { return all_zero(jacobi_residual(L)); }

bool is_diff_lie(const DiffLieAlgebra& A) { return is_lie(A.algebra) && all_zero(weighted_derivation_residual(A)); }

bool is_diff_rep(const DiffLieAlgebra& A, const DiffRepresentation& rep) {
  return all_zero(representation_residual(A, rep));
}

std::optional<Validated<DiffLieAlgebra>> validate(const DiffLieAlgebra& A) {
  if (!is_diff_lie(A)) return std::nullopt;
  return Validated<DiffLieAlgebra>(A);
}

DiffLieAlgebra rescale_operator(const DiffLieAlgebra& A, const Scalar& kappa) {
  if (sgn(kappa) == 0) throw ZeroScale();
  DiffLieAlgebra out{A.algebra, A.d.scaled(kappa), A.weight / kappa};
  if (is_diff_lie(A) && !is_diff_lie(out)) throw InvalidStructure("rescaled operator failed revalidation");
  return out;
}

DiffRepresentation rho_lambda(const DiffRepresentation& rep, const DiffLieAlgebra& A) {
  DiffRepresentation out = rep;
  const auto n = static_cast<std::size_t>(A.dim());
  for (std::size_t i = 0; i < n; ++i) {
    Vector x = unit_vector(n, i);
    axpy(x, A.weight, A.d * unit_vector(n, i));
    out.rho[i] = rep.act(x);
  }
  return out;
}

DiffRepresentation adjoint_rep(const DiffLieAlgebra& A) {
  DiffRepresentation rep;
  rep.space_dim = A.dim();
  for (int i = 0; i < A.dim(); ++i) rep.rho.push_back(A.algebra.ad(i));
  rep.dV = A.d;
  return rep;
}

DiffRepresentation trivial_rep(const DiffLieAlgebra& A, int space_dim, const Matrix& dV) {
  DiffRepresentation rep;
  rep.space_dim = space_dim;
  rep.rho.assign(static_cast<std::size_t>(A.dim()),
                 Matrix(static_cast<std::size_t>(space_dim), static_cast<std::size_t>(space_dim)));
  rep.dV = dV;
  return rep;
}

DiffLieAlgebra trivial_extension(const DiffLieAlgebra& A, const DiffRepresentation& rep) {
  const int n = A.dim();
  const int m = rep.space_dim;
  LieAlgebra total(n + m);
  for (int i = 0; i < n + m; ++i)
    for (int j = i + 1; j < n + m; ++j) {
      Vector v(static_cast<std::size_t>(n + m), Scalar(0));
      if (j < n) {
        Vector b = A.algebra.br_basis(i, j);
        for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k)];
      } else if (i < n) {
        // {x_i, v_j} = rho(x_i) v_j
        const Matrix& r = rep.rho[static_cast<std::size_t>(i)];
        for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(n + k)] = r(static_cast<std::size_t>(k), static_cast<std::size_t>(j - n));
      }
      total.set_bracket(i, j, v);
    }
  Matrix d = Matrix::block(A.d, Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(m)),
                           Matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n)), rep.dV);
  return DiffLieAlgebra{total, d, A.weight};
}

LieActReport lieact_residuals(const LieActTriple& T) {
  LieActReport rep;
  for (int i = 0; i < T.g.dim; ++i)
    for (int j = i + 1; j < T.g.dim; ++j) {
      const Matrix& a = T.rho[static_cast<std::size_t>(i)];
      const Matrix& b = T.rho[static_cast<std::size_t>(j)];
      rep.homomorphism.push_back(flatten(T.act(T.g.br_basis(i, j)) - (a * b - b * a)));
    }
  const auto hn = static_cast<std::size_t>(T.h.dim);
  for (int i = 0; i < T.g.dim; ++i) {
    const Matrix& r = T.rho[static_cast<std::size_t>(i)];
    for (int u = 0; u < T.h.dim; ++u)
      for (int v = u + 1; v < T.h.dim; ++v) {
        Vector eu = unit_vector(hn, static_cast<std::size_t>(u));
        Vector ev = unit_vector(hn, static_cast<std::size_t>(v));
        Vector res = r * T.h.br(eu, ev);
        axpy(res, -1, T.h.br(r * eu, ev));
        axpy(res, -1, T.h.br(eu, r * ev));
        rep.derivation.push_back(res);
      }
  }
  return rep;
}

Residuals relative_diff_residual(const LieActTriple& T, const Matrix& D, const Scalar& lambda) {
  if (D.rows() != static_cast<std::size_t>(T.h.dim) || D.cols() != static_cast<std::size_t>(T.g.dim))
    throw DimensionMismatch("relative operator must map g to h");
  Residuals out;
  const auto n = static_cast<std::size_t>(T.g.dim);
  for (int i = 0; i < T.g.dim; ++i)
    for (int j = i + 1; j < T.g.dim; ++j) {
      Vector xi = unit_vector(n, static_cast<std::size_t>(i));
      Vector xj = unit_vector(n, static_cast<std::size_t>(j));
      Vector dxi = D * xi;
      Vector dxj = D * xj;
      Vector r = D * T.g.br(xi, xj);
      axpy(r, -1, T.act(xi) * dxj);
      axpy(r, 1, T.act(xj) * dxi);
      axpy(r, -lambda, T.h.br(dxi, dxj));
      out.push_back(r);
    }
  return out;
}

LieAlgebra semidirect_weighted(const LieActTriple& T, const Scalar& lambda) {
  const int n = T.g.dim;
  const int m = T.h.dim;
  LieAlgebra total(n + m);
  for (int i = 0; i < n + m; ++i)
    for (int j = i + 1; j < n + m; ++j) {
      Vector v(static_cast<std::size_t>(n + m), Scalar(0));
      if (j < n) {
        Vector b = T.g.br_basis(i, j);
        for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k)];
      } else if (i < n) {
        const Matrix& r = T.rho[static_cast<std::size_t>(i)];
        for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(n + k)] = r(static_cast<std::size_t>(k), static_cast<std::size_t>(j - n));
      } else {
        Vector b = T.h.br_basis(i - n, j - n);
        for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(n + k)] = lambda * b[static_cast<std::size_t>(k)];
      }
      total.set_bracket(i, j, v);
    }
  return total;
}

DiffLieAlgebra lift_tilde_D(const LieActTriple& T, const Matrix& D, const Scalar& lambda) {
  const auto n = static_cast<std::size_t>(T.g.dim);
  const auto m = static_cast<std::size_t>(T.h.dim);
  Matrix tilde = Matrix::block(Matrix(n, n), Matrix(n, m), D, -Matrix::identity(m));
  return DiffLieAlgebra{semidirect_weighted(T, lambda), tilde, lambda};
}

}  // namespace difflie
