#include "difflie/random.hpp"

#include <stdexcept>

namespace difflie {

namespace {

Matrix diag(const std::vector<Scalar>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool is_endomorphism(const LieAlgebra& L, const Matrix& phi) {
  const auto n = static_cast<std::size_t>(L.dim);
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j) {
      const Vector a = phi * L.br_basis(i, j);
      const Vector b = L.br(phi.column(static_cast<std::size_t>(i)), phi.column(static_cast<std::size_t>(j)));
      if (a != b) return false;
    }
  return phi.rows() == n && phi.cols() == n;
}

bool is_abelian(const LieAlgebra& L) { return L.bracket.is_zero(); }

}  // namespace

LieAlgebra abelian_algebra(int n) { return LieAlgebra(n); }

LieAlgebra aff1_algebra() {
  LieAlgebra L(2);
  L.set_bracket(0, 1, {0, 1});
  return L;
}

LieAlgebra heisenberg_algebra() {
  LieAlgebra L(3);
  L.set_bracket(0, 1, {0, 0, 1});
  return L;
}

LieAlgebra sl2_algebra() {
  LieAlgebra L(3);
  L.set_bracket(0, 1, {0, 2, 0});
  L.set_bracket(0, 2, {0, 0, -2});
  L.set_bracket(1, 2, {1, 0, 0});
  return L;
}

LieAlgebra filiform4_algebra() {
  LieAlgebra L(4);
  L.set_bracket(0, 1, {0, 0, 1, 0});
  L.set_bracket(0, 2, {0, 0, 0, 1});
  return L;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra L(a.dim + b.dim);
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j) {
      Vector v(static_cast<std::size_t>(L.dim), Scalar(0));
      if (j < a.dim) {
        const Vector x = a.br_basis(i, j);
        for (int k = 0; k < a.dim; ++k) v[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k)];
      } else if (i >= a.dim) {
        const Vector x = b.br_basis(i - a.dim, j - a.dim);
        for (int k = 0; k < b.dim; ++k) v[static_cast<std::size_t>(a.dim + k)] = x[static_cast<std::size_t>(k)];
      }
      L.set_bracket(i, j, v);
    }
  return L;
}

Matrix inverse_matrix(const Matrix& P) {
  const std::size_t n = P.rows();
  Matrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    auto x = solve(P, unit_vector(n, c));
    if (!x || rank(P) != n) throw DimensionMismatch("matrix is not invertible");
    inv.set_column(c, *x);
  }
  return inv;
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P) {
  const Matrix Q = inverse_matrix(P);
  LieAlgebra out(L.dim);
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j)
      out.set_bracket(i, j, Q * L.br(P.column(static_cast<std::size_t>(i)), P.column(static_cast<std::size_t>(j))));
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  return Matrix::block(a, Matrix(a.rows(), b.cols()), Matrix(b.rows(), a.cols()), b);
}

Matrix nilpotent_exp(const Matrix& A) {
  const std::size_t n = A.rows();
  Matrix out = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = (term * A).scaled(Scalar(1, static_cast<unsigned long>(k)));
    out = out + term;
  }
  if (!(term * A).is_zero()) throw InvalidStructure("exp of a non-nilpotent matrix");
  return out;
}

std::vector<Matrix> derivation_basis(const LieAlgebra& L) {
  const int n = L.dim;
  const auto N = static_cast<std::size_t>(n);
  auto var = [n](int r, int s) { return static_cast<std::size_t>(r * n + s); };
  std::vector<Vector> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int c = 0; c < n; ++c) {
        Vector row(N * N, Scalar(0));
        const Vector b = L.br_basis(i, j);
        for (int s = 0; s < n; ++s) row[var(c, s)] += b[static_cast<std::size_t>(s)];
        for (int r = 0; r < n; ++r) {
          row[var(r, i)] -= L.br_basis(r, j)[static_cast<std::size_t>(c)];
          row[var(r, j)] -= L.br_basis(i, r)[static_cast<std::size_t>(c)];
        }
        rows.push_back(row);
      }
  Matrix eq(rows.size(), N * N);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < N * N; ++c) eq(r, c) = rows[r][c];
  std::vector<Matrix> out;
  for (const auto& k : kernel_basis(eq)) out.emplace_back(N, N, k);
  return out;
}

std::vector<NamedAlgebra> lie_catalogue() {
  std::vector<NamedAlgebra> c;
  c.push_back({"abelian2", abelian_algebra(2), {}});
  c.push_back({"abelian3", abelian_algebra(3), {}});
  c.push_back({"aff1", aff1_algebra(), {diag({1, 0})}});
  c.push_back({"heisenberg", heisenberg_algebra(), {diag({1, 2, 2}), diag({2, 1, 2}), diag({0, 1, 0})}});
  c.push_back({"sl2", sl2_algebra(), {Matrix::from_rows({{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}})}});
  c.push_back({"filiform4", filiform4_algebra(), {diag({1, 2, 2, 2}), diag({2, 1, 2, 4}), diag({0, 1, 0, 0})}});
  const Matrix one = Matrix::identity(1);
  const Matrix nil = Matrix(1, 1);
  c.push_back({"aff1+k", direct_sum(aff1_algebra(), abelian_algebra(1)),
               {block_diagonal(Matrix::identity(2), nil), block_diagonal(Matrix(2, 2), one),
                block_diagonal(diag({1, 0}), one)}});
  c.push_back({"aff1+aff1", direct_sum(aff1_algebra(), aff1_algebra()),
               {block_diagonal(Matrix::identity(2), Matrix(2, 2)), block_diagonal(Matrix(2, 2), Matrix::identity(2)),
                Matrix::block(Matrix(2, 2), Matrix::identity(2), Matrix::identity(2), Matrix(2, 2))}});
  c.push_back({"heisenberg+k", direct_sum(heisenberg_algebra(), abelian_algebra(1)),
               {block_diagonal(Matrix::identity(3), nil), block_diagonal(Matrix(3, 3), one)}});
  for (const auto& e : c)
    for (const auto& phi : e.endomorphisms)
      if (!is_endomorphism(e.algebra, phi)) throw std::logic_error("catalogue endomorphism check failed: " + e.name);
  return c;
}

int FixtureGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Scalar FixtureGenerator::small_scalar() { return uniform(-2, 2); }

Scalar FixtureGenerator::weight() {
  static const Scalar choices[] = {0, 1, -1, 2, Scalar(1, 2)};
  return choices[uniform(0, 4)];
}

Vector FixtureGenerator::random_vector(int n) {
  Vector v(static_cast<std::size_t>(n));
  for (auto& x : v) x = small_scalar();
  return v;
}

Matrix FixtureGenerator::random_matrix(int rows, int cols) {
  Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = small_scalar();
  return m;
}

Matrix FixtureGenerator::random_invertible(int n) {
  // Unipotent upper times unipotent lower keeps entries small and the determinant 1.
  Matrix U = Matrix::identity(static_cast<std::size_t>(n));
  Matrix L = Matrix::identity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      U(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = uniform(-1, 1);
      L(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = uniform(-1, 1);
    }
  return U * L;
}

AltMap FixtureGenerator::random_map(int arity, int src_dim, int tgt_dim) {
  AltMap f(arity, src_dim, tgt_dim);
  for (std::size_t t = 0; t < f.num_tuples(); ++t)
    for (int c = 0; c < tgt_dim; ++c)
      if (uniform(0, 1) == 1) f.coeff(t, c) = small_scalar();
  return f;
}

NamedAlgebra FixtureGenerator::lie_algebra() {
  static const std::vector<NamedAlgebra> catalogue = lie_catalogue();
  NamedAlgebra g = catalogue[static_cast<std::size_t>(uniform(0, static_cast<int>(catalogue.size()) - 1))];
  if (uniform(0, 1) == 1) {
    const Matrix P = random_invertible(g.algebra.dim);
    const Matrix Q = inverse_matrix(P);
    g.algebra = change_basis(g.algebra, P);
    for (auto& phi : g.endomorphisms) phi = Q * phi * P;
    g.name += "/rebased";
  }
  return g;
}

Matrix FixtureGenerator::random_endomorphism(const NamedAlgebra& g) {
  const int n = g.algebra.dim;
  const auto N = static_cast<std::size_t>(n);
  if (is_abelian(g.algebra)) return random_matrix(n, n);
  std::vector<Matrix> pool = {Matrix(N, N), Matrix::identity(N)};
  pool.insert(pool.end(), g.endomorphisms.begin(), g.endomorphisms.end());
  std::vector<Vector> candidates = {random_vector(n)};
  for (std::size_t i = 0; i < N; ++i) candidates.push_back(scale(small_scalar(), unit_vector(N, i)));
  for (const auto& x : candidates) {
    try {
      pool.push_back(nilpotent_exp(g.algebra.ad_vector(x)));
    } catch (const InvalidStructure&) {
    }
  }
  Matrix phi = pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))];
  if (uniform(0, 1) == 1) phi = pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))] * phi;
  if (!is_endomorphism(g.algebra, phi)) throw std::logic_error("generated map is not a Lie endomorphism");
  return phi;
}

Matrix FixtureGenerator::weighted_operator(const NamedAlgebra& g, const Scalar& lambda) {
  const auto N = static_cast<std::size_t>(g.algebra.dim);
  Matrix d(N, N);
  if (sgn(lambda) == 0) {
    for (const auto& D : derivation_basis(g.algebra)) d = d + D.scaled(small_scalar());
  } else {
    d = (random_endomorphism(g) - Matrix::identity(N)).scaled(1 / lambda);
  }
  if (!all_zero(weighted_derivation_residual(DiffLieAlgebra{g.algebra, d, lambda})))
    throw std::logic_error("generated operator fails the weighted Leibniz rule");
  return d;
}

DiffLieAlgebra FixtureGenerator::diff_lie(const Scalar& lambda) {
  const NamedAlgebra g = lie_algebra();
  return DiffLieAlgebra{g.algebra, weighted_operator(g, lambda), lambda};
}

DiffRepresentation FixtureGenerator::representation(const DiffLieAlgebra& A) {
  DiffRepresentation rep;
  switch (uniform(0, 3)) {
    case 0: rep = adjoint_rep(A); break;
    case 1: {
      const int m = uniform(1, 2);
      rep = trivial_rep(A, m, random_matrix(m, m));
      break;
    }
    case 2: rep = rho_lambda(adjoint_rep(A), A); break;
    default: {
      const DiffRepresentation a = adjoint_rep(A);
      const DiffRepresentation t = trivial_rep(A, 1, random_matrix(1, 1));
      rep.space_dim = a.space_dim + 1;
      for (std::size_t i = 0; i < a.rho.size(); ++i) rep.rho.push_back(block_diagonal(a.rho[i], t.rho[i]));
      rep.dV = block_diagonal(a.dV, t.dV);
    }
  }
  if (!is_diff_rep(A, rep)) throw std::logic_error("generated representation is invalid");
  return rep;
}

RelativeFixture FixtureGenerator::relative(const Scalar& lambda) {
  const NamedAlgebra g = lie_algebra();
  const int n = g.algebra.dim;
  const auto N = static_cast<std::size_t>(n);
  RelativeFixture fx;
  fx.lambda = lambda;
  fx.triple.g = g.algebra;
  int kind = uniform(0, 2);
  if (kind == 2 && sgn(lambda) == 0) kind = 1;
  if (kind == 0) {
    fx.name = "adjoint/" + g.name;
    fx.triple.h = g.algebra;
    for (int i = 0; i < n; ++i) fx.triple.rho.push_back(g.algebra.ad(i));
    fx.D = weighted_operator(g, lambda);
  } else if (kind == 1) {
    fx.name = "abelian-coboundary/" + g.name;
    fx.triple.h = abelian_algebra(n);
    const Vector v0 = random_vector(n);
    fx.D = Matrix(N, N);
    for (int i = 0; i < n; ++i) {
      fx.triple.rho.push_back(g.algebra.ad(i));
      fx.D.set_column(static_cast<std::size_t>(i), g.algebra.ad(i) * v0);
    }
  } else {
    fx.name = "trivial-action/" + g.name;
    fx.triple.h = g.algebra;
    fx.triple.rho.assign(N, Matrix(N, N));
    fx.D = random_endomorphism(g).scaled(1 / lambda);
  }
  if (!lieact_residuals(fx.triple).ok() || !all_zero(relative_diff_residual(fx.triple, fx.D, lambda)))
    throw std::logic_error("generated relative operator is invalid");
  return fx;
}

}  // namespace difflie
