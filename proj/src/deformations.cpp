#include "difflie/deformations.hpp"

namespace difflie {

namespace {

Vector apply_bilinear(const AltMap& mu, const Vector& x, const Vector& y) { return mu.evaluate({x, y}); }

// Series product (A B)_n = sum_{a+b=n} A_a B_b.
std::vector<Matrix> series_product(const std::vector<Matrix>& A, const std::vector<Matrix>& B, int order) {
  std::vector<Matrix> out;
  for (int n = 0; n <= order; ++n) {
    Matrix acc(A[0].rows(), B[0].cols());
    for (int a = 0; a <= n; ++a) acc = acc + A[static_cast<std::size_t>(a)] * B[static_cast<std::size_t>(n - a)];
    out.push_back(acc);
  }
  return out;
}

CochainComplexSpec adjoint_spec(const DiffLieAlgebra& A, Flavor flavor) {
  return CochainComplexSpec{A, adjoint_rep(A), 3, flavor};
}

}  // namespace

TruncatedDeformation constant_deformation(const DiffLieAlgebra& A, int order) {
  TruncatedDeformation D;
  D.base = A;
  D.order = order;
  const auto n = static_cast<std::size_t>(A.dim());
  for (int i = 0; i <= order; ++i) {
    D.mu.push_back(i == 0 ? A.algebra.bracket : AltMap(2, A.dim(), A.dim()));
    D.d.push_back(i == 0 ? A.d : Matrix(n, n));
  }
  return D;
}

FormalIso identity_iso(int dim, int order) {
  FormalIso P;
  P.order = order;
  const auto n = static_cast<std::size_t>(dim);
  for (int i = 0; i <= order; ++i) P.phi.push_back(i == 0 ? Matrix::identity(n) : Matrix(n, n));
  return P;
}

FormalIso inverse_iso(const FormalIso& Phi) {
  FormalIso Psi;
  Psi.order = Phi.order;
  Psi.phi.push_back(Matrix::identity(Phi.phi[0].rows()));
  for (int n = 1; n <= Phi.order; ++n) {
    Matrix acc(Phi.phi[0].rows(), Phi.phi[0].cols());
    for (int k = 1; k <= n; ++k) acc = acc - Phi.phi[static_cast<std::size_t>(k)] * Psi.phi[static_cast<std::size_t>(n - k)];
    Psi.phi.push_back(acc);
  }
  return Psi;
}

int DeformationResiduals::first_failure() const {
  for (std::size_t n = 0; n < jacobi.size(); ++n)
    if (!all_zero(jacobi[n]) || !all_zero(operator_[n])) return static_cast<int>(n);
  return -1;
}

DeformationResiduals deformation_residuals(const TruncatedDeformation& D) {
  DeformationResiduals R;
  const int dim = D.base.dim();
  const auto N = static_cast<std::size_t>(dim);
  const Scalar& lambda = D.base.weight;
  auto e = [N](int i) { return unit_vector(N, static_cast<std::size_t>(i)); };
  for (int n = 0; n <= D.order; ++n) {
    Residuals jac, op;
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) {
          Vector r(N, Scalar(0));
          for (int a = 0; a <= n; ++a) {
            const AltMap& ma = D.mu[static_cast<std::size_t>(a)];
            const AltMap& mb = D.mu[static_cast<std::size_t>(n - a)];
            axpy(r, 1, apply_bilinear(ma, e(i), mb.on_basis({j, k})));
            axpy(r, 1, apply_bilinear(ma, e(j), mb.on_basis({k, i})));
            axpy(r, 1, apply_bilinear(ma, e(k), mb.on_basis({i, j})));
          }
          jac.push_back(r);
        }
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        Vector r(N, Scalar(0));
        for (int k = 0; k <= n; ++k) {
          const AltMap& mk = D.mu[static_cast<std::size_t>(k)];
          const Matrix& dl = D.d[static_cast<std::size_t>(n - k)];
          axpy(r, 1, dl * mk.on_basis({i, j}));
          axpy(r, -1, apply_bilinear(mk, dl.column(static_cast<std::size_t>(i)), e(j)));
          axpy(r, -1, apply_bilinear(mk, e(i), dl.column(static_cast<std::size_t>(j))));
          for (int l = 0; l + k <= n; ++l) {
            const Matrix& dm = D.d[static_cast<std::size_t>(n - k - l)];
            axpy(r, -lambda,
                 apply_bilinear(mk, D.d[static_cast<std::size_t>(l)].column(static_cast<std::size_t>(i)),
                                dm.column(static_cast<std::size_t>(j))));
          }
        }
        op.push_back(r);
      }
    R.jacobi.push_back(jac);
    R.operator_.push_back(op);
  }
  return R;
}

Infinitesimal infinitesimal(const TruncatedDeformation& D) {
  if (D.order < 1) throw NotDeformation(1);
  const DeformationResiduals R = deformation_residuals(D);
  if (!R.zero_through(1)) throw NotDeformation(R.first_failure());
  Infinitesimal inf;
  inf.pair = CocyclePair{D.mu[1], AltMap::from_matrix(D.d[1])};
  const CochainComplexSpec spec = adjoint_spec(D.base, Flavor::DiffLie);
  inf.residual = cocycle_residual(spec, 2, inf.pair);
  const DiffRepresentation shifted = rho_lambda(spec.coefficients, D.base);
  inf.d1_residual = ce_apply(D.base.algebra, shifted.rho, inf.pair.g).flat();
  return inf;
}

TruncatedDeformation apply_formal_iso(const TruncatedDeformation& D, const FormalIso& Phi) {
  if (Phi.order != D.order) throw std::invalid_argument("iso and deformation orders differ");
  const FormalIso Psi = inverse_iso(Phi);
  const int dim = D.base.dim();
  const auto N = static_cast<std::size_t>(dim);
  TruncatedDeformation out = D;
  for (int n = 0; n <= D.order; ++n) {
    AltMap mu(2, dim, dim);
    for (std::size_t t = 0; t < mu.num_tuples(); ++t) {
      const auto x = mu.tuple(t);
      Vector acc(N, Scalar(0));
      for (int e = 0; e <= n; ++e)
        for (int a = 0; a + e <= n; ++a)
          for (int b = 0; b + a + e <= n; ++b) {
            const int c = n - e - a - b;
            const Vector v = apply_bilinear(D.mu[static_cast<std::size_t>(a)],
                                            Phi.phi[static_cast<std::size_t>(b)].column(static_cast<std::size_t>(x[0])),
                                            Phi.phi[static_cast<std::size_t>(c)].column(static_cast<std::size_t>(x[1])));
            axpy(acc, 1, Psi.phi[static_cast<std::size_t>(e)] * v);
          }
      mu.set(x, acc);
    }
    out.mu[static_cast<std::size_t>(n)] = mu;
    Matrix d(N, N);
    for (int e = 0; e <= n; ++e)
      for (int a = 0; a + e <= n; ++a)
        d = d + Psi.phi[static_cast<std::size_t>(e)] * D.d[static_cast<std::size_t>(a)] *
                    Phi.phi[static_cast<std::size_t>(n - e - a)];
    out.d[static_cast<std::size_t>(n)] = d;
  }
  return out;
}

bool is_trivial(const TruncatedDeformation& D) {
  for (int n = 1; n <= D.order; ++n)
    if (!D.mu[static_cast<std::size_t>(n)].is_zero() || !D.d[static_cast<std::size_t>(n)].is_zero()) return false;
  return true;
}

RigidifyResult rigidify_step(const TruncatedDeformation& D) {
  const DeformationResiduals R = deformation_residuals(D);
  if (R.first_failure() >= 0) throw NotDeformation(R.first_failure());
  RigidifyResult res{identity_iso(D.base.dim(), D.order), D, 0};
  int k = 1;
  while (k <= D.order && D.mu[static_cast<std::size_t>(k)].is_zero() && D.d[static_cast<std::size_t>(k)].is_zero()) ++k;
  if (k > D.order) return res;
  const CocyclePair pair{D.mu[static_cast<std::size_t>(k)], AltMap::from_matrix(D.d[static_cast<std::size_t>(k)])};
  const CochainComplexSpec spec = adjoint_spec(D.base, Flavor::DiffLieTilde);
  const auto x = coboundary_preimage(spec, 2, scale(-1, pack_pair(pair)));
  if (!x) throw Obstructed(k, pair);
  res.iso.phi[static_cast<std::size_t>(k)] = AltMap::from_flat(1, D.base.dim(), D.base.dim(), *x).to_matrix();
  res.result = apply_formal_iso(D, res.iso);
  res.cleared_order = k;
  if (!res.result.mu[static_cast<std::size_t>(k)].is_zero() || !res.result.d[static_cast<std::size_t>(k)].is_zero())
    throw std::logic_error("rigidify_step failed to clear its order");
  return res;
}

FormalIso rigidify(const TruncatedDeformation& D, TruncatedDeformation* result) {
  FormalIso total = identity_iso(D.base.dim(), D.order);
  TruncatedDeformation cur = D;
  for (;;) {
    RigidifyResult step = rigidify_step(cur);
    if (step.cleared_order == 0) break;
    total.phi = series_product(total.phi, step.iso.phi, D.order);
    cur = step.result;
  }
  if (result) *result = cur;
  return total;
}

}  // namespace difflie
