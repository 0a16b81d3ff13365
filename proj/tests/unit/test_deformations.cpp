#include "doctest.h"

#include "difflie/deformations.hpp"
#include "difflie/random.hpp"

using namespace difflie;

namespace {

DiffLieAlgebra rigid_sl2() { return DiffLieAlgebra{sl2_algebra(), Matrix::identity(3).scaled(-1), 1}; }

FormalIso random_iso(FixtureGenerator& gen, int dim, int order) {
  FormalIso P = identity_iso(dim, order);
  for (int i = 1; i <= order; ++i) P.phi[static_cast<std::size_t>(i)] = gen.random_matrix(dim, dim);
  return P;
}

CocyclePair random_adjoint_cocycle(FixtureGenerator& gen, const DiffLieAlgebra& A) {
  const CochainComplexSpec spec{A, adjoint_rep(A), 3, Flavor::DiffLie};
  Vector v(cochain_dim(spec, 2), Scalar(0));
  for (const auto& z : kernel_basis(differential(spec, 2))) axpy(v, gen.small_scalar(), z);
  return unpack_pair(spec, 2, v);
}

TruncatedDeformation first_order(const DiffLieAlgebra& A, const CocyclePair& c) {
  TruncatedDeformation D = constant_deformation(A, 1);
  D.mu[1] = c.f;
  D.d[1] = c.g.to_matrix();
  return D;
}

CocyclePair coboundary(const DiffLieAlgebra& A, const Matrix& phi) {
  return difflie_apply(A, adjoint_rep(A), CocyclePair{AltMap::from_matrix(phi), AltMap(0, A.dim(), A.dim())});
}

DiffLieAlgebra small_diff_lie(FixtureGenerator& gen) {
  for (;;) {
    DiffLieAlgebra A = gen.diff_lie();
    if (A.dim() <= 3) return A;
  }
}

}  // namespace

TEST_CASE("constant deformation satisfies every order") {
  FixtureGenerator gen(201);
  for (int trial = 0; trial < 5; ++trial) {
    const TruncatedDeformation D = constant_deformation(gen.diff_lie(), 3);
    CHECK(deformation_residuals(D).first_failure() == -1);
    const Infinitesimal inf = infinitesimal(D);
    CHECK(inf.pair.f.is_zero());
    CHECK(inf.pair.g.is_zero());
  }
}

TEST_CASE("first-order data is a deformation exactly when it is a 2-cocycle") {
  FixtureGenerator gen(203);
  for (int trial = 0; trial < 15; ++trial) {
    const DiffLieAlgebra A = small_diff_lie(gen);
    const CocyclePair c = random_adjoint_cocycle(gen, A);
    const TruncatedDeformation D = first_order(A, c);
    CHECK(deformation_residuals(D).zero_through(1));
    CHECK(is_zero(infinitesimal(D).residual));
    const CocyclePair noise{gen.random_map(2, A.dim(), A.dim()), gen.random_map(1, A.dim(), A.dim())};
    const CochainComplexSpec spec{A, adjoint_rep(A), 3, Flavor::DiffLie};
    const bool cocycle = is_zero(cocycle_residual(spec, 2, noise));
    const TruncatedDeformation E = first_order(A, noise);
    CHECK(deformation_residuals(E).zero_through(1) == cocycle);
    if (!cocycle) CHECK_THROWS_AS(infinitesimal(E), NotDeformation);
  }
}

TEST_CASE("varying only the operator: d_1 is a DO 1-cocycle exactly when the data deforms") {
  FixtureGenerator gen(207);
  for (int trial = 0; trial < 10; ++trial) {
    const DiffLieAlgebra A = small_diff_lie(gen);
    TruncatedDeformation D = constant_deformation(A, 1);
    D.d[1] = gen.random_matrix(A.dim(), A.dim());
    const DiffRepresentation shifted = rho_lambda(adjoint_rep(A), A);
    const bool do_cocycle = ce_apply(A.algebra, shifted.rho, AltMap::from_matrix(D.d[1])).is_zero();
    CHECK(deformation_residuals(D).zero_through(1) == do_cocycle);
    // A DO coboundary is a DO cocycle.
    AltMap v(0, A.dim(), A.dim());
    v.set({}, gen.random_vector(A.dim()));
    D.d[1] = ce_apply(A.algebra, shifted.rho, v).to_matrix();
    CHECK(deformation_residuals(D).zero_through(1));
    CHECK(is_zero(infinitesimal(D).d1_residual));
  }
}

TEST_CASE("formal isomorphisms preserve the equations and shift infinitesimals by coboundaries") {
  FixtureGenerator gen(211);
  for (int trial = 0; trial < 10; ++trial) {
    const DiffLieAlgebra A = small_diff_lie(gen);
    const int N = 1 + trial % 3;
    const FormalIso Phi = random_iso(gen, A.dim(), N);
    const TruncatedDeformation C = constant_deformation(A, N);
    const TruncatedDeformation D = apply_formal_iso(C, Phi);
    CHECK(deformation_residuals(D).first_failure() == -1);
    const CocyclePair b = coboundary(A, Phi.phi[1]);
    const Infinitesimal inf = infinitesimal(D);
    CHECK(inf.pair.f == b.f);
    CHECK(inf.pair.g == b.g);
    // Built the other way round the infinitesimal is -d^1(phi_1).
    const Infinitesimal back = infinitesimal(apply_formal_iso(C, inverse_iso(Phi)));
    CHECK(back.pair.f == b.f.scaled(-1));
    CHECK(back.pair.g == b.g.scaled(-1));
    // Round trip.
    const TruncatedDeformation R = apply_formal_iso(D, inverse_iso(Phi));
    for (int n = 0; n <= N; ++n) {
      CHECK(R.mu[static_cast<std::size_t>(n)] == C.mu[static_cast<std::size_t>(n)]);
      CHECK(R.d[static_cast<std::size_t>(n)] == C.d[static_cast<std::size_t>(n)]);
    }
    CHECK(apply_formal_iso(D, identity_iso(A.dim(), N)).mu == D.mu);
  }
}

TEST_CASE("equivalent deformations have cohomologous infinitesimals") {
  FixtureGenerator gen(213);
  for (int trial = 0; trial < 10; ++trial) {
    const DiffLieAlgebra A = small_diff_lie(gen);
    const TruncatedDeformation D = first_order(A, random_adjoint_cocycle(gen, A));
    const FormalIso Phi = random_iso(gen, A.dim(), 1);
    const TruncatedDeformation E = apply_formal_iso(D, Phi);
    CHECK(deformation_residuals(E).zero_through(1));
    const CocyclePair b = coboundary(A, Phi.phi[1]);
    CHECK(infinitesimal(E).pair.f - infinitesimal(D).pair.f == b.f);
    CHECK(infinitesimal(E).pair.g - infinitesimal(D).pair.g == b.g);
  }
}

TEST_CASE("the rigid sl2 fixture has vanishing tilde H^2") {
  const DiffLieAlgebra A = rigid_sl2();
  REQUIRE(is_diff_lie(A));
  CHECK(cohomology_dims(CochainComplexSpec{A, adjoint_rep(A), 3, Flavor::DiffLieTilde})[2] == 0);
}

TEST_CASE("iterated rigidification trivializes order-2 deformations of a rigid algebra") {
  FixtureGenerator gen(217);
  const DiffLieAlgebra A = rigid_sl2();
  for (int trial = 0; trial < 8; ++trial) {
    TruncatedDeformation D = apply_formal_iso(constant_deformation(A, 2), random_iso(gen, 3, 2));
    // The order-2 equation is linear in the top term, so adding a cocycle keeps it valid.
    const CocyclePair c = random_adjoint_cocycle(gen, A);
    D.mu[2] = D.mu[2] + c.f;
    D.d[2] = D.d[2] + c.g.to_matrix();
    REQUIRE(deformation_residuals(D).first_failure() == -1);
    TruncatedDeformation out;
    const FormalIso total = rigidify(D, &out);
    CHECK(is_trivial(out));
    const TruncatedDeformation again = apply_formal_iso(D, total);
    CHECK(is_trivial(again));
  }
  const RigidifyResult same = rigidify_step(constant_deformation(A, 2));
  CHECK(same.cleared_order == 0);
  CHECK(same.iso.phi[1].is_zero());
}

TEST_CASE("rigidification is obstructed by a nontrivial class") {
  const DiffLieAlgebra A{abelian_algebra(2), Matrix(2, 2), 1};
  const CochainComplexSpec tilde{A, adjoint_rep(A), 3, Flavor::DiffLieTilde};
  const auto reps = cohomology_representatives(tilde, 2);
  REQUIRE(!reps.empty());
  const CocyclePair c = unpack_pair(tilde, 2, reps[0]);
  const TruncatedDeformation D = first_order(A, c);
  CHECK_THROWS_AS(rigidify_step(D), Obstructed);
  // On aff(1) with d = 0, d_1 = Id has DO differential [x, y] != 0.
  TruncatedDeformation bad = constant_deformation(DiffLieAlgebra{aff1_algebra(), Matrix(2, 2), 1}, 1);
  bad.d[1] = Matrix::identity(2);
  CHECK(deformation_residuals(bad).first_failure() == 1);
  CHECK_THROWS_AS(rigidify_step(bad), NotDeformation);
}
