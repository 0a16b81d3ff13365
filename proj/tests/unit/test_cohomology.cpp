#include "doctest.h"

#include "difflie/cohomology.hpp"
#include "difflie/random.hpp"

using namespace difflie;

namespace {

Vector e(int n, int i) { return unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i)); }

Matrix diag(std::initializer_list<int> entries) {
  Matrix m(entries.size(), entries.size());
  std::size_t i = 0;
  for (int v : entries) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

struct Fixture {
  DiffLieAlgebra g;
  DiffRepresentation rep;
};

Fixture small_fixture(FixtureGenerator& gen) {
  for (;;) {
    DiffLieAlgebra g = gen.diff_lie();
    if (g.dim() > 3) continue;
    DiffRepresentation rep = gen.representation(g);
    if (g.dim() + rep.space_dim > 5) rep = trivial_rep(g, 1, gen.random_matrix(1, 1));
    return {g, rep};
  }
}

const Flavor kFlavors[] = {Flavor::CE, Flavor::DO, Flavor::DiffLie, Flavor::DiffLieTilde};

}  // namespace

TEST_CASE("flavor names round trip") {
  for (Flavor f : kFlavors) CHECK(parse_flavor(flavor_name(f)) == f);
  CHECK_THROWS(parse_flavor("nonsense"));
}

TEST_CASE("every differential squares to zero") {
  FixtureGenerator gen(701);
  for (int trial = 0; trial < 12; ++trial) {
    const Fixture fx = small_fixture(gen);
    for (Flavor f : kFlavors) {
      const CochainComplexSpec spec{fx.g, fx.rep, 4, f};
      const auto d = build_complex(spec);
      for (std::size_t n = 0; n + 1 < d.size(); ++n) CHECK((d[n + 1] * d[n]).is_zero());
      CHECK(complex_report(spec).d_squared_ok);
    }
  }
}

TEST_CASE("delta is a cochain map from the algebra complex to the operator complex") {
  FixtureGenerator gen(703);
  for (int trial = 0; trial < 12; ++trial) {
    const Fixture fx = small_fixture(gen);
    const CochainComplexSpec spec{fx.g, fx.rep, 4, Flavor::DiffLie};
    for (int n = 0; n < 4; ++n) CHECK(do_differential(spec, n) * delta_map(spec, n) == delta_map(spec, n + 1) * ce_differential(spec, n));
  }
}

TEST_CASE("algebra and operator differential examples") {
  const DiffLieAlgebra A{aff1_algebra(), diag({0, 1}), 2};
  const DiffRepresentation ad = adjoint_rep(A);
  const CochainComplexSpec spec{A, ad, 3, Flavor::DiffLie};
  // d^0 v = (x -> -rho(x) v).
  const Matrix d0 = ce_differential(spec, 0);
  for (int v = 0; v < 2; ++v)
    for (int x = 0; x < 2; ++x) {
      const Vector col = d0.column(static_cast<std::size_t>(v));
      const Vector image{col[static_cast<std::size_t>(2 * x)], col[static_cast<std::size_t>(2 * x + 1)]};
      CHECK(image == scale(-1, ad.rho[static_cast<std::size_t>(x)] * e(2, v)));
    }
  CHECK((ce_differential(spec, 1) * d0).is_zero());
  // delta^0 = -d_V.
  CHECK(delta_map(spec, 0) == ad.dV.scaled(-1));
  // delta^1 f for f(x) = y, f(y) = 0: x -> -y, y -> 0.
  Matrix f(2, 2);
  f(1, 0) = 1;
  const AltMap df = delta_apply(A, ad, AltMap::from_matrix(f));
  CHECK(df.on_basis({0}) == scale(-1, e(2, 1)));
  CHECK(is_zero(df.on_basis({1})));
  CHECK(delta_apply(A, ad, AltMap::from_matrix(Matrix::identity(2))).is_zero());
  // Weight 0: the operator differential is the algebra one.
  const DiffLieAlgebra B{aff1_algebra(), diag({0, 1}), 0};
  const CochainComplexSpec s0{B, adjoint_rep(B), 3, Flavor::DiffLie};
  for (int n = 0; n < 3; ++n) CHECK(do_differential(s0, n) == ce_differential(s0, n));
  // d = Id, weight -1: rho_lambda = 0 and the operator differential has no action terms.
  const DiffLieAlgebra C{abelian_algebra(2), Matrix::identity(2), -1};
  const CochainComplexSpec sc{C, trivial_rep(C, 1, Matrix(1, 1)), 3, Flavor::DiffLie};
  for (int n = 0; n < 3; ++n) CHECK(do_differential(sc, n).is_zero());
  // Abelian algebra with trivial coefficients: zero algebra differential.
  for (int n = 0; n < 3; ++n) CHECK(ce_differential(sc, n).is_zero());
}

TEST_CASE("the displayed degree-0 cone sign would break d^2 = 0") {
  // With second component +delta^0 v, the composite picks up -2 delta^1 d^0_alg v.
  const DiffLieAlgebra A{aff1_algebra(), diag({0, 1}), 1};
  const CochainComplexSpec spec{A, adjoint_rep(A), 3, Flavor::DiffLie};
  const Matrix top = ce_differential(spec, 0);
  const Matrix bottom = delta_map(spec, 0);
  const Matrix displayed = Matrix::from_rows([&] {
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < top.rows(); ++r) rows.push_back(top.row(r));
    for (std::size_t r = 0; r < bottom.rows(); ++r) rows.push_back(bottom.row(r));
    return rows;
  }());
  CHECK(!(differential(spec, 1) * displayed).is_zero());
  CHECK((differential(spec, 1) * differential(spec, 0)).is_zero());
  CHECK(!(delta_map(spec, 1) * top).is_zero());
}

TEST_CASE("zero-cocycles are central vectors killed by d_V") {
  const DiffLieAlgebra H{heisenberg_algebra(), Matrix(3, 3), 1};
  const CochainComplexSpec spec{H, adjoint_rep(H), 3, Flavor::DiffLie};
  // The last Heisenberg basis vector is central.
  CHECK(is_zero(differential(spec, 0) * e(3, 2)));
  CHECK(!is_zero(differential(spec, 0) * e(3, 0)));
}

TEST_CASE("cohomology dimension examples") {
  const DiffLieAlgebra k{abelian_algebra(1), Matrix(1, 1), 1};
  CHECK(cohomology_dims(CochainComplexSpec{k, trivial_rep(k, 1, Matrix(1, 1)), 3, Flavor::DiffLie})[0] == 1);
  const DiffLieAlgebra A{aff1_algebra(), diag({0, 1}), 1};
  CHECK(cohomology_dims(CochainComplexSpec{A, adjoint_rep(A), 3, Flavor::DiffLie})[0] == 0);
}

TEST_CASE("tilde and full cohomology agree above degree 2") {
  FixtureGenerator gen(707);
  for (int trial = 0; trial < 10; ++trial) {
    const Fixture fx = small_fixture(gen);
    const auto full = cohomology_dims(CochainComplexSpec{fx.g, fx.rep, 4, Flavor::DiffLie});
    const auto tilde = cohomology_dims(CochainComplexSpec{fx.g, fx.rep, 4, Flavor::DiffLieTilde});
    CHECK(full[3] == tilde[3]);
  }
}

TEST_CASE("Euler characteristic of the truncated complex") {
  FixtureGenerator gen(709);
  for (int trial = 0; trial < 10; ++trial) {
    const Fixture fx = small_fixture(gen);
    for (Flavor f : kFlavors) {
      const CochainComplexSpec spec{fx.g, fx.rep, 4, f};
      const ComplexReport r = complex_report(spec);
      long lhs = 0, rhs = 0;
      const int N = static_cast<int>(r.dims_H.size());
      for (int n = 0; n < N; ++n) {
        const long s = n % 2 == 0 ? 1 : -1;
        lhs += s * static_cast<long>(r.dims_H[static_cast<std::size_t>(n)]);
        rhs += s * static_cast<long>(r.dims_C[static_cast<std::size_t>(n)]);
      }
      const long top = (N - 1) % 2 == 0 ? 1 : -1;
      rhs -= top * static_cast<long>(rank(differential(spec, N - 1)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("coboundaries have zero cocycle residual, random pairs usually do not") {
  FixtureGenerator gen(711);
  int nonzero = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const Fixture fx = small_fixture(gen);
    const CochainComplexSpec spec{fx.g, fx.rep, 3, Flavor::DiffLie};
    const Vector phi = gen.random_vector(static_cast<int>(cochain_dim(spec, 1)));
    const CocyclePair b = unpack_pair(spec, 2, differential(spec, 1) * phi);
    CHECK(is_zero(cocycle_residual(spec, 2, b)));
    const CocyclePair r{gen.random_map(2, fx.g.dim(), fx.rep.space_dim), gen.random_map(1, fx.g.dim(), fx.rep.space_dim)};
    if (!is_zero(cocycle_residual(spec, 2, r))) ++nonzero;
    CHECK(pack_pair(unpack_pair(spec, 2, pack_pair(r))) == pack_pair(r));
  }
  CHECK(nonzero > 0);
}

TEST_CASE("representatives and preimages") {
  FixtureGenerator gen(713);
  for (int trial = 0; trial < 10; ++trial) {
    const Fixture fx = small_fixture(gen);
    const CochainComplexSpec spec{fx.g, fx.rep, 4, Flavor::DiffLie};
    const auto dims = cohomology_dims(spec);
    for (int n = 0; n < 3; ++n) {
      const auto reps = cohomology_representatives(spec, n);
      CHECK(reps.size() == dims[static_cast<std::size_t>(n)]);
      for (const auto& r : reps) {
        CHECK(is_zero(differential(spec, n) * r));
        if (n > 0) CHECK(!coboundary_preimage(spec, n, r).has_value());
      }
    }
    const Vector x = gen.random_vector(static_cast<int>(cochain_dim(spec, 1)));
    const auto pre = coboundary_preimage(spec, 2, differential(spec, 1) * x);
    REQUIRE(pre.has_value());
    CHECK(differential(spec, 1) * *pre == differential(spec, 1) * x);
  }
}

TEST_CASE("the embedding into the trivial extension commutes with the differentials") {
  FixtureGenerator gen(717);
  for (int trial = 0; trial < 8; ++trial) {
    const Fixture fx = small_fixture(gen);
    const CochainComplexSpec small{fx.g, fx.rep, 3, Flavor::DiffLie};
    const DiffLieAlgebra big_alg = trivial_extension(fx.g, fx.rep);
    const CochainComplexSpec big{big_alg, adjoint_rep(big_alg), 3, Flavor::DiffLie};
    for (int n = 0; n < 3; ++n) {
      const Matrix E = embedding_into_extension(small, n);
      const Matrix E1 = embedding_into_extension(small, n + 1);
      CHECK(rank(E) == E.cols());
      CHECK(differential(big, n) * E == E1 * differential(small, n));
    }
  }
}
