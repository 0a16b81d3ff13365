#include "doctest.h"

#include "difflie/extensions.hpp"
#include "difflie/random.hpp"

using namespace difflie;

namespace {

CocyclePair random_cocycle(FixtureGenerator& gen, const DiffLieAlgebra& g, const DiffRepresentation& rep) {
  const CochainComplexSpec spec{g, rep, 3, Flavor::DiffLie};
  Vector v(cochain_dim(spec, 2), Scalar(0));
  for (const auto& z : kernel_basis(differential(spec, 2))) axpy(v, gen.small_scalar(), z);
  return unpack_pair(spec, 2, v);
}

CocyclePair coboundary_of(const DiffLieAlgebra& g, const DiffRepresentation& rep, const Matrix& phi) {
  return difflie_apply(g, rep, CocyclePair{AltMap::from_matrix(phi), AltMap(0, g.dim(), rep.space_dim)});
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
    if (rep.space_dim > 2) {
      const int m = gen.uniform(1, 2);
      rep = trivial_rep(g, m, gen.random_matrix(m, m));
    }
    return {g, rep};
  }
}

}  // namespace

TEST_CASE("zero cocycle builds the trivial extension") {
  FixtureGenerator gen(101);
  const Fixture fx = small_fixture(gen);
  const AbelianExtension E = build_extension(fx.g, fx.rep, AltMap(2, fx.g.dim(), fx.rep.space_dim),
                                             AltMap(1, fx.g.dim(), fx.rep.space_dim));
  CHECK(check_extension(E).ok());
  const DiffLieAlgebra t = trivial_extension(fx.g, fx.rep);
  CHECK(E.total.algebra.bracket == t.algebra.bracket);
  CHECK(E.total.d == t.d);
  const ExtensionCocycle c = extract_cocycle(E);
  CHECK(c.psi.is_zero());
  CHECK(c.chi.is_zero());
}

TEST_CASE("extension data is valid exactly when the pair is a 2-cocycle") {
  FixtureGenerator gen(103);
  for (int trial = 0; trial < 20; ++trial) {
    const Fixture fx = small_fixture(gen);
    const CocyclePair c = random_cocycle(gen, fx.g, fx.rep);
    CHECK(check_extension(extension_from_data(fx.g, fx.rep, c.f, c.g)).ok());
    const AltMap psi = gen.random_map(2, fx.g.dim(), fx.rep.space_dim);
    const AltMap chi = gen.random_map(1, fx.g.dim(), fx.rep.space_dim);
    const CochainComplexSpec spec{fx.g, fx.rep, 3, Flavor::DiffLie};
    const bool cocycle = is_zero(cocycle_residual(spec, 2, CocyclePair{psi, chi}));
    CHECK(check_extension(extension_from_data(fx.g, fx.rep, psi, chi)).ok() == cocycle);
    if (!cocycle) CHECK_THROWS_AS(build_extension(fx.g, fx.rep, psi, chi), NotCocycle);
  }
}

TEST_CASE("extract after build returns the cocycle and the representation") {
  FixtureGenerator gen(107);
  for (int trial = 0; trial < 20; ++trial) {
    const Fixture fx = small_fixture(gen);
    const CocyclePair c = random_cocycle(gen, fx.g, fx.rep);
    const ExtensionCocycle e = extract_cocycle(build_extension(fx.g, fx.rep, c.f, c.g));
    CHECK(e.psi == c.f);
    CHECK(e.chi == c.g);
    CHECK(e.rep.rho == fx.rep.rho);
    CHECK(e.rep.dV == fx.rep.dV);
    CHECK(is_diff_rep(fx.g, e.rep));
  }
}

TEST_CASE("changing the section changes the cocycle by a coboundary") {
  FixtureGenerator gen(109);
  for (int trial = 0; trial < 15; ++trial) {
    const Fixture fx = small_fixture(gen);
    const CocyclePair c = random_cocycle(gen, fx.g, fx.rep);
    const AbelianExtension E = build_extension(fx.g, fx.rep, c.f, c.g);
    const Matrix phi = gen.random_matrix(fx.rep.space_dim, fx.g.dim());
    const ExtensionCocycle shifted = extract_cocycle(with_section_shift(E, phi));
    const CocyclePair b = coboundary_of(fx.g, fx.rep, phi);
    CHECK(shifted.psi == c.f + b.f);
    CHECK(shifted.chi == c.g + b.g);
  }
}

TEST_CASE("normalizing a rebased extension keeps its cocycle class") {
  FixtureGenerator gen(113);
  for (int trial = 0; trial < 10; ++trial) {
    const Fixture fx = small_fixture(gen);
    const CocyclePair c = random_cocycle(gen, fx.g, fx.rep);
    AbelianExtension E = build_extension(fx.g, fx.rep, c.f, c.g);
    // Present the same extension in a scrambled basis of the total space.
    const Matrix P = gen.random_invertible(E.total.dim());
    const Matrix Q = inverse_matrix(P);
    AbelianExtension R = E;
    R.total.algebra = change_basis(E.total.algebra, P);
    R.total.d = Q * E.total.d * P;
    R.i = Q * E.i;
    R.s = Q * E.s;
    R.p = E.p * P;
    CHECK(check_extension(R).ok());
    const ExtensionCocycle e = extract_cocycle(R);
    CHECK(e.psi == c.f);
    CHECK(e.chi == c.g);
    const auto phi = find_equivalence(R, E);
    REQUIRE(phi.has_value());
    CHECK(phi->is_zero());
  }
}

TEST_CASE("cohomologous cocycles give equivalent extensions") {
  FixtureGenerator gen(127);
  for (int trial = 0; trial < 15; ++trial) {
    const Fixture fx = small_fixture(gen);
    const CocyclePair c = random_cocycle(gen, fx.g, fx.rep);
    const Matrix phi = gen.random_matrix(fx.rep.space_dim, fx.g.dim());
    const CocyclePair b = coboundary_of(fx.g, fx.rep, phi);
    const AbelianExtension E1 = build_extension(fx.g, fx.rep, c.f + b.f, c.g + b.g);
    const AbelianExtension E2 = build_extension(fx.g, fx.rep, c.f, c.g);
    CHECK(equivalence_witness(E1, E2, phi));
    CHECK(equivalence_witness(E1, E1, Matrix(static_cast<std::size_t>(fx.rep.space_dim), static_cast<std::size_t>(fx.g.dim()))));
    const auto found = find_equivalence(E1, E2);
    REQUIRE(found.has_value());
    CHECK(equivalence_witness(E1, E2, *found));
  }
}

TEST_CASE("non-cohomologous cocycles admit no witness") {
  FixtureGenerator gen(131);
  int tested = 0;
  for (int trial = 0; trial < 40 && tested < 8; ++trial) {
    const Fixture fx = small_fixture(gen);
    const auto reps = cohomology_representatives(tilde_spec(fx.g, fx.rep), 2);
    if (reps.empty()) continue;
    ++tested;
    const CochainComplexSpec spec{fx.g, fx.rep, 3, Flavor::DiffLie};
    const CocyclePair c = unpack_pair(spec, 2, reps[0]);
    const AbelianExtension E1 = build_extension(fx.g, fx.rep, c.f, c.g);
    const AbelianExtension E0 = build_extension(fx.g, fx.rep, AltMap(2, fx.g.dim(), fx.rep.space_dim),
                                                AltMap(1, fx.g.dim(), fx.rep.space_dim));
    CHECK(!find_equivalence(E1, E0).has_value());
    for (int k = 0; k < 5; ++k)
      CHECK(!equivalence_witness(E1, E0, gen.random_matrix(fx.rep.space_dim, fx.g.dim())));
  }
  CHECK(tested > 0);
}

TEST_CASE("classification counts match pairwise inequivalence of a cohomology basis") {
  FixtureGenerator gen(137);
  for (int trial = 0; trial < 10; ++trial) {
    const Fixture fx = small_fixture(gen);
    const CochainComplexSpec spec = tilde_spec(fx.g, fx.rep);
    const auto reps = cohomology_representatives(spec, 2);
    CHECK(reps.size() == classify(fx.g, fx.rep));
    std::vector<AbelianExtension> built;
    for (const auto& r : reps) {
      const CocyclePair c = unpack_pair(spec, 2, r);
      built.push_back(build_extension(fx.g, fx.rep, c.f, c.g));
    }
    for (std::size_t a = 0; a < built.size(); ++a)
      for (std::size_t b = a + 1; b < built.size(); ++b) CHECK(!find_equivalence(built[a], built[b]).has_value());
  }
}

TEST_CASE("classify examples") {
  // 1-dim abelian g, d = 0, trivial 1-dim V: C~^1 = k, C^2 = 0 (+) k with zero maps, so H~^2 = 1.
  DiffLieAlgebra g{abelian_algebra(1), Matrix(1, 1), 1};
  const DiffRepresentation triv = trivial_rep(g, 1, Matrix(1, 1));
  CHECK(classify(g, triv) == 1);
  // Trivial representation: tilde and full H^2 agree.
  FixtureGenerator gen(139);
  for (int trial = 0; trial < 8; ++trial) {
    const DiffLieAlgebra A = gen.diff_lie();
    const DiffRepresentation rep = trivial_rep(A, 1, gen.random_matrix(1, 1));
    const CochainComplexSpec full{A, rep, 3, Flavor::DiffLie};
    CHECK(cohomology_dims(full)[2] == classify(A, rep));
  }
}
