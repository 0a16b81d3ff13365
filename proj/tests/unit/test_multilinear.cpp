#include "doctest.h"

#include "difflie/nr_bracket.hpp"
#include "difflie/random.hpp"

using namespace difflie;

namespace {

Vector e(int n, int i) { return unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i)); }

GradedMap random_graded(FixtureGenerator& gen, const GradedVectorSpace& l, int arity, int degree, Symmetry kind) {
  GradedMap f(l, arity, degree, kind);
  for (const auto& t : sorted_tuples(l, arity, kind)) {
    int in = degree;
    for (int i : t) in += l.degree_of(i);
    Vector v(static_cast<std::size_t>(l.dim()), Scalar(0));
    for (int k = 0; k < l.dim(); ++k)
      if (l.degree_of(k) == in) v[static_cast<std::size_t>(k)] = gen.small_scalar();
    f.set(t, v);
  }
  return f;
}

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("alternating evaluation examples") {
  AltMap f(2, 2, 2);
  f.set({0, 1}, e(2, 0));
  CHECK(f.evaluate({e(2, 1), e(2, 0)}) == scale(-1, e(2, 0)));
  CHECK(is_zero(f.evaluate({e(2, 1), e(2, 1)})));
  CHECK_THROWS_AS(f.evaluate({e(2, 0)}), ArityMismatch);
  CHECK_THROWS_AS(f.evaluate({e(3, 0), e(3, 1)}), DimensionMismatch);
}

TEST_CASE("alternating maps are multilinear and flip sign under swaps") {
  FixtureGenerator gen(501);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = gen.uniform(2, 4);
    const int k = gen.uniform(1, 3);
    const AltMap f = gen.random_map(k, n, 2);
    std::vector<Vector> args;
    for (int i = 0; i < k; ++i) args.push_back(gen.random_vector(n));
    const Vector base = f.evaluate(args);
    const Vector y = gen.random_vector(n);
    const Scalar c = gen.small_scalar();
    std::vector<Vector> sum = args, only = args;
    sum[0] = add(args[0], scale(c, y));
    only[0] = y;
    CHECK(f.evaluate(sum) == add(base, scale(c, f.evaluate(only))));
    if (k >= 2) {
      std::vector<Vector> swapped = args;
      std::swap(swapped[0], swapped[1]);
      CHECK(f.evaluate(swapped) == scale(-1, base));
      swapped[1] = swapped[0];
      CHECK(is_zero(f.evaluate(swapped)));
    }
  }
}

TEST_CASE("graded symmetric evaluation follows the Koszul rule") {
  const GradedVectorSpace l({{0, 1}, {1, 2}});
  GradedMap f(l, 2, 0);
  f.set({0, 1}, e(3, 2));
  // Even with odd: swap is free.
  CHECK(f.evaluate({e(3, 1), e(3, 0)}) == f.evaluate({e(3, 0), e(3, 1)}));
  GradedMap g(l, 2, -2);
  g.set({1, 2}, e(3, 0));
  // Two odd elements: swap costs -1, repeats vanish.
  CHECK(g.evaluate({e(3, 2), e(3, 1)}) == scale(-1, e(3, 0)));
  CHECK(is_zero(g.evaluate({e(3, 1), e(3, 1)})));
  GradedMap h(l, 1, 0);
  h.set({1}, e(3, 2));
  CHECK(h.evaluate({add(e(3, 1), e(3, 2))}) == e(3, 2));
  Vector mixed = add(e(3, 0), e(3, 1));
  CHECK_THROWS_AS(f.evaluate({mixed, e(3, 1)}), NonHomogeneousInput);
  CHECK_THROWS_AS(f.evaluate({e(3, 1)}), ArityMismatch);
  CHECK_THROWS_AS(g.set({1, 2}, e(3, 1)), std::invalid_argument);
}

TEST_CASE("suspension signs and round trips") {
  FixtureGenerator gen(503);
  const GradedVectorSpace V({{0, 2}, {1, 1}, {2, 1}});
  for (int arity = 1; arity <= 3; ++arity)
    for (int deg = -1; deg <= 1; ++deg) {
      const GradedMap f = random_graded(gen, V, arity, deg, Symmetry::Exterior);
      const GradedMap s = suspend_alt_to_sym(f);
      CHECK(s.degree() == deg - 1 + arity);
      CHECK(desuspend_sym_to_alt(s) == f);
      // Displayed exponent (n-1)|v_1| + (n-2)|v_2| + ... on every stored tuple.
      for (const auto& [t, v] : f.table()) {
        long ex = 0;
        for (int i = 0; i < arity; ++i) ex += static_cast<long>(arity - 1 - i) * V.degree_of(t[static_cast<std::size_t>(i)]);
        CHECK(s.on_basis(t) == scale(parity_sign(ex), v));
      }
    }
  // Ungraded arity-2 map: sign +1.
  const AltMap b = gen.random_map(2, 3, 3);
  const GradedMap sb = suspend_alt_to_sym(graded_from_alt(b));
  for (std::size_t t = 0; t < b.num_tuples(); ++t) CHECK(sb.on_basis(b.tuple(t)) == b.at(t));
  CHECK(alt_from_graded(desuspend_sym_to_alt(sb)) == b);
}

TEST_CASE("circle product examples") {
  FixtureGenerator gen(505);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = gen.uniform(2, 3);
    const AltMap f = gen.random_map(2, n, n);
    const AltMap g = gen.random_map(1, n, n);
    const AltMap fg = circ_bar(f, g);
    const Matrix G = g.to_matrix();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Vector expect = add(f.evaluate({G * e(n, i), e(n, j)}), f.evaluate({e(n, i), G * e(n, j)}));
        CHECK(fg.on_basis({i, j}) == expect);
      }
    const AltMap mm = circ_bar(f, f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Vector expect = f.evaluate({f.on_basis({i, j}), e(n, k)});
          expect = sub(expect, f.evaluate({f.on_basis({i, k}), e(n, j)}));
          expect = add(expect, f.evaluate({f.on_basis({j, k}), e(n, i)}));
          CHECK(mm.on_basis({i, j, k}) == expect);
        }
    const AltMap h = gen.random_map(3, n, n);
    CHECK(circ_bar(h, AltMap::from_matrix(Matrix::identity(static_cast<std::size_t>(n)))) == h.scaled(3));
  }
}

TEST_CASE("NR bracket: square of a bracket detects Jacobi in both directions") {
  FixtureGenerator gen(507);
  int lie = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.uniform(2, 3);
    const AltMap mu = trial % 2 == 0 ? gen.lie_algebra().algebra.bracket : gen.random_map(2, n, n);
    const AltMap sq = nr_bracket(mu, mu);
    CHECK(sq == circ_bar(mu, mu).scaled(2));
    const bool jac = all_zero(jacobi_residual(LieAlgebra(mu.src_dim(), mu)));
    CHECK(sq.is_zero() == jac);
    if (jac) ++lie;
  }
  CHECK(lie > 0);
}

TEST_CASE("NR bracket antisymmetry and graded Jacobi") {
  FixtureGenerator gen(509);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = gen.uniform(1, 3);
    const AltMap f = gen.random_map(gen.uniform(1, 3), n, n);
    const AltMap g = gen.random_map(gen.uniform(1, 3), n, n);
    const AltMap h = gen.random_map(gen.uniform(1, 2), n, n);
    const int p = nr_degree(f), q = nr_degree(g), r = nr_degree(h);
    CHECK(nr_bracket(f, g) == nr_bracket(g, f).scaled(-parity_sign(static_cast<long>(p) * q)));
    const AltMap j = nr_bracket(nr_bracket(f, g), h).scaled(parity_sign(static_cast<long>(p) * r)) +
                     nr_bracket(nr_bracket(g, h), f).scaled(parity_sign(static_cast<long>(q) * p)) +
                     nr_bracket(nr_bracket(h, f), g).scaled(parity_sign(static_cast<long>(r) * q));
    CHECK(j.is_zero());
  }
}

TEST_CASE("graded NR bracket: transport, squares and graded Jacobi") {
  FixtureGenerator gen(511);
  // Concentrated in degree 0 the graded bracket is the transported ungraded one.
  for (int trial = 0; trial < 10; ++trial) {
    const int n = gen.uniform(1, 3);
    const AltMap f = gen.random_map(gen.uniform(1, 3), n, n);
    const AltMap g = gen.random_map(gen.uniform(1, 3), n, n);
    const GradedMap sf = suspend_alt_to_sym(graded_from_alt(f));
    const GradedMap sg = suspend_alt_to_sym(graded_from_alt(g));
    CHECK(graded_nr_bracket(sf, sg) == suspend_alt_to_sym(graded_from_alt(nr_bracket(f, g))));
  }
  const GradedVectorSpace l({{-1, 1}, {0, 1}, {1, 1}});
  for (int trial = 0; trial < 10; ++trial) {
    const GradedMap f = random_graded(gen, l, gen.uniform(1, 2), 1, Symmetry::Symmetric);
    CHECK(graded_nr_bracket(f, f) == graded_circ_bar(f, f).scaled(2));
    const GradedMap a = random_graded(gen, l, gen.uniform(1, 2), gen.uniform(-1, 1), Symmetry::Symmetric);
    const GradedMap b = random_graded(gen, l, gen.uniform(1, 2), gen.uniform(-1, 1), Symmetry::Symmetric);
    const GradedMap c = random_graded(gen, l, gen.uniform(1, 2), gen.uniform(-1, 1), Symmetry::Symmetric);
    const long p = a.degree(), q = b.degree(), r = c.degree();
    const GradedMap j = graded_nr_bracket(graded_nr_bracket(a, b), c).scaled(parity_sign(p * r)) +
                        graded_nr_bracket(graded_nr_bracket(b, c), a).scaled(parity_sign(q * p)) +
                        graded_nr_bracket(graded_nr_bracket(c, a), b).scaled(parity_sign(r * q));
    CHECK(j.is_zero());
    // Degree-0 arity-1 g acts as a commutator on an arity-1 f.
    GradedMap f1 = random_graded(gen, l, 1, 1, Symmetry::Symmetric);
    GradedMap g1 = random_graded(gen, l, 1, 0, Symmetry::Symmetric);
    const GradedMap br = graded_nr_bracket(f1, g1);
    for (int i = 0; i < 3; ++i)
      CHECK(br.on_basis({i}) == sub(f1.evaluate({g1.on_basis({i})}), g1.evaluate({f1.on_basis({i})})));
  }
}
