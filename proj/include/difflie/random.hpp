#ifndef DIFFLIE_RANDOM_HPP
#define DIFFLIE_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "difflie/altmap.hpp"
#include "difflie/lie.hpp"

namespace difflie {

LieAlgebra abelian_algebra(int n);
LieAlgebra aff1_algebra();        // [x, y] = y
LieAlgebra heisenberg_algebra();  // [x, y] = z
LieAlgebra sl2_algebra();         // basis h, e, f
LieAlgebra filiform4_algebra();   // [x1, x_k] = x_{k+1} for k = 2, 3
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
// Bracket transported along x -> P x: [x, y]' = P^{-1} [P x, P y]. P must be invertible.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P);

Matrix inverse_matrix(const Matrix& P);
Matrix block_diagonal(const Matrix& a, const Matrix& b);
// exp(A) for nilpotent A; throws InvalidStructure otherwise.
Matrix nilpotent_exp(const Matrix& A);
// Basis of derivations of L (each a dim x dim matrix).
std::vector<Matrix> derivation_basis(const LieAlgebra& L);

struct NamedAlgebra {
  std::string name;
  LieAlgebra algebra;
  std::vector<Matrix> endomorphisms;  // Lie endomorphisms besides 0 and Id
};

std::vector<NamedAlgebra> lie_catalogue();

struct RelativeFixture {
  std::string name;
  LieActTriple triple;
  Matrix D;
  Scalar lambda;
};

// Deterministic source of valid structures; every output is checked before it is returned.
class FixtureGenerator {
 public:
  explicit FixtureGenerator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi);
  Scalar small_scalar();  // integer in [-2, 2]
  Scalar weight();        // one of 0, 1, -1, 2, 1/2
  Vector random_vector(int n);
  Matrix random_matrix(int rows, int cols);
  Matrix random_invertible(int n);
  AltMap random_map(int arity, int src_dim, int tgt_dim);

  NamedAlgebra lie_algebra();
  // Weight-lambda operator: (phi - Id) / lambda for an endomorphism phi, or a derivation at lambda = 0.
  Matrix weighted_operator(const NamedAlgebra& g, const Scalar& lambda);
  DiffLieAlgebra diff_lie(const Scalar& lambda);
  DiffLieAlgebra diff_lie() { return diff_lie(weight()); }
  DiffRepresentation representation(const DiffLieAlgebra& A);
  RelativeFixture relative(const Scalar& lambda);

 private:
  Matrix random_endomorphism(const NamedAlgebra& g);
  std::mt19937_64 rng_;
};

}  // namespace difflie

#endif
