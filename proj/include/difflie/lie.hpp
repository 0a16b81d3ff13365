#ifndef DIFFLIE_LIE_HPP
#define DIFFLIE_LIE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "difflie/altmap.hpp"
#include "difflie/matrix.hpp"

namespace difflie {

class ZeroScale : public std::runtime_error {
 public:
  ZeroScale() : std::runtime_error("operator rescaling by zero") {}
};

class InvalidStructure : public std::runtime_error {
 public:
  explicit InvalidStructure(const std::string& what) : std::runtime_error(what) {}
};

using Residuals = std::vector<Vector>;
bool all_zero(const Residuals& r);
Vector flatten(const Matrix& m);

struct LieAlgebra {
  int dim = 0;
  AltMap bracket;  // arity 2, dim -> dim

  LieAlgebra() = default;
  explicit LieAlgebra(int n) : dim(n), bracket(2, n, n) {}
  LieAlgebra(int n, AltMap b);

  // Stores [x_i, x_j] for i < j; i > j is derived by antisymmetry and i == j is rejected.
  void set_bracket(int i, int j, const Vector& value);
  Vector br(const Vector& x, const Vector& y) const;
  Vector br_basis(int i, int j) const { return bracket.on_basis({i, j}); }
  Matrix ad(int i) const;
  Matrix ad_vector(const Vector& x) const;
};

struct DiffLieAlgebra {
  LieAlgebra algebra;
  Matrix d;
  Scalar weight;

  int dim() const { return algebra.dim; }
};

struct DiffRepresentation {
  int space_dim = 0;
  std::vector<Matrix> rho;  // rho[i] = rho(x_i), space_dim x space_dim
  Matrix dV;

  Matrix act(const Vector& x) const;  // rho(x) for a general element
};

struct LieActTriple {
  LieAlgebra g;
  LieAlgebra h;
  std::vector<Matrix> rho;  // rho[i] acts on h

  Matrix act(const Vector& x) const;
};

Residuals jacobi_residual(const LieAlgebra& L);
Residuals weighted_derivation_residual(const DiffLieAlgebra& A);
Residuals rep_homomorphism_residual(const LieAlgebra& g, const DiffRepresentation& rep);
Residuals rep_compatibility_residual(const DiffLieAlgebra& A, const DiffRepresentation& rep);
Residuals representation_residual(const DiffLieAlgebra& A, const DiffRepresentation& rep);

bool is_lie(const LieAlgebra& L);
bool is_diff_lie(const DiffLieAlgebra& A);
bool is_diff_rep(const DiffLieAlgebra& A, const DiffRepresentation& rep);

// Wrapper issued only after every residual vanished.
template <class T>
class Validated {
 public:
  const T& get() const { return value_; }
  const T* operator->() const { return &value_; }

 private:
  explicit Validated(T v) : value_(std::move(v)) {}
  T value_;
  friend std::optional<Validated<DiffLieAlgebra>> validate(const DiffLieAlgebra& A);
};

std::optional<Validated<DiffLieAlgebra>> validate(const DiffLieAlgebra& A);

DiffLieAlgebra rescale_operator(const DiffLieAlgebra& A, const Scalar& kappa);
DiffRepresentation rho_lambda(const DiffRepresentation& rep, const DiffLieAlgebra& A);
DiffRepresentation adjoint_rep(const DiffLieAlgebra& A);
DiffRepresentation trivial_rep(const DiffLieAlgebra& A, int space_dim, const Matrix& dV);
DiffLieAlgebra trivial_extension(const DiffLieAlgebra& A, const DiffRepresentation& rep);

struct LieActReport {
  Residuals homomorphism;  // rho([x,y]) - [rho x, rho y]
  Residuals derivation;    // x.[u,v] - [x.u, v] - [u, x.v]
  bool ok() const { return all_zero(homomorphism) && all_zero(derivation); }
};

LieActReport lieact_residuals(const LieActTriple& T);
Residuals relative_diff_residual(const LieActTriple& T, const Matrix& D, const Scalar& lambda);
LieAlgebra semidirect_weighted(const LieActTriple& T, const Scalar& lambda);
DiffLieAlgebra lift_tilde_D(const LieActTriple& T, const Matrix& D, const Scalar& lambda);

}  // namespace difflie

#endif
