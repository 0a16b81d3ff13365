#ifndef DIFFLIE_DEFORMATIONS_HPP
#define DIFFLIE_DEFORMATIONS_HPP

#include <stdexcept>
#include <vector>

#include "difflie/cohomology.hpp"
#include "difflie/lie.hpp"

namespace difflie {

class NotDeformation : public std::runtime_error {
 public:
  explicit NotDeformation(int order)
      : std::runtime_error("deformation equations fail at order " + std::to_string(order)), order_(order) {}
  int order() const { return order_; }

 private:
  int order_;
};

class Obstructed : public std::runtime_error {
 public:
  Obstructed(int order, CocyclePair cls)
      : std::runtime_error("order " + std::to_string(order) + " term is not a coboundary"),
        order_(order),
        cls_(std::move(cls)) {}
  int order() const { return order_; }
  const CocyclePair& representative() const { return cls_; }

 private:
  int order_;
  CocyclePair cls_;
};

// mu_t = sum mu_i t^i, d_t = sum d_i t^i modulo t^{order+1}.
struct TruncatedDeformation {
  DiffLieAlgebra base;
  int order = 0;
  std::vector<AltMap> mu;
  std::vector<Matrix> d;
};

// Phi_t = sum phi_i t^i with phi_0 = Id.
struct FormalIso {
  int order = 0;
  std::vector<Matrix> phi;
};

TruncatedDeformation constant_deformation(const DiffLieAlgebra& A, int order);
FormalIso identity_iso(int dim, int order);
// The truncated inverse series.
FormalIso inverse_iso(const FormalIso& Phi);

struct DeformationResiduals {
  std::vector<Residuals> jacobi;    // per order: Jacobi residual on basis triples
  std::vector<Residuals> operator_;  // per order: weighted Leibniz residual on basis pairs
  // -1 when every order vanishes, else the first failing order.
  int first_failure() const;
  bool zero_through(int n) const { return first_failure() < 0 || first_failure() > n; }
};

DeformationResiduals deformation_residuals(const TruncatedDeformation& D);

struct Infinitesimal {
  CocyclePair pair;  // (mu_1, d_1)
  Vector residual;   // DiffLie 2-cocycle residual, zero by construction
  Vector d1_residual;  // DO 1-cocycle residual of d_1, meaningful when mu_1 = 0
};

// Throws NotDeformation unless the equations hold through order 1.
Infinitesimal infinitesimal(const TruncatedDeformation& D);

// Phi^{-1} mu_t (Phi x Phi) and Phi^{-1} d_t Phi, truncated.
TruncatedDeformation apply_formal_iso(const TruncatedDeformation& D, const FormalIso& Phi);

struct RigidifyResult {
  FormalIso iso;  // Id + phi t^k for the cleared order k, or the identity
  TruncatedDeformation result;
  int cleared_order = 0;  // 0 when the deformation was already trivial
};

// Clears the lowest nonzero order k by solving d^1 phi = -(mu_k, d_k) in the tilde complex.
// Throws NotDeformation if the equations fail, Obstructed if no phi exists.
RigidifyResult rigidify_step(const TruncatedDeformation& D);
// Repeats rigidify_step until trivial; returns the composite iso series.
FormalIso rigidify(const TruncatedDeformation& D, TruncatedDeformation* result = nullptr);

bool is_trivial(const TruncatedDeformation& D);

}  // namespace difflie

#endif
