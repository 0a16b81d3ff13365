#ifndef DIFFLIE_HOMOTOPY_HPP
#define DIFFLIE_HOMOTOPY_HPP

#include <vector>

#include "difflie/graded.hpp"
#include "difflie/lie.hpp"

namespace difflie {

// Families mu_i, D_i : S^i(l) -> l on the suspended space l, indexed from arity 1 (mu[0] = mu_1).
// Missing arities count as zero.
struct HomotopyDiffLie {
  GradedVectorSpace space;
  std::vector<GradedMap> mu;  // degree 1
  std::vector<GradedMap> D;   // degree 0
  Scalar weight;

  int bound() const;
  // Throws DimensionMismatch on wrong arity, space or symmetry, and std::invalid_argument on wrong degree.
  void validate() const;
};

HomotopyDiffLie empty_homotopy(const GradedVectorSpace& space, const Scalar& weight, int bound);

// Sum over Sh(i, n-i) of eps mu_{n-i+1}(mu_i(..), ..), with n = args.size(); args homogeneous.
Vector linfty_residual(const HomotopyDiffLie& H, const std::vector<Vector>& args);
// Pointed-shuffle form of the homotopy operator identity.
Vector homotopy_diff_residual(const HomotopyDiffLie& H, const std::vector<Vector>& args);

// f(D_1(block 1), ..., D_r(block r), rest) summed over all shuffles with Koszul signs.
GradedMap multi_insert(const GradedMap& f, const std::vector<const GradedMap*>& Ds);
// Arity-n component of mu o mu (half of [mu, mu]).
GradedMap linfty_map(const HomotopyDiffLie& H, int n);
// Arity-n component of sum_p 1/(p-1)! l_p(s mu, D, ..., D) expanded with plain shuffles.
GradedMap homotopy_diff_map(const HomotopyDiffLie& H, int n);

struct HomotopyMcReport {
  bool maurer_cartan = false;        // map-level equations vanish through max_n
  bool residual_families_zero = false;  // both identity families vanish on all basis tuples through max_n
  bool forms_agree = false;          // PSh form equals the factorial expansion on every basis tuple
  int failing_arity = 0;             // first n with a nonzero identity, 0 if none
};

HomotopyMcReport homotopy_mc_check(const HomotopyDiffLie& H, int max_n = 4);

// DGLA on g = A (degree 0) (+) V (degree 1) with differential x -> rho(x) v0 and operator d (+) d_V,
// transported to l = s g. Valid when d_V v0 = 0.
HomotopyDiffLie two_term_homotopy(const DiffLieAlgebra& A, const DiffRepresentation& V, const Vector& v0);
// Ungraded algebra concentrated in degree 0: mu_2 from the bracket, D_1 from d.
HomotopyDiffLie concentrated_homotopy(const DiffLieAlgebra& A);

}  // namespace difflie

#endif
