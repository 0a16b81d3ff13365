#ifndef DIFFLIE_EXTENSIONS_HPP
#define DIFFLIE_EXTENSIONS_HPP

#include <optional>
#include <stdexcept>

#include "difflie/cohomology.hpp"
#include "difflie/lie.hpp"

namespace difflie {

class InvalidExtension : public std::runtime_error {
 public:
  explicit InvalidExtension(const std::string& what) : std::runtime_error(what) {}
};

class NotCocycle : public std::runtime_error {
 public:
  explicit NotCocycle(Vector residual)
      : std::runtime_error("pair is not a 2-cocycle"), residual_(std::move(residual)) {}
  const Vector& residual() const { return residual_; }

 private:
  Vector residual_;
};

// 0 -> V -i-> total -p-> g -> 0 with a linear section s of p.
struct AbelianExtension {
  DiffLieAlgebra base;
  int v_dim = 0;
  DiffLieAlgebra total;
  Matrix i;  // total_dim x v_dim
  Matrix p;  // g_dim x total_dim
  Matrix s;  // total_dim x g_dim
};

struct ExtensionReport {
  bool total_valid = false;   // Jacobi and weighted Leibniz in the total algebra
  bool p_i_zero = false;
  bool p_s_identity = false;
  bool exact = false;         // dimension count and i injective, p surjective
  bool p_homomorphism = false;
  bool v_abelian = false;
  bool d_preserves_v = false;  // d i = i d_V for the induced d_V
  bool p_d = false;            // p d = d_g p
  bool ok() const {
    return total_valid && p_i_zero && p_s_identity && exact && p_homomorphism && v_abelian && d_preserves_v && p_d;
  }
};

ExtensionReport check_extension(const AbelianExtension& E);

struct ExtensionCocycle {
  DiffRepresentation rep;
  AltMap psi;  // arity 2, g -> V
  AltMap chi;  // arity 1, g -> V
};

// Reads rho, d_V, psi, chi off the section; throws InvalidExtension if check_extension fails.
ExtensionCocycle extract_cocycle(const AbelianExtension& E);

// Split data on g (+) V without validation.
AbelianExtension extension_from_data(const DiffLieAlgebra& g, const DiffRepresentation& rep, const AltMap& psi,
                                     const AltMap& chi);
// As extension_from_data; throws NotCocycle with the DiffLie residual when (psi, chi) is not a 2-cocycle.
AbelianExtension build_extension(const DiffLieAlgebra& g, const DiffRepresentation& rep, const AltMap& psi,
                                 const AltMap& chi);

// Same extension rewritten in the basis (s, i), so that i, p, s become the canonical split maps.
AbelianExtension normalize(const AbelianExtension& E);
// Replaces the section by s + i phi.
AbelianExtension with_section_shift(const AbelianExtension& E, const Matrix& phi);

// x + v -> x + phi(x) + v as an isomorphism total_1 -> total_2 commuting with i and p.
bool equivalence_witness(const AbelianExtension& E1, const AbelianExtension& E2, const Matrix& phi);
// phi solving the tilde coboundary equation for the difference of the two cocycles.
std::optional<Matrix> find_equivalence(const AbelianExtension& E1, const AbelianExtension& E2);

CochainComplexSpec tilde_spec(const DiffLieAlgebra& g, const DiffRepresentation& rep);
std::size_t classify(const DiffLieAlgebra& g, const DiffRepresentation& rep);

}  // namespace difflie

#endif
