#ifndef DIFFLIE_COHOMOLOGY_HPP
#define DIFFLIE_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "difflie/altmap.hpp"
#include "difflie/lie.hpp"
#include "difflie/matrix.hpp"

namespace difflie {

enum class Flavor { CE, DO, DiffLie, DiffLieTilde };

Flavor parse_flavor(const std::string& name);
std::string flavor_name(Flavor f);

struct CochainComplexSpec {
  DiffLieAlgebra algebra;
  DiffRepresentation coefficients;
  int max_degree = 4;
  Flavor flavor = Flavor::DiffLie;
};

// (f, g) in C^n_alg (+) C^{n-1}_DO; for n = 0 only f (arity 0) is used.
struct CocyclePair {
  AltMap f;
  AltMap g;
};

// Apply the Chevalley-Eilenberg differential with the action matrices `rho`.
AltMap ce_apply(const LieAlgebra& g, const std::vector<Matrix>& rho, const AltMap& f);
AltMap delta_apply(const DiffLieAlgebra& A, const DiffRepresentation& rep, const AltMap& f);
CocyclePair difflie_apply(const DiffLieAlgebra& A, const DiffRepresentation& rep, const CocyclePair& pair);

Matrix ce_differential(const CochainComplexSpec& spec, int n);
Matrix do_differential(const CochainComplexSpec& spec, int n);
Matrix delta_map(const CochainComplexSpec& spec, int n);
Matrix difflie_differential(const CochainComplexSpec& spec, int n);
// Differential of the flavor selected in the spec (tilde: degree 0 is the zero space, degree 1 is C^1_alg).
Matrix differential(const CochainComplexSpec& spec, int n);

std::size_t alg_cochain_dim(const CochainComplexSpec& spec, int n);
std::size_t cochain_dim(const CochainComplexSpec& spec, int n);

struct ComplexReport {
  std::vector<std::size_t> dims_C;  // degrees 0..max_degree
  std::vector<std::size_t> dims_H;  // degrees 0..max_degree-1
  bool d_squared_ok = true;
};

// Builds d_0..d_max; throws CompositionNonzero if any d_{n+1} d_n is nonzero.
std::vector<Matrix> build_complex(const CochainComplexSpec& spec);
std::vector<std::size_t> cohomology_dims(const CochainComplexSpec& spec);
ComplexReport complex_report(const CochainComplexSpec& spec);

Vector pack_pair(const CocyclePair& p);
CocyclePair unpack_pair(const CochainComplexSpec& spec, int n, const Vector& v);
Vector cocycle_residual(const CochainComplexSpec& spec, int n, const CocyclePair& pair);

// Cocycles of degree n whose classes form a basis of H^n for the spec's flavor.
std::vector<Vector> cohomology_representatives(const CochainComplexSpec& spec, int n);
// Some x with differential(n - 1) x = target, or nullopt when target is not a coboundary.
std::optional<Vector> coboundary_preimage(const CochainComplexSpec& spec, int n, const Vector& target);

// Natural injection C^n_DiffLie(g, V) -> C^n_DiffLie(g |x V, adjoint).
Matrix embedding_into_extension(const CochainComplexSpec& small, int n);

}  // namespace difflie

#endif
