#ifndef DIFFLIE_JSON_IO_HPP
#define DIFFLIE_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "difflie/deformations.hpp"
#include "difflie/extensions.hpp"
#include "difflie/homotopy.hpp"
#include "difflie/lie.hpp"
#include "difflie/linfty.hpp"

namespace difflie {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Scalars are "p/q" strings, or "p" when q = 1; integers are accepted on input.
Json to_json(const Scalar& a);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);  // list of rows
Scalar scalar_from_json(const Json& j);
Vector vector_from_json(const Json& j, int dim);
Matrix matrix_from_json(const Json& j, int rows, int cols);

// {"arity": k, "coeffs": {"i1<...<ik": [vector]}}, 1-based, zero entries omitted.
Json to_json(const AltMap& f);
AltMap altmap_from_json(const Json& j, int src_dim, int tgt_dim);

// {"dim", "weight", "brackets": [[i, j, [..]]], "d": [[..]]}; "d" and "weight" default to zero.
Json to_json(const DiffLieAlgebra& A);
DiffLieAlgebra diff_lie_from_json(const Json& j);
// {"rep_dim", "rho": {"i": [[..]]}, "dV"}; falls back to the adjoint representation when absent.
bool has_representation(const Json& j);
Json to_json(const DiffRepresentation& rep);
DiffRepresentation representation_from_json(const Json& j, const DiffLieAlgebra& A);

// {"g": algebra, "h": algebra, "rho": {"i": [[..]]}, "D": [[..]], "weight"}.
struct RelativeInput {
  LieActTriple triple;
  Matrix D;
  Scalar weight;
};
RelativeInput relative_from_json(const Json& j);

// Algebra plus "deformation": {"order", "mu": [orders 1..N], "d": [orders 1..N]}.
Json to_json(const TruncatedDeformation& D);
TruncatedDeformation deformation_from_json(const Json& j);
Json to_json(const FormalIso& Phi);

// {"components": [[degree, dim]], "weight", "mu": [{"i,j": [..]}], "D": [...]}, list position = arity - 1.
Json to_json(const GradedMap& f);
Json to_json(const HomotopyDiffLie& H);
HomotopyDiffLie homotopy_from_json(const Json& j);

// {"base": algebra, "v_dim", "total": algebra, "i", "p", "s"}.
Json to_json(const AbelianExtension& E);
AbelianExtension extension_from_json(const Json& j);

// [{"kind": "shifted" | "plain", "map": cochain}].
Json to_json(const FormalElement& x);

// Residual list as an array of vectors.
Json to_json(const Residuals& r);

}  // namespace difflie

#endif
