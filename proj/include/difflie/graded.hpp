#ifndef DIFFLIE_GRADED_HPP
#define DIFFLIE_GRADED_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "difflie/altmap.hpp"
#include "difflie/scalar.hpp"

namespace difflie {

class NonHomogeneousInput : public std::runtime_error {
 public:
  NonHomogeneousInput() : std::runtime_error("input is not homogeneous") {}
};

class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;
  explicit GradedVectorSpace(std::vector<std::pair<int, int>> components);
  static GradedVectorSpace concentrated(int degree, int dim) { return GradedVectorSpace({{degree, dim}}); }

  const std::vector<std::pair<int, int>>& components() const { return components_; }
  int dim() const { return static_cast<int>(basis_degrees_.size()); }
  int degree_of(int basis_index) const { return basis_degrees_[static_cast<std::size_t>(basis_index)]; }
  const std::vector<int>& basis_degrees() const { return basis_degrees_; }
  GradedVectorSpace shifted(int by) const;  // every degree plus `by`
  GradedVectorSpace suspension() const { return shifted(-1); }
  // Degree of a homogeneous vector; throws NonHomogeneousInput; zero vectors report `fallback`.
  int degree_of_vector(const Vector& v, int fallback = 0) const;

 private:
  std::vector<std::pair<int, int>> components_;
  std::vector<int> basis_degrees_;
};

enum class Symmetry { Symmetric, Exterior };

// Multilinear map V^{arity} -> V of a fixed degree, graded symmetric (Koszul sign epsilon)
// or graded exterior (sign chi). Coefficients are kept on sorted basis tuples.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(GradedVectorSpace space, int arity, int degree, Symmetry kind = Symmetry::Symmetric);

  const GradedVectorSpace& space() const { return space_; }
  int arity() const { return arity_; }
  int degree() const { return degree_; }
  Symmetry kind() const { return kind_; }
  const std::map<std::vector<int>, Vector>& table() const { return table_; }

  // Sets the value on a basis tuple in any order; the stored value is normalised.
  void set(const std::vector<int>& indices, const Vector& value);
  Vector on_basis(const std::vector<int>& indices) const;
  void add_on_basis(Vector& out, const Scalar& c, const std::vector<int>& indices) const;
  Vector evaluate(const std::vector<Vector>& args) const;

  GradedMap operator+(const GradedMap& other) const;
  GradedMap operator-(const GradedMap& other) const;
  GradedMap scaled(const Scalar& a) const;
  bool is_zero() const;
  bool operator==(const GradedMap& other) const;

  // Sign s with x_1...x_n = s * x_sorted in the relevant algebra, or 0 when the product vanishes.
  int normalise(std::vector<int>& indices) const;

 private:
  GradedVectorSpace space_;
  int arity_ = 0;
  int degree_ = 0;
  Symmetry kind_ = Symmetry::Symmetric;
  std::map<std::vector<int>, Vector> table_;
};

// All sorted basis tuples of the given arity whose product in S^n (or wedge^n) is nonzero.
std::vector<std::vector<int>> sorted_tuples(const GradedVectorSpace& space, int arity, Symmetry kind);

// Exterior map on V of degree d to the symmetric map on sV of degree d - 1 + n.
GradedMap suspend_alt_to_sym(const GradedMap& f);
GradedMap desuspend_sym_to_alt(const GradedMap& f);
// Ungraded AltMap (V in degree 0) viewed as a graded exterior map.
GradedMap graded_from_alt(const AltMap& f);
AltMap alt_from_graded(const GradedMap& f);

}  // namespace difflie

#endif
