#ifndef DIFFLIE_ALTMAP_HPP
#define DIFFLIE_ALTMAP_HPP

#include <stdexcept>
#include <vector>

#include "difflie/matrix.hpp"
#include "difflie/scalar.hpp"

namespace difflie {

class ArityMismatch : public std::runtime_error {
 public:
  explicit ArityMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Alternating multilinear map from src^{arity} to tgt, stored on increasing index tuples.
// Arity 0 is allowed and holds a single target vector (a 0-cochain).
class AltMap {
 public:
  AltMap() = default;
  AltMap(int arity, int src_dim, int tgt_dim);

  static AltMap from_matrix(const Matrix& m);  // arity 1
  Matrix to_matrix() const;                    // arity 1 only

  int arity() const { return arity_; }
  int src_dim() const { return src_dim_; }
  int tgt_dim() const { return tgt_dim_; }
  std::size_t num_tuples() const { return num_tuples_; }

  // Coefficient vector at the k-th increasing tuple.
  Vector at(std::size_t tuple_index) const;
  Scalar& coeff(std::size_t tuple_index, int out) {
    return coeffs_[tuple_index * static_cast<std::size_t>(tgt_dim_) + static_cast<std::size_t>(out)];
  }
  const Scalar& coeff(std::size_t tuple_index, int out) const {
    return coeffs_[tuple_index * static_cast<std::size_t>(tgt_dim_) + static_cast<std::size_t>(out)];
  }
  void set(const std::vector<int>& increasing, const Vector& value);
  std::vector<int> tuple(std::size_t tuple_index) const;

  // Value on basis vectors given in any order; alternation supplies the sign.
  Vector on_basis(const std::vector<int>& indices) const;
  void add_on_basis(Vector& out, const Scalar& c, const std::vector<int>& indices) const;
  Vector evaluate(const std::vector<Vector>& args) const;

  // Flat coefficient list (tuple-major), used to build matrices of linear operators on maps.
  const std::vector<Scalar>& flat() const { return coeffs_; }
  static AltMap from_flat(int arity, int src_dim, int tgt_dim, const Vector& flat);
  std::size_t flat_size() const { return coeffs_.size(); }

  AltMap operator+(const AltMap& other) const;
  AltMap operator-(const AltMap& other) const;
  AltMap operator-() const;
  AltMap& operator+=(const AltMap& other);
  AltMap scaled(const Scalar& a) const;
  bool operator==(const AltMap& other) const;
  bool is_zero() const { return difflie::is_zero(coeffs_); }
  bool same_shape(const AltMap& other) const;

 private:
  int arity_ = 0;
  int src_dim_ = 0;
  int tgt_dim_ = 0;
  std::size_t num_tuples_ = 1;
  std::vector<Scalar> coeffs_;
};

// Applies a linear map on the output side: (m . f).
AltMap post_compose(const Matrix& m, const AltMap& f);
// Precomposes each argument with a linear map: f(a x1, ..., a xk).
AltMap pre_compose(const AltMap& f, const Matrix& a);

}  // namespace difflie

#endif
