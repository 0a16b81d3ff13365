#ifndef DIFFLIE_SCALAR_HPP
#define DIFFLIE_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace difflie {

// Exact rational; gmp keeps values canonical after every arithmetic operation.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

Scalar parse_scalar(const std::string& text);
std::string to_string(const Scalar& x);

Scalar power(const Scalar& base, int exponent);
Scalar factorial(int n);
Scalar sign_power(long exponent);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
void axpy(Vector& y, const Scalar& a, const Vector& x);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& a, const Vector& v);

}  // namespace difflie

#endif
