#include "difflie/scalar.hpp"

#include <stdexcept>

namespace difflie {

Scalar parse_scalar(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ') t.push_back(c);
  }
  if (t.empty()) throw std::invalid_argument("empty scalar");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool slash = false;
  if (i == t.size()) throw std::invalid_argument("malformed scalar: " + text);
  for (std::size_t k = i; k < t.size(); ++k) {
    if (t[k] == '/') {
      if (slash || k == i || k + 1 == t.size()) throw std::invalid_argument("malformed scalar: " + text);
      slash = true;
    } else if (t[k] < '0' || t[k] > '9') {
      throw std::invalid_argument("malformed scalar: " + text);
    }
  }
  if (t[0] == '+') t.erase(0, 1);
  Scalar x;
  if (x.set_str(t, 10) != 0) throw std::invalid_argument("malformed scalar: " + text);
  if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  x.canonicalize();
  return x;
}

std::string to_string(const Scalar& x) { return x.get_str(10); }

Scalar power(const Scalar& base, int exponent) {
  if (exponent < 0) return power(Scalar(1) / base, -exponent);
  Scalar r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

Scalar factorial(int n) {
  Scalar r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Scalar sign_power(long exponent) { return (exponent % 2 == 0) ? Scalar(1) : Scalar(-1); }

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += a * x[i];
  }
}

Vector add(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, 1, b);
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, -1, b);
  return r;
}

Vector scale(const Scalar& a, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= a;
  return r;
}

}  // namespace difflie
