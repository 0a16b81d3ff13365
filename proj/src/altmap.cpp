#include "difflie/altmap.hpp"

#include "difflie/combinatorics.hpp"

namespace difflie {

AltMap::AltMap(int arity, int src_dim, int tgt_dim)
    : arity_(arity), src_dim_(src_dim), tgt_dim_(tgt_dim) {
  if (arity < 0 || src_dim < 0 || tgt_dim < 0) throw std::invalid_argument("negative AltMap shape");
  long t = binomial(src_dim, arity);
  num_tuples_ = static_cast<std::size_t>(t);
  coeffs_.assign(num_tuples_ * static_cast<std::size_t>(tgt_dim), Scalar(0));
}

AltMap AltMap::from_matrix(const Matrix& m) {
  AltMap f(1, static_cast<int>(m.cols()), static_cast<int>(m.rows()));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) f.coeff(c, static_cast<int>(r)) = m(r, c);
  return f;
}

Matrix AltMap::to_matrix() const {
  if (arity_ != 1) throw ArityMismatch("to_matrix needs arity 1");
  Matrix m(static_cast<std::size_t>(tgt_dim_), static_cast<std::size_t>(src_dim_));
  for (int c = 0; c < src_dim_; ++c)
    for (int r = 0; r < tgt_dim_; ++r) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = coeff(static_cast<std::size_t>(c), r);
  return m;
}

Vector AltMap::at(std::size_t tuple_index) const {
  auto first = coeffs_.begin() + static_cast<long>(tuple_index * static_cast<std::size_t>(tgt_dim_));
  return Vector(first, first + tgt_dim_);
}

void AltMap::set(const std::vector<int>& increasing, const Vector& value) {
  if (static_cast<int>(increasing.size()) != arity_) throw ArityMismatch("set: tuple length");
  if (static_cast<int>(value.size()) != tgt_dim_) throw DimensionMismatch("set: value length");
  std::size_t idx = tuple_rank(src_dim_, increasing);
  for (int k = 0; k < tgt_dim_; ++k) coeff(idx, k) = value[static_cast<std::size_t>(k)];
}

std::vector<int> AltMap::tuple(std::size_t tuple_index) const {
  // Unrank in lexicographic order.
  std::vector<int> t;
  long r = static_cast<long>(tuple_index);
  int v = 0;
  for (int i = 0; i < arity_; ++i) {
    while (true) {
      long block = binomial(src_dim_ - 1 - v, arity_ - 1 - i);
      if (r < block) break;
      r -= block;
      ++v;
    }
    t.push_back(v);
    ++v;
  }
  return t;
}

Vector AltMap::on_basis(const std::vector<int>& indices) const {
  Vector out(static_cast<std::size_t>(tgt_dim_), Scalar(0));
  add_on_basis(out, 1, indices);
  return out;
}

void AltMap::add_on_basis(Vector& out, const Scalar& c, const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != arity_) throw ArityMismatch("on_basis: wrong number of arguments");
  std::vector<int> sorted = indices;
  int s = sort_with_sign(sorted);
  if (s == 0 || sgn(c) == 0) return;
  std::size_t idx = tuple_rank(src_dim_, sorted);
  const std::size_t base = idx * static_cast<std::size_t>(tgt_dim_);
  for (int k = 0; k < tgt_dim_; ++k) {
    const Scalar& v = coeffs_[base + static_cast<std::size_t>(k)];
    if (sgn(v) == 0) continue;
    if (s > 0)
      out[static_cast<std::size_t>(k)] += c * v;
    else
      out[static_cast<std::size_t>(k)] -= c * v;
  }
}

namespace {

void expand(const AltMap& f, const std::vector<Vector>& args, std::size_t pos, std::vector<int>& picked,
            const Scalar& c, Vector& out) {
  if (pos == args.size()) {
    f.add_on_basis(out, c, picked);
    return;
  }
  for (std::size_t i = 0; i < args[pos].size(); ++i) {
    if (sgn(args[pos][i]) == 0) continue;
    bool repeated = false;
    for (int p : picked) repeated = repeated || p == static_cast<int>(i);
    if (repeated) continue;
    picked.push_back(static_cast<int>(i));
    expand(f, args, pos + 1, picked, c * args[pos][i], out);
    picked.pop_back();
  }
}

}  // namespace

Vector AltMap::evaluate(const std::vector<Vector>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw ArityMismatch("evaluate_alt: wrong number of arguments");
  for (const auto& a : args)
    if (static_cast<int>(a.size()) != src_dim_) throw DimensionMismatch("evaluate_alt: argument length");
  Vector out(static_cast<std::size_t>(tgt_dim_), Scalar(0));
  std::vector<int> picked;
  expand(*this, args, 0, picked, 1, out);
  return out;
}

AltMap AltMap::from_flat(int arity, int src_dim, int tgt_dim, const Vector& flat) {
  AltMap f(arity, src_dim, tgt_dim);
  if (flat.size() != f.coeffs_.size()) throw DimensionMismatch("from_flat length");
  f.coeffs_ = flat;
  return f;
}

bool AltMap::same_shape(const AltMap& other) const {
  return arity_ == other.arity_ && src_dim_ == other.src_dim_ && tgt_dim_ == other.tgt_dim_;
}

AltMap AltMap::operator+(const AltMap& other) const {
  AltMap r = *this;
  r += other;
  return r;
}

AltMap& AltMap::operator+=(const AltMap& other) {
  if (!same_shape(other)) throw DimensionMismatch("AltMap sum shapes");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

AltMap AltMap::operator-(const AltMap& other) const { return *this + (-other); }

AltMap AltMap::operator-() const { return scaled(-1); }

AltMap AltMap::scaled(const Scalar& a) const {
  AltMap r = *this;
  for (auto& x : r.coeffs_) x *= a;
  return r;
}

bool AltMap::operator==(const AltMap& other) const {
  return same_shape(other) && coeffs_ == other.coeffs_;
}

AltMap post_compose(const Matrix& m, const AltMap& f) {
  if (static_cast<int>(m.cols()) != f.tgt_dim()) throw DimensionMismatch("post_compose shapes");
  AltMap r(f.arity(), f.src_dim(), static_cast<int>(m.rows()));
  for (std::size_t t = 0; t < f.num_tuples(); ++t) {
    Vector v = m * f.at(t);
    for (std::size_t k = 0; k < v.size(); ++k) r.coeff(t, static_cast<int>(k)) = v[k];
  }
  return r;
}

AltMap pre_compose(const AltMap& f, const Matrix& a) {
  if (static_cast<int>(a.rows()) != f.src_dim()) throw DimensionMismatch("pre_compose shapes");
  AltMap r(f.arity(), static_cast<int>(a.cols()), f.tgt_dim());
  for (std::size_t t = 0; t < r.num_tuples(); ++t) {
    std::vector<Vector> args;
    for (int i : r.tuple(t)) args.push_back(a.column(static_cast<std::size_t>(i)));
    Vector v = f.evaluate(args);
    for (std::size_t k = 0; k < v.size(); ++k) r.coeff(t, static_cast<int>(k)) = v[k];
  }
  return r;
}

}  // namespace difflie
