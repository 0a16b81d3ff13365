#include "difflie/graded.hpp"

#include <algorithm>

#include "difflie/combinatorics.hpp"

namespace difflie {

GradedVectorSpace::GradedVectorSpace(std::vector<std::pair<int, int>> components)
    : components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].second < 0) throw std::invalid_argument("negative component dimension");
    for (std::size_t j = 0; j < i; ++j)
      if (components_[j].first == components_[i].first) throw std::invalid_argument("repeated degree");
    for (int k = 0; k < components_[i].second; ++k) basis_degrees_.push_back(components_[i].first);
  }
}

GradedVectorSpace GradedVectorSpace::shifted(int by) const {
  auto comps = components_;
  for (auto& c : comps) c.first += by;
  return GradedVectorSpace(comps);
}

int GradedVectorSpace::degree_of_vector(const Vector& v, int fallback) const {
  bool found = false;
  int deg = fallback;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    int d = basis_degrees_[i];
    if (found && d != deg) throw NonHomogeneousInput();
    found = true;
    deg = d;
  }
  return deg;
}

GradedMap::GradedMap(GradedVectorSpace space, int arity, int degree, Symmetry kind)
    : space_(std::move(space)), arity_(arity), degree_(degree), kind_(kind) {}

int GradedMap::normalise(std::vector<int>& indices) const {
  // Insertion sort; each adjacent swap of x, y contributes (-1)^{|x||y|}, times -1 for exterior.
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
      int a = space_.degree_of(indices[j - 1]);
      int b = space_.degree_of(indices[j]);
      if ((a * b) % 2 != 0) sign = -sign;
      if (kind_ == Symmetry::Exterior) sign = -sign;
      std::swap(indices[j - 1], indices[j]);
    }
  }
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i - 1] != indices[i]) continue;
    bool odd = space_.degree_of(indices[i]) % 2 != 0;
    if (kind_ == Symmetry::Symmetric && odd) return 0;
    if (kind_ == Symmetry::Exterior && !odd) return 0;
  }
  return sign;
}

void GradedMap::set(const std::vector<int>& indices, const Vector& value) {
  if (static_cast<int>(indices.size()) != arity_) throw ArityMismatch("graded set: tuple length");
  if (static_cast<int>(value.size()) != space_.dim()) throw DimensionMismatch("graded set: value length");
  std::vector<int> sorted = indices;
  int s = normalise(sorted);
  if (s == 0) {
    if (!difflie::is_zero(value)) throw std::invalid_argument("graded set: tuple vanishes in the algebra");
    return;
  }
  int in_deg = 0;
  for (int i : sorted) in_deg += space_.degree_of(i);
  for (std::size_t k = 0; k < value.size(); ++k)
    if (sgn(value[k]) != 0 && space_.degree_of(static_cast<int>(k)) != in_deg + degree_)
      throw std::invalid_argument("graded set: value has the wrong degree");
  Vector v = (s > 0) ? value : scale(-1, value);
  if (difflie::is_zero(v))
    table_.erase(sorted);
  else
    table_[sorted] = v;
}

void GradedMap::add_on_basis(Vector& out, const Scalar& c, const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != arity_) throw ArityMismatch("graded evaluation: wrong number of arguments");
  std::vector<int> sorted = indices;
  int s = normalise(sorted);
  if (s == 0) return;
  auto it = table_.find(sorted);
  if (it == table_.end()) return;
  axpy(out, s > 0 ? c : Scalar(-c), it->second);
}

Vector GradedMap::on_basis(const std::vector<int>& indices) const {
  Vector out(static_cast<std::size_t>(space_.dim()), Scalar(0));
  add_on_basis(out, 1, indices);
  return out;
}

namespace {

void expand(const GradedMap& f, const std::vector<Vector>& args, std::size_t pos, std::vector<int>& picked,
            const Scalar& c, Vector& out) {
  if (pos == args.size()) {
    f.add_on_basis(out, c, picked);
    return;
  }
  for (std::size_t i = 0; i < args[pos].size(); ++i) {
    if (sgn(args[pos][i]) == 0) continue;
    picked.push_back(static_cast<int>(i));
    expand(f, args, pos + 1, picked, c * args[pos][i], out);
    picked.pop_back();
  }
}

}  // namespace

Vector GradedMap::evaluate(const std::vector<Vector>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw ArityMismatch("graded evaluation: wrong number of arguments");
  for (const auto& a : args) {
    if (static_cast<int>(a.size()) != space_.dim()) throw DimensionMismatch("graded evaluation: argument length");
    space_.degree_of_vector(a);
  }
  Vector out(static_cast<std::size_t>(space_.dim()), Scalar(0));
  std::vector<int> picked;
  expand(*this, args, 0, picked, 1, out);
  return out;
}

GradedMap GradedMap::operator+(const GradedMap& other) const {
  if (arity_ != other.arity_ || degree_ != other.degree_ || kind_ != other.kind_ || space_.dim() != other.space_.dim())
    throw DimensionMismatch("graded map sum shapes");
  GradedMap r = *this;
  for (const auto& [key, v] : other.table_) {
    auto it = r.table_.find(key);
    if (it == r.table_.end()) {
      r.table_[key] = v;
    } else {
      axpy(it->second, 1, v);
      if (difflie::is_zero(it->second)) r.table_.erase(it);
    }
  }
  return r;
}

GradedMap GradedMap::scaled(const Scalar& a) const {
  GradedMap r = *this;
  if (sgn(a) == 0) {
    r.table_.clear();
    return r;
  }
  for (auto& [key, v] : r.table_) v = scale(a, v);
  return r;
}

GradedMap GradedMap::operator-(const GradedMap& other) const { return *this + other.scaled(-1); }

bool GradedMap::is_zero() const { return table_.empty(); }

bool GradedMap::operator==(const GradedMap& other) const {
  return arity_ == other.arity_ && degree_ == other.degree_ && kind_ == other.kind_ && table_ == other.table_;
}

std::vector<std::vector<int>> sorted_tuples(const GradedVectorSpace& space, int arity, Symmetry kind) {
  std::vector<std::vector<int>> out;
  GradedMap probe(space, arity, 0, kind);
  std::vector<int> t(static_cast<std::size_t>(arity), 0);
  const int n = space.dim();
  if (arity == 0) return {{}};
  if (n == 0) return out;
  while (true) {
    std::vector<int> copy = t;
    if (probe.normalise(copy) != 0) out.push_back(t);
    int i = arity - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == n - 1) --i;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < arity; ++j) t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

int suspension_sign(const GradedVectorSpace& v, const std::vector<int>& tuple) {
  const int n = static_cast<int>(tuple.size());
  long e = 0;
  for (int i = 0; i < n; ++i) e += static_cast<long>(n - 1 - i) * v.degree_of(tuple[static_cast<std::size_t>(i)]);
  return e % 2 == 0 ? 1 : -1;
}

}  // namespace

GradedMap suspend_alt_to_sym(const GradedMap& f) {
  if (f.kind() != Symmetry::Exterior) throw std::invalid_argument("suspend expects an exterior map");
  GradedMap out(f.space().suspension(), f.arity(), f.degree() - 1 + f.arity(), Symmetry::Symmetric);
  for (const auto& [tuple, value] : f.table()) {
    int s = suspension_sign(f.space(), tuple);
    out.set(tuple, s > 0 ? value : scale(-1, value));
  }
  return out;
}

GradedMap desuspend_sym_to_alt(const GradedMap& f) {
  if (f.kind() != Symmetry::Symmetric) throw std::invalid_argument("desuspend expects a symmetric map");
  GradedVectorSpace base = f.space().shifted(1);
  GradedMap out(base, f.arity(), f.degree() + 1 - f.arity(), Symmetry::Exterior);
  for (const auto& [tuple, value] : f.table()) {
    int s = suspension_sign(base, tuple);
    out.set(tuple, s > 0 ? value : scale(-1, value));
  }
  return out;
}

GradedMap graded_from_alt(const AltMap& f) {
  if (f.src_dim() != f.tgt_dim()) throw DimensionMismatch("graded_from_alt needs an endomorphism-type map");
  GradedMap out(GradedVectorSpace::concentrated(0, f.src_dim()), f.arity(), 0, Symmetry::Exterior);
  for (std::size_t t = 0; t < f.num_tuples(); ++t) {
    Vector v = f.at(t);
    if (!difflie::is_zero(v)) out.set(f.tuple(t), v);
  }
  return out;
}

AltMap alt_from_graded(const GradedMap& f) {
  for (int d : f.space().basis_degrees())
    if (d != 0) throw std::invalid_argument("alt_from_graded needs a space in degree 0");
  AltMap out(f.arity(), f.space().dim(), f.space().dim());
  for (const auto& [tuple, value] : f.table()) out.set(tuple, value);
  return out;
}

}  // namespace difflie
