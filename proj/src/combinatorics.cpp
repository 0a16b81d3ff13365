#include "difflie/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace difflie {

namespace {

void next_block(const std::vector<int>& blocks, std::size_t b, std::vector<int>& free_positions,
                Permutation& sigma, int offset, std::vector<Permutation>& out) {
  if (b == blocks.size()) {
    out.push_back(sigma);
    return;
  }
  const int size = blocks[b];
  const int avail = static_cast<int>(free_positions.size());
  for (const auto& pick : increasing_tuples(avail, size)) {
    std::vector<int> rest;
    std::vector<bool> taken(static_cast<std::size_t>(avail), false);
    for (int k = 0; k < size; ++k) {
      sigma[static_cast<std::size_t>(offset + k)] = free_positions[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])];
      taken[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])] = true;
    }
    for (int k = 0; k < avail; ++k) {
      if (!taken[static_cast<std::size_t>(k)]) rest.push_back(free_positions[static_cast<std::size_t>(k)]);
    }
    next_block(blocks, b + 1, rest, sigma, offset + size, out);
  }
}

}  // namespace

std::vector<Permutation> shuffles(const std::vector<int>& blocks) {
  int n = 0;
  for (int b : blocks) {
    if (b < 0) throw std::invalid_argument("negative shuffle block");
    n += b;
  }
  std::vector<int> positions(static_cast<std::size_t>(n));
  std::iota(positions.begin(), positions.end(), 0);
  Permutation sigma(static_cast<std::size_t>(n), 0);
  std::vector<Permutation> out;
  next_block(blocks, 0, positions, sigma, 0, out);
  return out;
}

std::vector<Permutation> pointed_shuffles(const std::vector<int>& blocks) {
  for (int b : blocks) {
    if (b < 1) throw std::invalid_argument("pointed shuffle blocks must be positive");
  }
  std::vector<Permutation> out;
  for (auto& sigma : shuffles(blocks)) {
    bool ok = true;
    int offset = 0;
    int last = -1;
    for (int b : blocks) {
      int leader = sigma[static_cast<std::size_t>(offset)];
      if (leader < last) {
        ok = false;
        break;
      }
      last = leader;
      offset += b;
    }
    if (ok) out.push_back(std::move(sigma));
  }
  return out;
}

int signature(const Permutation& sigma) {
  int inversions = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

int koszul_sign(const Permutation& sigma, const DegreeVector& degs) {
  if (sigma.size() != degs.size()) throw LengthMismatch();
  long exponent = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j])
        exponent += static_cast<long>(degs[static_cast<std::size_t>(sigma[i])]) * degs[static_cast<std::size_t>(sigma[j])];
  return exponent % 2 == 0 ? 1 : -1;
}

int chi_sign(const Permutation& sigma, const DegreeVector& degs) {
  return koszul_sign(sigma, degs) * signature(sigma);
}

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw LengthMismatch();
  Permutation out(a.size());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] = a[static_cast<std::size_t>(b[k])];
  return out;
}

Permutation inverse(const Permutation& sigma) {
  Permutation out(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) out[static_cast<std::size_t>(sigma[k])] = static_cast<int>(k);
  return out;
}

bool is_permutation(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (int x : sigma) {
    if (x < 0 || static_cast<std::size_t>(x) >= sigma.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long multinomial(const std::vector<int>& blocks) {
  long r = 1;
  int n = 0;
  for (int b : blocks) {
    n += b;
    r *= binomial(n, b);
  }
  return r;
}

std::vector<std::vector<int>> increasing_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> t(static_cast<std::size_t>(k));
  std::iota(t.begin(), t.end(), 0);
  while (true) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::size_t tuple_rank(int n, const std::vector<int>& tuple) {
  const int k = static_cast<int>(tuple.size());
  long r = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < tuple[static_cast<std::size_t>(i)]; ++v) r += binomial(n - 1 - v, k - 1 - i);
    prev = tuple[static_cast<std::size_t>(i)];
  }
  return static_cast<std::size_t>(r);
}

int sort_with_sign(std::vector<int>& items) {
  int sign = 1;
  for (std::size_t i = 1; i < items.size(); ++i) {
    for (std::size_t j = i; j > 0 && items[j - 1] >= items[j]; --j) {
      if (items[j - 1] == items[j]) return 0;
      std::swap(items[j - 1], items[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < items.size(); ++i)
    if (items[i - 1] == items[i]) return 0;
  return sign;
}

}  // namespace difflie
