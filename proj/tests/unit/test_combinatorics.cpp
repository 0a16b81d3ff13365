#include "doctest.h"

#include <algorithm>
#include <random>

#include "difflie/combinatorics.hpp"

using namespace difflie;

namespace {

// Brute-force oracle: all permutations increasing on each block.
std::vector<Permutation> shuffles_oracle(const std::vector<int>& blocks) {
  int n = 0;
  for (int b : blocks) n += b;
  Permutation p = identity_permutation(n);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    int off = 0;
    for (int b : blocks) {
      for (int k = 1; k < b; ++k) ok = ok && p[static_cast<std::size_t>(off + k - 1)] < p[static_cast<std::size_t>(off + k)];
      off += b;
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Parity from cycle decomposition.
int signature_oracle(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  int parity = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    parity += len - 1;
  }
  return parity % 2 == 0 ? 1 : -1;
}

// Koszul sign by explicit bubble sort of the reordered word x_{sigma(1)}..x_{sigma(n)} back to x_1..x_n.
int koszul_oracle(const Permutation& sigma, const DegreeVector& degs) {
  std::vector<int> word = sigma;
  int sign = 1;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = 0; j + 1 < word.size() - i; ++j)
      if (word[j] > word[j + 1]) {
        if ((degs[static_cast<std::size_t>(word[j])] * degs[static_cast<std::size_t>(word[j + 1])]) % 2 != 0) sign = -sign;
        std::swap(word[j], word[j + 1]);
      }
  return sign;
}

}  // namespace

TEST_CASE("shuffle examples") {
  auto s11 = shuffles({1, 1});
  CHECK(s11.size() == 2);
  CHECK(s11[0] == Permutation{0, 1});
  CHECK(s11[1] == Permutation{1, 0});
  CHECK(shuffles_oracle({2, 1}).size() == 3);
  CHECK(shuffles({2, 1}).size() == 3);
  CHECK(shuffles({0, 3}).size() == 1);
  CHECK(shuffles({0, 3})[0] == identity_permutation(3));
}

TEST_CASE("shuffles agree with brute force and multinomials") {
  std::vector<std::vector<int>> cases = {{1, 2}, {2, 2}, {1, 1, 1}, {2, 1, 2}, {3, 0, 2}, {1, 2, 1, 1}};
  for (const auto& c : cases) {
    auto got = shuffles(c);
    auto want = shuffles_oracle(c);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(static_cast<long>(got.size()) == multinomial(c));
  }
}

TEST_CASE("pointed shuffle examples") {
  CHECK(pointed_shuffles({1, 1}).size() == 1);
  CHECK(pointed_shuffles({1, 1, 1}).size() == 1);
  auto p22 = pointed_shuffles({2, 2});
  CHECK(p22.size() == 3);
  for (const auto& s : p22) CHECK(s[0] == 0);
}

TEST_CASE("signature examples and oracle") {
  CHECK(signature(identity_permutation(4)) == 1);
  CHECK(signature({1, 0, 2}) == -1);
  CHECK(signature_oracle({1, 2, 0}) == 1);
  CHECK(signature({1, 2, 0}) == 1);
  Permutation p = identity_permutation(5);
  do {
    CHECK(signature(p) == signature_oracle(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("koszul sign examples") {
  CHECK(koszul_sign({2, 0, 1}, {0, 0, 0}) == 1);
  CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
  CHECK(koszul_sign({1, 0}, {1, 2}) == 1);
  CHECK(chi_sign({0, 1}, {0, 0}) == 1);
  CHECK(chi_sign({1, 0}, {0, 0}) == -1);
  CHECK(chi_sign({1, 0}, {1, 1}) == 1);
  CHECK_THROWS_AS(koszul_sign({1, 0}, {1}), LengthMismatch);
}

TEST_CASE("koszul sign properties on random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    DegreeVector x(static_cast<std::size_t>(n));
    for (auto& d : x) d = deg(rng);
    Permutation sigma = identity_permutation(n), tau = identity_permutation(n);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::shuffle(tau.begin(), tau.end(), rng);
    CHECK(koszul_sign(sigma, x) == koszul_oracle(sigma, x));
    CHECK(chi_sign(sigma, x) == koszul_sign(sigma, x) * signature(sigma));
    // Reordering by tau then by sigma equals reordering by tau o sigma.
    DegreeVector x_tau(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) x_tau[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(tau[static_cast<std::size_t>(k)])];
    CHECK(koszul_sign(compose(tau, sigma), x) == koszul_sign(sigma, x_tau) * koszul_sign(tau, x));
  }
}

TEST_CASE("tuple ranking") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      auto ts = increasing_tuples(n, k);
      CHECK(static_cast<long>(ts.size()) == binomial(n, k));
      for (std::size_t i = 0; i < ts.size(); ++i) CHECK(tuple_rank(n, ts[i]) == i);
    }
  std::vector<int> v{3, 1, 2};
  CHECK(sort_with_sign(v) == 1);
  std::vector<int> w{2, 1};
  CHECK(sort_with_sign(w) == -1);
  std::vector<int> r{1, 2, 1};
  CHECK(sort_with_sign(r) == 0);
}
