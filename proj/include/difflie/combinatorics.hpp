#ifndef DIFFLIE_COMBINATORICS_HPP
#define DIFFLIE_COMBINATORICS_HPP

#include <stdexcept>
#include <vector>

#include "difflie/scalar.hpp"

namespace difflie {

class LengthMismatch : public std::runtime_error {
 public:
  LengthMismatch() : std::runtime_error("permutation and degree vector lengths differ") {}
};

// 0-based images: sigma[k] is the image of position k, so sigma(k+1) = sigma[k] + 1.
using Permutation = std::vector<int>;
using DegreeVector = std::vector<int>;

std::vector<Permutation> shuffles(const std::vector<int>& blocks);
std::vector<Permutation> pointed_shuffles(const std::vector<int>& blocks);

int signature(const Permutation& sigma);
int koszul_sign(const Permutation& sigma, const DegreeVector& degs);
int chi_sign(const Permutation& sigma, const DegreeVector& degs);

Permutation identity_permutation(int n);
Permutation compose(const Permutation& a, const Permutation& b);  // (a*b)(k) = a(b(k))
Permutation inverse(const Permutation& sigma);
bool is_permutation(const Permutation& sigma);

long binomial(int n, int k);
long multinomial(const std::vector<int>& blocks);

// Strictly increasing k-tuples of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> increasing_tuples(int n, int k);
// Lexicographic rank of a strictly increasing tuple among increasing_tuples(n, k).
std::size_t tuple_rank(int n, const std::vector<int>& tuple);

// Sorts in place; returns the signature of the sorting permutation, or 0 on a repeated entry.
int sort_with_sign(std::vector<int>& items);

}  // namespace difflie

#endif
