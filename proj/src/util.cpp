#include "sdncc/util.hpp"

#include <stdexcept>

namespace sdncc {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> unrank_combination(int n, int k, BigInt rank) {
  if (rank < 0 || rank >= binomial(n, k))
    throw std::out_of_range("unrank_combination: rank out of range");
  std::vector<int> idx(static_cast<size_t>(k));
  int next = 0;
  for (int i = 0; i < k; ++i) {
    // Count how many combinations start with each candidate position.
    for (int v = next;; ++v) {
      BigInt with_v = binomial(n - v - 1, k - i - 1);
      if (rank < with_v) {
        idx[static_cast<size_t>(i)] = v;
        next = v + 1;
        break;
      }
      rank -= with_v;
    }
  }
  return idx;
}

}  // namespace sdncc
