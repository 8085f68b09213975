#ifndef SDNCC_UTIL_HPP
#define SDNCC_UTIL_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdncc {

using BigInt = boost::multiprecision::cpp_int;

// SplitMix64 step; used to derive independent RNG streams from one seed.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

BigInt binomial(int n, int k);

// Advances idx (strictly increasing positions into 0..n-1) to the next
// combination in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<int>& idx, int n);

// Inverse of the lexicographic enumeration: the rank-th k-subset of 0..n-1.
std::vector<int> unrank_combination(int n, int k, BigInt rank);

}  // namespace sdncc

#endif
