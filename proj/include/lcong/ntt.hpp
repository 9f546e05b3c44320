// Exact integer convolution by number-theoretic transforms over several
// word-size primes, recombined with the Chinese remainder theorem.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lcong {

struct NttPrime {
  std::uint32_t p;
  std::uint32_t g;  // primitive root
  int two_adic;     // largest t with 2^t | p-1
};

const std::vector<NttPrime>& ntt_primes();

// Cyclic-free product c[i] = sum_{j} a[j] b[i-j] for 0 <= i < out_len.
// The number of primes is chosen from the coefficient bound so the result is exact.
std::vector<mpz_class> convolve(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                std::size_t out_len);

// Same over int128; throws OverflowError when the coefficient bound exceeds 120 bits.
std::vector<__int128> convolve_i128(const std::vector<__int128>& a, const std::vector<__int128>& b,
                                    std::size_t out_len);

// Schoolbook reference used in tests and for tiny inputs.
std::vector<mpz_class> convolve_naive(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                      std::size_t out_len);

}  // namespace lcong
