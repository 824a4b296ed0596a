#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "qseries/k5.hpp"

namespace qseries {

enum class Kernel { naive, karatsuba };

/// Slot count below which Karatsuba recursion falls back to the naive loop.
inline constexpr std::size_t kKaratsubaCutoff = 32;

namespace kernels {

/// Truncated Cauchy product of integer coefficient vectors: the first n
/// slots of a*b. Parallel over output slots.
std::vector<mpz_class> mul_naive(std::span<const mpz_class> a, std::span<const mpz_class> b,
                                 std::size_t n);

/// Same contract as mul_naive; Karatsuba recursion with OpenMP tasks on
/// the upper levels.
std::vector<mpz_class> mul_karatsuba(std::span<const mpz_class> a, std::span<const mpz_class> b,
                                     std::size_t n);

/// Serial schoolbook product directly over K5. Reference for the lifted
/// kernels above; kept deliberately simple.
std::vector<K5> mul_reference(std::span<const K5> a, std::span<const K5> b, std::size_t n);

/// Product of two K5 coefficient vectors through one of the integer
/// kernels: coefficients are scaled to a common denominator and the four
/// integer products are assembled back into K5.
std::vector<K5> mul_k5(std::span<const K5> a, std::span<const K5> b, std::size_t n, Kernel kernel);

}  // namespace kernels
}  // namespace qseries
