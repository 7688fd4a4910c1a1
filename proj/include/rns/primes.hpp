#pragma once

#include <cstdint>
#include <vector>

namespace rns {

// All primes in [2, limit), ascending. Throws std::domain_error for limit < 2.
std::vector<std::uint32_t> primes_below(std::uint32_t limit);

// The first n primes, ascending. Throws std::domain_error for n == 0.
std::vector<std::uint32_t> first_primes(std::size_t n);

}  // namespace rns
