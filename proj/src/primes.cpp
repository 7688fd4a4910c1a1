#include "rns/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace rns {

std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
    if (limit < 2) throw std::domain_error("primes_below requires limit >= 2");
    std::vector<bool> composite(limit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < limit; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

std::vector<std::uint32_t> first_primes(std::size_t n) {
    if (n == 0) throw std::domain_error("first_primes requires n >= 1");
    // p_n < n(ln n + ln ln n) for n >= 6; small n handled by the floor of 16
    double nd = static_cast<double>(n);
    std::uint32_t bound = 16;
    if (n >= 6) {
        double b = nd * (std::log(nd) + std::log(std::log(nd))) + 1.0;
        bound = static_cast<std::uint32_t>(b) + 1;
    }
    for (;;) {
        auto primes = primes_below(bound);
        if (primes.size() >= n) {
            primes.resize(n);
            return primes;
        }
        bound *= 2;
    }
}

}  // namespace rns
