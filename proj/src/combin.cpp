#include <gtcodes/combin.hpp>

#include <numeric>

#include <gtcodes/error.hpp>

namespace gtcodes {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i is integral at every step.
        std::uint64_t num = n - k + i;
        if (r > kCountCap / num)
            return kCountCap;
        r = r * num / i;
    }
    return r < kCountCap ? r : kCountCap;
}

std::vector<std::uint32_t> first_combination(std::uint32_t k) {
    std::vector<std::uint32_t> c(k);
    std::iota(c.begin(), c.end(), 0u);
    return c;
}

bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
    const std::uint32_t k = static_cast<std::uint32_t>(c.size());
    if (k == 0)
        return false;
    std::uint32_t i = k;
    while (i-- > 0) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::uint32_t j = i + 1; j < k; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::uint32_t> unrank_combination(std::uint64_t rank,
                                              std::uint32_t n,
                                              std::uint32_t k) {
    if (rank >= binomial(n, k))
        throw DomainError("combination rank out of range");
    std::vector<std::uint32_t> c(k);
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
        // Smallest valid value for position i such that enough combinations
        // of the remaining positions exist past it.
        for (std::uint32_t v = next;; ++v) {
            std::uint64_t block = binomial(n - v - 1, k - i - 1);
            if (rank < block) {
                c[i] = v;
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
    return c;
}

} // namespace gtcodes
