// Test-only oracles, independent of the library's implementation paths.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace oracles {

/// Square root mod p by exhaustive search over all residues; smaller root.
inline std::optional<uint64_t> sqrt_by_search(uint64_t a, uint64_t p) {
    a %= p;
    for (uint64_t r = 0; r <= p / 2; ++r) {
        if (r * r % p == a)
            return r;
    }
    return std::nullopt;
}

/// Schoolbook product of coefficient vectors mod p (lowest degree first).
inline std::vector<uint64_t> mul_by_hand(const std::vector<uint64_t>& f,
                                         const std::vector<uint64_t>& g, uint64_t p) {
    if (f.empty() || g.empty())
        return {};
    std::vector<uint64_t> out(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            out[i + j] = (out[i + j] + f[i] % p * (g[j] % p)) % p;
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

/// Row i of a skew-circulant built the direct way: start from the
/// generating vector and repeatedly multiply by x mod (x^m + 1), i.e.
/// rotate right and negate the wrapped coefficient.
inline std::vector<std::vector<uint64_t>> skew_rows_by_shifting(std::vector<uint64_t> row,
                                                                uint64_t p) {
    std::vector<std::vector<uint64_t>> rows;
    const size_t m = row.size();
    for (size_t i = 0; i < m; ++i) {
        rows.push_back(row);
        std::vector<uint64_t> next(m);
        next[0] = row[m - 1] == 0 ? 0 : p - row[m - 1];
        for (size_t k = 1; k < m; ++k)
            next[k] = row[k - 1];
        row = std::move(next);
    }
    return rows;
}

/// True when some 0 <= j < 2^level satisfies -j + k = j mod 2^level, the
/// brute-force reading of "the orbit contains a conjugation-fixed prime".
inline bool fixed_prime_by_search(uint64_t k, unsigned level) {
    const uint64_t order = uint64_t{1} << level;
    for (uint64_t j = 0; j < order; ++j) {
        if ((order - j + k) % order == j)
            return true;
    }
    return false;
}

} // namespace oracles
