#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace antnorm {

/// Exact rational probability; GMP keeps it canonical (reduced, positive
/// denominator). Nothing in this module touches floating point.
using Rational = mpq_class;

Rational make_rational(const mpz_class& num, const mpz_class& den);

/// mpz power ell^e.
mpz_class pow_z(uint64_t ell, uint64_t e);

/// Ramification data of the tower: t rational primes ramify (all inert in
/// the quadratic base), s of them 7 mod 8, the other t - s are 3 mod 8.
struct RamificationProfile {
    uint64_t ell;
    unsigned t;
    unsigned s;
};

void validate_profile(const RamificationProfile& p);

/// Exact map rank -> probability. Entries carry nonzero mass only.
using RankDistribution = std::map<unsigned, Rational>;

/// Contribution of level j to the rank of the full symbol matrix, as a
/// two-point distribution:
///   j = 1:  value 1 with probability 1 - ell^-s (0 surely when s = 0,
///           where the level-1 unit is always a local norm);
///   j >= 2: value 2^(j-1) with probability 1 - ell^-(2^(j-2) t).
RankDistribution level_contribution(unsigned j, const RamificationProfile& profile);

/// Distribution of rank A_n^Delta = 2^n t - 1 - sum of the independent
/// level contributions for j = 1..n; n = 0 gives rank 0 surely.
RankDistribution ambiguous_rank_distribution(unsigned n, const RamificationProfile& profile);

/// Probability that every level block has full rank through level n:
/// (1 - ell^-s) * prod_{j=2..n} (1 - ell^-(2^(j-2) t)).
Rational full_rank_probability(unsigned n, const RamificationProfile& profile);

/// Inputs to the ambiguous-class-number formula
/// |C_L^Delta| = h(K) e(L/K) / (n E(L/K)); in this project every entry
/// is a power of ell.
struct ChevalleyInput {
    mpz_class h;          // ell-part of h(K)
    mpz_class e_product;  // product of ramification indices
    uint64_t degree;      // [L:K] = ell
    mpz_class unit_index; // E(L/K)
};

/// Evaluates the formula exactly; throws std::invalid_argument when the
/// quotient is not an integer (inconsistent inputs).
mpz_class chevalley_order(const ChevalleyInput& input);

struct TailBound {
    Rational partial_sum;
    Rational remainder_bound;
};

/// Partial sum of sum_{j>=N} ell^-(2^(j-1) t) over `terms` terms, plus a
/// geometric bound 2 ell^-(2^(N+terms-1) t) dominating the dropped tail.
/// This is the series controlling how often the norm subgroup can keep
/// growing up the tower.
TailBound stabilization_tail_bound(unsigned N, const RamificationProfile& profile,
                                   unsigned terms);

/// Exponent sequence e_0, e_1, ... of the ell-part of the class numbers up
/// a Z_ell-tower, with s the ramified-prime count feeding the mu >= s - 1
/// bound.
struct IwasawaSequence {
    std::vector<int64_t> e;
    uint64_t ell;
    unsigned s;
};

struct IwasawaVerdict {
    bool compatible;
    std::optional<int64_t> mu; // set when the bounds pin mu
    int64_t mu_min;
    int64_t mu_max;
    std::string reason; // explanation for incompatibility, "" otherwise
};

/// Checks the sequence against mu bounds: s - 1 <= mu <= (e_n - e_0)/(ell^n - 1).
/// When the bounds pin mu and e_1 = e_0 + mu (ell - 1), the growth is forced
/// to e_n = e_0 + mu (ell^n - 1) and any later mismatch is incompatible;
/// otherwise the sequence is reported compatible with the surviving range.
IwasawaVerdict iwasawa_compatibility(const IwasawaSequence& seq);

/// Empirical counterpart of ambiguous_rank_distribution: each sample draws
/// uniform symbol assignments for every ramified prime at every level
/// (level 1 as s independent scalars), measures the actual stacked block
/// ranks, and accumulates rank A_n^Delta. Sample i always consumes the
/// stream derived_stream(seed, i), so results are reproducible and
/// independent of how samples are split across threads.
struct MonteCarloResult {
    RamificationProfile profile;
    unsigned n = 0;
    uint64_t samples = 0;
    uint64_t seed = 0;
    std::map<unsigned, uint64_t> counts;

    RankDistribution frequencies() const;
};

MonteCarloResult monte_carlo_distribution(unsigned n, const RamificationProfile& profile,
                                          uint64_t samples, uint64_t seed);

} // namespace antnorm
