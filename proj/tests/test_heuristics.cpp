#include <doctest.h>

#include <map>
#include <stdexcept>

#include "antnorm/dichotomy.hpp"
#include "antnorm/heuristics.hpp"

using namespace antnorm;

namespace {

Rational q(long num, long den) {
    Rational out(num, den);
    out.canonicalize();
    return out;
}

// Convolution oracle independent of ambiguous_rank_distribution: walks the
// level contributions with plain nested loops over std::map.
RankDistribution convolve_by_hand(unsigned n, const RamificationProfile& profile) {
    std::map<uint64_t, Rational> acc{{0, Rational(1)}};
    for (unsigned j = 1; j <= n; ++j) {
        std::map<uint64_t, Rational> next;
        for (const auto& [c, pc] : level_contribution(j, profile))
            for (const auto& [v, pv] : acc)
                next[v + c] += pc * pv;
        acc = next;
    }
    const uint64_t top = (uint64_t{1} << n) * profile.t - 1;
    RankDistribution out;
    for (const auto& [v, p] : acc)
        if (p != 0)
            out[static_cast<unsigned>(top - v)] = p;
    return out;
}

} // namespace

TEST_CASE("level contributions at the frozen examples") {
    RankDistribution c1 = level_contribution(1, {3, 1, 1});
    CHECK(c1[1] == q(2, 3));
    CHECK(c1[0] == q(1, 3));

    RankDistribution c1s0 = level_contribution(1, {3, 1, 0});
    CHECK(c1s0.size() == 1);
    CHECK(c1s0[0] == 1);

    RankDistribution c3 = level_contribution(3, {3, 1, 1});
    CHECK(c3[4] == q(8, 9));
    CHECK(c3[0] == q(1, 9));

    CHECK_THROWS_AS(level_contribution(0, {3, 1, 1}), std::invalid_argument);
}

TEST_CASE("rank distributions reproduce the published prediction rows") {
    RankDistribution t1n2 = ambiguous_rank_distribution(2, {3, 1, 1});
    CHECK(t1n2[0] == q(4, 9));
    CHECK(t1n2[1] == q(2, 9));
    CHECK(t1n2[2] == q(2, 9));
    CHECK(t1n2[3] == q(1, 9));

    RankDistribution t2n2 = ambiguous_rank_distribution(2, {3, 1, 0});
    CHECK(t2n2.size() == 2);
    CHECK(t2n2[1] == q(2, 3));
    CHECK(t2n2[3] == q(1, 3));

    RankDistribution t2n1 = ambiguous_rank_distribution(1, {3, 1, 0});
    CHECK(t2n1.size() == 1);
    CHECK(t2n1[1] == 1);

    RankDistribution n0 = ambiguous_rank_distribution(0, {3, 1, 1});
    CHECK(n0.size() == 1);
    CHECK(n0[0] == 1);
}

TEST_CASE("level-3 distribution equals the hand convolution") {
    RankDistribution d = ambiguous_rank_distribution(3, {3, 1, 1});
    CHECK(d[0] == q(32, 81));
    // contributions {0,1} x {0,2} x {0,4} reach every sum, so every rank
    // 0..7 carries mass; rank 6 comes from the lone combination 1+0+0
    CHECK(d.size() == 8);
    CHECK(d[6] == q(2, 81));
    RankDistribution oracle = convolve_by_hand(3, {3, 1, 1});
    CHECK(d == oracle);
}

TEST_CASE("distributions sum to one exactly") {
    for (uint64_t ell : {3ULL, 5ULL, 11ULL}) {
        for (unsigned t : {1u, 2u}) {
            for (unsigned s = 0; s <= t; ++s) {
                for (unsigned n = 0; n <= 5; ++n) {
                    RankDistribution d = ambiguous_rank_distribution(n, {ell, t, s});
                    Rational total(0);
                    const uint64_t top = (uint64_t{1} << n) * t - 1;
                    for (const auto& [rank, p] : d) {
                        total += p;
                        CHECK(rank <= top);
                    }
                    CHECK(total == 1);
                    CHECK(d == convolve_by_hand(n, {ell, t, s}));
                }
            }
        }
    }
}

TEST_CASE("full_rank_probability matches the product form and the minimum-rank mass") {
    CHECK(full_rank_probability(2, {3, 1, 1}) == q(4, 9));
    CHECK(full_rank_probability(2, {3, 1, 0}) == 0);
    CHECK(full_rank_probability(3, {3, 1, 1}) == q(32, 81));

    for (uint64_t ell : {3ULL, 5ULL, 11ULL}) {
        for (unsigned t : {1u, 2u}) {
            for (unsigned s = 0; s <= t; ++s) {
                for (unsigned n = 1; n <= 5; ++n) {
                    RankDistribution d = ambiguous_rank_distribution(n, {ell, t, s});
                    // structural minimum: every level contributes fully
                    const uint64_t min_rank = (uint64_t{1} << n) * (t - 1);
                    auto it = d.find(static_cast<unsigned>(min_rank));
                    Rational mass = it == d.end() ? Rational(0) : it->second;
                    CHECK(mass == full_rank_probability(n, {ell, t, s}));
                }
            }
        }
    }
}

TEST_CASE("exhaustive scan counts link to the level contribution") {
    for (uint64_t ell : {3ULL, 5ULL, 11ULL}) {
        DichotomyReport r = dichotomy_scan(ell, 2, PrimeCase::Fixed, ScanMode::Exhaustive);
        Rational observed = make_rational(mpz_class(static_cast<unsigned long>(r.full_rank)),
                                          mpz_class(static_cast<unsigned long>(r.total)));
        RankDistribution c2 = level_contribution(2, {ell, 1, 1});
        CHECK(observed == c2[2]);
    }
}

TEST_CASE("chevalley order at the frozen examples") {
    CHECK(chevalley_order({1, 9, 3, 3}) == 1);
    CHECK(chevalley_order({1, pow_z(3, 8), 3, 1}) == pow_z(3, 7));
    CHECK_THROWS_AS(chevalley_order({1, 3, 3, 3}), std::invalid_argument);
    // identity: order * degree * E = h * e
    ChevalleyInput in{pow_z(3, 2), pow_z(3, 5), 3, pow_z(3, 3)};
    CHECK(chevalley_order(in) * in.degree * in.unit_index == in.h * in.e_product);
}

TEST_CASE("stabilization tail bound") {
    TailBound b = stabilization_tail_bound(2, {3, 1, 1}, 2);
    // direct evaluation: 3^-2 + 3^-4
    CHECK(b.partial_sum == q(1, 9) + q(1, 81));
    CHECK(b.partial_sum == q(10, 81));
    CHECK(b.remainder_bound == q(2, 6561)); // 2 * 3^-(2^3)

    TailBound b2 = stabilization_tail_bound(2, {3, 2, 0}, 1);
    CHECK(b2.partial_sum == q(1, 81)); // 3^-(2*2)

    // partial sums never decrease in the term count
    Rational last(0);
    for (unsigned terms = 1; terms <= 5; ++terms) {
        TailBound cur = stabilization_tail_bound(3, {5, 1, 1}, terms);
        CHECK(cur.partial_sum >= last);
        last = cur.partial_sum;
    }

    // the bound really dominates the next chunk of the tail
    TailBound wide = stabilization_tail_bound(2, {3, 1, 1}, 6);
    CHECK(wide.partial_sum - b.partial_sum <= b.remainder_bound);
}

TEST_CASE("iwasawa compatibility at the frozen examples") {
    IwasawaVerdict bad = iwasawa_compatibility({{1, 2, 6}, 2, 2});
    CHECK_FALSE(bad.compatible);
    CHECK(bad.mu.has_value());
    CHECK(*bad.mu == 1);

    IwasawaVerdict good = iwasawa_compatibility({{1, 2, 4}, 2, 2});
    CHECK(good.compatible);
    CHECK(good.mu.has_value());
    CHECK(*good.mu == 1);

    IwasawaVerdict flat = iwasawa_compatibility({{0, 0, 0}, 2, 1});
    CHECK(flat.compatible);
    CHECK(flat.mu.has_value());
    CHECK(*flat.mu == 0);

    // bounds conflict: s forces mu >= 2 but the growth only allows mu <= 1
    IwasawaVerdict conflict = iwasawa_compatibility({{1, 2}, 2, 3});
    CHECK_FALSE(conflict.compatible);
    CHECK(conflict.mu_min == 2);
    CHECK(conflict.mu_max == 1);

    // unpinned mu: report the surviving range, claim nothing further
    IwasawaVerdict range = iwasawa_compatibility({{0, 5, 20}, 2, 1});
    CHECK(range.compatible);
    CHECK_FALSE(range.mu.has_value());
    CHECK(range.mu_min == 0);
    CHECK(range.mu_max == 5);
}

TEST_CASE("monte carlo is seed-deterministic and honors the support") {
    MonteCarloResult a = monte_carlo_distribution(2, {3, 1, 1}, 5000, 7);
    MonteCarloResult b = monte_carlo_distribution(2, {3, 1, 1}, 5000, 7);
    CHECK(a.counts == b.counts);

    uint64_t total = 0;
    for (const auto& [rank, count] : a.counts) {
        CHECK(rank <= 3);
        total += count;
    }
    CHECK(total == 5000);

    // support must sit inside the exact distribution's support
    MonteCarloResult s0 = monte_carlo_distribution(2, {3, 1, 0}, 4000, 11);
    for (const auto& [rank, count] : s0.counts) {
        CHECK((rank == 1 || rank == 3));
        CHECK(count > 0);
    }

    // frequencies are exact count/samples rationals
    RankDistribution freq = a.frequencies();
    Rational sum(0);
    for (const auto& [rank, p] : freq)
        sum += p;
    CHECK(sum == 1);
}

TEST_CASE("monte carlo with no contributing block pins the top rank") {
    // s = 0 at n = 1: the single level contributes 0 surely, so every
    // sample lands on rank 2^n t - 1 no matter the seed
    for (uint64_t seed : {0ULL, 1ULL, 424242ULL}) {
        MonteCarloResult mc = monte_carlo_distribution(1, {3, 1, 0}, 200, seed);
        CHECK(mc.counts.size() == 1);
        CHECK(mc.counts.at(1) == 200);
    }
    MonteCarloResult two = monte_carlo_distribution(1, {5, 2, 0}, 100, 9);
    CHECK(two.counts.size() == 1);
    CHECK(two.counts.at(3) == 100); // 2^1 * 2 - 1
}

TEST_CASE("monte carlo at a two-prime profile stays in range") {
    MonteCarloResult mc = monte_carlo_distribution(2, {3, 2, 1}, 2000, 5);
    const uint64_t top = 4 * 2 - 1;
    RankDistribution exact = ambiguous_rank_distribution(2, {3, 2, 1});
    for (const auto& [rank, count] : mc.counts) {
        CHECK(rank <= top);
        CHECK(exact.count(rank) == 1);
    }
}
