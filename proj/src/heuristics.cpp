#include "antnorm/heuristics.hpp"

#include <stdexcept>
#include <thread>

#include "antnorm/dichotomy.hpp"
#include "antnorm/ff.hpp"
#include "antnorm/rng.hpp"

namespace antnorm {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

mpz_class pow_z(uint64_t ell, uint64_t e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(ell), static_cast<unsigned long>(e));
    return out;
}

void validate_profile(const RamificationProfile& p) {
    require_odd_prime(p.ell, "RamificationProfile");
    if (p.t < 1)
        throw std::invalid_argument("RamificationProfile: t must be at least 1");
    if (p.s > p.t)
        throw std::invalid_argument("RamificationProfile: s must not exceed t");
}

RankDistribution level_contribution(unsigned j, const RamificationProfile& profile) {
    validate_profile(profile);
    if (j < 1)
        throw std::invalid_argument("level_contribution: level must be at least 1");
    RankDistribution out;
    if (j == 1) {
        if (profile.s == 0) {
            out[0] = 1;
            return out;
        }
        Rational miss = make_rational(1, pow_z(profile.ell, profile.s));
        out[0] = miss;
        out[1] = 1 - miss;
        return out;
    }
    const uint64_t exponent = (uint64_t{1} << (j - 2)) * profile.t;
    Rational miss = make_rational(1, pow_z(profile.ell, exponent));
    out[0] = miss;
    out[static_cast<unsigned>(uint64_t{1} << (j - 1))] = 1 - miss;
    return out;
}

RankDistribution ambiguous_rank_distribution(unsigned n, const RamificationProfile& profile) {
    validate_profile(profile);
    // exact convolution of the level contributions
    std::map<uint64_t, Rational> sum;
    sum[0] = 1;
    for (unsigned j = 1; j <= n; ++j) {
        RankDistribution level = level_contribution(j, profile);
        std::map<uint64_t, Rational> next;
        for (const auto& [c, pc] : level) {
            for (const auto& [v, pv] : sum) {
                Rational& slot = next[v + c];
                slot += pc * pv;
            }
        }
        sum = std::move(next);
    }
    const uint64_t top = (uint64_t{1} << n) * profile.t - 1;
    RankDistribution out;
    for (const auto& [contrib, p] : sum) {
        if (p != 0)
            out[static_cast<unsigned>(top - contrib)] = p;
    }
    return out;
}

Rational full_rank_probability(unsigned n, const RamificationProfile& profile) {
    validate_profile(profile);
    if (n < 1)
        throw std::invalid_argument("full_rank_probability: n must be at least 1");
    Rational acc = profile.s == 0
                       ? Rational(0)
                       : Rational(1) - make_rational(1, pow_z(profile.ell, profile.s));
    for (unsigned j = 2; j <= n; ++j) {
        const uint64_t e = (uint64_t{1} << (j - 2)) * profile.t;
        acc *= Rational(1) - make_rational(1, pow_z(profile.ell, e));
    }
    return acc;
}

mpz_class chevalley_order(const ChevalleyInput& input) {
    if (input.h <= 0 || input.e_product <= 0 || input.unit_index <= 0 || input.degree < 2)
        throw std::invalid_argument("chevalley_order: inputs must be positive");
    mpz_class num = input.h * input.e_product;
    mpz_class den = mpz_class(static_cast<unsigned long>(input.degree)) * input.unit_index;
    if (num % den != 0)
        throw std::invalid_argument("chevalley_order: h*e/(degree*E) is not an integer");
    return num / den;
}

TailBound stabilization_tail_bound(unsigned N, const RamificationProfile& profile,
                                   unsigned terms) {
    validate_profile(profile);
    if (N < 2)
        throw std::invalid_argument("stabilization_tail_bound: N must be at least 2");
    if (terms < 1)
        throw std::invalid_argument("stabilization_tail_bound: terms must be at least 1");
    Rational partial(0);
    for (unsigned j = N; j < N + terms; ++j) {
        const uint64_t e = (uint64_t{1} << (j - 1)) * profile.t;
        partial += make_rational(1, pow_z(profile.ell, e));
    }
    const uint64_t tail_e = (uint64_t{1} << (N + terms - 1)) * profile.t;
    Rational remainder = make_rational(2, pow_z(profile.ell, tail_e));
    return {partial, remainder};
}

IwasawaVerdict iwasawa_compatibility(const IwasawaSequence& seq) {
    if (seq.e.size() < 2)
        throw std::invalid_argument("iwasawa_compatibility: need at least e_0 and e_1");
    if (seq.ell < 2)
        throw std::invalid_argument("iwasawa_compatibility: ell must be at least 2");
    for (int64_t e : seq.e) {
        if (e < 0)
            throw std::invalid_argument("iwasawa_compatibility: exponents must be nonnegative");
    }

    IwasawaVerdict v;
    v.mu_min = seq.s >= 1 ? static_cast<int64_t>(seq.s) - 1 : 0;
    // mu >= 0 regardless of s

    mpz_class power(1); // ell^n
    mpz_class mu_max_z(-1);
    bool have_max = false;
    for (size_t n = 1; n < seq.e.size(); ++n) {
        power *= static_cast<unsigned long>(seq.ell);
        mpz_class gap(static_cast<long>(seq.e[n] - seq.e[0]));
        mpz_class div = power - 1;
        mpz_class bound;
        mpz_fdiv_q(bound.get_mpz_t(), gap.get_mpz_t(), div.get_mpz_t());
        if (!have_max || bound < mu_max_z) {
            mu_max_z = bound;
            have_max = true;
        }
    }
    v.mu_max = mu_max_z.get_si();

    if (v.mu_min > v.mu_max) {
        v.compatible = false;
        v.reason = "mu bounds conflict: need mu >= " + std::to_string(v.mu_min) +
                   " but growth allows mu <= " + std::to_string(v.mu_max);
        return v;
    }

    if (v.mu_min == v.mu_max) {
        const int64_t mu = v.mu_min;
        v.mu = mu;
        // When e_1 sits exactly on the forced line, the finite parts are
        // trivial by Nakayama and every later exponent is pinned.
        const int64_t forced_e1 = seq.e[0] + mu * (static_cast<int64_t>(seq.ell) - 1);
        if (seq.e[1] == forced_e1) {
            mpz_class pw(1);
            for (size_t n = 1; n < seq.e.size(); ++n) {
                pw *= static_cast<unsigned long>(seq.ell);
                mpz_class forced = mpz_class(static_cast<long>(seq.e[0])) + mu * (pw - 1);
                if (forced != static_cast<long>(seq.e[n])) {
                    v.compatible = false;
                    v.reason = "with mu = " + std::to_string(mu) + " the growth law forces e_" +
                               std::to_string(n) + " = " + forced.get_str() + ", got " +
                               std::to_string(seq.e[n]);
                    return v;
                }
            }
        }
    }
    v.compatible = true;
    return v;
}

RankDistribution MonteCarloResult::frequencies() const {
    RankDistribution out;
    for (const auto& [rank, count] : counts)
        out[rank] = make_rational(mpz_class(static_cast<unsigned long>(count)),
                                  mpz_class(static_cast<unsigned long>(samples)));
    return out;
}

MonteCarloResult monte_carlo_distribution(unsigned n, const RamificationProfile& profile,
                                          uint64_t samples, uint64_t seed) {
    validate_profile(profile);
    if (samples < 1)
        throw std::invalid_argument("monte_carlo_distribution: samples must be at least 1");

    const uint64_t top = (uint64_t{1} << n) * profile.t - 1;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned nthreads =
        static_cast<unsigned>(std::min<uint64_t>(hw, std::max<uint64_t>(1, samples / 1024)));
    const uint64_t chunk = (samples + nthreads - 1) / nthreads;

    std::vector<std::map<unsigned, uint64_t>> partial(nthreads);
    auto run_range = [&](unsigned widx) {
        auto& hist = partial[widx];
        const uint64_t lo = widx * chunk;
        const uint64_t hi = std::min<uint64_t>(samples, lo + chunk);
        std::vector<std::pair<PrimeCase, SymbolAssignment>> draws;
        for (uint64_t i = lo; i < hi; ++i) {
            // per-sample stream: draw order is level 1 scalars, then for
            // each level j = 2..n the t assignments, fixed-case primes first
            SplitMix64 rng = derived_stream(seed, i);
            uint64_t contributions = 0;
            if (n >= 1) {
                bool level1_nonzero = false;
                for (unsigned k = 0; k < profile.s; ++k)
                    level1_nonzero |= rng.below(profile.ell) != 0;
                if (level1_nonzero)
                    contributions += 1;
            }
            for (unsigned j = 2; j <= n; ++j) {
                const size_t nparams = size_t{1} << (j - 2);
                draws.clear();
                for (unsigned prime = 0; prime < profile.t; ++prime) {
                    std::vector<uint64_t> values(nparams);
                    for (auto& v : values)
                        v = rng.below(profile.ell);
                    draws.emplace_back(prime < profile.s ? PrimeCase::Fixed : PrimeCase::Shifted,
                                       SymbolAssignment(profile.ell, std::move(values)));
                }
                contributions += multi_prime_rank(profile.ell, j, draws);
            }
            ++hist[static_cast<unsigned>(top - contributions)];
        }
    };

    if (nthreads == 1) {
        run_range(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned w = 0; w < nthreads; ++w)
            pool.emplace_back(run_range, w);
        for (auto& t : pool)
            t.join();
    }

    MonteCarloResult out;
    out.profile = profile;
    out.n = n;
    out.samples = samples;
    out.seed = seed;
    for (const auto& hist : partial) {
        for (const auto& [rank, count] : hist)
            out.counts[rank] += count;
    }
    return out;
}

} // namespace antnorm
