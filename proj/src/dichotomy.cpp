#include "antnorm/dichotomy.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "antnorm/rng.hpp"

namespace antnorm {

SymbolAssignment::SymbolAssignment(uint64_t ell_, std::vector<uint64_t> values_)
    : ell(ell_), values(std::move(values_)) {
    require_odd_prime(ell, "SymbolAssignment");
    for (auto& v : values)
        v %= ell;
}

MatFp instantiate_shape(const SymbolShape& shape, const SymbolAssignment& a) {
    if (a.values.size() != shape.nparams)
        throw std::invalid_argument("instantiate_shape: assignment has " +
                                    std::to_string(a.values.size()) + " values, shape needs " +
                                    std::to_string(shape.nparams));
    MatFp out(a.ell, shape.rows, shape.cols);
    for (size_t i = 0; i < shape.rows; ++i) {
        for (size_t j = 0; j < shape.cols; ++j) {
            const ShapeEntry& e = shape.at(i, j);
            if (e.sign == 0)
                continue;
            const uint64_t v = a.values[static_cast<size_t>(e.index)];
            out.set(i, j, e.sign > 0 ? v : neg_mod(v, a.ell));
        }
    }
    return out;
}

bool DichotomyReport::operator==(const DichotomyReport& o) const {
    return ell == o.ell && level == o.level && kase == o.kase && mode == o.mode &&
           seed == o.seed && samples == o.samples && total == o.total &&
           rank_zero == o.rank_zero && full_rank == o.full_rank && violations == o.violations;
}

namespace {

// Fills `values` (already sized) with the lexicographic assignment of the
// given index: a_0 is the most significant base-ell digit.
void assignment_from_index(uint64_t index, uint64_t ell, std::vector<uint64_t>& values) {
    for (size_t k = values.size(); k-- > 0;) {
        values[k] = index % ell;
        index /= ell;
    }
}

struct ScanPartial {
    uint64_t rank_zero = 0;
    uint64_t full_rank = 0;
    std::vector<Violation> violations;
};

// Instantiation + elimination without per-assignment allocation.
class RankWorker {
public:
    RankWorker(const SymbolShape& shape, uint64_t ell)
        : shape_(shape), ell_(ell), scratch_(shape.rows * shape.cols, 0),
          negated_(shape.nparams, 0) {}

    size_t rank_of(const std::vector<uint64_t>& values) {
        for (size_t k = 0; k < values.size(); ++k)
            negated_[k] = neg_mod(values[k], ell_);
        const size_t rows = shape_.rows, cols = shape_.cols;
        for (size_t idx = 0; idx < rows * cols; ++idx) {
            const ShapeEntry& e = shape_.entries[idx];
            scratch_[idx] = e.sign == 0
                                ? 0
                                : (e.sign > 0 ? values[static_cast<size_t>(e.index)]
                                              : negated_[static_cast<size_t>(e.index)]);
        }
        return eliminate();
    }

private:
    size_t eliminate() {
        const size_t rows = shape_.rows, cols = shape_.cols;
        auto* a = scratch_.data();
        size_t rank = 0;
        for (size_t col = 0; col < cols && rank < rows; ++col) {
            size_t pivot = rank;
            while (pivot < rows && a[pivot * cols + col] == 0)
                ++pivot;
            if (pivot == rows)
                continue;
            if (pivot != rank) {
                for (size_t j = col; j < cols; ++j)
                    std::swap(a[pivot * cols + j], a[rank * cols + j]);
            }
            const uint64_t inv = inv_mod(a[rank * cols + col], ell_);
            for (size_t i = pivot + 1; i < rows; ++i) {
                const uint64_t v = a[i * cols + col];
                if (v == 0)
                    continue;
                const uint64_t factor = mul_mod(v, inv, ell_);
                a[i * cols + col] = 0;
                for (size_t j = col + 1; j < cols; ++j)
                    a[i * cols + j] =
                        sub_mod(a[i * cols + j], mul_mod(factor, a[rank * cols + j], ell_), ell_);
            }
            ++rank;
        }
        return rank;
    }

    const SymbolShape& shape_;
    uint64_t ell_;
    std::vector<uint64_t> scratch_;
    std::vector<uint64_t> negated_;
};

std::optional<uint64_t> checked_pow(uint64_t base, unsigned exp) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > ~0ULL)
            return std::nullopt;
    }
    return static_cast<uint64_t>(acc);
}

} // namespace

DichotomyReport dichotomy_scan(uint64_t ell, unsigned level, PrimeCase kase, ScanMode mode,
                               uint64_t samples, uint64_t seed, uint64_t budget) {
    require_odd_prime(ell, "dichotomy_scan");
    if (level < 2)
        throw std::invalid_argument("dichotomy_scan: level must be at least 2");
    if (level > 10)
        throw std::invalid_argument("dichotomy_scan: level must be at most 10");

    const size_t nparams = size_t{1} << (level - 2);
    uint64_t total;
    if (mode == ScanMode::Exhaustive) {
        auto count = checked_pow(ell, static_cast<unsigned>(nparams));
        if (!count || *count > budget)
            throw budget_error("exhaustive scan of ell=" + std::to_string(ell) +
                               " level=" + std::to_string(level) + " needs ell^" +
                               std::to_string(nparams) + " rank computations, over the budget of " +
                               std::to_string(budget));
        total = *count;
    } else {
        if (samples == 0)
            throw std::invalid_argument("dichotomy_scan: sampled mode needs samples >= 1");
        total = samples;
    }

    const SymbolShape shape = derive_shape(level, kase);
    const size_t full = shape.cols;

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned nthreads = static_cast<unsigned>(std::min<uint64_t>(hw, std::max<uint64_t>(1, total / 4096)));
    const uint64_t chunk = (total + nthreads - 1) / nthreads;

    std::vector<ScanPartial> partials(nthreads);
    auto run_range = [&](unsigned widx) {
        ScanPartial& out = partials[widx];
        const uint64_t lo = widx * chunk;
        const uint64_t hi = std::min<uint64_t>(total, lo + chunk);
        RankWorker worker(shape, ell);
        std::vector<uint64_t> values(nparams, 0);
        for (uint64_t i = lo; i < hi; ++i) {
            if (mode == ScanMode::Exhaustive) {
                assignment_from_index(i, ell, values);
            } else {
                SplitMix64 rng = derived_stream(seed, i);
                for (auto& v : values)
                    v = rng.below(ell);
            }
            const size_t r = worker.rank_of(values);
            if (r == 0)
                ++out.rank_zero;
            else if (r == full)
                ++out.full_rank;
            else
                out.violations.push_back({values, r});
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

    DichotomyReport report;
    report.ell = ell;
    report.level = level;
    report.kase = kase;
    report.mode = mode;
    report.seed = mode == ScanMode::Sampled ? seed : 0;
    report.samples = mode == ScanMode::Sampled ? samples : 0;
    report.total = total;
    for (auto& p : partials) {
        report.rank_zero += p.rank_zero;
        report.full_rank += p.full_rank;
        report.violations.insert(report.violations.end(), p.violations.begin(),
                                 p.violations.end());
    }
    // Ranges are processed in index order, but sampled draws are not
    // ordered by value; keep the serialized form canonical either way.
    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return a.assignment != b.assignment ? a.assignment < b.assignment
                                                      : a.rank < b.rank;
              });
    return report;
}

MatFp eigenvalue_matrix(uint64_t ell, unsigned level, EigenMatrixCase kase) {
    require_odd_prime(ell, "eigenvalue_matrix");
    if (level < 3)
        throw std::invalid_argument("eigenvalue_matrix: level must be at least 3");
    if (kase.p_mod_8 != 3 && kase.p_mod_8 != 7)
        throw std::invalid_argument("eigenvalue_matrix: p class must be 3 or 7 mod 8");
    if (kase.ell_mod_8 != 3 && kase.ell_mod_8 != 5)
        throw std::invalid_argument("eigenvalue_matrix: ell class must be 3 or 5 mod 8");
    if (ell % 8 != kase.ell_mod_8)
        throw std::invalid_argument("eigenvalue_matrix: ell = " + std::to_string(ell) +
                                    " is not " + std::to_string(kase.ell_mod_8) + " mod 8");

    const size_t d = size_t{1} << (level - 2);
    const size_t h = size_t{1} << (level - 3);
    MatFp B(ell, d, d);

    if (kase.ell_mod_8 == 3) {
        const uint64_t rt = sqrt_mod(Fp::from_signed(-2, ell))->value();
        const uint64_t neg_rt = neg_mod(rt, ell);
        if (kase.p_mod_8 == 7) {
            // corners: 1 and -sqrt(-2) on the a_0/a_h axis, 2 at (h, h)
            B.set(0, 0, 1);
            B.set(0, h, neg_rt);
            B.set(h, h, 2 % ell);
            for (size_t j = 1; j < h; ++j) {
                B.set(j, j, add_mod(B.at(j, j), 1, ell));          // I
                B.set(j, h - j, add_mod(B.at(j, h - j), neg_rt, ell)); // -sqrt(-2) J
                B.set(j, d - j, add_mod(B.at(j, d - j), ell - 1, ell)); // -J
                B.set(h + j, h - j, add_mod(B.at(h + j, h - j), 1, ell)); // J
                B.set(h + j, h + j, add_mod(B.at(h + j, h + j), 1, ell)); // I
                B.set(h + j, d - j, add_mod(B.at(h + j, d - j), neg_rt, ell)); // -sqrt(-2) J
            }
        } else {
            // [[I - sqrt(-2) J, -J], [J, I - sqrt(-2) J]] with h x h blocks
            for (size_t j = 0; j < h; ++j) {
                B.set(j, j, add_mod(B.at(j, j), 1, ell));
                B.set(j, h - 1 - j, add_mod(B.at(j, h - 1 - j), neg_rt, ell));
                B.set(j, d - 1 - j, add_mod(B.at(j, d - 1 - j), ell - 1, ell));
                B.set(h + j, h - 1 - j, add_mod(B.at(h + j, h - 1 - j), 1, ell));
                B.set(h + j, h + j, add_mod(B.at(h + j, h + j), 1, ell));
                B.set(h + j, d - 1 - j, add_mod(B.at(h + j, d - 1 - j), neg_rt, ell));
            }
        }
    } else {
        const uint64_t rt = sqrt_mod(Fp::from_signed(-1, ell))->value();
        const uint64_t neg_rt = neg_mod(rt, ell);
        if (kase.p_mod_8 == 7) {
            B.set(0, 0, 1);
            B.set(h, h, sub_mod(1, rt, ell)); // 1 - sqrt(-1)
            for (size_t j = 1; j < h; ++j) {
                B.set(j, j, add_mod(B.at(j, j), 1, ell));              // I
                B.set(j, d - j, add_mod(B.at(j, d - j), neg_rt, ell)); // -sqrt(-1) J
                B.set(h + j, h - j, add_mod(B.at(h + j, h - j), neg_rt, ell));
                B.set(h + j, h + j, add_mod(B.at(h + j, h + j), 1, ell));
            }
        } else {
            // [[I, -sqrt(-1) J], [-sqrt(-1) J, I]] with h x h blocks
            for (size_t j = 0; j < h; ++j) {
                B.set(j, j, add_mod(B.at(j, j), 1, ell));
                B.set(j, d - 1 - j, add_mod(B.at(j, d - 1 - j), neg_rt, ell));
                B.set(h + j, h - 1 - j, add_mod(B.at(h + j, h - 1 - j), neg_rt, ell));
                B.set(h + j, h + j, add_mod(B.at(h + j, h + j), 1, ell));
            }
        }
    }
    return B;
}

bool eigenvalue_matrix_full_rank(uint64_t ell, unsigned level, EigenMatrixCase kase) {
    MatFp B = eigenvalue_matrix(ell, level, kase);
    return rank_elimination(B) == B.rows();
}

namespace {

// Shapes are immutable once derived; share them across calls and threads.
const SymbolShape& cached_shape(unsigned level, PrimeCase kase) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, int>, SymbolShape> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(level, kase == PrimeCase::Fixed ? 0 : 1);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, derive_shape(level, kase)).first;
    return it->second;
}

} // namespace

size_t multi_prime_rank(uint64_t ell, unsigned level,
                        const std::vector<std::pair<PrimeCase, SymbolAssignment>>& per_prime) {
    if (per_prime.empty())
        throw std::invalid_argument("multi_prime_rank: no primes given");
    const size_t half = size_t{1} << (level - 1);
    MatFp stacked(ell, 0, half);
    bool first = true;
    for (const auto& [kase, a] : per_prime) {
        if (a.ell != ell)
            throw std::invalid_argument("multi_prime_rank: assignment modulus mismatch");
        MatFp block = instantiate_shape(cached_shape(level, kase), a);
        stacked = first ? block : MatFp::vstack(stacked, block);
        first = false;
    }
    return rank_elimination(stacked);
}

} // namespace antnorm
