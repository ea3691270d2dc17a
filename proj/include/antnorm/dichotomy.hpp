#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "antnorm/galois.hpp"
#include "antnorm/skewcirc.hpp"

namespace antnorm {

/// Concrete symbol exponents for one ramified-prime orbit: one value per
/// free shape parameter, reduced mod ell.
struct SymbolAssignment {
    SymbolAssignment(uint64_t ell, std::vector<uint64_t> values);

    uint64_t ell;
    std::vector<uint64_t> values;
};

/// Substitutes an assignment into a shape. Throws on parameter-count
/// mismatch.
MatFp instantiate_shape(const SymbolShape& shape, const SymbolAssignment& a);

enum class ScanMode { Exhaustive, Sampled };

struct Violation {
    std::vector<uint64_t> assignment;
    size_t rank;

    bool operator==(const Violation& o) const {
        return assignment == o.assignment && rank == o.rank;
    }
};

/// Outcome of sweeping assignments for one (ell, level, case): how many hit
/// rank zero, how many full column rank 2^(level-1), and every assignment
/// strictly in between. total = rank_zero + full_rank + violations.size().
struct DichotomyReport {
    uint64_t ell = 0;
    unsigned level = 0;
    PrimeCase kase = PrimeCase::Fixed;
    ScanMode mode = ScanMode::Exhaustive;
    uint64_t seed = 0;    // sampled mode only
    uint64_t samples = 0; // sampled mode only
    uint64_t total = 0;
    uint64_t rank_zero = 0;
    uint64_t full_rank = 0;
    std::vector<Violation> violations; // lexicographically sorted

    bool operator==(const DichotomyReport& o) const;
};

inline constexpr uint64_t kDefaultScanBudget = 100000000; // rank computations

/// Raised when an exhaustive scan would exceed its budget; the caller is
/// expected to switch to sampled mode rather than silently downgrade.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rank of every assignment in F_ell^(2^(level-2)), either all of them
/// (lexicographic order) or `samples` seed-deterministic uniform draws.
/// Work is split across threads; the report does not depend on the split.
DichotomyReport dichotomy_scan(uint64_t ell, unsigned level, PrimeCase kase, ScanMode mode,
                               uint64_t samples = 0, uint64_t seed = 0,
                               uint64_t budget = kDefaultScanBudget);

/// Congruence case of the reduced eigenvalue matrix: residue class of the
/// ramified prime p (3 or 7 mod 8) and of ell (3 or 5 mod 8).
struct EigenMatrixCase {
    unsigned p_mod_8;
    unsigned ell_mod_8;
};

/// The 2^(level-2) x 2^(level-2) matrix expressing the skew-circulant
/// eigenvalue, reduced by the quadratic-surd relation for zeta^(2^(level-2)),
/// as a linear map of the symbol parameters. Assembled from identity /
/// anti-identity blocks and the scalars of the four congruence cases, with
/// sqrt(-2) or sqrt(-1) taken from sqrt_mod's deterministic root.
/// Requires level >= 3 (at level 3 the blocks are empty and only the
/// scalars remain).
MatFp eigenvalue_matrix(uint64_t ell, unsigned level, EigenMatrixCase kase);

/// True when eigenvalue_matrix has full rank 2^(level-2); the dichotomy at
/// (ell, level) hinges on exactly this.
bool eigenvalue_matrix_full_rank(uint64_t ell, unsigned level, EigenMatrixCase kase);

/// Rank of the vertical stack of the instantiated matrices of several
/// ramified-prime orbits at one level (columns stay the 2^(level-1) unit
/// coordinates). Assignments must all have 2^(level-2) values.
size_t multi_prime_rank(uint64_t ell, unsigned level,
                        const std::vector<std::pair<PrimeCase, SymbolAssignment>>& per_prime);

} // namespace antnorm
