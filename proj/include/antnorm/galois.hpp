#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace antnorm {

/// Orbit type of a ramified prime under complex conjugation tau in the
/// dihedral group <sigma, tau>: tau either fixes a prime of the orbit
/// (tau p = p) or shifts the orbit by one (tau p = sigma p).
enum class PrimeCase { Fixed, Shifted };

std::string to_string(PrimeCase c);
PrimeCase prime_case_from_string(const std::string& s);

/// Conjugation class of an inert rational prime by residue mod 8:
/// 7 mod 8 gives a tau-fixed prime upstairs, 3 mod 8 gives none, and
/// 1 or 5 mod 8 splits in Q(i), so the orbit picture does not apply.
enum class InertClass { Fixed, Shifted, NotInert };

InertClass prime_case_rule(unsigned p_mod_8);

/// Whether tau p = sigma^k p implies some prime of the orbit is tau-fixed,
/// for sigma of order 2^level. Holds exactly when k is even.
bool fixed_prime_exists(uint64_t k, unsigned level);

/// One entry of a symbolic symbol matrix: +-(parameter #index), or zero.
struct ShapeEntry {
    int index; // parameter index in [0, 2^(level-2)); -1 for the zero entry
    int sign;  // +1, -1, or 0 for the zero entry

    bool operator==(const ShapeEntry& o) const { return index == o.index && sign == o.sign; }
};

/// Symbolic 2^level x 2^(level-1) matrix of norm-residue-symbol exponents
/// for one ramified-prime orbit: rows are primes sigma^i p, columns the
/// relative-unit generators sigma^j u, entries signed references into the
/// free parameter vector (a_0 .. a_{2^(level-2)-1}).
///
/// The unit groups themselves are never represented; the 2^(level-2) free
/// parameters are the only trace the relative units leave here.
struct SymbolShape {
    unsigned level = 0;
    PrimeCase kase = PrimeCase::Fixed;
    size_t rows = 0;
    size_t cols = 0;
    size_t nparams = 0;
    std::vector<ShapeEntry> entries; // row-major

    const ShapeEntry& at(size_t i, size_t j) const { return entries[i * cols + j]; }
};

/// Derives the shape for the given level (>= 2) and orbit case from the
/// group relations, rather than from a transcribed pattern:
///   tau sigma^i = sigma^-i tau,  sigma^(2^(level-1)) u = u^-1,
///   tau u_j = u_(2^(level-1)-j)^-1,  tau p = p or sigma p.
/// Applying tau to the first row identifies parameters in pairs (forcing
/// one to zero in the fixed case); applying sigma fills the rest.
SymbolShape derive_shape(unsigned level, PrimeCase kase);

} // namespace antnorm
