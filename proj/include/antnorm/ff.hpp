#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace antnorm {

// ---------------------------------------------------------------------------
// Scalar arithmetic mod a word-sized odd prime. Products go through 128-bit
// intermediates so any 64-bit modulus is safe.
// ---------------------------------------------------------------------------

uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p);
uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p);
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p);
uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p);
uint64_t inv_mod(uint64_t a, uint64_t p); // p prime, a not divisible by p
uint64_t neg_mod(uint64_t a, uint64_t p);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

/// Throws std::invalid_argument unless ell is an odd prime.
void require_odd_prime(uint64_t ell, const char* what);

/// Element of the prime field F_ell, ell an odd prime. Immutable value type;
/// operands must share a modulus.
class Fp {
public:
    Fp(uint64_t value, uint64_t ell);
    static Fp from_signed(long long value, uint64_t ell);

    uint64_t value() const { return v_; }
    uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator-() const;
    Fp inverse() const; // nonzero required
    Fp pow(uint64_t e) const;

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    uint64_t v_;
    uint64_t p_;
};

// ---------------------------------------------------------------------------
// Dense univariate polynomials over F_ell. Coefficients are stored lowest
// degree first and kept trimmed: the zero polynomial is the empty vector.
// ---------------------------------------------------------------------------

class PolyFp {
public:
    explicit PolyFp(uint64_t ell); // zero polynomial
    PolyFp(uint64_t ell, std::vector<uint64_t> coeffs);
    static PolyFp from_signed(uint64_t ell, const std::vector<long long>& coeffs);
    static PolyFp x_pow_plus_one(uint64_t ell, size_t m); // x^m + 1

    uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint64_t lead() const; // nonzero polynomial required
    const std::vector<uint64_t>& coeffs() const { return c_; }

    PolyFp operator+(const PolyFp& o) const;
    PolyFp operator-(const PolyFp& o) const;
    PolyFp operator*(const PolyFp& o) const;
    PolyFp operator-() const;
    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<PolyFp, PolyFp> divmod(const PolyFp& num, const PolyFp& den);
    PolyFp operator%(const PolyFp& o) const;

    PolyFp monic() const; // nonzero required
    PolyFp derivative() const;
    uint64_t eval(uint64_t x) const;

    bool operator==(const PolyFp& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const PolyFp& o) const { return !(*this == o); }

    /// Display form, e.g. "x^2 + 2x + 2".
    std::string str() const;

private:
    void trim();
    uint64_t p_;
    std::vector<uint64_t> c_;
};

/// Order used to pick canonical factors: by degree, then by coefficients
/// compared from the leading term downwards.
bool poly_less(const PolyFp& a, const PolyFp& b);

/// Monic greatest common divisor. Throws if both inputs are zero.
PolyFp poly_gcd(const PolyFp& f, const PolyFp& g);

/// Irreducibility over F_ell: f has no factor of degree < deg f exactly when
/// gcd(f, x^(ell^d) - x) = 1 for every d below deg f.
bool is_irreducible(const PolyFp& f);

/// Square root in F_ell via Tonelli-Shanks. Returns the smaller of the two
/// roots (r <= ell - r) so downstream constructions are reproducible; empty
/// for a non-residue.
std::optional<Fp> sqrt_mod(const Fp& a);

/// The two degree-2^(level-2) factors of x^(2^(level-1)) + 1 over F_ell,
/// for ell = 3 or 5 mod 8 and level > 2:
///   ell = 3 mod 8:  x^(2^(n-2)) +- sqrt(-2) x^(2^(n-3)) - 1
///   ell = 5 mod 8:  x^(2^(n-2)) +- sqrt(-1)
/// The "+" factor carries the root chosen by sqrt_mod; returned in that order.
std::pair<PolyFp, PolyFp> split_x_pow_plus_one(uint64_t ell, unsigned level);

/// Canonical (poly_less-least) irreducible factor of x^(2^(level-1)) + 1 over
/// F_ell, ell = 3 or 5 mod 8. For level >= 3 its degree is 2^(level-2); for
/// level = 2 it is a root of x^2 + 1 when one exists (ell = 5 mod 8) and the
/// quadratic x^2 + 1 itself otherwise.
PolyFp minimal_poly_of_zeta(uint64_t ell, unsigned level);

// ---------------------------------------------------------------------------
// Elements of F_ell[x]/(m). Small extensions only: the moduli in this
// project all divide x^(2^(n-1)) + 1, degree at most 64.
// ---------------------------------------------------------------------------

class ExtFp {
public:
    ExtFp(PolyFp residue, PolyFp modulus);
    static ExtFp zero(const PolyFp& modulus);
    static ExtFp scalar(const PolyFp& modulus, uint64_t c);
    static ExtFp zeta(const PolyFp& modulus); // class of x

    const PolyFp& residue() const { return r_; }
    const PolyFp& field_poly() const { return m_; }
    bool is_zero() const { return r_.is_zero(); }

    ExtFp operator+(const ExtFp& o) const;
    ExtFp operator-(const ExtFp& o) const;
    ExtFp operator*(const ExtFp& o) const;
    ExtFp operator-() const;
    ExtFp scale(uint64_t c) const;
    ExtFp pow(uint64_t e) const;

    bool operator==(const ExtFp& o) const { return m_ == o.m_ && r_ == o.r_; }
    bool operator!=(const ExtFp& o) const { return !(*this == o); }

private:
    PolyFp r_;
    PolyFp m_;
};

} // namespace antnorm
