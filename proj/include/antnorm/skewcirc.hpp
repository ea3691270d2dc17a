#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "antnorm/ff.hpp"

namespace antnorm {

/// Dense rectangular matrix over F_ell, entries kept reduced.
class MatFp {
public:
    MatFp(uint64_t ell, size_t rows, size_t cols);

    uint64_t modulus() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint64_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint64_t v) { a_[i * cols_ + j] = v % p_; }

    /// Stacks `top` above `bottom`; column counts must agree.
    static MatFp vstack(const MatFp& top, const MatFp& bottom);

    bool operator==(const MatFp& o) const {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    friend size_t rank_elimination(MatFp m);
    uint64_t p_;
    size_t rows_, cols_;
    std::vector<uint64_t> a_;
};

/// Rank over F_ell by Gaussian elimination with exact modular inverses.
/// Pivot is the first nonzero entry of the column.
size_t rank_elimination(MatFp m);

/// Skew-circulant matrix over F_ell, represented by its generating
/// coefficients (a_0 .. a_{m-1}): row i of the realized matrix holds the
/// coefficients of x^i g(x) mod (x^m + 1), where g is the associated
/// polynomial a_0 + a_1 x + ... + a_{m-1} x^{m-1}.
class SkewCirculant {
public:
    /// Requires x^m + 1 squarefree mod ell (checked by derivative test).
    SkewCirculant(uint64_t ell, std::vector<uint64_t> coeffs);

    uint64_t modulus() const { return p_; }
    size_t size() const { return c_.size(); }
    const std::vector<uint64_t>& coeffs() const { return c_; }

    /// Associated polynomial g.
    PolyFp associated_poly() const;

private:
    uint64_t p_;
    std::vector<uint64_t> c_;
};

/// The m x m matrix with entry (i,j) = a_{j-i} for j >= i and -a_{m+j-i}
/// for j < i.
MatFp realize(const SkewCirculant& sc);

struct EigenCheck {
    ExtFp eigenvalue;
    bool verified;
};

/// For zeta with zeta^m = -1, the vector (1, zeta, ..., zeta^{m-1}) is an
/// eigenvector with eigenvalue g(zeta). Returns g(zeta) and whether
/// M v = g(zeta) v holds entrywise. Throws if zeta^m != -1.
EigenCheck eigen_check(const SkewCirculant& sc, const ExtFp& zeta);

/// Rank of the realized matrix without elimination: the eigenvalues are
/// g(zeta) over the roots zeta of x^m + 1, so the nullity is the number of
/// common roots, deg gcd(g, x^m + 1).
size_t rank_via_gcd(const SkewCirculant& sc);

} // namespace antnorm
