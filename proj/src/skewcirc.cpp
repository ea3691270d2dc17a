#include "antnorm/skewcirc.hpp"

#include <stdexcept>

namespace antnorm {

MatFp::MatFp(uint64_t ell, size_t rows, size_t cols)
    : p_(ell), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (ell < 3 || ell % 2 == 0)
        throw std::invalid_argument("MatFp: modulus must be an odd prime");
}

MatFp MatFp::vstack(const MatFp& top, const MatFp& bottom) {
    if (top.cols() != bottom.cols() || top.modulus() != bottom.modulus())
        throw std::invalid_argument("MatFp::vstack: incompatible matrices");
    MatFp out(top.modulus(), top.rows() + bottom.rows(), top.cols());
    std::copy(top.a_.begin(), top.a_.end(), out.a_.begin());
    std::copy(bottom.a_.begin(), bottom.a_.end(), out.a_.begin() + top.a_.size());
    return out;
}

size_t rank_elimination(MatFp m) {
    const uint64_t p = m.p_;
    const size_t rows = m.rows_, cols = m.cols_;
    auto* a = m.a_.data();
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
        const uint64_t inv = inv_mod(a[rank * cols + col], p);
        for (size_t i = pivot + 1; i < rows; ++i) {
            const uint64_t v = a[i * cols + col];
            if (v == 0)
                continue;
            const uint64_t factor = mul_mod(v, inv, p);
            a[i * cols + col] = 0;
            for (size_t j = col + 1; j < cols; ++j)
                a[i * cols + j] =
                    sub_mod(a[i * cols + j], mul_mod(factor, a[rank * cols + j], p), p);
        }
        ++rank;
    }
    return rank;
}

SkewCirculant::SkewCirculant(uint64_t ell, std::vector<uint64_t> coeffs)
    : p_(ell), c_(std::move(coeffs)) {
    require_odd_prime(ell, "SkewCirculant");
    if (c_.empty())
        throw std::invalid_argument("SkewCirculant: size must be positive");
    for (auto& c : c_)
        c %= p_;
    PolyFp mod = PolyFp::x_pow_plus_one(p_, c_.size());
    if (poly_gcd(mod, mod.derivative()).degree() != 0)
        throw std::invalid_argument("SkewCirculant: x^m + 1 is not squarefree mod ell");
}

PolyFp SkewCirculant::associated_poly() const {
    return PolyFp(p_, c_);
}

MatFp realize(const SkewCirculant& sc) {
    const size_t m = sc.size();
    const uint64_t p = sc.modulus();
    const auto& a = sc.coeffs();
    MatFp out(p, m, m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j)
            out.set(i, j, j >= i ? a[j - i] : neg_mod(a[m + j - i], p));
    }
    return out;
}

EigenCheck eigen_check(const SkewCirculant& sc, const ExtFp& zeta) {
    const size_t m = sc.size();
    const PolyFp& fieldpoly = zeta.field_poly();
    const ExtFp minus_one = -ExtFp::scalar(fieldpoly, 1);
    if (zeta.pow(m) != minus_one)
        throw std::invalid_argument("eigen_check: zeta^m != -1 in its field");

    // powers of zeta up to m-1
    std::vector<ExtFp> zp;
    zp.reserve(m);
    ExtFp cur = ExtFp::scalar(fieldpoly, 1);
    for (size_t i = 0; i < m; ++i) {
        zp.push_back(cur);
        cur = cur * zeta;
    }

    ExtFp eigenvalue = ExtFp::zero(fieldpoly);
    for (size_t j = 0; j < m; ++j)
        eigenvalue = eigenvalue + zp[j].scale(sc.coeffs()[j]);

    MatFp mat = realize(sc);
    bool ok = true;
    for (size_t i = 0; i < m && ok; ++i) {
        ExtFp row = ExtFp::zero(fieldpoly);
        for (size_t j = 0; j < m; ++j)
            row = row + zp[j].scale(mat.at(i, j));
        ok = (row == eigenvalue * zp[i]);
    }
    return {eigenvalue, ok};
}

size_t rank_via_gcd(const SkewCirculant& sc) {
    const size_t m = sc.size();
    PolyFp g = sc.associated_poly();
    PolyFp mod = PolyFp::x_pow_plus_one(sc.modulus(), m);
    if (g.is_zero())
        return 0;
    return m - static_cast<size_t>(poly_gcd(g, mod).degree());
}

} // namespace antnorm
