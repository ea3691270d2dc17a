#include "antnorm/ff.hpp"

#include <algorithm>
#include <stdexcept>

namespace antnorm {

uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b; // a, b < p <= 2^63 in practice; guard anyway
    if (s < a || s >= p)
        s -= p;
    return s;
}

uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0)
        throw std::domain_error("inv_mod: zero is not invertible");
    return pow_mod(a, p - 2, p);
}

uint64_t neg_mod(uint64_t a, uint64_t p) {
    return a == 0 ? 0 : p - a;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2)
        return false;
    for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0)
            return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Witness set exact for all 64-bit integers (Sorenson-Webster).
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

void require_odd_prime(uint64_t ell, const char* what) {
    if (ell < 3 || ell % 2 == 0 || !is_prime_u64(ell))
        throw std::invalid_argument(std::string(what) + ": modulus " + std::to_string(ell) +
                                    " is not an odd prime");
}

// --------------------------------------------------------------------------
// Fp
// --------------------------------------------------------------------------

Fp::Fp(uint64_t value, uint64_t ell) : v_(value % ell), p_(ell) {
    if (ell < 3 || ell % 2 == 0)
        throw std::invalid_argument("Fp: modulus must be an odd prime");
}

Fp Fp::from_signed(long long value, uint64_t ell) {
    long long m = static_cast<long long>(ell);
    long long r = value % m;
    if (r < 0)
        r += m;
    return Fp(static_cast<uint64_t>(r), ell);
}

static void require_same_field(const Fp& a, const Fp& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("Fp: mixed moduli");
}

Fp Fp::operator+(const Fp& o) const {
    require_same_field(*this, o);
    return Fp(add_mod(v_, o.v_, p_), p_);
}

Fp Fp::operator-(const Fp& o) const {
    require_same_field(*this, o);
    return Fp(sub_mod(v_, o.v_, p_), p_);
}

Fp Fp::operator*(const Fp& o) const {
    require_same_field(*this, o);
    return Fp(mul_mod(v_, o.v_, p_), p_);
}

Fp Fp::operator-() const {
    return Fp(neg_mod(v_, p_), p_);
}

Fp Fp::inverse() const {
    return Fp(inv_mod(v_, p_), p_);
}

Fp Fp::pow(uint64_t e) const {
    return Fp(pow_mod(v_, e, p_), p_);
}

// --------------------------------------------------------------------------
// PolyFp
// --------------------------------------------------------------------------

PolyFp::PolyFp(uint64_t ell) : p_(ell) {
    if (ell < 3 || ell % 2 == 0)
        throw std::invalid_argument("PolyFp: modulus must be an odd prime");
}

PolyFp::PolyFp(uint64_t ell, std::vector<uint64_t> coeffs) : p_(ell), c_(std::move(coeffs)) {
    if (ell < 3 || ell % 2 == 0)
        throw std::invalid_argument("PolyFp: modulus must be an odd prime");
    for (auto& c : c_)
        c %= p_;
    trim();
}

PolyFp PolyFp::from_signed(uint64_t ell, const std::vector<long long>& coeffs) {
    std::vector<uint64_t> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs)
        c.push_back(Fp::from_signed(v, ell).value());
    return PolyFp(ell, std::move(c));
}

PolyFp PolyFp::x_pow_plus_one(uint64_t ell, size_t m) {
    std::vector<uint64_t> c(m + 1, 0);
    c[0] = 1;
    c[m] = 1;
    return PolyFp(ell, std::move(c));
}

void PolyFp::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

uint64_t PolyFp::lead() const {
    if (c_.empty())
        throw std::domain_error("PolyFp: zero polynomial has no leading coefficient");
    return c_.back();
}

static void require_same_ring(const PolyFp& a, const PolyFp& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("PolyFp: mixed moduli");
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
    require_same_ring(*this, o);
    std::vector<uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = add_mod(coeff(i), o.coeff(i), p_);
    return PolyFp(p_, std::move(c));
}

PolyFp PolyFp::operator-(const PolyFp& o) const {
    require_same_ring(*this, o);
    std::vector<uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = sub_mod(coeff(i), o.coeff(i), p_);
    return PolyFp(p_, std::move(c));
}

PolyFp PolyFp::operator*(const PolyFp& o) const {
    require_same_ring(*this, o);
    if (is_zero() || o.is_zero())
        return PolyFp(p_);
    std::vector<uint64_t> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = add_mod(c[i + j], mul_mod(c_[i], o.c_[j], p_), p_);
    }
    return PolyFp(p_, std::move(c));
}

PolyFp PolyFp::operator-() const {
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        c[i] = neg_mod(c_[i], p_);
    return PolyFp(p_, std::move(c));
}

std::pair<PolyFp, PolyFp> PolyFp::divmod(const PolyFp& num, const PolyFp& den) {
    require_same_ring(num, den);
    if (den.is_zero())
        throw std::domain_error("PolyFp: division by zero polynomial");
    const uint64_t p = num.p_;
    if (num.degree() < den.degree())
        return {PolyFp(p), num};
    std::vector<uint64_t> rem = num.c_;
    std::vector<uint64_t> quo(num.degree() - den.degree() + 1, 0);
    const uint64_t inv_lead = inv_mod(den.lead(), p);
    for (int k = num.degree() - den.degree(); k >= 0; --k) {
        uint64_t q = mul_mod(rem[k + den.degree()], inv_lead, p);
        quo[k] = q;
        if (q == 0)
            continue;
        for (int i = 0; i <= den.degree(); ++i)
            rem[k + i] = sub_mod(rem[k + i], mul_mod(q, den.c_[i], p), p);
    }
    return {PolyFp(p, std::move(quo)), PolyFp(p, std::move(rem))};
}

PolyFp PolyFp::operator%(const PolyFp& o) const {
    return divmod(*this, o).second;
}

PolyFp PolyFp::monic() const {
    const uint64_t inv = inv_mod(lead(), p_);
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        c[i] = mul_mod(c_[i], inv, p_);
    return PolyFp(p_, std::move(c));
}

PolyFp PolyFp::derivative() const {
    if (c_.size() <= 1)
        return PolyFp(p_);
    std::vector<uint64_t> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = mul_mod(c_[i], i % p_, p_);
    return PolyFp(p_, std::move(c));
}

uint64_t PolyFp::eval(uint64_t x) const {
    uint64_t acc = 0;
    x %= p_;
    for (size_t i = c_.size(); i-- > 0;)
        acc = add_mod(mul_mod(acc, x, p_), c_[i], p_);
    return acc;
}

std::string PolyFp::str() const {
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        uint64_t c = coeff(i);
        if (c == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1)
                out += std::to_string(c);
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

bool poly_less(const PolyFp& a, const PolyFp& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coeff(i) != b.coeff(i))
            return a.coeff(i) < b.coeff(i);
    }
    return false;
}

PolyFp poly_gcd(const PolyFp& f, const PolyFp& g) {
    require_same_ring(f, g);
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("poly_gcd: both inputs are zero");
    PolyFp a = f, b = g;
    while (!b.is_zero()) {
        PolyFp r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

bool is_irreducible(const PolyFp& f) {
    if (f.degree() <= 0)
        return false;
    if (f.degree() == 1)
        return true;
    const uint64_t p = f.modulus();
    PolyFp x(p, {0, 1});
    PolyFp acc = x % f;
    for (int d = 1; d < f.degree(); ++d) {
        // one Frobenius step: acc = x^(p^d) mod f
        PolyFp r(p, {1});
        PolyFp base = acc;
        uint64_t e = p;
        while (e) {
            if (e & 1)
                r = (r * base) % f;
            base = (base * base) % f;
            e >>= 1;
        }
        acc = r;
        // x^(p^d) - x collects every irreducible factor of degree dividing d
        if (poly_gcd(f, acc - x).degree() != 0)
            return false;
    }
    return true;
}

std::optional<Fp> sqrt_mod(const Fp& a) {
    const uint64_t p = a.modulus();
    require_odd_prime(p, "sqrt_mod");
    if (a.is_zero())
        return Fp(0, p);
    if (pow_mod(a.value(), (p - 1) / 2, p) != 1)
        return std::nullopt;
    uint64_t r;
    if (p % 4 == 3) {
        r = pow_mod(a.value(), (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks. The non-residue scan is deterministic, so the
        // returned root is too.
        uint64_t q = p - 1;
        unsigned s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        uint64_t z = 2;
        while (pow_mod(z, (p - 1) / 2, p) != p - 1)
            ++z;
        uint64_t m = s;
        uint64_t c = pow_mod(z, q, p);
        uint64_t t = pow_mod(a.value(), q, p);
        r = pow_mod(a.value(), (q + 1) / 2, p);
        while (t != 1) {
            uint64_t i = 0;
            uint64_t t2 = t;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, p);
                ++i;
            }
            uint64_t b = pow_mod(c, 1ULL << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
    }
    if (p - r < r)
        r = p - r;
    return Fp(r, p);
}

std::pair<PolyFp, PolyFp> split_x_pow_plus_one(uint64_t ell, unsigned level) {
    require_odd_prime(ell, "split_x_pow_plus_one");
    if (level <= 2)
        throw std::invalid_argument("split_x_pow_plus_one: level must exceed 2");
    const uint64_t cls = ell % 8;
    const size_t d = size_t{1} << (level - 2);
    const size_t h = size_t{1} << (level - 3);
    if (cls == 3) {
        const uint64_t root = sqrt_mod(Fp::from_signed(-2, ell))->value();
        std::vector<uint64_t> plus(d + 1, 0), minus(d + 1, 0);
        plus[d] = 1;
        plus[h] = root;
        plus[0] = ell - 1;
        minus[d] = 1;
        minus[h] = neg_mod(root, ell);
        minus[0] = ell - 1;
        return {PolyFp(ell, std::move(plus)), PolyFp(ell, std::move(minus))};
    }
    if (cls == 5) {
        const uint64_t root = sqrt_mod(Fp::from_signed(-1, ell))->value();
        std::vector<uint64_t> plus(d + 1, 0), minus(d + 1, 0);
        plus[d] = 1;
        plus[0] = root;
        minus[d] = 1;
        minus[0] = neg_mod(root, ell);
        return {PolyFp(ell, std::move(plus)), PolyFp(ell, std::move(minus))};
    }
    throw std::invalid_argument("split_x_pow_plus_one: ell must be 3 or 5 mod 8, got ell = " +
                                std::to_string(ell));
}

PolyFp minimal_poly_of_zeta(uint64_t ell, unsigned level) {
    require_odd_prime(ell, "minimal_poly_of_zeta");
    if (level < 2)
        throw std::invalid_argument("minimal_poly_of_zeta: level must be at least 2");
    const uint64_t cls = ell % 8;
    if (cls != 3 && cls != 5)
        throw std::invalid_argument("minimal_poly_of_zeta: ell must be 3 or 5 mod 8, got ell = " +
                                    std::to_string(ell));
    if (level == 2) {
        // x^2 + 1 splits into linear factors exactly when -1 is a square.
        if (cls == 5) {
            const uint64_t root = sqrt_mod(Fp::from_signed(-1, ell))->value();
            // roots are +-root; take the poly_less-least of x - root, x + root
            PolyFp a(ell, {neg_mod(root, ell), 1});
            PolyFp b(ell, {root, 1});
            return poly_less(a, b) ? a : b;
        }
        return PolyFp::x_pow_plus_one(ell, 2);
    }
    auto [plus, minus] = split_x_pow_plus_one(ell, level);
    return poly_less(plus, minus) ? plus : minus;
}

// --------------------------------------------------------------------------
// ExtFp
// --------------------------------------------------------------------------

ExtFp::ExtFp(PolyFp residue, PolyFp modulus) : r_(residue % modulus), m_(std::move(modulus)) {
    if (m_.degree() < 1)
        throw std::invalid_argument("ExtFp: field polynomial must have degree >= 1");
}

ExtFp ExtFp::zero(const PolyFp& modulus) {
    return ExtFp(PolyFp(modulus.modulus()), modulus);
}

ExtFp ExtFp::scalar(const PolyFp& modulus, uint64_t c) {
    return ExtFp(PolyFp(modulus.modulus(), {c}), modulus);
}

ExtFp ExtFp::zeta(const PolyFp& modulus) {
    return ExtFp(PolyFp(modulus.modulus(), {0, 1}), modulus);
}

static void require_same_ext(const ExtFp& a, const ExtFp& b) {
    if (a.field_poly() != b.field_poly())
        throw std::invalid_argument("ExtFp: mixed field polynomials");
}

ExtFp ExtFp::operator+(const ExtFp& o) const {
    require_same_ext(*this, o);
    return ExtFp(r_ + o.r_, m_);
}

ExtFp ExtFp::operator-(const ExtFp& o) const {
    require_same_ext(*this, o);
    return ExtFp(r_ - o.r_, m_);
}

ExtFp ExtFp::operator*(const ExtFp& o) const {
    require_same_ext(*this, o);
    return ExtFp((r_ * o.r_) % m_, m_);
}

ExtFp ExtFp::operator-() const {
    return ExtFp(-r_, m_);
}

ExtFp ExtFp::scale(uint64_t c) const {
    return ExtFp(r_ * PolyFp(m_.modulus(), {c}), m_);
}

ExtFp ExtFp::pow(uint64_t e) const {
    ExtFp acc = ExtFp::scalar(m_, 1);
    ExtFp base = *this;
    while (e) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace antnorm
