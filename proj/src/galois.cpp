#include "antnorm/galois.hpp"

#include <numeric>
#include <stdexcept>

namespace antnorm {

std::string to_string(PrimeCase c) {
    return c == PrimeCase::Fixed ? "fixed" : "shifted";
}

PrimeCase prime_case_from_string(const std::string& s) {
    if (s == "fixed")
        return PrimeCase::Fixed;
    if (s == "shifted")
        return PrimeCase::Shifted;
    throw std::invalid_argument("unknown prime case '" + s + "' (expected fixed|shifted)");
}

InertClass prime_case_rule(unsigned p_mod_8) {
    switch (p_mod_8) {
    case 7:
        return InertClass::Fixed;
    case 3:
        return InertClass::Shifted;
    case 1:
    case 5:
        return InertClass::NotInert;
    default:
        throw std::invalid_argument("prime_case_rule: residue must be 1, 3, 5 or 7 mod 8");
    }
}

bool fixed_prime_exists(uint64_t k, unsigned level) {
    const uint64_t order = uint64_t{1} << level;
    if (k >= order)
        throw std::invalid_argument("fixed_prime_exists: k out of range");
    return k % 2 == 0;
}

namespace {

// Union-find over the raw first-row symbols a_0 .. a_{half-1} with a sign
// on every edge, recording relations a_i = s * a_j. A class whose element
// relates to itself with sign -1 is forced to zero.
class SignedClasses {
public:
    explicit SignedClasses(size_t n) : parent_(n), sign_(n, 1), zero_(n, false) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    // returns (root, sign of element relative to root)
    std::pair<size_t, int> find(size_t x) {
        if (parent_[x] == x)
            return {x, 1};
        auto [root, s] = find(parent_[x]);
        parent_[x] = root;
        sign_[x] = static_cast<int8_t>(sign_[x] * s);
        return {root, sign_[x]};
    }

    // impose a_x = rel * a_y
    void relate(size_t x, size_t y, int rel) {
        auto [rx, sx] = find(x);
        auto [ry, sy] = find(y);
        if (rx == ry) {
            if (sx != rel * sy)
                zero_[rx] = true;
            return;
        }
        // a_rx = sx^-1 a_x = sx * a_x ; signs are self-inverse
        parent_[rx] = ry;
        sign_[rx] = static_cast<int8_t>(sx * rel * sy);
        if (zero_[rx])
            zero_[ry] = true;
    }

    bool forced_zero(size_t x) {
        return zero_[find(x).first];
    }

private:
    std::vector<size_t> parent_;
    std::vector<int8_t> sign_;
    std::vector<bool> zero_;
};

} // namespace

SymbolShape derive_shape(unsigned level, PrimeCase kase) {
    if (level < 2)
        throw std::invalid_argument("derive_shape: level must be at least 2");
    if (level > 12) // 2^(2*level-1) entries; 12 keeps a shape under 100 MB
        throw std::invalid_argument("derive_shape: level too large");
    const size_t half = size_t{1} << (level - 1); // number of unit generators
    const size_t order = half * 2;                // number of primes in the orbit

    // tau applied to the first row. Fixed case: a_j = -a_{half-j}
    // (j = half - j forces a_{half/2} = 0). Shifted case: conjugating and
    // then shifting back by sigma^-1 gives a_j = -a_{half-1-j}.
    SignedClasses classes(half);
    if (kase == PrimeCase::Fixed) {
        for (size_t j = 1; j < half; ++j)
            classes.relate(j, half - j, -1);
    } else {
        for (size_t j = 0; j < half; ++j)
            classes.relate(j, half - 1 - j, -1);
    }

    // Canonical parameters: smallest raw index of each surviving class.
    std::vector<int> param_of_root(half, -1);
    std::vector<int> anchor_sign(half, 1);
    std::vector<ShapeEntry> raw(half);
    size_t nparams = 0;
    for (size_t j = 0; j < half; ++j) {
        if (classes.forced_zero(j)) {
            raw[j] = {-1, 0};
            continue;
        }
        auto [root, s] = classes.find(j);
        if (param_of_root[root] < 0) {
            param_of_root[root] = static_cast<int>(nparams++);
            anchor_sign[root] = s;
        }
        raw[j] = {param_of_root[root], s * anchor_sign[root]};
    }
    const size_t expected = size_t{1} << (level - 2);
    if (nparams != expected)
        throw std::logic_error("derive_shape: relation closure produced " +
                               std::to_string(nparams) + " parameters, expected " +
                               std::to_string(expected));

    // sigma carries entry (i, j) to (i+1, j+1); unwinding, entry (i, j) is
    // the first-row symbol of u_{j-i}, where u_{r+half} = u_r^-1.
    SymbolShape shape;
    shape.level = level;
    shape.kase = kase;
    shape.rows = order;
    shape.cols = half;
    shape.nparams = nparams;
    shape.entries.resize(order * half);
    for (size_t i = 0; i < order; ++i) {
        for (size_t j = 0; j < half; ++j) {
            const size_t rawidx = (j + order - i % order) % order;
            ShapeEntry e = rawidx < half ? raw[rawidx] : raw[rawidx - half];
            if (rawidx >= half)
                e.sign = -e.sign;
            shape.entries[i * half + j] = e;
        }
    }
    return shape;
}

} // namespace antnorm
