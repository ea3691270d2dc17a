#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "antnorm/galois.hpp"
#include "oracles.hpp"

using namespace antnorm;

namespace {

// Fixture route, independent of derive_shape: expand the two transcribed
// first-row patterns, then build the top half by the skew shift rule and
// negate it for the bottom half. Entries are signed parameter codes:
// +(k+1) for +a_k, -(k+1) for -a_k, 0 for the zero entry.
using SignedRow = std::vector<int>;

SignedRow first_row_pattern(unsigned level, PrimeCase kase) {
    const size_t half = size_t{1} << (level - 1);
    const size_t quarter = half / 2;
    SignedRow row(half, 0);
    for (size_t j = 0; j < quarter; ++j)
        row[j] = static_cast<int>(j) + 1;
    if (kase == PrimeCase::Fixed) {
        // (a_0, ..., a_{q-1}, 0, -a_{q-1}, ..., -a_1)
        for (size_t k = 1; k < quarter; ++k)
            row[half - k] = -(static_cast<int>(k) + 1);
    } else {
        // (a_0, ..., a_{q-1}, -a_{q-1}, ..., -a_0)
        for (size_t j = quarter; j < half; ++j)
            row[j] = -(static_cast<int>(half - 1 - j) + 1);
    }
    return row;
}

std::vector<SignedRow> expand_fixture(unsigned level, PrimeCase kase) {
    const size_t half = size_t{1} << (level - 1);
    SignedRow row = first_row_pattern(level, kase);
    std::vector<SignedRow> rows;
    for (size_t i = 0; i < half; ++i) {
        rows.push_back(row);
        SignedRow next(half);
        next[0] = -row[half - 1];
        for (size_t k = 1; k < half; ++k)
            next[k] = row[k - 1];
        row = std::move(next);
    }
    for (size_t i = 0; i < half; ++i) {
        SignedRow neg(half);
        for (size_t k = 0; k < half; ++k)
            neg[k] = -rows[i][k];
        rows.push_back(std::move(neg));
    }
    return rows;
}

int entry_code(const ShapeEntry& e) {
    return e.sign == 0 ? 0 : e.sign * (e.index + 1);
}

} // namespace

TEST_CASE("prime_case_rule by residue class") {
    CHECK(prime_case_rule(7) == InertClass::Fixed);
    CHECK(prime_case_rule(3) == InertClass::Shifted);
    CHECK(prime_case_rule(5) == InertClass::NotInert);
    CHECK(prime_case_rule(1) == InertClass::NotInert);
    CHECK_THROWS_AS(prime_case_rule(2), std::invalid_argument);
}

TEST_CASE("fixed_prime_exists examples and brute force") {
    CHECK(fixed_prime_exists(0, 3));
    CHECK_FALSE(fixed_prime_exists(1, 3));
    CHECK(fixed_prime_exists(6, 3));
    for (unsigned level = 1; level <= 6; ++level) {
        const uint64_t order = uint64_t{1} << level;
        for (uint64_t k = 0; k < order; ++k)
            CHECK(fixed_prime_exists(k, level) == oracles::fixed_prime_by_search(k, level));
    }
}

TEST_CASE("level-2 shapes match the displayed base-case matrices") {
    SymbolShape fixed = derive_shape(2, PrimeCase::Fixed);
    CHECK(fixed.rows == 4);
    CHECK(fixed.cols == 2);
    CHECK(fixed.nparams == 1);
    const int F[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 2; ++j)
            CHECK(entry_code(fixed.at(i, j)) == F[i][j]);

    SymbolShape shifted = derive_shape(2, PrimeCase::Shifted);
    CHECK(shifted.nparams == 1);
    const int S[4][2] = {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 2; ++j)
            CHECK(entry_code(shifted.at(i, j)) == S[i][j]);
}

TEST_CASE("level-3 fixed first row is (a_0, a_1, 0, -a_1)") {
    SymbolShape s = derive_shape(3, PrimeCase::Fixed);
    CHECK(entry_code(s.at(0, 0)) == 1);
    CHECK(entry_code(s.at(0, 1)) == 2);
    CHECK(entry_code(s.at(0, 2)) == 0);
    CHECK(entry_code(s.at(0, 3)) == -2);
}

TEST_CASE("derived shapes equal the transcribed patterns for levels 2..5") {
    for (unsigned level = 2; level <= 5; ++level) {
        for (PrimeCase kase : {PrimeCase::Fixed, PrimeCase::Shifted}) {
            SymbolShape shape = derive_shape(level, kase);
            auto fixture = expand_fixture(level, kase);
            REQUIRE(shape.rows == fixture.size());
            REQUIRE(shape.cols == fixture[0].size());
            CHECK(shape.nparams == size_t{1} << (level - 2));
            for (size_t i = 0; i < shape.rows; ++i)
                for (size_t j = 0; j < shape.cols; ++j)
                    CHECK(entry_code(shape.at(i, j)) == fixture[i][j]);
        }
    }
}

TEST_CASE("bottom half negates the top half and every parameter appears") {
    for (unsigned level = 2; level <= 6; ++level) {
        for (PrimeCase kase : {PrimeCase::Fixed, PrimeCase::Shifted}) {
            SymbolShape shape = derive_shape(level, kase);
            const size_t half = shape.rows / 2;
            std::vector<bool> seen(shape.nparams, false);
            for (size_t i = 0; i < half; ++i) {
                for (size_t j = 0; j < shape.cols; ++j) {
                    const ShapeEntry& top = shape.at(i, j);
                    const ShapeEntry& bot = shape.at(half + i, j);
                    CHECK(bot.sign == -top.sign);
                    if (top.sign != 0) {
                        CHECK(bot.index == top.index);
                        CHECK(top.index >= 0);
                        CHECK(static_cast<size_t>(top.index) < shape.nparams);
                        seen[static_cast<size_t>(top.index)] = true;
                    }
                }
            }
            for (bool b : seen)
                CHECK(b);
        }
    }
}

TEST_CASE("derive_shape rejects levels below 2") {
    CHECK_THROWS_AS(derive_shape(1, PrimeCase::Fixed), std::invalid_argument);
}
