#pragma once

// Random data for property tests.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "sepcont/pairing.hpp"

namespace sepcont::testgen {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    // p/q with |p/q| <= span and 1 <= q <= max_den.
    Rational rational(std::int64_t span = 4, std::int64_t max_den = 12) {
        std::int64_t q = integer(1, max_den);
        return Rational::from_fraction(integer(-span * q, span * q), q);
    }

    // Uniform-ish in [0, 1).
    Rational unit(std::int64_t max_den = 16) {
        std::int64_t q = integer(1, max_den);
        return Rational::from_fraction(integer(0, q - 1), q);
    }

    std::vector<Rational> distinct(std::size_t n, std::int64_t span = 3, std::int64_t max_den = 8) {
        std::set<Rational> seen;
        std::vector<Rational> out;
        while (out.size() < n) {
            Rational r = rational(span, max_den);
            if (seen.insert(r).second)
                out.push_back(r);
        }
        return out;
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1)); }

    bool coin() { return integer(0, 1) == 1; }

private:
    std::mt19937_64 rng_;
};

} // namespace sepcont::testgen
