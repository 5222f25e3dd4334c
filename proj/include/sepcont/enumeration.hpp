#pragma once

/*
 * A fixed bijection between the naturals and Q.
 *
 *     e(0)    = 0
 *     e(2k-1) = cw(k)
 *     e(2k)   = -cw(k)
 *
 * where cw(1), cw(2), ... is the Calkin-Wilf sequence, i.e. the breadth
 * first walk of the Calkin-Wilf tree (root 1/1, children a/(a+b) and
 * (a+b)/b). Node k of the tree is reached by reading the binary digits of
 * k after the leading one: 0 goes left, 1 goes right. index_of() climbs
 * back to the root using whole runs of equal steps, so both directions
 * cost O(log) in the size of the answer.
 *
 * EnumerationCache produces the same sequence by Newman's recurrence
 * cw(k+1) = 1/(2*floor(cw(k)) + 1 - cw(k)) and memoizes it; the pairing
 * uses it for the dense scans over small indices.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "sepcont/rational.hpp"

namespace sepcont {

struct EnumIndex {
    BigInt value;

    EnumIndex() = default;
    EnumIndex(std::uint64_t v) : value(v) {} // NOLINT
    explicit EnumIndex(BigInt v) : value(std::move(v)) {
        if (value.sign() < 0)
            throw invalid_input("enumeration index must be non-negative");
    }

    friend bool operator==(const EnumIndex&, const EnumIndex&) = default;
    friend std::strong_ordering operator<=>(const EnumIndex& a, const EnumIndex& b) {
        int c = a.value.compare(b.value);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
};

// k-th term (k >= 1) of the Calkin-Wilf sequence.
inline Rational calkin_wilf(const BigInt& k) {
    if (k < 1)
        throw invalid_input("Calkin-Wilf terms start at index 1");
    BigInt a = 1, b = 1;
    for (auto bit = static_cast<long>(msb(k)) - 1; bit >= 0; --bit) {
        if (bit_test(k, static_cast<unsigned>(bit)))
            a += b;
        else
            b += a;
    }
    return Rational(std::move(a), std::move(b));
}

inline Rational enumerate(const EnumIndex& n) {
    if (n.value.is_zero())
        return Rational();
    BigInt k = (n.value + 1) / 2;
    Rational c = calkin_wilf(k);
    return bit_test(n.value, 0) ? c : -c;
}

// Position of a positive reduced a/b in the Calkin-Wilf sequence.
inline BigInt calkin_wilf_index(BigInt a, BigInt b) {
    if (a.sign() <= 0 || b.sign() <= 0)
        throw invalid_input("Calkin-Wilf index needs a positive rational");
    // The index has as many bits as the continued fraction terms sum to.
    constexpr unsigned kMaxBits = 1u << 24;
    BigInt low = 0;
    unsigned pos = 0;
    auto take = [&](const BigInt& steps) {
        if (steps > kMaxBits - pos)
            throw refusal("enumeration index exceeds 2^" + std::to_string(kMaxBits) + " bits");
        return steps.convert_to<unsigned>();
    };
    while (!(a == 1 && b == 1)) {
        if (a < b) {
            // a/b is reached from a/(b - s*a) by s left steps (digit 0).
            BigInt steps = (b - 1) / a;
            b -= steps * a;
            pos += take(steps);
        } else {
            BigInt steps = (a - 1) / b;
            a -= steps * b;
            unsigned s = take(steps);
            BigInt run = (BigInt(1) << s) - 1;
            low |= run << pos;
            pos += s;
        }
    }
    return (BigInt(1) << pos) | low;
}

inline EnumIndex index_of(const Rational& r) {
    if (r.is_zero())
        return EnumIndex(0);
    BigInt k = calkin_wilf_index(boost::multiprecision::abs(r.num()), r.den());
    return EnumIndex(r.sign() > 0 ? BigInt(2 * k - 1) : BigInt(2 * k));
}

// Memoized prefix e(0), e(1), ... grown on demand.
class EnumerationCache {
public:
    const Rational& at(std::size_t n) {
        while (values_.size() <= n)
            grow();
        return values_[n];
    }

    std::size_t size() const noexcept { return values_.size(); }

private:
    void grow() {
        std::size_t n = values_.size();
        if (n == 0) {
            values_.emplace_back();
            return;
        }
        if (n % 2 == 0) {
            values_.push_back(-values_[n - 1]);
            return;
        }
        if (n == 1) {
            last_cw_ = Rational(1);
        } else {
            Rational step = Rational(BigInt(2 * last_cw_.floor() + 1)) - last_cw_;
            last_cw_ = step.reciprocal();
        }
        values_.push_back(last_cw_);
    }

    std::vector<Rational> values_;
    Rational last_cw_;
};

} // namespace sepcont
