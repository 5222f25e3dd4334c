#pragma once

/*
 * The dense diagonal A = {(x_n, y_n)} of Q x Q.
 *
 * Each global step n appends one pair, by task n mod 3:
 *
 *   0  x-coverage  least-index unused x, then least-index unused y
 *   1  y-coverage  least-index unused y, then least-index unused x
 *   2  density     next basic box B; least-index unused x strictly inside
 *                  B's x-interval and likewise for y; logged as coverage
 *
 * "Least-index" is with respect to the enumeration e() of Q. No coordinate
 * is ever reused on either axis, so every vertical and horizontal section
 * of A is a singleton, and tasks 0 and 1 make both coordinate sequences
 * exhaust Q: e(i) is used on each axis by step 3(i + 1) at the latest.
 * Task 2 puts a pair inside every basic box, so A is dense.
 *
 * Basic boxes come from 4-tuples (i, j, k, l) of enumeration indices in
 * order of increasing i + j + k + l, ties broken lexicographically; the
 * tuple gives (e(i), e(j)) x (e(k), e(l)) and is skipped unless both
 * intervals are non-empty.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sepcont/enumeration.hpp"

namespace sepcont {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) { return os << '(' << p.x << ", " << p.y << ')'; }

// Open rectangle (x_lo, x_hi) x (y_lo, y_hi).
class Box {
public:
    Box(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi)
        : x_lo_(std::move(x_lo)), x_hi_(std::move(x_hi)), y_lo_(std::move(y_lo)), y_hi_(std::move(y_hi)) {
        if (!(x_lo_ < x_hi_) || !(y_lo_ < y_hi_))
            throw invalid_input("box needs x_lo < x_hi and y_lo < y_hi");
    }

    const Rational& x_lo() const noexcept { return x_lo_; }
    const Rational& x_hi() const noexcept { return x_hi_; }
    const Rational& y_lo() const noexcept { return y_lo_; }
    const Rational& y_hi() const noexcept { return y_hi_; }

    bool contains(const Point& p) const {
        return x_lo_ < p.x && p.x < x_hi_ && y_lo_ < p.y && p.y < y_hi_;
    }

    friend bool operator==(const Box&, const Box&) = default;

private:
    Rational x_lo_, x_hi_, y_lo_, y_hi_;
};

inline std::ostream& operator<<(std::ostream& os, const Box& b) {
    return os << '(' << b.x_lo() << ", " << b.x_hi() << ")x(" << b.y_lo() << ", " << b.y_hi() << ')';
}

// Walks the basic boxes in order; shares an enumeration cache with its owner.
class BoxEnumerator {
public:
    using Tuple = std::array<std::size_t, 4>;

    // Next surviving box and the index tuple it came from.
    std::pair<Box, Tuple> next(EnumerationCache& e) {
        for (;;) {
            Tuple t = cursor_;
            advance();
            e.at(std::max(std::max(t[0], t[1]), std::max(t[2], t[3])));
            const Rational& a = e.at(t[0]);
            const Rational& b = e.at(t[1]);
            if (!(a < b))
                continue;
            const Rational& c = e.at(t[2]);
            const Rational& d = e.at(t[3]);
            if (!(c < d))
                continue;
            ++emitted_;
            return {Box(a, b, c, d), t};
        }
    }

    std::size_t emitted() const noexcept { return emitted_; }

private:
    // Lexicographic successor among tuples with the same sum, else the first
    // tuple of the next sum.
    void advance() {
        auto& [i, j, k, l] = cursor_;
        std::size_t s = i + j + k + l;
        if (l > 0) {
            ++k;
            --l;
        } else if (i + j < s) {
            ++j;
            k = 0;
            l = s - i - j;
        } else if (i < s) {
            ++i;
            j = 0;
            k = 0;
            l = s - i;
        } else {
            i = j = k = 0;
            l = s + 1;
        }
    }

    Tuple cursor_{0, 0, 0, 0};
    std::size_t emitted_ = 0;
};

inline Box enumerate_box(std::size_t k) {
    EnumerationCache e;
    BoxEnumerator boxes;
    for (;;) {
        auto [box, tuple] = boxes.next(e);
        if (boxes.emitted() == k + 1)
            return box;
    }
}

struct CoverageEntry {
    std::size_t box_ordinal;
    std::size_t level;
    Box box;

    friend bool operator==(const CoverageEntry&, const CoverageEntry&) = default;
};

class Pairing {
public:
    static constexpr std::size_t kDefaultMaxPairs = 1u << 20;

    std::size_t size() const noexcept { return pairs_.size(); }
    const std::vector<Point>& pairs() const noexcept { return pairs_; }
    const Point& operator[](std::size_t n) const { return pairs_[n]; }
    const Point& at(std::size_t n) const { return pairs_.at(n); }
    const std::vector<CoverageEntry>& coverage() const noexcept { return coverage_; }

    // Enumeration indices of the coordinates of pair n.
    std::size_t x_enum_index(std::size_t n) const { return x_enum_.at(n); }
    std::size_t y_enum_index(std::size_t n) const { return y_enum_.at(n); }

    void extend(std::size_t steps) {
        for (std::size_t s = 0; s < steps; ++s)
            step();
    }

    void extend_to(std::size_t count) {
        while (pairs_.size() < count)
            step();
    }

    std::optional<std::size_t> find_x(const Rational& p) const {
        if (auto it = used_x_.find(p); it != used_x_.end())
            return it->second;
        return std::nullopt;
    }

    std::optional<std::size_t> find_y(const Rational& q) const {
        if (auto it = used_y_.find(q); it != used_y_.end())
            return it->second;
        return std::nullopt;
    }

    // Level m with x_m = p, extending the pairing as needed. Refuses once
    // the pairing would grow past max_pairs.
    std::size_t x_level(const Rational& p, std::size_t max_pairs = kDefaultMaxPairs) {
        return level_of(p, max_pairs, used_x_);
    }

    std::size_t y_level(const Rational& q, std::size_t max_pairs = kDefaultMaxPairs) {
        return level_of(q, max_pairs, used_y_);
    }

    // Compares the constructed sequence and coverage log only.
    friend bool operator==(const Pairing& a, const Pairing& b) {
        return a.pairs_ == b.pairs_ && a.coverage_ == b.coverage_;
    }

private:
    struct Axis {
        std::vector<bool> taken;
        std::size_t frontier = 0;

        bool is_taken(std::size_t i) const { return i < taken.size() && taken[i]; }

        void take(std::size_t i) {
            if (taken.size() <= i)
                taken.resize(std::max<std::size_t>(i + 1, 2 * taken.size()), false);
            taken[i] = true;
            while (is_taken(frontier))
                ++frontier;
        }
    };

    std::size_t level_of(const Rational& v, std::size_t max_pairs,
                         const std::unordered_map<Rational, std::size_t>& used) {
        for (;;) {
            if (auto it = used.find(v); it != used.end())
                return it->second;
            if (pairs_.size() >= max_pairs)
                throw refusal("coordinate " + v.str() + " not reached within " + std::to_string(max_pairs) +
                              " pairs");
            step();
        }
    }

    std::size_t least_unused(const Axis& axis) const { return axis.frontier; }

    std::size_t least_unused_inside(const Axis& axis, const Rational& lo, const Rational& hi) {
        for (std::size_t i = axis.frontier;; ++i) {
            if (axis.is_taken(i))
                continue;
            const Rational& v = enum_.at(i);
            if (lo < v && v < hi)
                return i;
        }
    }

    void step() {
        std::size_t n = pairs_.size();
        std::size_t xi = 0, yi = 0;
        switch (n % 3) {
        case 0:
            xi = least_unused(x_axis_);
            yi = least_unused(y_axis_);
            break;
        case 1:
            yi = least_unused(y_axis_);
            xi = least_unused(x_axis_);
            break;
        default: {
            auto [box, tuple] = boxes_.next(enum_);
            xi = least_unused_inside(x_axis_, box.x_lo(), box.x_hi());
            yi = least_unused_inside(y_axis_, box.y_lo(), box.y_hi());
            coverage_.push_back(CoverageEntry{boxes_.emitted() - 1, n, std::move(box)});
            break;
        }
        }
        x_axis_.take(xi);
        y_axis_.take(yi);
        enum_.at(std::max(xi, yi));
        Point p{enum_.at(xi), enum_.at(yi)};
        used_x_.emplace(p.x, n);
        used_y_.emplace(p.y, n);
        x_enum_.push_back(xi);
        y_enum_.push_back(yi);
        pairs_.push_back(std::move(p));
    }

    EnumerationCache enum_;
    BoxEnumerator boxes_;
    Axis x_axis_, y_axis_;
    std::vector<Point> pairs_;
    std::vector<std::size_t> x_enum_, y_enum_;
    std::unordered_map<Rational, std::size_t> used_x_, used_y_;
    std::vector<CoverageEntry> coverage_;
};

} // namespace sepcont
