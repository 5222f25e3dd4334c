#pragma once

/*
 * Continuous functions on a cross ({x_n} x Q) u (Q x {y_n}).
 *
 * The level-n function is f_n = h * g restricted to the cross, where both
 * factors are defined on the whole plane using the L-infinity metric:
 *
 *   h(p) = max(0, 1 - dist(p, anchors))
 *   g(p) = sum_a value(a) * max(0, 1 - dist(p, a) / r)
 *
 * The anchors are (x_n, y_i) and (x_i, y_n) for i <= n, with (x_n, y_n)
 * listed once. r is at most half the minimum pairwise anchor distance, so
 * the tents of g have disjoint supports and g(a) = value(a). h is 1 exactly
 * on the anchors. Both factors are piecewise linear in rational data, so
 * every value is an exact rational.
 *
 * |f_n| <= 1, h is 1-Lipschitz and g is (1/r)-Lipschitz, hence f_n is
 * (1 + 1/r)-Lipschitz.
 *
 * Level 0 is the plain tent f_0(x, y_0) = max(0, 1 - |x - x_0|),
 * f_0(x_0, y) = max(0, 1 - |y - y_0|).
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "sepcont/pairing.hpp"

namespace sepcont {

inline Rational linf_distance(const Point& a, const Point& b) {
    return max(abs(a.x - b.x), abs(a.y - b.y));
}

// Minimum pairwise L-infinity distance, by brute force.
inline Rational min_pairwise_distance(std::span<const Point> pts) {
    if (pts.size() < 2)
        throw invalid_input("pairwise distance needs at least two points");
    Rational best = linf_distance(pts[0], pts[1]);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (Rational d = linf_distance(pts[i], pts[j]); d < best)
                best = std::move(d);
    return best;
}

inline Rational hat_h(const Point& p, std::span<const Point> anchors) {
    if (anchors.empty())
        throw invalid_input("hat function needs at least one anchor");
    Rational d = linf_distance(p, anchors[0]);
    for (std::size_t i = 1; i < anchors.size(); ++i)
        if (Rational di = linf_distance(p, anchors[i]); di < d)
            d = std::move(di);
    return d < 1 ? Rational(1) - d : Rational(0);
}

struct AnchorSet {
    std::vector<Point> anchors;
    std::vector<Rational> values;

    std::size_t size() const noexcept { return anchors.size(); }

    friend bool operator==(const AnchorSet&, const AnchorSet&) = default;
};

namespace detail {

// g without the disjoint-support check.
inline Rational tent_sum(const Point& p, const AnchorSet& a, const Rational& r) {
    Rational total;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational d = linf_distance(p, a.anchors[i]);
        if (d < r && !a.values[i].is_zero())
            total += a.values[i] * (Rational(1) - d / r);
    }
    return total;
}

} // namespace detail

inline Rational interp_g(const Point& p, const AnchorSet& a, const Rational& r) {
    if (a.anchors.size() != a.values.size() || a.anchors.empty())
        throw invalid_input("anchor set needs one value per anchor");
    if (r.sign() <= 0)
        throw invalid_input("tent radius must be positive");
    if (a.size() > 1 && Rational(2) * r > min_pairwise_distance(a.anchors))
        throw invalid_input("tent radius " + r.str() + " exceeds half the anchor separation");
    return detail::tent_sum(p, a, r);
}

inline Rational base_f0(const Rational& x0, const Rational& y0, const Point& p) {
    Rational d;
    if (p.y == y0)
        d = abs(p.x - x0);
    else if (p.x == x0)
        d = abs(p.y - y0);
    else
        throw invalid_input("point " + p.x.str() + "," + p.y.str() + " is off the level-0 cross");
    return d < 1 ? Rational(1) - d : Rational(0);
}

class CrossFunction;
CrossFunction build_cross(std::size_t n, std::span<const Rational> xs, std::span<const Rational> ys,
                          std::span<const Rational> xi, std::span<const Rational> eta);

// f_n together with its certificate data. Immutable once built.
class CrossFunction {
public:
    std::size_t level() const noexcept { return level_; }
    const AnchorSet& anchor_set() const noexcept { return anchors_; }
    const Rational& radius() const noexcept { return radius_; }
    const Rational& lipschitz() const noexcept { return lipschitz_; }
    const Point& center() const noexcept { return anchors_.anchors.front(); }

    bool on_cross(const Point& p) const { return p.x == center().x || p.y == center().y; }

    // Exact f_n(p); p must lie on the cross.
    //
    // On the vertical line x = x_n every anchor off that line is farther than
    // (x_n, y_n), so the nearest anchor is found among the vertical ones by
    // binary search, and it is the only tent that can be non-zero.
    // Symmetrically on the horizontal line.
    Rational operator()(const Point& p) const {
        const Point& c = center();
        if (level_ == 0)
            return base_f0(c.x, c.y, p);
        const std::vector<std::uint32_t>* order;
        const Rational* coord;
        bool vertical;
        if (p.x == c.x) {
            order = &column_order_;
            coord = &p.y;
            vertical = true;
        } else if (p.y == c.y) {
            order = &row_order_;
            coord = &p.x;
            vertical = false;
        } else {
            throw invalid_input("point " + p.x.str() + "," + p.y.str() + " is off the level-" +
                                std::to_string(level_) + " cross");
        }
        auto key = [&](std::uint32_t i) -> const Rational& {
            return vertical ? anchors_.anchors[i].y : anchors_.anchors[i].x;
        };
        auto it = std::lower_bound(order->begin(), order->end(), *coord,
                                   [&](std::uint32_t i, const Rational& v) { return key(i) < v; });
        std::uint32_t nearest = 0;
        Rational d;
        bool have = false;
        if (it != order->end()) {
            nearest = *it;
            d = key(*it) - *coord;
            have = true;
        }
        if (it != order->begin()) {
            std::uint32_t cand = *(it - 1);
            Rational dc = *coord - key(cand);
            if (!have || dc < d) {
                nearest = cand;
                d = std::move(dc);
            }
        }
        if (!(d < 1))
            return Rational(0);
        if (!(d < radius_) || anchors_.values[nearest].is_zero())
            return Rational(0);
        Rational h = Rational(1) - d;
        Rational g = anchors_.values[nearest] * (Rational(1) - d / radius_);
        return h * g;
    }

    friend bool operator==(const CrossFunction& a, const CrossFunction& b) {
        return a.level_ == b.level_ && a.anchors_ == b.anchors_ && a.radius_ == b.radius_ &&
               a.lipschitz_ == b.lipschitz_;
    }

private:
    friend CrossFunction build_cross(std::size_t, std::span<const Rational>, std::span<const Rational>,
                                     std::span<const Rational>, std::span<const Rational>);

    CrossFunction() = default;

    std::size_t level_ = 0;
    AnchorSet anchors_;
    Rational radius_;
    Rational lipschitz_;
    std::vector<std::uint32_t> column_order_; // anchors on x = x_n, by y
    std::vector<std::uint32_t> row_order_;    // anchors on y = y_n, by x
};

namespace detail {

// Smallest gap between consecutive sorted values; throws on repeats.
inline Rational min_gap(std::span<const Rational> v, const char* axis) {
    std::vector<std::uint32_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) { return v[a] < v[b]; });
    Rational best;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        Rational gap = v[idx[i]] - v[idx[i - 1]];
        if (gap.is_zero())
            throw invalid_input(std::string("repeated ") + axis + " coordinate " + v[idx[i]].str());
        if (i == 1 || gap < best)
            best = std::move(gap);
    }
    return best;
}

inline void check_unit_param(const Rational& v, const char* name, std::size_t i) {
    if (v.sign() < 0 || !(v < 1))
        throw invalid_input(std::string(name) + "[" + std::to_string(i) + "] = " + v.str() + " is outside [0,1)");
}

} // namespace detail

// f_n from coordinates x_0..x_n, y_0..y_n and the prescribed values
// xi[i] = f_n(x_n, y_i), eta[i] = f_n(x_i, y_n) for i < n. Anchor 0 is
// (x_n, y_n); anchors 2i+1 and 2i+2 are (x_n, y_i) and (x_i, y_n).
inline CrossFunction build_cross(std::size_t n, std::span<const Rational> xs, std::span<const Rational> ys,
                                 std::span<const Rational> xi, std::span<const Rational> eta) {
    if (xs.size() != n + 1 || ys.size() != n + 1)
        throw invalid_input("level " + std::to_string(n) + " needs " + std::to_string(n + 1) + " coordinates per axis");
    if (xi.size() != n || eta.size() != n)
        throw invalid_input("level " + std::to_string(n) + " needs " + std::to_string(n) + " parameters per family");
    for (std::size_t i = 0; i < n; ++i) {
        detail::check_unit_param(xi[i], "xi", i);
        detail::check_unit_param(eta[i], "eta", i);
    }

    CrossFunction f;
    f.level_ = n;
    auto& a = f.anchors_;
    a.anchors.reserve(2 * n + 1);
    a.values.reserve(2 * n + 1);
    a.anchors.push_back(Point{xs[n], ys[n]});
    a.values.emplace_back(1);
    for (std::size_t i = 0; i < n; ++i) {
        a.anchors.push_back(Point{xs[n], ys[i]});
        a.values.push_back(xi[i]);
        a.anchors.push_back(Point{xs[i], ys[n]});
        a.values.push_back(eta[i]);
    }

    if (n == 0) {
        f.radius_ = 1;
        f.lipschitz_ = 1;
        return f;
    }

    // Off-line anchor pairs are never closer than an on-line pair through
    // the center, so the minimum separation is the smallest coordinate gap.
    Rational sep = min(detail::min_gap(xs, "x"), detail::min_gap(ys, "y"));
    f.radius_ = min(Rational(1), sep / Rational(2));
    f.lipschitz_ = Rational(1) + f.radius_.reciprocal();

    auto& col = f.column_order_;
    auto& row = f.row_order_;
    col.reserve(n + 1);
    row.reserve(n + 1);
    col.push_back(0);
    row.push_back(0);
    for (std::uint32_t i = 0; i < n; ++i) {
        col.push_back(2 * i + 1);
        row.push_back(2 * i + 2);
    }
    std::sort(col.begin(), col.end(), [&](auto l, auto r) { return a.anchors[l].y < a.anchors[r].y; });
    std::sort(row.begin(), row.end(), [&](auto l, auto r) { return a.anchors[l].x < a.anchors[r].x; });
    return f;
}

inline Rational eval_cross(const CrossFunction& f, const Point& p) { return f(p); }

// Same value as eval_cross, straight from the defining formula h * g with
// linear scans over all anchors.
inline Rational eval_cross_direct(const CrossFunction& f, const Point& p) {
    const Point& c = f.center();
    if (f.level() == 0)
        return base_f0(c.x, c.y, p);
    if (!f.on_cross(p))
        throw invalid_input("point is off the cross");
    const AnchorSet& a = f.anchor_set();
    return hat_h(p, a.anchors) * detail::tent_sum(p, a, f.radius());
}

} // namespace sepcont
