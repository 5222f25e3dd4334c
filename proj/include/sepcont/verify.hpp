#pragma once

/*
 * Finite-scale certificates for the woven function.
 *
 * Every comparison is an exact rational comparison; the only tolerance is
 * the explicit eps of the image density search. The checks only read a
 * WovenFunction (through the *_built evaluators), so the caller builds or
 * freezes enough levels first; the levels_for_* helpers say how many.
 *
 * Feeble continuity quantifies over all open sets. It is refuted here on a
 * fixed target interval U and the first K basic boxes: f^-1[U] is non-empty,
 * yet each basic box holds a point of A, where f = 1 lies outside U.
 */

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sepcont/report.hpp"
#include "sepcont/weave.hpp"

namespace sepcont {

constexpr std::size_t kOracleLevelLimit = 12;

// Levels a check must be able to read.
inline std::size_t levels_for_singleton(std::size_t n) { return n; }
inline std::size_t levels_for_welldefined(std::size_t m, std::size_t n) { return std::max(m, n); }
// Box k is handled at step 3k + 2.
inline std::size_t levels_for_boxes(std::size_t k) { return 3 * k; }

// Small deterministic generator; avoids the implementation-defined
// standard distributions so runs are reproducible across toolchains.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n == 0)
            throw invalid_input("empty sampling range");
        std::uint64_t limit = engine_.max() - engine_.max() % n;
        for (;;) {
            std::uint64_t v = engine_();
            if (v < limit)
                return v % n;
        }
    }

    // Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // a/b with 1 <= b <= max_den and |a/b| <= span.
    Rational fraction(std::int64_t span, std::int64_t max_den) {
        std::int64_t b = between(1, max_den);
        std::int64_t a = between(-span * b, span * b);
        return Rational::from_fraction(a, b);
    }

private:
    std::mt19937_64 engine_;
};

namespace detail {

// f_i by the defining recursion with nothing memoized but the geometry:
// the prescribed values of f_i are recomputed from f_0..f_{i-1} on every
// call, so the cost grows like 3^i.
class DirectRecursion {
public:
    explicit DirectRecursion(const Pairing& pairing) : pairing_(pairing) {}

    Rational value(std::size_t i, const Point& p) {
        const Point& c = pairing_[i];
        if (i == 0)
            return base_f0(c.x, c.y, p);
        if (!(p.x == c.x || p.y == c.y))
            throw invalid_input("oracle point is off the level-" + std::to_string(i) + " cross");
        AnchorSet a;
        a.anchors.reserve(2 * i + 1);
        a.values.reserve(2 * i + 1);
        a.anchors.push_back(c);
        a.values.emplace_back(1);
        for (std::size_t j = 0; j < i; ++j) {
            Point row{c.x, pairing_[j].y};
            Point col{pairing_[j].x, c.y};
            a.values.push_back(value(j, row));
            a.anchors.push_back(std::move(row));
            a.values.push_back(value(j, col));
            a.anchors.push_back(std::move(col));
        }
        return hat_h(p, a.anchors) * detail::tent_sum(p, a, radius(i, a));
    }

private:
    const Rational& radius(std::size_t i, const AnchorSet& a) {
        if (radius_.size() <= i)
            radius_.resize(i + 1);
        if (radius_[i].is_zero())
            radius_[i] = min(Rational(1), min_pairwise_distance(a.anchors) / Rational(2));
        return radius_[i];
    }

    const Pairing& pairing_;
    std::vector<Rational> radius_;
};

} // namespace detail

// f(p, q) by unmemoized recursion. The pairing must already contain p among
// its first max_level + 1 abscissae.
inline Rational oracle_eval(const Pairing& pairing, const Rational& p, const Rational& q, std::size_t max_level) {
    if (max_level > kOracleLevelLimit)
        throw refusal("oracle depth " + std::to_string(max_level) + " exceeds " + std::to_string(kOracleLevelLimit));
    auto m = pairing.find_x(p);
    if (!m || *m > max_level)
        throw refusal("x = " + p.str() + " is not among the first " + std::to_string(max_level + 1) + " levels");
    detail::DirectRecursion rec(pairing);
    return rec.value(*m, Point{p, q});
}

inline Report check_singleton_image(const WovenFunction& w, std::size_t count) {
    if (count > w.built_levels())
        throw invalid_state("singleton check needs " + std::to_string(count) + " built levels");
    Report r{"singleton_image"};
    r.bound("N", std::to_string(count));
    for (std::size_t n = 0; n < count; ++n) {
        const Point& a = w.pairing()[n];
        Rational v = w.eval_built(a.x, a.y);
        if (v != Rational(1))
            return r.fail("n", std::to_string(n)).witness("point", a.x.str() + "," + a.y.str()).witness("value", v.str());
    }
    r.witness("value", Rational(1).str());
    return r;
}

inline Report check_welldefined(const WovenFunction& w, std::size_t cols, std::size_t rows) {
    if (std::max(cols, rows) > w.built_levels())
        throw invalid_state("well-definedness check needs " + std::to_string(std::max(cols, rows)) + " built levels");
    Report r{"welldefined"};
    r.bound("M", std::to_string(cols)).bound("N", std::to_string(rows));
    const Pairing& a = w.pairing();
    for (std::size_t m = 0; m < cols; ++m) {
        for (std::size_t n = 0; n < rows; ++n) {
            Rational by_col = w.eval_built(a[m].x, a[n].y);
            Rational by_row = w.eval_via_row_built(a[m].x, a[n].y);
            if (by_col != by_row)
                return r.fail("m", std::to_string(m))
                    .witness("n", std::to_string(n))
                    .witness("column_value", by_col.str())
                    .witness("row_value", by_row.str());
        }
    }
    r.witness("points", std::to_string(cols * rows));
    return r;
}

// Every prescribed value xi, eta of levels < count lies in [0,1).
inline Report check_parameter_range(const WovenFunction& w, std::size_t count) {
    Report r{"parameter_range"};
    r.bound("levels", std::to_string(count));
    const ParamTable& t = w.table();
    if (count > t.size())
        throw invalid_state("parameter check needs " + std::to_string(count) + " built levels");
    std::size_t checked = 0;
    for (std::size_t k = 0; k < count; ++k) {
        if (t.xi(k).size() != k || t.eta(k).size() != k)
            return r.fail("k", std::to_string(k)).witness("param_count", std::to_string(t.xi(k).size() + t.eta(k).size()));
        for (std::size_t i = 0; i < k; ++i) {
            for (const auto* v : {&t.xi(k)[i], &t.eta(k)[i]}) {
                if (v->sign() < 0 || !(*v < 1))
                    return r.fail("k", std::to_string(k)).witness("i", std::to_string(i)).witness("value", v->str());
                ++checked;
            }
        }
    }
    r.witness("params", std::to_string(checked));
    return r;
}

// A rational y with |f(x_level, y) - t| <= eps, by bisection between y_level
// (value 1) and a point at distance >= 1 from every anchor on that column
// (value 0). The section is Lipschitz, so the bracket closes.
inline Rational image_density_search(const WovenFunction& w, const Rational& t, const Rational& eps,
                                     std::size_t level = 0) {
    if (t.sign() < 0 || t > Rational(1))
        throw invalid_input("target " + t.str() + " is outside [0,1]");
    if (eps.sign() <= 0)
        throw invalid_input("tolerance must be positive");
    const CrossFunction& f = w.level(level);
    const Rational& x = f.center().x;
    Rational lo = f.center().y;
    Rational hi = lo;
    for (std::size_t j = 0; j <= level; ++j)
        hi = max(hi, w.pairing()[j].y);
    hi += 1;

    auto close = [&](const Rational& y) { return abs(w.eval_built(x, y) - t) <= eps; };
    if (close(lo))
        return lo;
    if (close(hi))
        return hi;
    for (;;) {
        Rational mid = (lo + hi) / Rational(2);
        Rational v = w.eval_built(x, mid);
        if (abs(v - t) <= eps)
            return mid;
        if (v >= t)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
}

// Density search at every target 0, pitch, 2*pitch, ..., 1.
inline Report density_sweep(const WovenFunction& w, const Rational& pitch, const Rational& eps, std::size_t level = 0) {
    if (pitch.sign() <= 0 || pitch > Rational(1))
        throw invalid_input("grid pitch must lie in (0,1]");
    Report r{"image_density"};
    r.bound("pitch", pitch.str()).bound("eps", eps.str()).bound("column", std::to_string(level));
    const Rational& x = w.level(level).center().x;
    std::size_t targets = 0;
    for (Rational t;; t = min(t + pitch, Rational(1))) {
        Rational y = image_density_search(w, t, eps, level);
        Rational v = w.eval_built(x, y);
        if (abs(v - t) > eps)
            return r.fail("t", t.str()).witness("y", y.str()).witness("value", v.str());
        ++targets;
        if (t == Rational(1))
            break;
    }
    r.witness("targets", std::to_string(targets));
    return r;
}

inline Report nonfeeble_witness(const WovenFunction& w, std::size_t boxes, const Rational& lo, const Rational& hi) {
    if (lo.sign() < 0 || !(lo < hi) || hi > Rational(1))
        throw invalid_input("target interval must satisfy 0 <= lo < hi <= 1, so that 1 is outside it");
    Report r{"nonfeeble_witness"};
    r.bound("K", std::to_string(boxes)).bound("U", "(" + lo.str() + "," + hi.str() + ")");
    auto inside = [&](const Rational& v) { return lo < v && v < hi; };

    // (a) f^-1[U] is non-empty.
    Rational target = (lo + hi) / Rational(2);
    Rational y = image_density_search(w, target, (hi - lo) / Rational(4));
    const Rational& x0 = w.pairing()[0].x;
    Rational v = w.eval_built(x0, y);
    if (!inside(v))
        return r.fail("member_point", x0.str() + "," + y.str()).witness("member_value", v.str());
    r.witness("member_point", x0.str() + "," + y.str()).witness("member_value", v.str());

    // (b) no basic box lies inside f^-1[U].
    const auto& log = w.pairing().coverage();
    if (log.size() < boxes)
        throw invalid_state("pairing has processed only " + std::to_string(log.size()) + " boxes");
    for (std::size_t k = 0; k < boxes; ++k) {
        const CoverageEntry& e = log[k];
        const Point& a = w.pairing()[e.level];
        Rational va = w.eval_built(a.x, a.y);
        if (e.box_ordinal != k || !e.box.contains(a) || va != Rational(1) || inside(va))
            return r.fail("box", std::to_string(k)).witness("point", a.x.str() + "," + a.y.str()).witness("value", va.str());
    }
    r.witness("boxes_certified", std::to_string(boxes));
    return r;
}

enum class SectionKind { column, row };

inline const char* to_string(SectionKind k) { return k == SectionKind::column ? "column" : "row"; }

// Random pairs on the vertical section x = x_n or the horizontal section
// y = y_n satisfy |f(p) - f(p')| <= L_n * dist(p, p'). Row sections are
// first checked to coincide with f_n.
inline Report section_continuity_check(const WovenFunction& w, SectionKind kind, std::size_t n, std::size_t samples,
                                       std::uint64_t seed) {
    const CrossFunction& fn = w.level(n);
    const Rational& lip = fn.lipschitz();
    const Rational& rad = fn.radius();
    const Pairing& a = w.pairing();
    Report r{"section_continuity"};
    r.bound("kind", to_string(kind)).bound("n", std::to_string(n)).bound("samples", std::to_string(samples));
    r.bound("L", lip.str());
    SampleRng rng(seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)) ^ (kind == SectionKind::row ? 0x5bd1e995ULL : 0));

    // Near an anchor coordinate (tents active), or anywhere nearby.
    auto near = [&](const Rational& c) {
        if (rng.below(4) == 0)
            return c + rng.fraction(8, 16);
        return c + rad * rng.fraction(2, 16);
    };

    for (std::size_t s = 0; s < samples; ++s) {
        Point p, q;
        if (kind == SectionKind::column) {
            const Rational& x = fn.center().x;
            Rational y1 = near(a[rng.below(n + 1)].y);
            Rational y2 = rng.below(2) == 0 ? y1 + rad * rng.fraction(1, 64) : near(a[rng.below(n + 1)].y);
            if (y1 == y2)
                y2 += rad / Rational(3);
            p = Point{x, std::move(y1)};
            q = Point{x, std::move(y2)};
        } else {
            std::size_t built = w.built_levels();
            if (built < 2)
                throw invalid_state("row sections need at least two built levels");
            std::size_t m1 = rng.below(built);
            std::size_t m2 = rng.below(built - 1);
            if (m2 >= m1)
                ++m2;
            p = Point{a[m1].x, fn.center().y};
            q = Point{a[m2].x, fn.center().y};
        }
        Rational fp = w.eval_built(p.x, p.y);
        Rational fq = w.eval_built(q.x, q.y);
        if (kind == SectionKind::row) {
            for (const auto& [pt, val] : {std::pair{&p, &fp}, std::pair{&q, &fq}}) {
                Rational via_n = fn(*pt);
                if (via_n != *val)
                    return r.fail("point", pt->x.str() + "," + pt->y.str())
                        .witness("column_value", val->str())
                        .witness("row_value", via_n.str());
            }
        }
        Rational d = linf_distance(p, q);
        if (abs(fp - fq) > lip * d)
            return r.fail("p", p.x.str() + "," + p.y.str())
                .witness("q", q.x.str() + "," + q.y.str())
                .witness("delta", abs(fp - fq).str())
                .witness("distance", d.str());
    }
    return r;
}

// section_continuity_check over every level below `levels`; returns the
// first failing level's report, else a summary.
inline Report section_continuity_sweep(const WovenFunction& w, SectionKind kind, std::size_t levels,
                                       std::size_t samples, std::uint64_t seed) {
    Report r{"section_continuity"};
    r.bound("kind", to_string(kind)).bound("levels", std::to_string(levels)).bound("samples", std::to_string(samples));
    Rational worst;
    for (std::size_t n = 0; n < levels; ++n) {
        Report one = section_continuity_check(w, kind, n, samples, seed);
        if (!one.passed)
            return one;
        worst = max(worst, w.level(n).lipschitz());
    }
    r.witness("max_L", worst.str());
    return r;
}

// Memoized evaluation agrees with the direct recursion on random cross points.
inline Report check_oracle_equivalence(const WovenFunction& w, std::size_t max_level, std::size_t samples,
                                       std::uint64_t seed) {
    if (max_level > kOracleLevelLimit)
        throw refusal("oracle depth " + std::to_string(max_level) + " exceeds " + std::to_string(kOracleLevelLimit));
    if (w.built_levels() <= max_level)
        throw invalid_state("oracle check needs " + std::to_string(max_level + 1) + " built levels");
    Report r{"oracle_equivalence"};
    r.bound("max_level", std::to_string(max_level)).bound("samples", std::to_string(samples));
    const Pairing& a = w.pairing();
    SampleRng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t m = rng.below(max_level + 1);
        Point p;
        switch (rng.below(3)) {
        case 0: // on the column, near a prescribed anchor
            p = Point{a[m].x, a[rng.below(m + 1)].y + w.level(m).radius() * rng.fraction(2, 8)};
            break;
        case 1: // on the column, anywhere
            p = Point{a[m].x, rng.fraction(4, 12)};
            break;
        default: // on the row, at another level's abscissa
            p = Point{a[rng.below(max_level + 1)].x, a[m].y};
            break;
        }
        Rational memo = w.eval_built(p.x, p.y);
        Rational direct = oracle_eval(a, p.x, p.y, max_level);
        if (memo != direct)
            return r.fail("point", p.x.str() + "," + p.y.str())
                .witness("memoized", memo.str())
                .witness("oracle", direct.str());
    }
    return r;
}

// f[A] = {1} while the image is dense in [0,1]: the image of the dense set
// A is not dense in the image of Q x Q.
inline Report check_dense_image_form(const WovenFunction& w, std::size_t count, const Rational& pitch,
                                     const Rational& eps) {
    Report r{"dense_image_form"};
    r.bound("N", std::to_string(count)).bound("pitch", pitch.str()).bound("eps", eps.str());
    Report singleton = check_singleton_image(w, count);
    Report sweep = density_sweep(w, pitch, eps);
    if (!singleton.passed)
        return r.fail("singleton", to_text(singleton));
    if (!sweep.passed)
        return r.fail("density", to_text(sweep));
    // A value within eps of 0 is at distance >= 1 - eps from f[A] = {1}.
    Rational y = image_density_search(w, Rational(0), eps);
    Rational v = w.eval_built(w.pairing()[0].x, y);
    if (!(Rational(1) - v > eps))
        return r.fail("far_point", y.str()).witness("value", v.str());
    r.witness("far_value", v.str()).witness("gap", (Rational(1) - v).str());
    return r;
}

} // namespace sepcont
