#pragma once

/*
 * The global function f : Q x Q -> [0,1], assembled level by level.
 *
 * Level k is the cross function f_k through (x_k, y_k) whose prescribed
 * values are read off the earlier levels:
 *
 *   xi^(k)_i  = f_i(x_k, y_i)     eta^(k)_i = f_i(x_i, y_k)     (i < k)
 *
 * so f_k agrees with f_i wherever the two crosses meet. The point (x_k, y_i)
 * is never an anchor of f_i (x_k is new), hence every parameter is < 1.
 *
 * f(x_m, q) = f_m(x_m, q). Because the crosses agree at their intersections
 * the row route f(p, y_n) = f_n(p, y_n) gives the same value; it is kept
 * for verification only.
 *
 * Levels and pairs are grown on demand by the non-const members. After
 * freeze() nothing grows, and the const *_built members are safe to call
 * from several threads.
 */

#include <cstddef>
#include <vector>

#include "sepcont/cross.hpp"

namespace sepcont {

class ParamTable {
public:
    std::size_t size() const noexcept { return crosses_.size(); }

    const std::vector<Rational>& xi(std::size_t k) const { return xi_.at(k); }
    const std::vector<Rational>& eta(std::size_t k) const { return eta_.at(k); }
    const CrossFunction& cross(std::size_t k) const { return crosses_.at(k); }

    void push(std::vector<Rational> xi, std::vector<Rational> eta, CrossFunction f) {
        if (f.level() != crosses_.size())
            throw invalid_state("level " + std::to_string(f.level()) + " pushed at position " +
                                std::to_string(crosses_.size()));
        xi_.push_back(std::move(xi));
        eta_.push_back(std::move(eta));
        crosses_.push_back(std::move(f));
    }

    friend bool operator==(const ParamTable&, const ParamTable&) = default;

private:
    std::vector<std::vector<Rational>> xi_;
    std::vector<std::vector<Rational>> eta_;
    std::vector<CrossFunction> crosses_;
};

class WovenFunction {
public:
    static constexpr std::size_t kDefaultMaxLevels = 2048;

    explicit WovenFunction(std::size_t max_levels = kDefaultMaxLevels) : max_levels_(max_levels) {
        if (max_levels_ == 0)
            throw invalid_input("level budget must be at least 1");
    }

    const Pairing& pairing() const noexcept { return pairing_; }
    const ParamTable& table() const noexcept { return table_; }
    std::size_t built_levels() const noexcept { return table_.size(); }
    std::size_t max_levels() const noexcept { return max_levels_; }
    bool frozen() const noexcept { return frozen_; }

    const CrossFunction& level(std::size_t k) const {
        if (k >= table_.size())
            throw invalid_state("level " + std::to_string(k) + " is not built");
        return table_.cross(k);
    }

    // Builds level k, which must be the next unbuilt level; an already built
    // level is returned as is.
    const CrossFunction& build_level(std::size_t k) {
        if (k < table_.size())
            return table_.cross(k);
        if (k > table_.size())
            throw invalid_state("level " + std::to_string(k) + " requested before level " +
                                std::to_string(table_.size()));
        require_mutable();
        if (k >= max_levels_)
            throw refusal("level " + std::to_string(k) + " exceeds the budget of " + std::to_string(max_levels_) +
                          " levels");
        pairing_.extend_to(k + 1);

        std::vector<Rational> xs, ys, xi, eta;
        xs.reserve(k + 1);
        ys.reserve(k + 1);
        xi.reserve(k);
        eta.reserve(k);
        for (std::size_t i = 0; i <= k; ++i) {
            xs.push_back(pairing_[i].x);
            ys.push_back(pairing_[i].y);
        }
        const Point& pk = pairing_[k];
        for (std::size_t i = 0; i < k; ++i) {
            const CrossFunction& fi = table_.cross(i);
            xi.push_back(fi(Point{pk.x, ys[i]}));
            eta.push_back(fi(Point{xs[i], pk.y}));
        }
        CrossFunction fk = build_cross(k, xs, ys, xi, eta);
        table_.push(std::move(xi), std::move(eta), std::move(fk));
        return table_.cross(k);
    }

    void ensure_levels(std::size_t count) {
        while (table_.size() < count)
            build_level(table_.size());
    }

    // Builds levels below depth and stops all further growth.
    void freeze(std::size_t depth) {
        ensure_levels(depth);
        frozen_ = true;
    }

    Rational eval(const Rational& p, const Rational& q) {
        std::size_t m = locate(p, true);
        return table_.cross(m)(Point{p, q});
    }

    Rational eval_via_row(const Rational& p, const Rational& q) {
        std::size_t n = locate(q, false);
        return table_.cross(n)(Point{p, q});
    }

    Rational eval_built(const Rational& p, const Rational& q) const {
        return built_level_for(pairing_.find_x(p), p, "x")(Point{p, q});
    }

    Rational eval_via_row_built(const Rational& p, const Rational& q) const {
        return built_level_for(pairing_.find_y(q), q, "y")(Point{p, q});
    }

    Rational lipschitz_of_level(std::size_t k) const { return level(k).lipschitz(); }

private:
    void require_mutable() const {
        if (frozen_)
            throw invalid_state("woven function is frozen at depth " + std::to_string(table_.size()));
    }

    std::size_t locate(const Rational& v, bool column) {
        std::optional<std::size_t> found = column ? pairing_.find_x(v) : pairing_.find_y(v);
        std::size_t k;
        if (found) {
            k = *found;
        } else {
            require_mutable();
            k = column ? pairing_.x_level(v, max_levels_) : pairing_.y_level(v, max_levels_);
        }
        if (k >= table_.size())
            ensure_levels(k + 1);
        return k;
    }

    const CrossFunction& built_level_for(const std::optional<std::size_t>& k, const Rational& v,
                                         const char* axis) const {
        if (!k || *k >= table_.size())
            throw invalid_state(std::string(axis) + " = " + v.str() + " is beyond the built levels");
        return table_.cross(*k);
    }

    Pairing pairing_;
    ParamTable table_;
    std::size_t max_levels_;
    bool frozen_ = false;
};

} // namespace sepcont
