#pragma once

// CSV export of f over the lattice {i/d} x {j/d} clipped to a rectangle.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "sepcont/weave.hpp"

namespace sepcont {

struct GridSpec {
    std::int64_t denominator = 1;
    Rational x_lo = 0, x_hi = 1;
    Rational y_lo = 0, y_hi = 1;
    std::size_t max_cells = 1u << 16;
};

namespace detail {

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = -Rational(-a, b).floor();
    return q;
}

struct LatticeRange {
    BigInt first, last; // inclusive numerators over d

    std::size_t count() const {
        if (last < first)
            return 0;
        BigInt c = last - first + 1;
        return c > BigInt(std::numeric_limits<std::size_t>::max() / 2) ? std::numeric_limits<std::size_t>::max() / 2
                                                                         : c.convert_to<std::size_t>();
    }
};

inline LatticeRange lattice(const Rational& lo, const Rational& hi, const BigInt& d) {
    Rational a = lo * Rational(d), b = hi * Rational(d);
    return LatticeRange{ceil_div(a.num(), a.den()), b.floor()};
}

} // namespace detail

inline std::size_t grid_cells(const GridSpec& g) {
    if (g.denominator < 1)
        throw invalid_input("grid denominator must be at least 1");
    BigInt d(g.denominator);
    std::size_t nx = detail::lattice(g.x_lo, g.x_hi, d).count();
    std::size_t ny = detail::lattice(g.y_lo, g.y_hi, d).count();
    if (nx != 0 && ny > std::numeric_limits<std::size_t>::max() / 2 / nx)
        return std::numeric_limits<std::size_t>::max() / 2;
    return nx * ny;
}

// Rows "x,y,value_exact,value_decimal", x-major, LF endings.
inline void write_grid_csv(WovenFunction& w, const GridSpec& g, std::ostream& out) {
    std::size_t cells = grid_cells(g);
    if (cells > g.max_cells)
        throw refusal("grid has " + std::to_string(cells) + " cells, limit is " + std::to_string(g.max_cells));
    BigInt d(g.denominator);
    auto xr = detail::lattice(g.x_lo, g.x_hi, d);
    auto yr = detail::lattice(g.y_lo, g.y_hi, d);
    out << "x,y,value_exact,value_decimal\n";
    for (BigInt i = xr.first; i <= xr.last; ++i) {
        Rational x(i, d);
        for (BigInt j = yr.first; j <= yr.last; ++j) {
            Rational y(j, d);
            Rational v = w.eval(x, y);
            out << x.str() << ',' << y.str() << ',' << v.str() << ',' << to_decimal(v) << '\n';
        }
    }
}

} // namespace sepcont
