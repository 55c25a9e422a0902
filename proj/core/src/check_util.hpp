#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>

#include "dgspec/errors.hpp"
#include "dgspec/theorems.hpp"

namespace dgspec::detail {

inline std::string num(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

inline std::string num(std::size_t x) { return std::to_string(x); }

// Refuse composite graphs beyond the configured cap before building them.
inline void require_order(std::size_t order, const CheckOptions& opts, std::string_view what) {
    if (order > opts.max_vertices) {
        throw ResourceError(std::string(what) + " would have " + std::to_string(order) + " vertices, above the cap of " +
                            std::to_string(opts.max_vertices));
    }
}

// n * 2^k with overflow guarded by the cap check that follows.
inline std::size_t cover_order(std::size_t n, std::size_t k, const CheckOptions& opts, std::string_view what) {
    if (k >= 48) throw ResourceError(std::string(what) + ": iteration depth " + std::to_string(k) + " is out of range");
    const std::size_t order = n << k;
    if (n != 0 && (order >> k) != n) throw ResourceError(std::string(what) + ": order overflows");
    require_order(order, opts, what);
    return order;
}

inline void check_eps(double eps) {
    if (!(eps >= 0.0)) throw ParameterError("eps must be nonnegative");
}

// Fills hypotheses_met, max_abs_deviation and verdict. `spread` is any
// additional deviation the statement carries (e.g. between computed sides).
inline void finalize(TheoremReport& r, double spread = 0.0) {
    r.hypotheses_met = std::all_of(r.conditions.begin(), r.conditions.end(), [](const Condition& c) { return c.met; });
    double dev = spread;
    if (r.predicted.size() != r.computed.size()) {
        dev = std::numeric_limits<double>::infinity();
    } else {
        for (std::size_t i = 0; i < r.predicted.size(); ++i) dev = std::max(dev, std::abs(r.predicted[i] - r.computed[i]));
    }
    r.max_abs_deviation = dev;
    if (!r.hypotheses_met) {
        r.verdict = Verdict::hypothesis_not_met;
    } else if (dev <= r.eps) {
        r.verdict = Verdict::confirmed;
    } else {
        r.verdict = Verdict::deviation;
    }
    r.flags["equality_observed"] = dev <= r.eps;
}

inline double spread_of(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    return *hi - *lo;
}

}  // namespace dgspec::detail
