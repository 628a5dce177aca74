#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "scx/linalg.hpp"

namespace scx {
namespace fm {

/// coeffs . x + constant  >  0  (strict) or  >=  0.
struct Inequality {
    std::vector<Rational> coeffs;
    Rational constant;
    bool strict = false;
};

/// coeffs . x + constant = 0.
struct Equation {
    std::vector<Rational> coeffs;
    Rational constant;
};

struct Feasibility {
    bool feasible = false;
    std::vector<Rational> point;  // a witness, set iff feasible
};

namespace detail {

/// Scale so the first nonzero coefficient has absolute value 1; used only to
/// drop duplicates between elimination rounds.
inline Inequality normalized(Inequality q) {
    for (const auto& c : q.coeffs) {
        if (!c.is_zero()) {
            Rational s = Rational(1) / c.abs();
            for (auto& cc : q.coeffs) cc *= s;
            q.constant *= s;
            return q;
        }
    }
    if (!q.constant.is_zero()) {
        Rational s = Rational(1) / q.constant.abs();
        q.constant *= s;
    }
    return q;
}

inline bool ineq_less(const Inequality& a, const Inequality& b) {
    if (a.strict != b.strict) return a.strict < b.strict;
    if (a.constant != b.constant) return a.constant < b.constant;
    return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                        b.coeffs.end());
}

inline bool ineq_eq(const Inequality& a, const Inequality& b) {
    return a.strict == b.strict && a.constant == b.constant && a.coeffs == b.coeffs;
}

inline void dedupe(std::vector<Inequality>& v) {
    for (auto& q : v) q = normalized(std::move(q));
    std::sort(v.begin(), v.end(), ineq_less);
    v.erase(std::unique(v.begin(), v.end(), ineq_eq), v.end());
}

/// Eliminates the last variable. Returns the reduced system and remembers the
/// bound rows so a witness value can be chosen afterwards.
struct Level {
    std::vector<Inequality> lower;  // coeff > 0:  x >(=) -(rest)/coeff
    std::vector<Inequality> upper;  // coeff < 0:  x <(=) ...
};

inline std::optional<std::vector<Rational>> eliminate(std::vector<Inequality> sys,
                                                      std::size_t nvars) {
    std::vector<Level> levels(nvars);
    for (std::size_t var = nvars; var-- > 0;) {
        std::vector<Inequality> next;
        Level& lv = levels[var];
        for (auto& q : sys) {
            const Rational& c = q.coeffs[var];
            if (c.sign() > 0)
                lv.lower.push_back(std::move(q));
            else if (c.sign() < 0)
                lv.upper.push_back(std::move(q));
            else {
                q.coeffs.resize(var);
                next.push_back(std::move(q));
            }
        }
        for (const auto& lo : lv.lower) {
            for (const auto& up : lv.upper) {
                // lo: cl*x + rl > 0, cl > 0; up: cu*x + ru > 0, cu < 0.
                // Combined: cl*ru - cu*rl > 0.
                Inequality comb;
                comb.strict = lo.strict || up.strict;
                comb.coeffs.resize(var);
                const Rational& cl = lo.coeffs[var];
                const Rational& cu = up.coeffs[var];
                for (std::size_t i = 0; i < var; ++i)
                    comb.coeffs[i] = cl * up.coeffs[i] - cu * lo.coeffs[i];
                comb.constant = cl * up.constant - cu * lo.constant;
                next.push_back(std::move(comb));
            }
        }
        dedupe(next);
        sys = std::move(next);
    }

    // Ground facts: constant >(=) 0 with no variables left.
    for (const auto& q : sys) {
        int s = q.constant.sign();
        if (s < 0 || (s == 0 && q.strict)) return std::nullopt;
    }

    // Back-substitute, choosing a value inside the (open) interval per level.
    std::vector<Rational> x(nvars, Rational(0));
    for (std::size_t var = 0; var < nvars; ++var) {
        const Level& lv = levels[var];
        auto residual = [&](const Inequality& q) {
            Rational r = q.constant;
            for (std::size_t i = 0; i < var; ++i) r += q.coeffs[i] * x[i];
            return r;
        };
        std::optional<Rational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& q : lv.lower) {
            Rational bound = -residual(q) / q.coeffs[var];
            if (!lo || bound > *lo) {
                lo = bound;
                lo_strict = q.strict;
            } else if (bound == *lo) {
                lo_strict = lo_strict || q.strict;
            }
        }
        for (const auto& q : lv.upper) {
            Rational bound = -residual(q) / q.coeffs[var];
            if (!hi || bound < *hi) {
                hi = bound;
                hi_strict = q.strict;
            } else if (bound == *hi) {
                hi_strict = hi_strict || q.strict;
            }
        }
        // Eliminated combinations guarantee lo <= hi, with lo < hi whenever a
        // strict bound is pinned at either end.
        if (lo && hi)
            x[var] = (*lo == *hi) ? *lo : (*lo + *hi) / Rational(2);
        else if (lo)
            x[var] = lo_strict ? *lo + Rational(1) : *lo;
        else if (hi)
            x[var] = hi_strict ? *hi - Rational(1) : *hi;
        // else unconstrained: keep 0
    }
    return x;
}

}  // namespace detail

/// Decides exact feasibility of {equations, inequalities} over nvars rational
/// unknowns and produces a rational witness when feasible. Equations are
/// removed first by Gaussian elimination; the remaining strict/non-strict
/// system goes through Fourier-Motzkin elimination.
inline Feasibility feasible_point(std::size_t nvars, const std::vector<Equation>& equations,
                                  const std::vector<Inequality>& inequalities) {
    for (const auto& e : equations)
        if (e.coeffs.size() != nvars) throw DimensionMismatchError("equation arity");
    for (const auto& q : inequalities)
        if (q.coeffs.size() != nvars) throw DimensionMismatchError("inequality arity");

    // Row-reduce the equations: coeffs . x = -constant.
    Matrix aug(equations.size(), nvars + 1);
    for (std::size_t r = 0; r < equations.size(); ++r) {
        for (std::size_t c = 0; c < nvars; ++c) aug.at(r, c) = equations[r].coeffs[c];
        aug.at(r, nvars) = -equations[r].constant;
    }
    RrefResult rr = rref(std::move(aug));
    for (std::size_t p : rr.pivot_cols)
        if (p == nvars) return {};  // equations alone are contradictory

    std::vector<bool> is_pivot(nvars, false);
    std::vector<std::size_t> pivot_row(nvars, 0);
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
        is_pivot[rr.pivot_cols[i]] = true;
        pivot_row[rr.pivot_cols[i]] = i;
    }
    std::vector<std::size_t> free_vars;
    for (std::size_t v = 0; v < nvars; ++v)
        if (!is_pivot[v]) free_vars.push_back(v);

    // Each pivot variable is an affine function of the free ones:
    //   x_p = pivot_const[p] + sum_f pivot_coef[p][f] * y_f.
    auto pivot_const = [&](std::size_t p) { return rr.reduced.at(pivot_row[p], nvars); };
    auto pivot_coef = [&](std::size_t p, std::size_t f) {
        return -rr.reduced.at(pivot_row[p], free_vars[f]);
    };

    std::vector<fm::Inequality> reduced;
    reduced.reserve(inequalities.size());
    for (const auto& q : inequalities) {
        Inequality out;
        out.strict = q.strict;
        out.coeffs.assign(free_vars.size(), Rational(0));
        out.constant = q.constant;
        for (std::size_t v = 0; v < nvars; ++v) {
            if (q.coeffs[v].is_zero()) continue;
            if (!is_pivot[v]) {
                std::size_t f = static_cast<std::size_t>(
                    std::lower_bound(free_vars.begin(), free_vars.end(), v) - free_vars.begin());
                out.coeffs[f] += q.coeffs[v];
            } else {
                out.constant += q.coeffs[v] * pivot_const(v);
                for (std::size_t f = 0; f < free_vars.size(); ++f)
                    out.coeffs[f] += q.coeffs[v] * pivot_coef(v, f);
            }
        }
        reduced.push_back(std::move(out));
    }

    auto frees = detail::eliminate(std::move(reduced), free_vars.size());
    if (!frees) return {};

    Feasibility result;
    result.feasible = true;
    result.point.assign(nvars, Rational(0));
    for (std::size_t f = 0; f < free_vars.size(); ++f) result.point[free_vars[f]] = (*frees)[f];
    for (std::size_t v = 0; v < nvars; ++v) {
        if (!is_pivot[v]) continue;
        Rational val = pivot_const(v);
        for (std::size_t f = 0; f < free_vars.size(); ++f)
            val += pivot_coef(v, f) * result.point[free_vars[f]];
        result.point[v] = val;
    }
    return result;
}

}  // namespace fm
}  // namespace scx
