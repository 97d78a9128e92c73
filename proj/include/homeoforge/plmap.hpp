#pragma once

#include "homeoforge/scalar.hpp"

#include <utility>
#include <vector>

namespace homeoforge {

struct Interval {
    QuadScalar lo, hi;
    bool lo_open = false;
    bool hi_open = false;

    static Interval closed(QuadScalar a, QuadScalar b) { return {std::move(a), std::move(b), false, false}; }
    static Interval open(QuadScalar a, QuadScalar b) { return {std::move(a), std::move(b), true, true}; }

    QuadScalar length() const { return hi - lo; }
    bool contains(const QuadScalar& x) const;
    bool operator==(const Interval& o) const {
        return lo == o.lo && hi == o.hi && lo_open == o.lo_open && hi_open == o.hi_open;
    }
    std::string str() const;
};

struct BreakPoint {
    QuadScalar x, y;
    bool operator==(const BreakPoint& o) const { return x == o.x && y == o.y; }
};

/*
 * Increasing piecewise-linear homeomorphism [x0, xn] -> [y0, yn] given by its
 * breakpoints, strictly increasing in both coordinates. Canonical form merges
 * collinear triples, so map equality is data equality. Construction rejects
 * non-monotone or degenerate data instead of repairing it.
 */
class PLSegmentMap {
public:
    explicit PLSegmentMap(std::vector<BreakPoint> pts);
    static PLSegmentMap identity(const Interval& i);

    const std::vector<BreakPoint>& breakpoints() const { return pts_; }
    std::size_t piece_count() const { return pts_.size() - 1; }

    const QuadScalar& domain_lo() const { return pts_.front().x; }
    const QuadScalar& domain_hi() const { return pts_.back().x; }
    const QuadScalar& range_lo() const { return pts_.front().y; }
    const QuadScalar& range_hi() const { return pts_.back().y; }
    Interval domain() const { return Interval::closed(domain_lo(), domain_hi()); }

    QuadScalar eval(const QuadScalar& x) const;
    QuadScalar eval_inverse(const QuadScalar& y) const;

    PLSegmentMap inverse() const;
    /// x . (this then g): right-action composition; g's domain must cover this range.
    PLSegmentMap then(const PLSegmentMap& g) const;
    /// Restriction to [a, b] inside the domain.
    PLSegmentMap restriction(const QuadScalar& a, const QuadScalar& b) const;

    bool is_identity() const;
    QuadScalar max_slope() const;
    QuadScalar min_slope() const;

    bool operator==(const PLSegmentMap& o) const { return pts_ == o.pts_; }
    bool operator!=(const PLSegmentMap& o) const { return !(*this == o); }

private:
    std::vector<BreakPoint> pts_;
};

/// Maximal open subintervals of I on which f(x) != x, with exact endpoints.
std::vector<Interval> support_in(const PLSegmentMap& f, const Interval& I);

/// sup |f - g| over I (both defined there), with a witness point attaining it.
struct SupDistance {
    QuadScalar value;
    QuadScalar witness;
};
SupDistance sup_distance(const PLSegmentMap& f, const PLSegmentMap& g, const Interval& I);

/// d_g(I, J): distance between g on I and g transported from J by the unique
/// translation matching the intervals; |I| = |J| required.
SupDistance translated_compare(const PLSegmentMap& g_on_I, const PLSegmentMap& g_on_J,
                               const Interval& I, const Interval& J);

/// min of f(x) - x on I >= -eps; witness on failure (a point with f(x) < x - eps).
struct AdvancingCheck {
    bool advancing;
    QuadScalar min_displacement;
    QuadScalar witness;
};
AdvancingCheck is_eps_advancing(const PLSegmentMap& f, const Interval& I, const QuadScalar& eps);

/*
 * Homeomorphism f of R with f(x + c) = f(x) + c, stored as its fundamental
 * segment on [0, c] (with f(c) = f(0) + c enforced). Unique finite
 * representation of lifted circle maps.
 */
class PeriodizedMap {
public:
    PeriodizedMap(QuadScalar period, PLSegmentMap fundamental);
    /// Rebase a fundamental segment given on [t, t+c] onto [0, c].
    static PeriodizedMap from_any_fundamental(const QuadScalar& period, const PLSegmentMap& seg);
    static PeriodizedMap identity(const QuadScalar& period);
    static PeriodizedMap translation(const QuadScalar& period, const QuadScalar& amount);

    const QuadScalar& period() const { return period_; }
    const PLSegmentMap& fundamental() const { return fund_; }

    QuadScalar eval(const QuadScalar& x) const;
    PeriodizedMap then(const PeriodizedMap& g) const;
    PeriodizedMap inverse() const;
    /// Exact PL restriction to any compact interval.
    PLSegmentMap restriction(const QuadScalar& a, const QuadScalar& b) const;

    bool is_identity() const;
    bool is_translation() const;  // single affine slope-1 piece
    QuadScalar max_slope() const { return fund_.max_slope(); }
    QuadScalar min_slope() const { return fund_.min_slope(); }

    bool operator==(const PeriodizedMap& o) const { return period_ == o.period_ && fund_ == o.fund_; }
    bool operator!=(const PeriodizedMap& o) const { return !(*this == o); }

private:
    QuadScalar period_;
    PLSegmentMap fund_;
};

/*
 * Orientation-preserving circle homeomorphism of R/cZ, stored via the
 * canonical lift normalized by lift(0) in [0, c).
 */
class CircleMap {
public:
    CircleMap(QuadScalar circumference, PeriodizedMap lift);
    static CircleMap identity(const QuadScalar& circumference);
    static CircleMap rotation(const QuadScalar& circumference, const QuadScalar& amount);

    const QuadScalar& circumference() const { return c_; }
    const PeriodizedMap& lift() const { return lift_; }

    /// Image of x reduced into [0, c).
    QuadScalar eval(const QuadScalar& x) const;
    CircleMap then(const CircleMap& g) const;
    CircleMap inverse() const;

    bool is_identity() const { return lift_.is_identity(); }
    bool operator==(const CircleMap& o) const { return c_ == o.c_ && lift_ == o.lift_; }
    bool operator!=(const CircleMap& o) const { return !(*this == o); }

private:
    QuadScalar c_;
    PeriodizedMap lift_;
};

/// x reduced modulo c into [0, c).
QuadScalar reduce_mod(const QuadScalar& x, const QuadScalar& c);

}  // namespace homeoforge
