#pragma once

#include "homeoforge/plmap.hpp"

#include <variant>

namespace homeoforge {

/// Standard generator x0 of F: breaks (0,0), (1/2,1/4), (3/4,1/2), (1,1).
PLSegmentMap f_generator_x0();
/// Standard generator x1: identity on [0,1/2], a copy of x0 on [1/2,1].
PLSegmentMap f_generator_x1();

/// Rotation by r*c on the circumference-c circle; r must be a dyadic in [0, 1).
CircleMap t_generator_rotation(const QuadScalar& c, const Rational& r);

/// Rescale a homeomorphism of [0,1] to [0,c] by conjugating with t -> c*t.
PLSegmentMap rescale_unit(const PLSegmentMap& m, const QuadScalar& c);

struct ThompsonViolation {
    enum Kind { Slope, Breakpoint } kind;
    QuadScalar where;   // the offending slope or breakpoint coordinate
    std::string detail;
};
using ThompsonCheck = std::variant<std::monostate, ThompsonViolation>;  // monostate = pass

/// Every slope a power of 2 and every breakpoint (both coordinates) in c*Z[1/2].
ThompsonCheck validate_thompson(const PLSegmentMap& m, const QuadScalar& c);
ThompsonCheck validate_thompson(const PeriodizedMap& m);
ThompsonCheck validate_thompson(const CircleMap& m);
inline bool thompson_valid(const ThompsonCheck& c) { return std::holds_alternative<std::monostate>(c); }

/// Canonical lift of a circle map (value at 0 in [0, c)).
PeriodizedMap lift(const CircleMap& m);

/// nu: F -> F1, the period-1 extension of a [0,1] map fixing 0 and 1.
PeriodizedMap nu_embed(const PLSegmentMap& f);

/// Translation by n*c, the center generators of the lift.
PeriodizedMap center_element(const QuadScalar& c, const Int& n);

/*
 * Dyadic interpolation: the increasing PL map [x0,x1] -> [y0,y1] with dyadic
 * breakpoints and power-of-2 slopes, built by matching binary expansions of
 * the two lengths (largest pieces first, so the grid stays as coarse as fits).
 * All arguments must be dyadic.
 */
std::vector<BreakPoint> dyadic_interp(const Rational& x0, const Rational& x1,
                                      const Rational& y0, const Rational& y1);

/// F element through the given landmark pairs; landmarks must start at (0,0),
/// end at (1,1), be strictly increasing and dyadic.
PLSegmentMap f_through_landmarks(const std::vector<std::pair<Rational, Rational>>& landmarks);

/// F element mapping the dyadic interval [a,b] onto [c,d] (all in (0,1)).
PLSegmentMap f_map_interval(const Rational& a, const Rational& b,
                            const Rational& c, const Rational& d);

/// One-bump F element supported exactly on (a, b) (a, b dyadic in [0,1]),
/// pushing every interior point toward b (push_right) or toward a.
PLSegmentMap f_bump(const Rational& a, const Rational& b, bool push_right);

/// Bump sending [a+q, b] onto [b-q, b] (a strong one-step push); q dyadic,
/// 0 < q < (b-a)/2. Supported exactly on (a, b).
PLSegmentMap f_hard_push(const Rational& a, const Rational& b, const Rational& q);

}  // namespace homeoforge
