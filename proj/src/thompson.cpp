#include "homeoforge/thompson.hpp"

#include <algorithm>

namespace homeoforge {

namespace {

QuadScalar q(long n, long d = 1) { return QuadScalar(Rational(n, d)); }

}  // namespace

PLSegmentMap f_generator_x0() {
    return PLSegmentMap({{q(0), q(0)}, {q(1, 2), q(1, 4)}, {q(3, 4), q(1, 2)}, {q(1), q(1)}});
}

PLSegmentMap f_generator_x1() {
    return PLSegmentMap({{q(0), q(0)},
                         {q(1, 2), q(1, 2)},
                         {q(3, 4), q(5, 8)},
                         {q(7, 8), q(3, 4)},
                         {q(1), q(1)}});
}

CircleMap t_generator_rotation(const QuadScalar& c, const Rational& r) {
    if (!r.is_dyadic()) throw std::domain_error("t_generator_rotation: rotation amount must be dyadic");
    if (r.sign() < 0 || r >= Rational(1))
        throw std::domain_error("t_generator_rotation: rotation amount must lie in [0, 1)");
    return CircleMap::rotation(c, QuadScalar(r) * c);
}

PLSegmentMap rescale_unit(const PLSegmentMap& m, const QuadScalar& c) {
    if (c.sign() <= 0) throw std::domain_error("rescale_unit: scale must be positive");
    std::vector<BreakPoint> pts;
    for (const BreakPoint& p : m.breakpoints()) pts.push_back({p.x * c, p.y * c});
    return PLSegmentMap(std::move(pts));
}

namespace {

bool is_pow2_rational(const QuadScalar& s) {
    if (!s.is_rational()) return false;
    const Rational& r = s.rational_part();
    if (r.sign() <= 0) return false;
    return (r.num() == 1 && is_power_of_two(r.den())) ||
           (r.den() == 1 && is_power_of_two(r.num()));
}

bool in_scaled_dyadics(const QuadScalar& x, const QuadScalar& c) {
    QuadScalar t = x / c;
    return t.is_rational() && t.rational_part().is_dyadic();
}

}  // namespace

ThompsonCheck validate_thompson(const PLSegmentMap& m, const QuadScalar& c) {
    const auto& pts = m.breakpoints();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QuadScalar s = (pts[i].y - pts[i - 1].y) / (pts[i].x - pts[i - 1].x);
        if (!is_pow2_rational(s))
            return ThompsonViolation{ThompsonViolation::Slope, s,
                                     "slope is not a power of two"};
    }
    for (const BreakPoint& p : pts) {
        if (!in_scaled_dyadics(p.x, c))
            return ThompsonViolation{ThompsonViolation::Breakpoint, p.x,
                                     "breakpoint not in c*Z[1/2]"};
        if (!in_scaled_dyadics(p.y, c))
            return ThompsonViolation{ThompsonViolation::Breakpoint, p.y,
                                     "breakpoint image not in c*Z[1/2]"};
    }
    return std::monostate{};
}

ThompsonCheck validate_thompson(const PeriodizedMap& m) {
    return validate_thompson(m.fundamental(), m.period());
}

ThompsonCheck validate_thompson(const CircleMap& m) {
    return validate_thompson(m.lift().fundamental(), m.circumference());
}

PeriodizedMap lift(const CircleMap& m) {
    return m.lift();
}

PeriodizedMap nu_embed(const PLSegmentMap& f) {
    if (f.domain_lo() != QuadScalar(0) || f.domain_hi() != QuadScalar(1))
        throw std::domain_error("nu_embed: domain must be [0,1]");
    if (f.range_lo() != QuadScalar(0) || f.range_hi() != QuadScalar(1))
        throw std::domain_error("nu_embed: map must fix 0 and 1");
    return PeriodizedMap(QuadScalar(1), f);
}

PeriodizedMap center_element(const QuadScalar& c, const Int& n) {
    return PeriodizedMap::translation(c, QuadScalar(Rational(n)) * c);
}

namespace {

// binary expansion of a positive dyadic as exponents (descending, with repeats
// after splitting)
std::vector<long> dyadic_terms(const Rational& v) {
    Int num = v.num();
    Int den = v.den();
    long shift = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;  // den = 2^shift
    std::vector<long> terms;
    for (long bit = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        if (mpz_tstbit(num.get_mpz_t(), bit)) terms.push_back(bit - shift);
    }
    return terms;
}

}  // namespace

std::vector<BreakPoint> dyadic_interp(const Rational& x0, const Rational& x1,
                                      const Rational& y0, const Rational& y1) {
    if (!(x0 < x1) || !(y0 < y1))
        throw std::domain_error("dyadic_interp: intervals must be nondegenerate");
    for (const Rational* r : {&x0, &x1, &y0, &y1}) {
        if (!r->is_dyadic()) throw std::domain_error("dyadic_interp: endpoints must be dyadic");
    }
    Rational lx = x1 - x0, ly = y1 - y0;
    if (lx == ly) {
        // pure dyadic translation, one slope-1 piece
        return {{QuadScalar(x0), QuadScalar(y0)}, {QuadScalar(x1), QuadScalar(y1)}};
    }
    std::vector<long> ex = dyadic_terms(lx);
    std::vector<long> ey = dyadic_terms(ly);
    // equalize term counts by splitting the largest term of the shorter list
    auto split_largest = [](std::vector<long>& v) {
        auto it = std::max_element(v.begin(), v.end());
        long e = *it;
        v.erase(it);
        v.push_back(e - 1);
        v.push_back(e - 1);
        std::sort(v.rbegin(), v.rend());
    };
    while (ex.size() < ey.size()) split_largest(ex);
    while (ey.size() < ex.size()) split_largest(ey);

    // Pair ascending x-pieces with descending y-pieces: prefix sums then obey
    // yprefix(k) - xprefix(k) >= k(Y-X)/n with equality only at k = n, so the
    // graph stays strictly on one side of the endpoint chord in the interior.
    std::sort(ex.begin(), ex.end());
    std::sort(ey.rbegin(), ey.rend());

    std::vector<BreakPoint> pts;
    Rational cx = x0, cy = y0;
    pts.push_back({QuadScalar(cx), QuadScalar(cy)});
    Rational two(2), half(1, 2);
    auto pow2 = [&](long e) {
        Rational r(1);
        for (long i = 0; i < e; ++i) r = r * two;
        for (long i = 0; i > e; --i) r = r * half;
        return r;
    };
    for (std::size_t i = 0; i < ex.size(); ++i) {
        cx += pow2(ex[i]);
        cy += pow2(ey[i]);
        pts.push_back({QuadScalar(cx), QuadScalar(cy)});
    }
    return pts;  // ends exactly at (x1, y1) since both expansions sum to the lengths
}

PLSegmentMap f_through_landmarks(const std::vector<std::pair<Rational, Rational>>& landmarks) {
    if (landmarks.size() < 2 || landmarks.front() != std::pair<Rational, Rational>{Rational(0), Rational(0)} ||
        landmarks.back() != std::pair<Rational, Rational>{Rational(1), Rational(1)})
        throw std::domain_error("f_through_landmarks: landmarks must run from (0,0) to (1,1)");
    std::vector<BreakPoint> pts;
    for (std::size_t i = 0; i + 1 < landmarks.size(); ++i) {
        auto piece = dyadic_interp(landmarks[i].first, landmarks[i + 1].first,
                                   landmarks[i].second, landmarks[i + 1].second);
        if (!pts.empty()) piece.erase(piece.begin());
        pts.insert(pts.end(), piece.begin(), piece.end());
    }
    return PLSegmentMap(std::move(pts));
}

PLSegmentMap f_map_interval(const Rational& a, const Rational& b,
                            const Rational& c, const Rational& d) {
    return f_through_landmarks({{Rational(0), Rational(0)}, {a, c}, {b, d}, {Rational(1), Rational(1)}});
}

PLSegmentMap f_bump(const Rational& a, const Rational& b, bool push_right) {
    Rational len = b - a;
    Rational quarter = len * Rational(1, 4);
    Rational half = len * Rational(1, 2);
    std::vector<BreakPoint> pts;
    if (push_right) {
        // slopes 2, 1, 1/2: f(x) > x strictly on (a, b)
        pts = {{QuadScalar(a), QuadScalar(a)},
               {QuadScalar(a + quarter), QuadScalar(a + half)},
               {QuadScalar(a + half), QuadScalar(a + half + quarter)},
               {QuadScalar(b), QuadScalar(b)}};
    } else {
        pts = {{QuadScalar(a), QuadScalar(a)},
               {QuadScalar(a + half), QuadScalar(a + quarter)},
               {QuadScalar(a + half + quarter), QuadScalar(a + half)},
               {QuadScalar(b), QuadScalar(b)}};
    }
    if (a.sign() > 0) pts.insert(pts.begin(), {QuadScalar(0), QuadScalar(0)});
    if (b < Rational(1)) pts.push_back({QuadScalar(1), QuadScalar(1)});
    return PLSegmentMap(std::move(pts));
}

PLSegmentMap f_hard_push(const Rational& a, const Rational& b, const Rational& qq) {
    if (!(qq > Rational(0)) || !(qq + qq < b - a))
        throw std::domain_error("f_hard_push: need 0 < q < (b-a)/2");
    std::vector<BreakPoint> pts;
    auto zone1 = dyadic_interp(a, a + qq, a, b - qq);
    auto zone2 = dyadic_interp(a + qq, b, b - qq, b);
    pts.insert(pts.end(), zone1.begin(), zone1.end());
    pts.insert(pts.end(), zone2.begin() + 1, zone2.end());
    if (a.sign() > 0) pts.insert(pts.begin(), {QuadScalar(0), QuadScalar(0)});
    if (b < Rational(1)) pts.push_back({QuadScalar(1), QuadScalar(1)});
    return PLSegmentMap(std::move(pts));
}

}  // namespace homeoforge
