#include "homeoforge/plmap.hpp"

#include <algorithm>

namespace homeoforge {

bool Interval::contains(const QuadScalar& x) const {
    int cl = compare(x, lo), ch = compare(x, hi);
    if (cl < 0 || ch > 0) return false;
    if (cl == 0 && lo_open) return false;
    if (ch == 0 && hi_open) return false;
    return true;
}

std::string Interval::str() const {
    return std::string(lo_open ? "(" : "[") + lo.str() + ", " + hi.str() + (hi_open ? ")" : "]");
}

namespace {

bool collinear(const BreakPoint& a, const BreakPoint& b, const BreakPoint& c) {
    return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

std::vector<BreakPoint> canonicalize(std::vector<BreakPoint> pts) {
    std::vector<BreakPoint> out;
    out.reserve(pts.size());
    for (const BreakPoint& p : pts) {
        while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p))
            out.pop_back();
        out.push_back(p);
    }
    return out;
}

}  // namespace

PLSegmentMap::PLSegmentMap(std::vector<BreakPoint> pts) {
    if (pts.size() < 2) throw std::domain_error("PLSegmentMap: need at least two breakpoints");
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (!(pts[i - 1].x < pts[i].x) || !(pts[i - 1].y < pts[i].y))
            throw std::domain_error("PLSegmentMap: breakpoints must be strictly increasing in x and y");
    }
    pts_ = canonicalize(std::move(pts));
}

PLSegmentMap PLSegmentMap::identity(const Interval& i) {
    if (!(i.lo < i.hi)) throw std::domain_error("PLSegmentMap: degenerate interval");
    return PLSegmentMap({{i.lo, i.lo}, {i.hi, i.hi}});
}

namespace {

// Index of the piece [pts[k].x, pts[k+1].x] containing x.
std::size_t find_piece(const std::vector<BreakPoint>& pts, const QuadScalar& x) {
    std::size_t lo = 0, hi = pts.size() - 1;
    // binary search for the last breakpoint with pts[k].x <= x
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (pts[mid].x <= x) lo = mid;
        else hi = mid;
    }
    return lo;
}

QuadScalar interp(const BreakPoint& a, const BreakPoint& b, const QuadScalar& x) {
    return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

QuadScalar interp_inv(const BreakPoint& a, const BreakPoint& b, const QuadScalar& y) {
    return a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
}

}  // namespace

QuadScalar PLSegmentMap::eval(const QuadScalar& x) const {
    if (x < domain_lo() || x > domain_hi())
        throw std::domain_error("PLSegmentMap::eval: point outside domain");
    std::size_t k = find_piece(pts_, x);
    if (pts_[k].x == x) return pts_[k].y;
    return interp(pts_[k], pts_[k + 1], x);
}

QuadScalar PLSegmentMap::eval_inverse(const QuadScalar& y) const {
    if (y < range_lo() || y > range_hi())
        throw std::domain_error("PLSegmentMap::eval_inverse: point outside range");
    std::size_t lo = 0, hi = pts_.size() - 1;
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (pts_[mid].y <= y) lo = mid;
        else hi = mid;
    }
    if (pts_[lo].y == y) return pts_[lo].x;
    return interp_inv(pts_[lo], pts_[lo + 1], y);
}

PLSegmentMap PLSegmentMap::inverse() const {
    std::vector<BreakPoint> flipped;
    flipped.reserve(pts_.size());
    for (const BreakPoint& p : pts_) flipped.push_back({p.y, p.x});
    return PLSegmentMap(std::move(flipped));
}

PLSegmentMap PLSegmentMap::then(const PLSegmentMap& g) const {
    if (range_lo() < g.domain_lo() || range_hi() > g.domain_hi())
        throw std::domain_error("PLSegmentMap::then: range not covered by g's domain");
    std::vector<QuadScalar> xs;
    for (const BreakPoint& p : pts_) xs.push_back(p.x);
    for (const BreakPoint& q : g.breakpoints()) {
        if (q.x > range_lo() && q.x < range_hi()) xs.push_back(eval_inverse(q.x));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<BreakPoint> out;
    out.reserve(xs.size());
    for (const QuadScalar& x : xs) out.push_back({x, g.eval(eval(x))});
    return PLSegmentMap(std::move(out));
}

PLSegmentMap PLSegmentMap::restriction(const QuadScalar& a, const QuadScalar& b) const {
    if (!(a < b)) throw std::domain_error("PLSegmentMap::restriction: empty interval");
    if (a < domain_lo() || b > domain_hi())
        throw std::domain_error("PLSegmentMap::restriction: outside domain");
    std::vector<BreakPoint> out;
    out.push_back({a, eval(a)});
    for (const BreakPoint& p : pts_) {
        if (p.x > a && p.x < b) out.push_back(p);
    }
    out.push_back({b, eval(b)});
    return PLSegmentMap(std::move(out));
}

bool PLSegmentMap::is_identity() const {
    return pts_.size() == 2 && pts_[0].x == pts_[0].y && pts_[1].x == pts_[1].y;
}

QuadScalar PLSegmentMap::max_slope() const {
    QuadScalar best;
    for (std::size_t i = 1; i < pts_.size(); ++i) {
        QuadScalar s = (pts_[i].y - pts_[i - 1].y) / (pts_[i].x - pts_[i - 1].x);
        if (i == 1 || s > best) best = s;
    }
    return best;
}

QuadScalar PLSegmentMap::min_slope() const {
    QuadScalar best;
    for (std::size_t i = 1; i < pts_.size(); ++i) {
        QuadScalar s = (pts_[i].y - pts_[i - 1].y) / (pts_[i].x - pts_[i - 1].x);
        if (i == 1 || s < best) best = s;
    }
    return best;
}

std::vector<Interval> support_in(const PLSegmentMap& f, const Interval& I) {
    PLSegmentMap r = f.restriction(I.lo, I.hi);
    const auto& pts = r.breakpoints();
    // critical points: breakpoints plus diagonal crossings inside pieces
    std::vector<QuadScalar> xs;
    for (const BreakPoint& p : pts) xs.push_back(p.x);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QuadScalar d0 = pts[i - 1].y - pts[i - 1].x;
        QuadScalar d1 = pts[i].y - pts[i].x;
        if (d0.sign() * d1.sign() < 0) {
            // f(x) = x inside the piece: x* = x0 + d0 (x1-x0)/((x1-x0)-(y1-y0))
            QuadScalar dx = pts[i].x - pts[i - 1].x;
            QuadScalar x_star = pts[i - 1].x + d0 * dx / (d0 - d1);
            xs.push_back(x_star);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    // Between consecutive criticals the displacement is linear with no interior
    // zero, so a midpoint sample decides the whole gap. An isolated fixed
    // critical splits the support (the support is the set where f(x) != x).
    std::vector<Interval> out;
    std::optional<QuadScalar> run_start;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        QuadScalar mid = (xs[i] + xs[i + 1]) / QuadScalar(2);
        bool moved = r.eval(mid) != mid;
        if (moved && !run_start) run_start = xs[i];
        if (run_start) {
            bool right_fixed = r.eval(xs[i + 1]) == xs[i + 1];
            if (!moved) {
                out.push_back(Interval::open(*run_start, xs[i]));
                run_start.reset();
            } else if (right_fixed || i + 2 == xs.size()) {
                out.push_back(Interval::open(*run_start, xs[i + 1]));
                run_start.reset();
            }
        }
    }
    return out;
}

namespace {

// Evaluation grid for comparing two maps on I: both breakpoint sets plus endpoints.
std::vector<QuadScalar> joint_grid(const PLSegmentMap& f, const PLSegmentMap& g, const Interval& I) {
    std::vector<QuadScalar> xs{I.lo, I.hi};
    for (const BreakPoint& p : f.breakpoints())
        if (p.x > I.lo && p.x < I.hi) xs.push_back(p.x);
    for (const BreakPoint& p : g.breakpoints())
        if (p.x > I.lo && p.x < I.hi) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

}  // namespace

SupDistance sup_distance(const PLSegmentMap& f, const PLSegmentMap& g, const Interval& I) {
    SupDistance best{QuadScalar(0), I.lo};
    for (const QuadScalar& x : joint_grid(f, g, I)) {
        QuadScalar d = abs(f.eval(x) - g.eval(x));
        if (d > best.value) best = {d, x};
    }
    return best;
}

SupDistance translated_compare(const PLSegmentMap& g_on_I, const PLSegmentMap& g_on_J,
                               const Interval& I, const Interval& J) {
    if (I.length() != J.length())
        throw std::domain_error("translated_compare: |I| != |J|");
    QuadScalar shift = I.lo - J.lo;  // J + shift = I
    std::vector<BreakPoint> moved;
    for (const BreakPoint& p : g_on_J.breakpoints())
        moved.push_back({p.x + shift, p.y + shift});
    return sup_distance(g_on_I, PLSegmentMap(std::move(moved)), I);
}

AdvancingCheck is_eps_advancing(const PLSegmentMap& f, const Interval& I, const QuadScalar& eps) {
    if (eps.sign() <= 0) throw std::domain_error("is_eps_advancing: eps must be positive");
    PLSegmentMap id = PLSegmentMap::identity(I);
    AdvancingCheck out{true, QuadScalar(0), I.lo};
    bool first = true;
    for (const QuadScalar& x : joint_grid(f, id, I)) {
        QuadScalar d = f.eval(x) - x;
        if (first || d < out.min_displacement) {
            out.min_displacement = d;
            out.witness = x;
            first = false;
        }
    }
    out.advancing = out.min_displacement >= -eps;
    return out;
}

PeriodizedMap::PeriodizedMap(QuadScalar period, PLSegmentMap fundamental)
    : period_(std::move(period)), fund_(std::move(fundamental)) {
    if (period_.sign() <= 0) throw std::domain_error("PeriodizedMap: period must be positive");
    if (!(fund_.domain_lo() == QuadScalar(0)) || !(fund_.domain_hi() == period_))
        throw std::domain_error("PeriodizedMap: fundamental domain must be [0, period]");
    if (fund_.range_hi() != fund_.range_lo() + period_)
        throw std::domain_error("PeriodizedMap: boundary identification f(c) = f(0) + c violated");
}

PeriodizedMap PeriodizedMap::identity(const QuadScalar& period) {
    return PeriodizedMap(period, PLSegmentMap::identity(Interval::closed(QuadScalar(0), period)));
}

PeriodizedMap PeriodizedMap::translation(const QuadScalar& period, const QuadScalar& amount) {
    return PeriodizedMap(period, PLSegmentMap({{QuadScalar(0), amount}, {period, period + amount}}));
}

QuadScalar PeriodizedMap::eval(const QuadScalar& x) const {
    Int n = period_index(x, period_);
    QuadScalar offset = QuadScalar(Rational(n)) * period_;
    return fund_.eval(x - offset) + offset;
}

namespace {

// Restriction of the periodized extension of `fund` (fundamental on [t, t+c]) to [a, b].
PLSegmentMap periodized_restriction(const QuadScalar& c, const PLSegmentMap& fund,
                                    const QuadScalar& a, const QuadScalar& b) {
    if (!(a < b)) throw std::domain_error("periodized restriction: empty interval");
    const QuadScalar& t = fund.domain_lo();
    auto ev = [&](const QuadScalar& x) {
        Int n = period_index(x - t, c);
        QuadScalar offset = QuadScalar(Rational(n)) * c;
        return fund.eval(x - offset) + offset;
    };
    std::vector<QuadScalar> xs{a, b};
    Int n_lo = period_index(a - t, c);
    Int n_hi = period_index(b - t, c);
    for (Int n = n_lo; n <= n_hi; ++n) {
        QuadScalar offset = QuadScalar(Rational(n)) * c;
        for (const BreakPoint& p : fund.breakpoints()) {
            QuadScalar x = p.x + offset;
            if (x > a && x < b) xs.push_back(x);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<BreakPoint> out;
    out.reserve(xs.size());
    for (const QuadScalar& x : xs) out.push_back({x, ev(x)});
    return PLSegmentMap(std::move(out));
}

}  // namespace

PeriodizedMap PeriodizedMap::from_any_fundamental(const QuadScalar& period, const PLSegmentMap& seg) {
    if (seg.domain_hi() - seg.domain_lo() != period)
        throw std::domain_error("PeriodizedMap: segment does not span one period");
    if (seg.range_hi() - seg.range_lo() != period)
        throw std::domain_error("PeriodizedMap: segment image does not span one period");
    return PeriodizedMap(period, periodized_restriction(period, seg, QuadScalar(0), period));
}

PLSegmentMap PeriodizedMap::restriction(const QuadScalar& a, const QuadScalar& b) const {
    return periodized_restriction(period_, fund_, a, b);
}

PeriodizedMap PeriodizedMap::then(const PeriodizedMap& g) const {
    if (period_ != g.period_)
        throw std::domain_error("PeriodizedMap::then: period mismatch");
    PLSegmentMap mine = fund_;
    PLSegmentMap theirs = g.restriction(mine.range_lo(), mine.range_hi());
    return PeriodizedMap(period_, mine.then(theirs));
}

PeriodizedMap PeriodizedMap::inverse() const {
    return from_any_fundamental(period_, fund_.inverse());
}

bool PeriodizedMap::is_identity() const {
    return fund_.is_identity();
}

bool PeriodizedMap::is_translation() const {
    return fund_.piece_count() == 1 && max_slope() == QuadScalar(1);
}

QuadScalar reduce_mod(const QuadScalar& x, const QuadScalar& c) {
    Int n = period_index(x, c);
    return x - QuadScalar(Rational(n)) * c;
}

CircleMap::CircleMap(QuadScalar circumference, PeriodizedMap lift)
    : c_(std::move(circumference)), lift_(std::move(lift)) {
    if (lift_.period() != c_)
        throw std::domain_error("CircleMap: lift period must equal circumference");
    QuadScalar at0 = lift_.eval(QuadScalar(0));
    Int k = period_index(at0, c_);
    if (k != 0) {
        // normalize the deck transformation: shift all fundamental values by -k c
        QuadScalar shift = QuadScalar(Rational(k)) * c_;
        std::vector<BreakPoint> pts;
        for (const BreakPoint& p : lift_.fundamental().breakpoints())
            pts.push_back({p.x, p.y - shift});
        lift_ = PeriodizedMap(c_, PLSegmentMap(std::move(pts)));
    }
}

CircleMap CircleMap::identity(const QuadScalar& circumference) {
    return CircleMap(circumference, PeriodizedMap::identity(circumference));
}

CircleMap CircleMap::rotation(const QuadScalar& circumference, const QuadScalar& amount) {
    return CircleMap(circumference, PeriodizedMap::translation(circumference, amount));
}

QuadScalar CircleMap::eval(const QuadScalar& x) const {
    return reduce_mod(lift_.eval(reduce_mod(x, c_)), c_);
}

CircleMap CircleMap::then(const CircleMap& g) const {
    if (c_ != g.c_) throw std::domain_error("CircleMap::then: circumference mismatch");
    return CircleMap(c_, lift_.then(g.lift_));
}

CircleMap CircleMap::inverse() const {
    return CircleMap(c_, lift_.inverse());
}

}  // namespace homeoforge
