#include "homeoforge/ring.hpp"

#include <algorithm>

namespace homeoforge {

namespace {

QuadScalar q(long n, long d = 1) { return QuadScalar(Rational(n, d)); }

QuadScalar from_int(const Int& n) { return QuadScalar(Rational(n)); }

}  // namespace

CircleArc CircleArc::make(const QuadScalar& lo, const QuadScalar& hi, const QuadScalar& circ) {
    if (circ.sign() <= 0) throw std::domain_error("CircleArc: circumference must be positive");
    QuadScalar len = hi - lo;
    if (len.sign() < 0 || len > circ) throw std::domain_error("CircleArc: bad length");
    QuadScalar lo_r = reduce_mod(lo, circ);
    if (len == circ) throw std::domain_error("CircleArc: full circle is not an arc");
    return CircleArc{lo_r, lo_r + len, circ};
}

bool CircleArc::contains_point(const QuadScalar& x) const {
    if (is_empty()) return false;
    QuadScalar t = reduce_mod(x - lo, circ);
    return t.sign() > 0 && t < length();
}

bool CircleArc::contains_arc(const CircleArc& other) const {
    if (other.is_empty()) return true;
    if (is_empty()) return false;
    QuadScalar b0 = reduce_mod(other.lo - lo, circ);
    return b0 + other.length() <= length();
}

bool CircleArc::meets(const CircleArc& other) const {
    if (is_empty() || other.is_empty()) return false;
    QuadScalar b0 = reduce_mod(other.lo - lo, circ);
    return b0 < length() || b0 + other.length() > circ;
}

std::vector<CircleArc> CircleArc::intersection(const CircleArc& other) const {
    std::vector<CircleArc> out;
    if (is_empty() || other.is_empty()) return out;
    QuadScalar b0 = reduce_mod(other.lo - lo, circ);
    QuadScalar b1 = b0 + other.length();
    // other = (b0, b1) in this arc's frame; this = (0, len)
    QuadScalar len = length();
    auto clip = [&](const QuadScalar& a, const QuadScalar& b) {
        QuadScalar cl = a.sign() > 0 ? a : q(0);
        QuadScalar ch = b < len ? b : len;
        if (cl < ch) out.push_back(CircleArc::make(lo + cl, lo + ch, circ));
    };
    clip(b0, b1 < circ ? b1 : circ);
    if (b1 > circ) clip(q(0), b1 - circ);
    return out;
}

bool CircleArc::operator==(const CircleArc& o) const {
    if (is_empty() && o.is_empty()) return circ == o.circ;
    return lo == o.lo && hi == o.hi && circ == o.circ;
}

std::string CircleArc::str() const {
    return "(" + lo.str() + ", " + hi.str() + ") mod " + circ.str();
}

CircleArc arc_image(const CircleArc& a, const CircleMap& f) {
    if (a.is_empty()) return a;
    QuadScalar u = f.lift().eval(a.lo);
    QuadScalar v = f.lift().eval(a.hi);
    return CircleArc::make(u, v, a.circ);  // v - u stays in (0, c) for a lift
}

CircleArc arc_image(const CircleArc& a, const GeneratorRegistry& reg, const Word& w) {
    if (a.is_empty()) return a;
    QuadScalar u = evaluate_word(reg, w, a.lo);
    QuadScalar v = evaluate_word(reg, w, a.hi);
    return CircleArc::make(u, v, a.circ);
}

const CircleArc& RingConfig::J(int i) const { return intervals[wrap_index(i) - 1]; }
const CircleMap& RingConfig::f(int i) const { return generators[wrap_index(i) - 1]; }
const QuadScalar& RingConfig::x(int i) const { return marked[wrap_index(i) - 1]; }

int RingConfig::wrap_index(int i) const {
    int m = (i - 1) % n;
    if (m < 0) m += n;
    return m + 1;
}

std::string RingConfig::gen_id(int i) const {
    return "f" + std::to_string(wrap_index(i));
}

void finalize_ring(RingConfig& config) {
    GeneratorRegistry reg;
    for (int i = 1; i <= config.n; ++i)
        reg.register_circle(config.gen_id(i), config.generators[i - 1]);
    config.reg = std::move(reg);
}

namespace {

// Increasing two-block map [x0,x1] -> [y0,y1] with power-of-2 slopes within a
// factor 2 of the length ratio. Balanced pieces keep the generator orbits at
// usable granularity for routing (no steep slivers), and the slope pattern
// (s then s/2 expanding, s then 2s contracting) keeps the graph strictly off
// the diagonal in the zone interiors.
void two_block_zone(std::vector<BreakPoint>& pts, const Rational& x0, const Rational& x1,
                    const Rational& y0, const Rational& y1) {
    Rational X = x1 - x0, Y = y1 - y0;
    if (pts.empty()) pts.push_back({QuadScalar(x0), QuadScalar(y0)});
    if (X == Y) {
        pts.push_back({QuadScalar(x1), QuadScalar(y1)});
        return;
    }
    if (Y > X) {
        Rational s(2);
        while (s * X < Y) s = s * Rational(2);
        Rational u = Y / s * Rational(2) - X;  // slope s on [0,u], s/2 on the rest
        if (u.sign() > 0 && u < X)
            pts.push_back({QuadScalar(x0 + u), QuadScalar(y0 + u * s)});
        pts.push_back({QuadScalar(x1), QuadScalar(y1)});
    } else {
        Rational s(1, 2);
        while (s * X > Y) s = s * Rational(1, 2);
        Rational u = X * Rational(2) - Y / s;  // slope s on [0,u], 2s on the rest
        if (u.sign() > 0 && u < X)
            pts.push_back({QuadScalar(x0 + u), QuadScalar(y0 + u * s)});
        pts.push_back({QuadScalar(x1), QuadScalar(y1)});
    }
}

// push circle map supported exactly on the arc (a, b), b <= a+1, with knee
// a + 2q -> b - q (q = margin * (b-a)): strong enough to drive the marked
// orbit one interval per application, slopes moderate so routing walks have
// usable granularity; dyadic data throughout
CircleMap push_generator(const Rational& a, const Rational& b, const Rational& qq) {
    std::vector<BreakPoint> pts;
    two_block_zone(pts, a, a + qq + qq, a, b - qq);
    two_block_zone(pts, a + qq + qq, b, b - qq, b);
    if (QuadScalar(b) < QuadScalar(a + Rational(1)))
        pts.push_back({QuadScalar(a + Rational(1)), QuadScalar(a + Rational(1))});
    PLSegmentMap fund(std::move(pts));
    return CircleMap(q(1), PeriodizedMap::from_any_fundamental(q(1), fund));
}

}  // namespace

RingConfig synthesize_ring(int n, const Rational& margin) {
    if (n < 2) throw std::domain_error("synthesize_ring: need n >= 2");
    if (!margin.is_dyadic() || margin.sign() <= 0 || margin > Rational(1, 4))
        throw std::domain_error("synthesize_ring: margin must be dyadic in (0, 1/4]");
    RingConfig config;
    config.n = n;
    config.circumference = q(1);

    if (n == 2) {
        // two overlapping arcs covering the circle (the ping-pong picture);
        // the knee sits at half the n>=3 margin so each push lands beyond the
        // other generator's knee
        Rational a1(0), b1(3, 4), a2(1, 2), b2(5, 4);
        Rational half_margin = margin * Rational(1, 2);
        config.intervals = {CircleArc::make(QuadScalar(a1), QuadScalar(b1), q(1)),
                            CircleArc::make(QuadScalar(a2), QuadScalar(b2), q(1))};
        config.generators = {push_generator(a1, b1, (b1 - a1) * half_margin),
                             push_generator(a2, b2, (b2 - a2) * half_margin)};
        config.marked = {QuadScalar(a2), q(0)};
        finalize_ring(config);
        return config;
    }

    int K = 4;
    while ((1L << K) < 16L * n) ++K;
    Rational unit(1, 1L << K);
    std::vector<Rational> p;
    for (int i = 0; i < n; ++i)
        p.push_back(Rational((static_cast<long>(i) << K) / n) * unit);

    auto pr = [&](int idx) {  // p_idx with wraparound into rationals beyond 1
        int m = idx % n;
        long wraps_count = idx / n;
        if (m < 0) { m += n; wraps_count -= 1; }
        return p[m] + Rational(wraps_count);
    };

    for (int i = 1; i <= n; ++i) {
        Rational a = pr(i - 1), b = pr(i + 1);
        config.intervals.push_back(CircleArc::make(QuadScalar(a), QuadScalar(b), q(1)));
        config.generators.push_back(push_generator(a, b, (b - a) * margin));
        config.marked.push_back(QuadScalar(pr(i) - (pr(i) >= Rational(1) ? Rational(1) : Rational(0))));
    }
    finalize_ring(config);
    return config;
}

namespace {

// support of a circle map as arcs, glued across the basepoint when 0 moves
std::vector<CircleArc> circle_support(const CircleMap& m) {
    const QuadScalar c = m.circumference();
    PLSegmentMap r = m.lift().restriction(q(0), c);
    auto comps = support_in(r, Interval::closed(q(0), c));
    std::vector<CircleArc> arcs;
    bool moved0 = m.lift().eval(q(0)) != q(0);
    std::optional<std::pair<QuadScalar, QuadScalar>> left, right;
    for (const Interval& comp : comps) {
        if (moved0 && comp.lo == q(0)) left = {comp.lo, comp.hi};
        else if (moved0 && comp.hi == c) right = {comp.lo, comp.hi};
        else arcs.push_back(CircleArc::make(comp.lo, comp.hi, c));
    }
    if (left && right) {
        arcs.push_back(CircleArc::make(right->first, left->second + c, c));
    } else if (left) {
        arcs.push_back(CircleArc::make(left->first, left->second, c));
    } else if (right) {
        arcs.push_back(CircleArc::make(right->first, right->second, c));
    }
    return arcs;
}

}  // namespace

StarCheck verify_star(const RingConfig& config) {
    const int n = config.n;
    const QuadScalar& c = config.circumference;
    if (n < 2) return StarViolation{StarViolation::Cover, 0, 0, 0, "n < 2"};

    // supports match the intervals exactly
    for (int i = 1; i <= n; ++i) {
        auto arcs = circle_support(config.f(i));
        if (arcs.size() != 1 || !(arcs[0] == config.J(i))) {
            std::string got = arcs.empty() ? "empty" : arcs[0].str();
            if (arcs.size() > 1) got = "disconnected";
            return StarViolation{StarViolation::SupportMismatch, i, 0, 0,
                                 "Supp(f" + std::to_string(i) + ") = " + got +
                                     " != " + config.J(i).str()};
        }
    }

    // cover: every endpoint and every midpoint between consecutive endpoints
    {
        std::vector<QuadScalar> events;
        for (const CircleArc& a : config.intervals) {
            events.push_back(reduce_mod(a.lo, c));
            events.push_back(reduce_mod(a.hi, c));
        }
        std::sort(events.begin(), events.end());
        events.erase(std::unique(events.begin(), events.end()), events.end());
        auto covered = [&](const QuadScalar& pt) {
            for (const CircleArc& a : config.intervals)
                if (a.contains_point(pt)) return true;
            return false;
        };
        for (std::size_t e = 0; e < events.size(); ++e) {
            if (!covered(events[e]))
                return StarViolation{StarViolation::Cover, 0, 0, 0,
                                     "uncovered point " + events[e].str()};
            QuadScalar next = (e + 1 < events.size()) ? events[e + 1] : events[0] + c;
            QuadScalar mid = (events[e] + next) / q(2);
            if (!covered(mid))
                return StarViolation{StarViolation::Cover, 0, 0, 0,
                                     "uncovered point " + mid.str()};
        }
    }

    // adjacency pattern
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            int d = std::min(j - i, n - (j - i));
            auto comps = config.J(i).intersection(config.J(j));
            if (d > 1) {
                if (!comps.empty())
                    return StarViolation{StarViolation::Adjacency, i, j, 0,
                                         "J" + std::to_string(i) + " meets J" + std::to_string(j)};
            } else {
                std::size_t expect = (n == 2) ? 2 : 1;
                if (comps.size() != expect)
                    return StarViolation{StarViolation::Adjacency, i, j, 0,
                                         "J" + std::to_string(i) + " ∩ J" + std::to_string(j) +
                                             " has " + std::to_string(comps.size()) + " component(s)"};
                for (const CircleArc& comp : comps) {
                    if (comp == config.J(i) || comp == config.J(j))
                        return StarViolation{StarViolation::Adjacency, i, j, 0, "overlap not proper"};
                }
            }
        }
    }

    // marked points: x_i is the endpoint of J_{i+1} lying inside J_i
    for (int i = 1; i <= n; ++i) {
        const CircleArc& next = config.J(i + 1);
        QuadScalar lo = reduce_mod(next.lo, c), hi = reduce_mod(next.hi, c);
        bool lo_in = config.J(i).contains_point(lo);
        bool hi_in = config.J(i).contains_point(hi);
        QuadScalar expect = lo_in ? lo : hi;
        if (!lo_in && !hi_in)
            return StarViolation{StarViolation::MarkedPoint, i, 0, 0,
                                 "no endpoint of J" + std::to_string(i + 1) + " lies in J" +
                                     std::to_string(i)};
        if (reduce_mod(config.x(i), c) != expect)
            return StarViolation{StarViolation::MarkedPoint, i, 0, 0,
                                 "marked point x" + std::to_string(i) + " != " + expect.str()};
    }

    // orbit clauses: x_i . f_i f_{i+1} ... f_{i+l} in J_{i+l+1} for 1 <= l <= n
    StarCertificate cert;
    for (int i = 1; i <= n; ++i) {
        std::vector<std::pair<QuadScalar, int>> row;
        QuadScalar y = reduce_mod(config.x(i), c);
        y = config.f(i).eval(y);
        row.emplace_back(y, 0);
        for (int l = 1; l <= n; ++l) {
            y = config.f(i + l).eval(y);
            int target = config.wrap_index(i + l + 1);
            if (!config.J(target).contains_point(y))
                return StarViolation{StarViolation::OrbitClause, i, target, l,
                                     "x" + std::to_string(i) + "·f…f lands at " + y.str() +
                                         " outside J" + std::to_string(target)};
            row.emplace_back(y, target);
        }
        cert.orbits.push_back(std::move(row));
    }
    return cert;
}

std::vector<QuadScalar> default_probe_points(const RingConfig& config) {
    std::vector<QuadScalar> pts = config.marked;
    const QuadScalar& c = config.circumference;
    for (const CircleArc& a : config.intervals) {
        pts.push_back(reduce_mod(a.lo, c));
        pts.push_back(reduce_mod((a.lo + a.hi) / q(2), c));
    }
    std::sort(pts.begin(), pts.end(), [](const QuadScalar& a, const QuadScalar& b) { return a < b; });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

ProbeReport free_group_probe(const RingConfig& config, int max_len,
                             const std::vector<QuadScalar>& test_points) {
    ProbeReport report;
    const QuadScalar& c = config.circumference;
    struct Frame {
        std::vector<int> letters;
        std::vector<QuadScalar> orbit;
    };
    std::vector<Frame> stack;
    auto step = [&](const std::vector<QuadScalar>& pts, int letter) {
        std::vector<QuadScalar> out;
        out.reserve(pts.size());
        const GenEntry& e = config.reg.at("f" + std::to_string(std::abs(letter)));
        const PeriodizedMap& m = letter > 0 ? e.map : e.inverse_map;
        for (const QuadScalar& p : pts) out.push_back(reduce_mod(m.eval(p), c));
        return out;
    };
    std::vector<QuadScalar> base;
    for (const QuadScalar& p : test_points) base.push_back(reduce_mod(p, c));
    for (int i = 1; i <= config.n; ++i) {
        for (int s : {1, -1}) stack.push_back({{s * i}, step(base, s * i)});
    }
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        ++report.words_checked;
        bool moved = false;
        for (std::size_t k = 0; k < base.size() && !moved; ++k)
            moved = fr.orbit[k] != base[k];
        if (!moved) {
            std::vector<Letter> ls;
            for (int l : fr.letters) ls.push_back({"f" + std::to_string(std::abs(l)), l > 0 ? 1L : -1L});
            report.trivial_words.push_back(Word(ls));
        }
        if (static_cast<int>(fr.letters.size()) == max_len) continue;
        for (int i = 1; i <= config.n; ++i) {
            for (int s : {1, -1}) {
                if (fr.letters.back() == -s * i) continue;  // cancelling letter
                Frame next{fr.letters, step(fr.orbit, s * i)};
                next.letters.push_back(s * i);
                stack.push_back(std::move(next));
            }
        }
    }
    return report;
}

/* ------------------------------------------------------------------ */
/* routing                                                             */
/* ------------------------------------------------------------------ */

namespace {

// sorted circle grid built from the marked points, with marked indices
struct Grid {
    std::vector<QuadScalar> pts;  // sorted, in [0, c)
    std::vector<int> marked_idx;  // pts[g] == x_{marked_idx[g]}
    QuadScalar c;

    int size() const { return static_cast<int>(pts.size()); }
    QuadScalar pt(int g) const {  // with wraparound
        int m = g % size();
        long wraps = g / size();
        if (m < 0) { m += size(); wraps -= 1; }
        return pts[m] + from_int(Int(wraps)) * c;
    }
    // gap index g such that arc lies in (pt(g), pt(g+1)); -1 if on/straddling grid
    int gap_of(const CircleArc& a) const {
        for (int g = 0; g < size(); ++g) {
            CircleArc gap = CircleArc::make(pt(g), pt(g + 1), c);
            if (gap.contains_arc(a)) return g;
        }
        return -1;
    }
    // grid point equal to the given circle point, or -1
    int at_point(const QuadScalar& v) const {
        QuadScalar r = reduce_mod(v, c);
        for (int g = 0; g < size(); ++g)
            if (pts[g] == r) return g;
        return -1;
    }
};

Grid make_grid(const RingConfig& config) {
    Grid grid;
    grid.c = config.circumference;
    std::vector<std::pair<QuadScalar, int>> pairs;
    for (int i = 1; i <= config.n; ++i)
        pairs.emplace_back(reduce_mod(config.x(i), config.circumference), i);
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [p, i] : pairs) {
        grid.pts.push_back(p);
        grid.marked_idx.push_back(i);
    }
    return grid;
}

struct Mover {
    const RingConfig* cfg;
    const Grid* grid;
    Word w;
    CircleArc arc;
    long steps = 0;
    long cap = 0;

    bool spent() const { return steps > cap; }
    void apply(int i, int e) {
        w = w * Word::single(cfg->gen_id(i), e);
        arc = arc_image(arc, cfg->reg, Word::single(cfg->gen_id(i), e));
        ++steps;
    }
    CircleArc peek(int i, int e) const {
        return arc_image(arc, cfg->reg, Word::single(cfg->gen_id(i), e));
    }
};

// detached: inside a gap with neither endpoint on the grid
bool detached_in_gap(const Mover& m) {
    return m.grid->gap_of(m.arc) >= 0 && m.grid->at_point(m.arc.lo) < 0 &&
           m.grid->at_point(reduce_mod(m.arc.hi, m.grid->c)) < 0;
}

// Contract the arc greedily until it is shorter than theta and sits strictly
// inside a gap, detached from the grid. Pinned endpoints at marked points are
// detached by applying the generator whose support's interior holds that point.
bool contract_to_gap(Mover& m, const QuadScalar& theta) {
    while (!m.spent()) {
        if (m.arc.length() < theta && detached_in_gap(m)) return true;
        // pinned at a marked point: detach
        int pin = m.grid->at_point(m.arc.lo);
        if (pin < 0) pin = m.grid->at_point(reduce_mod(m.arc.hi, m.grid->c));
        if (pin >= 0 && m.arc.length() < theta) {
            m.apply(m.grid->marked_idx[pin], 1);
            continue;
        }
        // greedy: the single letter shrinking the arc the most
        bool found = false;
        int best_i = 0, best_e = 0;
        QuadScalar best_len = m.arc.length();
        for (int i = 1; i <= m.cfg->n; ++i) {
            for (int e : {1, -1}) {
                QuadScalar len = m.peek(i, e).length();
                if (len < best_len) {
                    best_len = len;
                    best_i = i;
                    best_e = e;
                    found = true;
                }
            }
        }
        if (found) {
            m.apply(best_i, best_e);
            continue;
        }
        // tiny but straddling a grid point: push it off with that point's generator
        for (int g = 0; g < m.grid->size(); ++g) {
            if (m.arc.contains_point(m.grid->pts[g])) {
                m.apply(m.grid->marked_idx[g], 1);
                found = true;
                break;
            }
        }
        if (!found && pin >= 0) {
            m.apply(m.grid->marked_idx[pin], 1);
            found = true;
        }
        if (!found) return false;
    }
    return false;
}

// letters acting on a gap: the gap (P_g, P_{g+1}) lies inside the supports of
// exactly the generators whose interval contains it
int pull_letter(const Mover& m, int g) {
    // generator fixing P_g and contracting the gap toward it: f_{t+1} where x_t = P_g
    int t = m.grid->marked_idx[((g % m.grid->size()) + m.grid->size()) % m.grid->size()];
    return m.cfg->wrap_index(t + 1);
}
int push_letter(const Mover& m, int g) {
    // generator with x_t = P_g in its interior pushing rightwards across the gap
    return m.grid->marked_idx[((g % m.grid->size()) + m.grid->size()) % m.grid->size()];
}

// Hop the arc from its current gap to the next one (rightward).
bool hop_forward(Mover& m) {
    int g = m.grid->gap_of(m.arc);
    if (g < 0) return false;
    int letter = pull_letter(m, g);  // f with support (P_g, ...) extending past P_{g+1}
    long guard = 0;
    while (!m.spent()) {
        m.apply(letter, 1);
        int now = m.grid->gap_of(m.arc);
        if (now >= 0 && now != g) return true;
        if (now < 0) {
            // straddling P_{g+1}: push once more with the same letter
            if (++guard > 200) return false;
            continue;
        }
        if (++guard > 200) return false;
    }
    return false;
}

// Re-contract inside the current gap, pulling toward its left grid point.
bool settle(Mover& m, const QuadScalar& theta) {
    int g = m.grid->gap_of(m.arc);
    if (g < 0 || !detached_in_gap(m)) return contract_to_gap(m, theta);
    int letter = pull_letter(m, g);
    while (!m.spent() && m.arc.length() >= theta) m.apply(letter, -1);
    return !m.spent() && (detached_in_gap(m) || contract_to_gap(m, theta));
}

// Try to land the arc inside the window W (a sub-arc of the current gap g).
// Strategies, each checkpointed and exact-tested per step:
//  (a) pull toward the gap's left point / push toward its right point
//      (windows touching a grid point);
//  (b) hug the left point from inside (f_{t+1} pulls), then walk the
//      marked-point orbit with f_t: two independent knobs;
//  (c) approach from the previous gap (left-hug of P_g), then walk with f_t:
//      reaches windows hugging the orbit anchors from the left.
bool land_in_window(Mover& m, const CircleArc& W, int attempts) {
    int g = m.grid->gap_of(m.arc);
    if (g < 0) return false;
    const int sz = m.grid->size();
    auto norm = [&](int v) { return ((v % sz) + sz) % sz; };
    QuadScalar gap_lo = m.grid->pt(g), gap_hi = m.grid->pt(g + 1);
    int pull = pull_letter(m, g);   // f_{t+1}: fixes P_g, contracts the gap toward it
    int push = push_letter(m, g);   // f_t: P_g interior, orbit anchors P_g.f_t^d

    if (reduce_mod(W.lo, m.grid->c) == reduce_mod(gap_lo, m.grid->c)) {
        Mover trial = m;
        while (!trial.spent()) {
            if (W.contains_arc(trial.arc)) { m = trial; return true; }
            trial.apply(pull, -1);
        }
        return false;
    }
    if (reduce_mod(W.hi, m.grid->c) == reduce_mod(gap_hi, m.grid->c)) {
        Mover trial = m;
        while (!trial.spent()) {
            if (W.contains_arc(trial.arc)) { m = trial; return true; }
            trial.apply(push, 1);
        }
        return false;
    }

    // (b) in-gap two-knob sweeps: one letter steps a ladder of positions, the
    // other walks from each rung, every composite tested exactly; all letter
    // and direction combinations are tried
    const int hug_cap = 70, walk_cap = 70;
    auto sweep = [&](int ladder_letter, int ladder_dir, int walk_letter, int walk_dir) {
        Mover ladder = m;
        for (int j = 0; j <= hug_cap && !ladder.spent(); ++j) {
            Mover walk = ladder;
            for (int d = 0; d <= walk_cap && !walk.spent(); ++d) {
                if (W.contains_arc(walk.arc)) { m = walk; return true; }
                walk.apply(walk_letter, walk_dir);
                if (walk.grid->gap_of(walk.arc) != g) {
                    if (W.contains_arc(walk.arc)) { m = walk; return true; }
                    break;
                }
            }
            ladder.apply(ladder_letter, ladder_dir);
            if (ladder.grid->gap_of(ladder.arc) != g) break;
        }
        return false;
    };
    for (int ld : {-1, 1}) {
        for (int wd : {1, -1}) {
            if (sweep(pull, ld, push, wd)) return true;
            if (sweep(push, ld, pull, wd)) return true;
        }
    }
    // (c) approach from the previous gap, hug P_g from the left, walk with f_t
    for (int attempt = 1; attempt <= attempts && !m.spent(); ++attempt) {
        Mover trial = m;
        int prev_g = norm(g - 1);
        int back_push = push_letter(trial, prev_g);  // contracts the previous gap toward P_g
        long guard = 0;
        while (trial.grid->gap_of(trial.arc) != prev_g) {
            trial.apply(push, -1);  // pull back across P_g
            if (trial.spent() || ++guard > 300) break;
        }
        if (trial.grid->gap_of(trial.arc) != prev_g) continue;
        for (int k = 0; k < 8 * attempt && !trial.spent(); ++k) trial.apply(back_push, 1);
        Mover walk = trial;
        for (int d = 0; d <= walk_cap && !walk.spent(); ++d) {
            if (W.contains_arc(walk.arc)) { m = walk; return true; }
            walk.apply(push, 1);
        }
    }
    return false;
}

}  // namespace

RouteResult find_contracting_word(const RingConfig& config, const CircleArc& I,
                                  const CircleArc& J, int depth, const QuadScalar& theta_cap) {
    RouteResult out;
    if (J.is_empty()) {
        out.error = "target arc has empty interior";
        return out;
    }
    if (J.contains_arc(I)) {
        out.ok = true;
        return out;
    }
    if (config.n < 3) {
        out.error = "routing requires n >= 3";
        return out;
    }
    Grid grid = make_grid(config);
    QuadScalar min_gap = grid.pt(1) - grid.pt(0);
    for (int g = 1; g < grid.size(); ++g) {
        QuadScalar len = grid.pt(g + 1) - grid.pt(g);
        if (len < min_gap) min_gap = len;
    }
    QuadScalar theta = min_gap / q(16);
    if (theta_cap.sign() > 0 && theta_cap < theta) theta = theta_cap;
    if (J.length() < theta && J.length() > q(0)) theta = J.length() / q(4);

    Mover m{&config, &grid, Word(), I, 0, static_cast<long>(depth) * 200};
    if (!contract_to_gap(m, theta)) {
        out.error = "capture failed: could not contract the arc into a gap";
        out.word = m.w;
        return out;
    }
    out.trace.push_back(m.arc);
    // two full loops of the circle without landing means the windows are
    // unreachable for this strategy set; report rather than spiral
    for (int hop = 0; hop <= 2 * grid.size() + 2; ++hop) {
        if (J.contains_arc(m.arc)) {
            out.ok = true;
            out.word = m.w;
            return out;
        }
        int g = grid.gap_of(m.arc);
        if (g < 0) {
            if (!contract_to_gap(m, theta)) break;
            continue;
        }
        CircleArc gap = CircleArc::make(grid.pt(g), grid.pt(g + 1), grid.c);
        auto windows = gap.intersection(J);
        bool landed = false;
        for (const CircleArc& W : windows) {
            Mover trial = m;
            if (land_in_window(trial, W, depth / 8 + 2)) {
                m = trial;
                landed = true;
                break;
            }
        }
        if (landed) {
            out.ok = true;
            out.word = m.w;
            out.trace.push_back(m.arc);
            return out;
        }
        if (!hop_forward(m)) {
            out.error = "hop failed while routing";
            out.word = m.w;
            return out;
        }
        if (!settle(m, theta)) break;
        out.trace.push_back(m.arc);
        if (m.spent()) break;
    }
    out.error = out.error.empty() ? "routing search exhausted (depth cap)" : out.error;
    out.word = m.w;
    return out;
}

/* ------------------------------------------------------------------ */
/* small family, nu, X                                                */
/* ------------------------------------------------------------------ */

SmallFamily build_small_family(const RingConfig& config) {
    if (config.n < 3) throw std::domain_error("build_small_family: requires n >= 3");
    const int n = config.n;
    const QuadScalar& c = config.circumference;
    SmallFamily fam;
    fam.L.assign(n, std::vector<CircleArc>(n, CircleArc::empty(c)));
    fam.container.assign(n, std::vector<int>(n, 0));

    for (int j = 1; j <= n; ++j) {
        // the gap (x_{j+1}, x_{j+2}) avoids J_j; anchors are the forward orbit
        // of x_{j+1} under f_{j+1}
        QuadScalar base = reduce_mod(config.x(j + 1), c);
        std::vector<QuadScalar> anchors{base};
        QuadScalar y = base;
        for (int i = 1; i <= n; ++i) {
            y = config.f(j + 1).eval(y);
            anchors.push_back(y);
        }
        for (int i = 1; i <= n; ++i) {
            QuadScalar lo_ref = anchors[i - 1];
            QuadScalar hi_ref = anchors[i];
            // unwrap relative to base
            QuadScalar lo_rel = reduce_mod(lo_ref - base, c);
            QuadScalar hi_rel = reduce_mod(hi_ref - base, c);
            QuadScalar theta = (hi_rel - lo_rel) / q(2);
            fam.L[i - 1][j - 1] = CircleArc::make(base + hi_rel - theta, base + hi_rel, c);
            fam.container[i - 1][j - 1] = config.wrap_index(j + 1);
        }
    }

    // family invariants, reported rather than assumed (loaded configs may
    // have geometry the anchor construction cannot serve)
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const CircleArc& L = fam.L[i - 1][j - 1];
            if (L.is_empty() || L.meets(config.J(j)) ||
                !config.J(fam.container[i - 1][j - 1]).contains_arc(L))
                throw std::domain_error("build_small_family: infeasible geometry at L_{" +
                                        std::to_string(i) + "," + std::to_string(j) + "}");
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    if ((a != i || b != j) && L.meets(fam.L[a - 1][b - 1]))
                        throw std::domain_error("build_small_family: family arcs overlap");
        }
    }

    // epsilon_small: arcs shorter than this are I-small (min gap length vs
    // distances from every L to the closure of the matching J)
    Grid grid = make_grid(config);
    QuadScalar eps = grid.pt(1) - grid.pt(0);
    for (int g = 1; g < grid.size(); ++g) {
        QuadScalar len = grid.pt(g + 1) - grid.pt(g);
        if (len < eps) eps = len;
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const CircleArc& L = fam.L[i - 1][j - 1];
            const CircleArc& Jj = config.J(j);
            // circle distance from L to the closed arc Jj, both directions
            QuadScalar d1 = reduce_mod(L.lo - Jj.hi, c);
            QuadScalar d2 = reduce_mod(Jj.lo - L.hi, c);
            if (d1.sign() > 0 && d1 < eps) eps = d1;
            if (d2.sign() > 0 && d2 < eps) eps = d2;
        }
    }
    fam.epsilon_small = eps;
    return fam;
}

bool is_I_small(const CircleArc& a, const SmallFamily& family, const RingConfig& config,
                std::string* why) {
    if (a.is_empty()) return true;
    bool small = false;
    for (int k = 1; k <= config.n && !small; ++k) small = config.J(k).contains_arc(a);
    if (!small) {
        if (why) *why = "arc not contained in any J_k";
        return false;
    }
    for (int i = 1; i <= config.n; ++i) {
        for (int j = 1; j <= config.n; ++j) {
            const CircleArc& L = family.L[i - 1][j - 1];
            if (a.meets(L) && a.meets(config.J(j))) {
                if (why)
                    *why = "arc meets both L_{" + std::to_string(i) + "," + std::to_string(j) +
                           "} and J_" + std::to_string(j);
                return false;
            }
        }
    }
    return true;
}

NuFamily build_nu(const RingConfig& config, const SmallFamily& family, int depth) {
    const int n = config.n;
    NuFamily out;
    out.lambda_word.assign(n, std::vector<Word>(n));
    out.nu_word.assign(n, std::vector<Word>(n));
    out.support.assign(n, std::vector<CircleArc>(n, CircleArc::empty(config.circumference)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            auto route = find_contracting_word(config, config.J(i), family.L[i - 1][j - 1], depth);
            if (!route.ok) {
                out.error = "routing J_" + std::to_string(i) + " into L_{" + std::to_string(i) +
                            "," + std::to_string(j) + "} failed: " + route.error;
                return out;
            }
            out.lambda_word[i - 1][j - 1] = route.word;
            out.nu_word[i - 1][j - 1] =
                conjugate(Word::single(config.gen_id(i)), route.word);
            CircleArc supp = arc_image(config.J(i), config.reg, route.word);
            if (!family.L[i - 1][j - 1].contains_arc(supp)) {
                out.error = "Supp(nu) escapes L";
                return out;
            }
            out.support[i - 1][j - 1] = supp;
        }
    }
    // pairwise disjoint supports and pairwise commutation on the full circle
    Interval circle = Interval::closed(q(0), config.circumference);
    for (int a = 0; a < n * n; ++a) {
        for (int b = a + 1; b < n * n; ++b) {
            const CircleArc& a1 = out.support[a / n][a % n];
            const CircleArc& a2 = out.support[b / n][b % n];
            if (a1.meets(a2)) {
                out.error = "nu supports not pairwise disjoint";
                return out;
            }
            Word comm = commutator(out.nu_word[a / n][a % n], out.nu_word[b / n][b % n]);
            if (!word_identity_on(config.reg, comm, circle)) {
                out.error = "nu commutator acts nontrivially on the circle";
                return out;
            }
        }
    }
    out.verified = true;
    return out;
}

std::string x_letter_id(int i, int j) {
    return "x" + std::to_string(i) + "." + std::to_string(j);
}

XSet generating_set_X(const RingConfig& config, const SmallFamily& family, const NuFamily& nu) {
    (void)family;
    const int n = config.n;
    XSet xs;
    xs.words.assign(n, std::vector<Word>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            xs.words[i - 1][j - 1] =
                nu.nu_word[i - 1][j - 1].inverse() * Word::single(config.gen_id(i));

    // verify the displayed factorizations as exact circle-map equalities
    Interval window = Interval::closed(q(0), config.circumference);
    auto equal_on_circle = [&](const Word& a, const Word& b) {
        return restrict_word(config.reg, a, window) == restrict_word(config.reg, b, window);
    };
    for (int i = 1; i <= n && xs.error.empty(); ++i) {
        for (int j1 = 1; j1 <= n && xs.error.empty(); ++j1) {
            for (int j2 = 1; j2 <= n; ++j2) {
                if (j1 == j2) continue;
                Word lhs = nu.nu_word[i - 1][j1 - 1] * nu.nu_word[i - 1][j2 - 1].inverse();
                Word rhs = xs.words[i - 1][j2 - 1] * xs.words[i - 1][j1 - 1].inverse();
                if (!equal_on_circle(lhs, rhs)) {
                    xs.error = "factorization nu_{i,j1} nu_{i,j2}^-1 failed at i=" +
                               std::to_string(i);
                    break;
                }
            }
        }
    }
    for (int i = 1; i <= n && xs.error.empty(); ++i) {
        for (int j = 1; j <= n; ++j) {
            // f_i nu_{i,j}^-1 = x_{i,i} (nu_{i,i} nu_{i,j}^-1) as maps
            Word lhs = Word::single(config.gen_id(i)) * nu.nu_word[i - 1][j - 1].inverse();
            Word rhs = xs.words[i - 1][i - 1] *
                       (nu.nu_word[i - 1][i - 1] * nu.nu_word[i - 1][j - 1].inverse());
            if (!equal_on_circle(lhs, rhs)) {
                xs.error = "factorization f_i nu_{i,j}^-1 failed at i=" + std::to_string(i) +
                           ", j=" + std::to_string(j);
                break;
            }
        }
    }
    xs.identities_verified = xs.error.empty();
    return xs;
}

std::vector<long> exponent_sums(const RingConfig& config, const Word& w) {
    std::vector<long> sums(config.n, 0);
    for (const Letter& l : w.letters()) {
        if (l.id.size() > 1 && l.id[0] == 'f') {
            int idx = std::stoi(l.id.substr(1));
            if (idx >= 1 && idx <= config.n) sums[idx - 1] += l.exp;
        }
    }
    return sums;
}

Word expand_x_word(const XSet& xs, const Word& xword) {
    Word out;
    for (const Letter& l : xword.letters()) {
        // id "x<i>.<j>"
        auto dot = l.id.find('.');
        int i = std::stoi(l.id.substr(1, dot - 1));
        int j = std::stoi(l.id.substr(dot + 1));
        out = out * xs.words[i - 1][j - 1].pow(l.exp);
    }
    return out;
}

/* ------------------------------------------------------------------ */
/* special elements and the generating-set realization                 */
/* ------------------------------------------------------------------ */

SpecialStepResult special_step(const RingConfig& config, const SmallFamily& family,
                               const NuFamily& nu, const SpecialElement& s,
                               int l, int sign) {
    SpecialStepResult out;
    Word letter = Word::single(config.gen_id(l), sign);
    CircleArc new_supp = arc_image(s.supp, config.reg, letter);
    std::string why;
    if (!is_I_small(new_supp, family, config, &why)) {
        out.error = "Supp(f^g) is not I-small: " + why;
        return out;
    }
    if (!s.supp.meets(config.J(l))) {
        // disjoint supports: f^g = f as maps; the pair is unchanged
        out.ok = true;
        out.element = s;
        return out;
    }
    // switch the pairing to index l, then conjugate by h_l = f_l nu_{l,l}^-1 = x_{l,l}
    if (s.supp.meets(nu.support[s.i - 1][l - 1])) {
        out.error = "Supp(f) meets Supp(nu_{i,l}); re-pairing impossible";
        return out;
    }
    // the nu_{l,l} part must act trivially on the moved support
    if (new_supp.meets(nu.support[l - 1][l - 1])) {
        out.error = "Supp(f^g) meets Supp(nu_{l,l}); conjugation by x_{l,l} is not plain f_l";
        return out;
    }
    SpecialElement e;
    e.f = conjugate(s.f, letter);
    e.i = s.i;
    e.j = l;
    e.supp = new_supp;
    // xword: re-pair (append nu_{i,j} nu_{i,l}^-1 = x_{i,l} x_{i,j}^-1), then conjugate
    Word repaired = s.xword * Word::single(x_letter_id(s.i, l)) *
                    Word::single(x_letter_id(s.i, s.j), -1);
    e.xword = conjugate(repaired, Word::single(x_letter_id(l, l), sign));
    out.ok = true;
    out.element = e;
    return out;
}

namespace {

// Route a tiny arc into the target with every intermediate I-small; reuses the
// generic router and re-checks smallness along the produced trace.
RouteResult route_small(const RingConfig& config, const SmallFamily& family,
                        const CircleArc& start, const CircleArc& target, int depth,
                        std::vector<CircleArc>* trace_out) {
    RouteResult route =
        find_contracting_word(config, start, target, depth, family.epsilon_small / q(2));
    if (!route.ok) return route;
    // replay letter by letter, checking smallness of every intermediate arc
    CircleArc cur = start;
    std::string why;
    for (const Letter& l : route.word.letters()) {
        long reps = l.exp > 0 ? l.exp : -l.exp;
        for (long r = 0; r < reps; ++r) {
            cur = arc_image(cur, config.reg, Word::single(l.id, l.exp > 0 ? 1 : -1));
            if (!is_I_small(cur, family, config, &why)) {
                RouteResult bad;
                bad.error = "intermediate arc not I-small: " + why;
                return bad;
            }
            if (trace_out) trace_out->push_back(cur);
        }
    }
    return route;
}

}  // namespace

RealizeResult realize_generator_on(const RingConfig& config, const SmallFamily& family,
                                   const NuFamily& nu, const XSet& xs, const CircleArc& J,
                                   int i, int sign, int l_cap, int depth) {
    RealizeResult out;
    if (config.n < 3) {
        out.error = "requires n >= 3";
        return out;
    }
    if (sign > 0) {
        // gamma agreeing with f_i on J is the inverse of one agreeing with
        // f_i^-1 on the transported window J.f_i
        CircleArc moved = arc_image(J, config.f(i));
        RealizeResult inner =
            realize_generator_on(config, family, nu, xs, moved, i, -1, l_cap, depth);
        if (!inner.ok) return inner;
        out = inner;
        out.gamma = inner.gamma.inverse();
        out.gamma_x = inner.gamma_x.inverse();
        // re-verify on the original window
        QuadScalar jlo = reduce_mod(J.lo, config.circumference);
        Interval win = Interval::closed(jlo, jlo + J.length());
        if (!(restrict_word(config.reg, out.gamma, win) ==
              restrict_word(config.reg, Word::single(config.gen_id(i)), win))) {
            out.ok = false;
            out.error = "restriction equality failed on J after inversion";
        }
        return out;
    }
    // degenerate case: J misses Supp(f_i): the empty word restricts to f_i^s there
    if (!J.meets(config.J(i))) {
        out.ok = true;
        return out;
    }
    CircleArc complement =
        CircleArc::make(reduce_mod(J.hi, config.circumference),
                        reduce_mod(J.hi, config.circumference) +
                            (config.circumference - J.length()),
                        config.circumference);
    if (complement.is_empty()) {
        out.error = "complement of J has empty interior";
        return out;
    }

    int j = i;  // seed choice
    int k = family.container[i - 1][j - 1];

    // contract the seed support into an I-small arc near inf(J_k) with f_k pulls
    Word fk_pull;
    CircleArc seed = nu.support[i - 1][j - 1];
    long l = 0;
    std::string why;
    while (l < l_cap) {
        // need: I-small, disjoint from Supp(nu_{i,k}), and small enough to route
        if (l > 0 && is_I_small(seed, family, config, &why) &&
            !seed.meets(nu.support[i - 1][k - 1]) &&
            seed.length() < family.epsilon_small / q(2)) break;
        seed = arc_image(seed, config.reg, Word::single(config.gen_id(k), -1));
        fk_pull = fk_pull * Word::single(config.gen_id(k), -1);
        ++l;
    }
    if (l >= l_cap) {
        out.error = "seed contraction cap exhausted (l_cap=" + std::to_string(l_cap) + ")";
        return out;
    }
    // gamma = nu_{i,j}^{f_k^-l}; its X-word conjugates by h = x_{k,k}
    SpecialElement cur;
    cur.f = conjugate(nu.nu_word[i - 1][j - 1], fk_pull);
    cur.i = i;
    cur.j = k;
    cur.supp = seed;
    // xword of (nu_{i,j} nu_{i,k}^-1)^{h^-l} = x_{i,k} x_{i,j}^-1 conjugated
    cur.xword = conjugate(Word::single(x_letter_id(i, k)) * Word::single(x_letter_id(i, j), -1),
                          Word::single(x_letter_id(k, k), -l));
    // validity of the h-to-f_k reduction: the pull trace must avoid L_{k,k}
    {
        CircleArc probe = nu.support[i - 1][j - 1];
        for (long t = 0; t < l; ++t) {
            probe = arc_image(probe, config.reg, Word::single(config.gen_id(k), -1));
            if (probe.meets(family.L[k - 1][k - 1])) {
                out.error = "seed pull crossed L_{k,k}";
                return out;
            }
        }
    }
    if (cur.supp.meets(nu.support[i - 1][k - 1])) {
        out.error = "seed not special after contraction";
        return out;
    }
    out.small_trace.push_back(cur.supp);

    // route the seed support into the complement of J, all intermediates I-small
    std::vector<CircleArc> trace;
    RouteResult route = route_small(config, family, cur.supp, complement, depth, &trace);
    if (!route.ok) {
        out.error = "routing into J^c failed: " + route.error;
        return out;
    }
    out.small_trace.insert(out.small_trace.end(), trace.begin(), trace.end());

    // apply the special-step calculus letter by letter
    int step_no = 0;
    for (const Letter& letter : route.word.letters()) {
        long reps = letter.exp > 0 ? letter.exp : -letter.exp;
        int lsign = letter.exp > 0 ? 1 : -1;
        int lidx = std::stoi(letter.id.substr(1));
        for (long r = 0; r < reps; ++r) {
            auto stepped = special_step(config, family, nu, cur, lidx, lsign);
            ++step_no;
            if (!stepped.ok) {
                out.error = "special step " + std::to_string(step_no) + " failed: " + stepped.error;
                out.failed_step = step_no;
                return out;
            }
            cur = stepped.element;
        }
    }

    // output: (gamma^g nu_{i,km}^-1)(nu_{i,km} f_i^-1) = gamma^g f_i^-1
    Word gamma_out = cur.f * Word::single(config.gen_id(i), -1);
    Word fi_nu_inv_x = Word::single(x_letter_id(i, i)) * Word::single(x_letter_id(i, cur.j)) *
                       Word::single(x_letter_id(i, i), -1);
    Word gamma_out_x = cur.xword * fi_nu_inv_x.inverse();
    // the defining property, exactly: restrict(gamma, J) = restrict(f_i^-1, J)
    QuadScalar jlo = reduce_mod(J.lo, config.circumference);
    Interval win = Interval::closed(jlo, jlo + J.length());
    PLSegmentMap got = restrict_word(config.reg, gamma_out, win);
    PLSegmentMap want = restrict_word(config.reg, Word::single(config.gen_id(i), -1), win);
    if (!(got == want)) {
        out.error = "restriction equality failed on J";
        return out;
    }
    // and the X-word substitution agrees with the base word on the whole circle
    Word expanded = expand_x_word(xs, gamma_out_x);
    Interval circle = Interval::closed(q(0), config.circumference);
    if (!(restrict_word(config.reg, expanded, circle) ==
          restrict_word(config.reg, gamma_out, circle))) {
        out.error = "X-word expansion disagrees with the base word";
        return out;
    }
    out.ok = true;
    out.gamma = gamma_out;
    out.gamma_x = gamma_out_x;
    return out;
}

/* ------------------------------------------------------------------ */
/* winding, torus, translation number                                  */
/* ------------------------------------------------------------------ */

WindingReport lift_winding_check(const RingConfig& config, const std::vector<int>& letters) {
    const QuadScalar& c = config.circumference;
    WindingReport rep;
    // lifted endpoint
    QuadScalar x0 = reduce_mod(config.J(1).lo, c);
    QuadScalar X = x0;
    for (int l : letters) {
        const GenEntry& e = config.reg.at("f" + std::to_string(std::abs(l)));
        X = (l > 0 ? e.map : e.inverse_map).eval(X);
    }
    // net deck translation of the lifted orbit
    rep.winding = period_index(X, c) - period_index(x0, c);

    // backtracking reduction of the circle orbit
    std::vector<int> red = letters;
    auto orbit_of = [&](const std::vector<int>& ls) {
        std::vector<QuadScalar> orb{x0};
        QuadScalar z = x0;
        for (int l : ls) {
            const GenEntry& e = config.reg.at("f" + std::to_string(std::abs(l)));
            z = reduce_mod((l > 0 ? e.map : e.inverse_map).eval(z), c);
            orb.push_back(z);
        }
        return orb;
    };
    bool changed = true;
    std::vector<QuadScalar> orb;
    while (changed) {
        changed = false;
        orb = orbit_of(red);
        for (std::size_t t = 0; t + 1 < orb.size(); ++t) {
            if (orb[t] == orb[t + 1]) {
                red.erase(red.begin() + t);
                changed = true;
                break;
            }
            if (t + 2 < orb.size() && orb[t] == orb[t + 2]) {
                red.erase(red.begin() + t, red.begin() + t + 2);
                changed = true;
                break;
            }
        }
    }
    rep.reduced = red;
    rep.orbit = orb;
    // endpoint avoidance along the reduced orbit (excluding the start point)
    for (std::size_t t = 1; t < orb.size(); ++t) {
        for (int idx = 1; idx <= config.n; ++idx) {
            QuadScalar lo = reduce_mod(config.J(idx).lo, c);
            QuadScalar hi = reduce_mod(config.J(idx).hi, c);
            if (orb[t] == lo || orb[t] == hi) {
                rep.endpoint_hit = true;
                rep.hit_step = static_cast<int>(t);
                return rep;
            }
        }
    }
    return rep;
}

WindingReport lift_winding_check(const RingConfig& config, const Word& w) {
    std::vector<int> letters;
    for (const Letter& l : w.letters()) {
        int idx = std::stoi(l.id.substr(1));
        long reps = l.exp > 0 ? l.exp : -l.exp;
        for (long r = 0; r < reps; ++r) letters.push_back(l.exp > 0 ? idx : -idx);
    }
    return lift_winding_check(config, letters);
}

TorusPoint torus_action(const GeneratorRegistry& reg, const QuadScalar& lambda,
                        const Word& g, int which, const TorusPoint& p) {
    TorusPoint out;
    if (which == 1) {
        QuadScalar yg = evaluate_word(reg, g, p.y);
        out = TorusPoint{p.x + (yg - p.y) / lambda, yg};
    } else if (which == 2) {
        QuadScalar xg = evaluate_word(reg, g, p.x);
        out = TorusPoint{xg, p.y + lambda * (xg - p.x)};
    } else {
        throw std::domain_error("torus_action: which must be 1 or 2");
    }
    // leaf invariant y - lambda x, asserted on every call
    if (!((out.y - lambda * out.x) == (p.y - lambda * p.x)))
        throw std::logic_error("torus_action: leaf invariant violated");
    return out;
}

TranslationEstimate translation_number_estimate(const GeneratorRegistry& reg, const Word& w,
                                                long k, const QuadScalar& circumference) {
    if (k < 1) throw std::domain_error("translation_number_estimate: k >= 1 required");
    QuadScalar z(0);
    for (long r = 0; r < k; ++r) z = evaluate_word(reg, w, z);
    QuadScalar kk = q(k);
    TranslationEstimate est;
    est.estimate = z / kk;
    est.lower = est.estimate - circumference / kk;
    est.upper = est.estimate + circumference / kk;
    return est;
}

}  // namespace homeoforge
