#include "homeoforge/gline.hpp"

#include <algorithm>
#include <random>

namespace homeoforge {

namespace {

QuadScalar q(long n, long d = 1) { return QuadScalar(Rational(n, d)); }

Int ceil_int(const QuadScalar& x) { return -floor_int(-x); }

QuadScalar from_int(const Int& n) { return QuadScalar(Rational(n)); }

}  // namespace

GLambdaContext::GLambdaContext(QuadScalar lambda) : lambda_(std::move(lambda)) {
    if (lambda_.is_rational() || !(lambda_ > q(1)))
        throw std::domain_error("GLambdaContext: lambda must be an irrational > 1");
    reg_.register_periodized("x0bar", nu_embed(f_generator_x0()));
    reg_.register_periodized("x1bar", nu_embed(f_generator_x1()));
    reg_.register_periodized("rot", PeriodizedMap::translation(q(1), q(1, 2)));
    reg_.register_periodized("c1", PeriodizedMap::translation(q(1), q(1)));
    reg_.register_periodized("x0lam", PeriodizedMap(lambda_, rescale_unit(f_generator_x0(), lambda_)));
    reg_.register_periodized("x1lam", PeriodizedMap(lambda_, rescale_unit(f_generator_x1(), lambda_)));
    reg_.register_periodized("rotlam", PeriodizedMap::translation(lambda_, lambda_ / q(2)));
    reg_.register_periodized("clam", PeriodizedMap::translation(lambda_, lambda_));
    // aliases: the nu-embedded F generators under their plain names
    reg_.register_periodized("x0", nu_embed(f_generator_x0()));
    reg_.register_periodized("x1", nu_embed(f_generator_x1()));
}

bool GLambdaContext::is_lambda_letter(const std::string& id) const {
    return reg_.at(id).scale == lambda_;
}

std::string GLambdaContext::register_auto(const std::string& prefix, const PeriodizedMap& m) {
    long k = counters_[prefix]++;
    std::string id = prefix + "." + std::to_string(k);
    reg_.register_periodized(id, m);
    return id;
}

std::string GLambdaContext::translation_id(const QuadScalar& delta) {
    std::string id = "tr:" + delta.str();
    if (!reg_.has(id)) reg_.register_periodized(id, PeriodizedMap::translation(q(1), delta));
    return id;
}

void GLambdaContext::ensure_word_ids(const Word& w) {
    for (const Letter& l : w.letters()) {
        if (reg_.has(l.id)) continue;
        QuadScalar scale;
        std::string amount;
        if (l.id.rfind("rot:", 0) == 0) {
            scale = q(1);
            amount = l.id.substr(4);
        } else if (l.id.rfind("rotlam:", 0) == 0) {
            scale = lambda_;
            amount = l.id.substr(7);
        } else {
            continue;
        }
        Rational r = Rational::parse(amount);
        reg_.register_circle(l.id, t_generator_rotation(scale, r));
    }
}

Word perturb_word(GLambdaContext& ctx, const Word& w, const QuadScalar& delta) {
    if (delta.is_zero()) return w;
    std::string tid = ctx.translation_id(delta);
    Word out;
    // x . (tr v tr^-1) = (x+delta).v - delta; delta ranges over symmetric probes
    for (const Letter& l : w.letters()) {
        if (ctx.is_lambda_letter(l.id)) {
            out = out * Word::single(tid) * Word(std::vector<Letter>{l}) * Word::single(tid, -1);
        } else {
            out = out * Word(std::vector<Letter>{l});
        }
    }
    return out;
}

ContinuityReport continuity_delta(GLambdaContext& ctx, const Word& w, const QuadScalar& eps,
                                  const std::vector<QuadScalar>& probes) {
    if (eps.sign() <= 0) throw std::domain_error("continuity_delta: eps must be positive");
    ContinuityReport report;
    Interval unit = Interval::closed(q(0), q(1));
    PLSegmentMap base = restrict_word(ctx.registry(), w, unit);
    for (const QuadScalar& d : probes) {
        Word wd = perturb_word(ctx, w, d);
        PLSegmentMap pert = restrict_word(ctx.registry(), wd, unit);
        QuadScalar dist = sup_distance(base, pert, unit).value;
        report.probes.push_back({d, dist, dist < eps});
    }
    // largest probed magnitude such that every probe with |delta| <= it passed
    std::vector<QuadScalar> mags;
    for (const ProbeResult& p : report.probes) mags.push_back(abs(p.delta));
    std::sort(mags.begin(), mags.end());
    mags.erase(std::unique(mags.begin(), mags.end()), mags.end());
    for (const QuadScalar& m : mags) {
        bool all_pass = true;
        for (const ProbeResult& p : report.probes)
            if (abs(p.delta) <= m && !p.pass) { all_pass = false; break; }
        if (all_pass) {
            report.found = true;
            report.delta1 = m;
        }
    }
    return report;
}

SyncResult find_synchronized_interval(const QuadScalar& lambda, const QuadScalar& eps,
                                      const Interval& I) {
    if (eps.sign() <= 0) throw std::domain_error("find_synchronized_interval: eps must be positive");
    if (lambda.is_rational()) throw std::domain_error("find_synchronized_interval: lambda rational");
    SyncResult res;
    Int m_lo = ceil_int(I.lo);
    Int m_hi = floor_int(I.hi) - 1;
    for (Int m = m_lo; m <= m_hi; ++m) {
        if (m == 0) continue;
        QuadScalar mm = from_int(m);
        Int k1 = floor_int(mm / lambda);
        for (const Int& k : {k1, Int(k1 + 1)}) {
            if (k == 0) continue;
            QuadScalar d = abs(mm - from_int(k) * lambda);
            if (d < eps) {
                res.found = true;
                res.m = m;
                res.k = k;
                res.dist = d;
                return res;
            }
        }
    }
    // guarantee bound from consecutive convergent numerators of lambda
    CFExpansion cf = continued_fraction(lambda, 64);
    std::vector<Int> quot = cf.quotients;
    if (cf.period_start) {
        // unfold the period far enough for the bound computation
        std::size_t ps = *cf.period_start;
        while (quot.size() < 64)
            quot.push_back(quot[ps + (quot.size() - ps) % (cf.quotients.size() - ps)]);
    }
    CFExpansion full{quot, std::nullopt};
    auto cs = convergents(full);
    for (std::size_t j = 0; j + 1 < cs.size(); ++j) {
        QuadScalar err = abs(from_int(cs[j].first) - from_int(cs[j].second) * lambda);
        if (err < eps) {
            res.required_n = cs[j].first + cs[j + 1].first + 2;
            return res;
        }
    }
    throw std::domain_error("find_synchronized_interval: convergent search exhausted");
}

RepetWitness repetitiveness_witness(const GLambdaContext& ctx, const Word& w,
                                    const QuadScalar& eps, const Interval& window) {
    if (eps.sign() <= 0) throw std::domain_error("repetitiveness_witness: eps must be positive");
    const QuadScalar& lambda = ctx.lambda();
    RepetWitness res;
    Int m_lo = ceil_int(window.lo);
    Int m_hi = floor_int(window.hi) - 1;
    struct Cand { Int m; QuadScalar dist; };
    std::vector<Cand> cands;
    for (Int m = m_lo; m <= m_hi; ++m) {
        if (m == 0) continue;
        QuadScalar mm = from_int(m);
        Int k1 = floor_int(mm / lambda);
        QuadScalar d1 = abs(mm - from_int(k1) * lambda);
        QuadScalar d2 = abs(mm - from_int(Int(k1 + 1)) * lambda);
        cands.push_back({m, d1 < d2 ? d1 : d2});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.dist < b.dist; });
    Interval unit = Interval::closed(q(0), q(1));
    bool have_best = false;
    for (const Cand& c : cands) {
        Interval target = Interval::closed(from_int(c.m), from_int(Int(c.m + 1)));
        QuadScalar d = word_translated_compare(ctx.registry(), w, unit, target).value;
        ++res.candidates_checked;
        if (!have_best || d < res.best_distance) {
            res.best_distance = d;
            res.best_m = c.m;
            have_best = true;
        }
        if (d < eps) {
            res.found = true;
            res.m = c.m;
            res.distance = d;
            return res;
        }
    }
    return res;
}

namespace {

// image of [lo, hi] under a word (monotone, so endpoints suffice)
std::pair<QuadScalar, QuadScalar> interval_image(const GeneratorRegistry& reg, const Word& w,
                                                 const QuadScalar& lo, const QuadScalar& hi) {
    return {evaluate_word(reg, w, lo), evaluate_word(reg, w, hi)};
}

bool overlaps(const QuadScalar& a, const QuadScalar& b, const QuadScalar& c, const QuadScalar& d) {
    return a < d && c < b;  // open intervals (a,b), (c,d)
}

}  // namespace

LocalizeResult localize_support(GLambdaContext& ctx, const Word& g, const Interval& J,
                                const BumpData& bumps, long window_radius) {
    LocalizeResult res;
    const Interval& I = bumps.I;
    long B = window_radius;
    // precondition: (n+I).g disjoint from every m+I, both translates inside the window
    std::vector<std::pair<QuadScalar, QuadScalar>> images;
    for (long n = -B; n < B; ++n) {
        auto [lo, hi] = interval_image(ctx.registry(), g, I.lo + q(n), I.hi + q(n));
        for (long m = -B; m < B; ++m) {
            if (overlaps(lo, hi, I.lo + q(m), I.hi + q(m))) {
                res.violation = "(I+" + std::to_string(n) + ")·g meets I+" + std::to_string(m);
                return res;
            }
        }
    }
    res.precondition_ok = true;

    std::string id1 = ctx.register_auto("locbump", nu_embed(bumps.f1));
    std::string id2 = ctx.register_auto("locbump", nu_embed(bumps.f2));
    res.h = commutator(Word::single(id1), commutator(Word::single(id2), g.inverse()));

    Interval window = Interval::closed(q(-B), q(B));
    PLSegmentMap r = restrict_word(ctx.registry(), res.h, window);
    res.support = support_in(r, window);
    res.nontrivial = !res.support.empty();
    res.support_ok = true;
    for (const Interval& comp : res.support) {
        Int n = floor_int(comp.lo);
        bool inside = false;
        for (const Int& cand : {Int(n - 1), n, Int(n + 1)}) {
            QuadScalar off = from_int(cand);
            if (comp.lo >= J.lo + off && comp.hi <= J.hi + off) { inside = true; break; }
        }
        if (!inside) {
            res.support_ok = false;
            res.violation = "support component " + comp.str() + " escapes union(n+J)";
            break;
        }
    }
    return res;
}

std::optional<BumpData> choose_localize_bumps(GLambdaContext& ctx, const Word& g,
                                              const Interval& J, long window_radius,
                                              int max_level) {
    // dyadic grid refinement inside J; test the disjointness precondition only
    // (the caller re-runs localize_support for the full conclusion)
    for (int level = 2; level <= max_level; ++level) {
        Rational step(1, 1);
        for (int i = 0; i < level; ++i) step = step * Rational(1, 2);
        // candidate left endpoints on the grid inside J
        Int lo_idx = ceil_int(J.lo / QuadScalar(step));
        Int hi_idx = floor_int(J.hi / QuadScalar(step));
        for (Int j = lo_idx; j + 1 <= hi_idx; ++j) {
            Rational a = Rational(j) * step;
            Rational b = a + step;
            Interval I = Interval::open(QuadScalar(a), QuadScalar(b));
            if (!(I.lo > J.lo) || !(I.hi < J.hi)) continue;
            bool ok = true;
            for (long n = -window_radius; n < window_radius && ok; ++n) {
                auto [ilo, ihi] = interval_image(ctx.registry(), g, I.lo + q(n), I.hi + q(n));
                for (long m = -window_radius; m < window_radius; ++m) {
                    if (overlaps(ilo, ihi, I.lo + q(m), I.hi + q(m))) { ok = false; break; }
                }
            }
            if (!ok) continue;
            // bumps on overlapping thirds so the commutator is nontrivial
            Rational len = b - a;
            PLSegmentMap f1 = f_bump(a, a + len * Rational(3, 4), true);
            PLSegmentMap f2 = f_bump(a + len * Rational(1, 4), b, true);
            PLSegmentMap c = f1.then(f2).then(f1.inverse()).then(f2.inverse());
            if (c.is_identity()) continue;
            return BumpData{I, f1, f2};
        }
    }
    return std::nullopt;
}

StabilityResult certify_stability(const GLambdaContext& ctx, const Word& h, const Interval& I,
                                  const QuadScalar& eps, const Interval& window) {
    (void)eps;  // recorded implicitly via the caller's choice of window
    StabilityResult out;
    PLSegmentMap r = restrict_word(ctx.registry(), h, window);
    // support containment in union(n + I)
    for (const Interval& comp : support_in(r, window)) {
        Int n = floor_int(comp.lo);
        bool inside = false;
        for (const Int& cand : {Int(n - 1), n, Int(n + 1)}) {
            QuadScalar off = from_int(cand);
            if (comp.lo >= I.lo + off && comp.hi <= I.hi + off) { inside = true; break; }
        }
        if (!inside) {
            out.error = "support component " + comp.str() + " not inside union(n+I)";
            return out;
        }
    }

    Int m_lo = ceil_int(window.lo);
    Int m_hi = floor_int(window.hi) - 1;
    std::vector<std::pair<Int, PLSegmentMap>> sections;
    for (Int m = m_lo; m <= m_hi; ++m) {
        PLSegmentMap sec = r.restriction(from_int(m), from_int(Int(m + 1)));
        std::vector<BreakPoint> shifted;
        for (const BreakPoint& p : sec.breakpoints())
            shifted.push_back({p.x - from_int(m), p.y - from_int(m)});
        sections.emplace_back(m, PLSegmentMap(std::move(shifted)));
    }
    if (sections.empty()) {
        out.error = "window contains no unit interval";
        return out;
    }
    // most frequent nontrivial section is the model; all-identity means model = id
    const PLSegmentMap* model = nullptr;
    std::size_t best_count = 0;
    for (const auto& [m, sec] : sections) {
        if (sec.is_identity()) continue;
        std::size_t count = 0;
        for (const auto& [m2, sec2] : sections)
            if (sec2 == sec) ++count;
        if (count > best_count) {
            best_count = count;
            model = &sec;
        }
    }
    PLSegmentMap chosen = model ? *model
                                : PLSegmentMap::identity(Interval::closed(q(0), q(1)));
    std::vector<Int> witnesses;
    for (const auto& [m, sec] : sections)
        if (sec == chosen) witnesses.push_back(m);
    if (witnesses.empty()) {
        out.error = "no recurring unit-interval model found";
        return out;
    }
    // smallest N such that every integer-aligned length-N subinterval of the
    // window contains a witness interval [m, m+1]
    Int N = witnesses.front() - m_lo + 1;
    if (m_hi - witnesses.back() + 1 > N) N = m_hi - witnesses.back() + 1;
    for (std::size_t i = 0; i + 1 < witnesses.size(); ++i) {
        Int gap = witnesses[i + 1] - witnesses[i];
        if (gap > N) N = gap;
    }
    if (from_int(N) > window.length()) {
        out.error = "no N <= window length works";
        return out;
    }
    out.ok = true;
    out.cert = StabilityCertificate{h, I, N.get_si(), chosen, window, witnesses};
    return out;
}

namespace {

Rational pow2_neg(int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * Rational(1, 2);
    return r;
}

// first dyadic of the form j/2^level strictly inside (lo, hi), refining until found
std::optional<Rational> dyadic_inside(const QuadScalar& lo, const QuadScalar& hi, int max_level = 64) {
    for (int level = 0; level <= max_level; ++level) {
        Rational step = pow2_neg(level);
        Int j = floor_int(lo / QuadScalar(step)) + 1;
        Rational cand = Rational(j) * step;
        if (QuadScalar(cand) > lo && QuadScalar(cand) < hi) return cand;
    }
    return std::nullopt;
}

}  // namespace

SurgeryResult build_surgery_chain(GLambdaContext& ctx, const Interval& I, const QuadScalar& eps,
                                  const QuadScalar& x, const QuadScalar& y,
                                  const PLSegmentMap& alpha, unsigned seed) {
    SurgeryResult out;
    if (!(q(0) < x) || !(x < y) || !(y < q(1))) {
        out.error = "need 0 < x < y < 1";
        return out;
    }
    if (eps.sign() <= 0) {
        out.error = "eps must be positive";
        return out;
    }
    if (!I.lo.is_dyadic_rational() || !I.hi.is_dyadic_rational()) {
        out.error = "support interval must have dyadic endpoints";
        return out;
    }
    Rational i_lo = I.lo.rational_part(), i_hi = I.hi.rational_part();
    if (!(Rational(0) < i_lo) || !(i_hi < Rational(1))) {
        out.error = "support interval must have closure inside (0,1)";
        return out;
    }
    // alpha supported in I
    Interval unit = Interval::closed(q(0), q(1));
    auto comps = support_in(alpha, unit);
    if (comps.empty()) {
        out.error = "alpha is the identity: no exponents can move x";
        return out;
    }
    for (const Interval& comp : comps) {
        if (!(comp.lo >= I.lo) || !(comp.hi <= I.hi)) {
            out.error = "Supp(alpha) escapes I";
            return out;
        }
    }
    // driving component and direction
    Interval C = comps.front();
    QuadScalar mid = (C.lo + C.hi) / q(2);
    int dir = (alpha.eval(mid) > mid) ? 1 : -1;

    // dyadic landmarks e0 < e1 strictly inside C
    auto e0_opt = dyadic_inside(C.lo, C.hi);
    if (!e0_opt) { out.error = "no dyadic point inside the driving component"; return out; }
    auto e1_opt = dyadic_inside(QuadScalar(*e0_opt), C.hi);
    if (!e1_opt) { out.error = "no second dyadic point inside the driving component"; return out; }
    Rational e0 = *e0_opt, e1 = *e1_opt;

    // grid unit u: 3u < eps, 2u < x, 3u < 1 - y, and u below the dyadic grid of x if needed
    Rational u(1, 4);
    auto fits = [&](const Rational& uu) {
        QuadScalar s3 = QuadScalar(uu * Rational(3));
        return s3 < eps && QuadScalar(uu * Rational(2)) < x && s3 < q(1) - y;
    };
    int tries = 0;
    while (!fits(u)) {
        u = u * Rational(1, 2);
        if (++tries > 64) { out.error = "infeasible geometry: grid below 2^-66"; return out; }
    }
    QuadScalar uq(u);

    // chain of intervals J_i = (a_i, a_i + 3u), a_{i+1} = a_i + 2u
    Int a1_idx = floor_int(x / uq) - 1;
    Rational a1 = Rational(a1_idx) * u;
    std::vector<Rational> starts{a1};
    // advance until some a_n lies in (y - 5u/2, y)
    while (true) {
        Rational a = starts.back();
        if (QuadScalar(a) < y && y < QuadScalar(a + u * Rational(5, 2))) break;
        starts.push_back(a + u * Rational(2));
        if (starts.size() > 100000) { out.error = "infeasible geometry: chain too long"; return out; }
    }
    std::size_t n = starts.size();

    out.chain.eps = eps;
    out.chain.x = x;
    out.chain.y = y;

    // conjugators: I -> J_i with E = [e0, e1] steered onto T_i
    std::string alpha_id = ctx.register_auto("surgery.alpha", nu_embed(alpha));
    out.chain.alpha_id = alpha_id;
    Rational quarter_u = u * Rational(1, 4);
    Rational t_hi_off = u * Rational(5, 2);
    for (std::size_t i = 0; i < n; ++i) {
        Rational a = starts[i];
        Rational t0 = (i == 0) ? a1 + u * Rational(1, 2) : a + quarter_u;
        Rational t1 = a + t_hi_off;
        PLSegmentMap gi = f_through_landmarks({{Rational(0), Rational(0)},
                                               {i_lo, a},
                                               {e0, t0},
                                               {e1, t1},
                                               {i_hi, a + u * Rational(3)},
                                               {Rational(1), Rational(1)}});
        out.chain.conjugators.push_back(gi);
        out.chain.conjugator_ids.push_back(ctx.register_auto("surgery.g", nu_embed(gi)));
        out.chain.intervals.push_back(Interval::open(QuadScalar(a), QuadScalar(a + u * Rational(3))));
    }

    // exponents by running the dynamics exactly
    PLSegmentMap alpha_step = dir > 0 ? alpha : alpha.inverse();
    QuadScalar z = x;
    for (std::size_t i = 0; i < n; ++i) {
        const PLSegmentMap& gi = out.chain.conjugators[i];
        QuadScalar target = (i + 1 < n) ? QuadScalar(starts[i + 1] + quarter_u) : y;
        QuadScalar uu = gi.eval_inverse(z);
        long steps = 0;
        while (true) {
            uu = alpha_step.eval(uu);
            ++steps;
            if (gi.eval(uu) > target) break;
            if (steps > 100000) { out.error = "exponent search did not terminate"; return out; }
        }
        out.chain.exponents.push_back(dir > 0 ? steps : -steps);
        z = gi.eval(uu);
    }
    // assemble h and verify the word's action agrees with the trajectory
    Word h;
    for (std::size_t i = 0; i < n; ++i) {
        Word factor = conjugate(Word::single(alpha_id, out.chain.exponents[i]),
                                Word::single(out.chain.conjugator_ids[i]));
        h = h * factor;
    }
    out.h = h;
    out.x_image = evaluate_word(ctx.registry(), h, x);
    if (out.x_image != z || !(out.x_image > y)) {
        out.error = "trajectory verification failed";
        return out;
    }

    // substitution property on sampled bumps, exact
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> third(1, 6);
    std::uniform_int_distribution<int> expo(-3, 3);
    for (int bi = 0; bi < 5; ++bi) {
        Rational len = i_hi - i_lo;
        Rational blo = i_lo + len * Rational(third(rng), 16);
        Rational bhi = i_hi - len * Rational(third(rng), 16);
        if (!(blo < bhi)) { --bi; continue; }
        PLSegmentMap beta = f_bump(blo, bhi, bi % 2 == 0);
        auto run_tuple = [&](const std::vector<long>& ls) {
            PLSegmentMap acc = PLSegmentMap::identity(unit);
            PLSegmentMap beta_inv = beta.inverse();
            for (std::size_t i = 0; i < n; ++i) {
                if (ls[i] == 0) continue;
                const PLSegmentMap& gi = out.chain.conjugators[i];
                PLSegmentMap step = gi.inverse();
                const PLSegmentMap& b = ls[i] > 0 ? beta : beta_inv;
                for (long r = 0; r < std::abs(ls[i]); ++r) step = step.then(b);
                step = step.then(gi);
                acc = acc.then(step);
            }
            auto chk = is_eps_advancing(acc, unit, eps);
            out.substitution_checks.push_back({
                "bump(" + blo.str() + "," + bhi.str() + ")", ls, chk.advancing,
                chk.min_displacement});
            return chk.advancing;
        };
        bool okay = run_tuple(out.chain.exponents);
        for (int t = 0; t < 10 && okay; ++t) {
            std::vector<long> ls(n, 0);
            for (std::size_t i = 0; i < n; ++i) ls[i] = expo(rng);
            okay = run_tuple(ls);
        }
        if (!okay) {
            out.error = "substitution bump failed eps-advancing check";
            return out;
        }
    }
    out.ok = true;
    return out;
}

ZetaResult build_fixing_advancer(GLambdaContext& ctx, const Word& h,
                                 const StabilityCertificate& cert, const Interval& window) {
    ZetaResult out;
    // h = identity: zeta2 = identity fixes Z but cannot advance; report, not throw
    if (cert.model.is_identity()) {
        out.zeta1 = Word();
        out.zeta2 = Word();
        Int j_lo = ceil_int(window.lo), j_hi = floor_int(window.hi);
        for (Int j = j_lo; j <= j_hi; ++j)
            out.fixes.push_back({from_int(j), from_int(j), from_int(j), true});
        out.error = "identity element: advancing clause fails";
        return out;
    }
    // the model interval must realize [0,1]
    Word base = h;
    bool zero_witness = false;
    for (const Int& m : cert.witnesses) if (m == 0) zero_witness = true;
    if (!zero_witness) {
        if (cert.witnesses.empty()) { out.error = "certificate has no witnesses"; return out; }
        Int m = cert.witnesses.front();
        base = conjugate(h, Word::single("c1", m.get_si()));
    }
    QuadScalar eps = q(1) / from_int(Int(8 * cert.N));
    out.surgery = build_surgery_chain(ctx, cert.I, eps, q(1, 8), q(3, 4), cert.model);
    if (!out.surgery.ok) {
        out.error = "surgery chain failed: " + out.surgery.error;
        return out;
    }
    const SurgeryChain& ch = out.surgery.chain;
    Word zeta1;
    for (std::size_t i = 0; i < ch.conjugator_ids.size(); ++i) {
        zeta1 = zeta1 * conjugate(base.pow(ch.exponents[i]), Word::single(ch.conjugator_ids[i]));
    }
    out.zeta1 = zeta1;
    Word zeta2;
    for (long k = 0; k <= cert.N; ++k)
        zeta2 = zeta2 * conjugate(zeta1, Word::single("c1", k));
    out.zeta2 = zeta2;

    bool all_ok = true;
    Int j_lo = ceil_int(window.lo), j_hi = floor_int(window.hi);
    for (Int j = j_lo; j <= j_hi; ++j) {
        QuadScalar img = evaluate_word(ctx.registry(), zeta2, from_int(j));
        bool pass = img == from_int(j);
        out.fixes.push_back({from_int(j), img, from_int(j), pass});
        all_ok = all_ok && pass;
    }
    for (Int nn = j_lo; nn < j_hi; ++nn) {
        QuadScalar pt = q(1, 4) + from_int(nn);
        QuadScalar req = q(1, 2) + from_int(nn);
        if (pt < window.lo || req > window.hi) continue;
        QuadScalar img = evaluate_word(ctx.registry(), zeta2, pt);
        bool pass = img > req;
        out.advances.push_back({pt, img, req, pass});
        all_ok = all_ok && pass;
    }
    out.ok = all_ok;
    if (!all_ok) out.error = "a verification clause failed; see point checks";
    return out;
}

GadgetCheck gadget_identity_check(const GLambdaContext& ctx, const Word& h1, const Word& h2,
                                  const Word& g, const Interval& I, const Interval& window) {
    GadgetCheck out;
    // supports of h1, h2 inside X = union(n+I), and X.g disjoint from X, on the window
    PLSegmentMap r1 = restrict_word(ctx.registry(), h1, window);
    PLSegmentMap r2 = restrict_word(ctx.registry(), h2, window);
    for (const PLSegmentMap* r : {&r1, &r2}) {
        for (const Interval& comp : support_in(*r, window)) {
            Int n = floor_int(comp.lo);
            bool inside = false;
            for (const Int& cand : {Int(n - 1), n, Int(n + 1)}) {
                QuadScalar off = from_int(cand);
                if (comp.lo >= I.lo + off && comp.hi <= I.hi + off) { inside = true; break; }
            }
            if (!inside) {
                out.violation = "bump support " + comp.str() + " escapes union(n+I)";
                return out;
            }
        }
    }
    Int n_lo = ceil_int(window.lo), n_hi = floor_int(window.hi) - 1;
    for (Int n = n_lo; n <= n_hi; ++n) {
        auto [ilo, ihi] = interval_image(ctx.registry(), g, I.lo + from_int(n), I.hi + from_int(n));
        for (Int m = n_lo; m <= n_hi; ++m) {
            if (overlaps(ilo, ihi, I.lo + from_int(m), I.hi + from_int(m))) {
                out.violation = "X·g meets X at translates " + n.get_str() + ", " + m.get_str();
                return out;
            }
        }
    }
    out.precondition_ok = true;
    Word lhs = commutator(h1, commutator(h2, g.inverse()));
    Word rhs = commutator(h1, h2);
    out.identity_equal =
        restrict_word(ctx.registry(), lhs, window) == restrict_word(ctx.registry(), rhs, window);
    return out;
}

}  // namespace homeoforge
