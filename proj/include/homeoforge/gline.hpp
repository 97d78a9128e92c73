#pragma once

#include "homeoforge/thompson.hpp"
#include "homeoforge/word.hpp"

namespace homeoforge {

/*
 * Working context for G_lambda = <Tbar, Tbar_lambda>: the scale lambda and a
 * registry carrying the standard generators at both scales
 *   x0bar x1bar rot c1     (period 1)
 *   x0lam x1lam rotlam clam (period lambda)
 * plus any elements registered later by the constructive operations.
 */
class GLambdaContext {
public:
    explicit GLambdaContext(QuadScalar lambda = QuadScalar(Rational(1), Rational(1), 2));

    const QuadScalar& lambda() const { return lambda_; }
    GeneratorRegistry& registry() { return reg_; }
    const GeneratorRegistry& registry() const { return reg_; }

    bool is_lambda_letter(const std::string& id) const;
    /// Register under a deterministic fresh id "<prefix>.<k>"; returns the id.
    std::string register_auto(const std::string& prefix, const PeriodizedMap& m);
    /// Translation by delta (any period-compatible letter); id reused if present.
    std::string translation_id(const QuadScalar& delta);
    /// Register parametric ids appearing in w: "rot:p/q" and "rotlam:p/q"
    /// (dyadic rotations at either scale). Unknown fixed ids still error later.
    void ensure_word_ids(const Word& w);

private:
    QuadScalar lambda_;
    GeneratorRegistry reg_;
    std::map<std::string, long> counters_;
};

/// Replace every Tbar_lambda letter v by f_delta^-1 v f_delta, f_delta = t -> t+delta.
Word perturb_word(GLambdaContext& ctx, const Word& w, const QuadScalar& delta);

struct ProbeResult {
    QuadScalar delta;
    QuadScalar distance;
    bool pass;
};
struct ContinuityReport {
    bool found = false;
    QuadScalar delta1;  // largest probed magnitude with all probes <= it passing
    std::vector<ProbeResult> probes;
};
/// Certify perturbation continuity on a finite probe set: every probe's
/// d(w, w_delta)([0,1]) is computed exactly.
ContinuityReport continuity_delta(GLambdaContext& ctx, const Word& w, const QuadScalar& eps,
                                  const std::vector<QuadScalar>& probes);

struct SyncResult {
    bool found = false;
    Int m, k;
    QuadScalar dist;
    Int required_n;  // CF-derived guarantee bound, reported when not found
};
/// Integers m, k with [m, m+1] in I and |m - k*lambda| < eps (m != 0), found by
/// an exact scan; the continued-fraction bound is reported when the scan fails.
SyncResult find_synchronized_interval(const QuadScalar& lambda, const QuadScalar& eps,
                                      const Interval& I);

struct RepetWitness {
    bool found = false;
    Int m;
    QuadScalar distance;
    Int best_m;            // closest miss when not found
    QuadScalar best_distance;
    long candidates_checked = 0;
};
/// Witness m with d_w([0,1],[m,m+1]) < eps in the window; candidates ordered by
/// dist(m, lambda Z), every candidate verified exactly.
RepetWitness repetitiveness_witness(const GLambdaContext& ctx, const Word& w,
                                    const QuadScalar& eps, const Interval& window);

struct BumpData {
    Interval I;         // chosen subinterval of J
    PLSegmentMap f1, f2;  // F elements supported in I
};

struct LocalizeResult {
    bool precondition_ok = false;
    std::string violation;
    Word h;
    bool support_ok = false;
    bool nontrivial = false;
    std::vector<Interval> support;
};
/// h = [nu(f1), [nu(f2), g^-1]], with the disjointness precondition
/// (n+I)g disjoint from every m+I checked exactly on [-B, B].
LocalizeResult localize_support(GLambdaContext& ctx, const Word& g, const Interval& J,
                                const BumpData& bumps, long window_radius);

/// Search a bump datum for localize_support: a dyadic I inside J small enough
/// that the precondition and the support conclusion verify on the window.
std::optional<BumpData> choose_localize_bumps(GLambdaContext& ctx, const Word& g,
                                              const Interval& J, long window_radius,
                                              int max_level = 16);

struct StabilityCertificate {
    Word element;
    Interval I;
    long N = 0;
    // nu-model restricted to [0,1]
    PLSegmentMap model = PLSegmentMap::identity(Interval::closed(QuadScalar(0), QuadScalar(1)));
    Interval window;
    std::vector<Int> witnesses;  // all m with element|[m,m+1] = model (translated)
};
struct StabilityResult {
    bool ok = false;
    std::string error;
    StabilityCertificate cert;
};
/// Find N and the recurring unit-interval model of h on the window, exactly.
StabilityResult certify_stability(const GLambdaContext& ctx, const Word& h, const Interval& I,
                                  const QuadScalar& eps, const Interval& window);

struct SurgeryChain {
    std::vector<std::string> conjugator_ids;  // nu-embedded F elements in the registry
    std::vector<PLSegmentMap> conjugators;
    std::vector<long> exponents;
    std::vector<Interval> intervals;  // J_i = I . g_i
    QuadScalar eps, x, y;
    std::string alpha_id;
};
struct SubstitutionCheck {
    std::string bump_desc;
    std::vector<long> exponents;
    bool advancing;
    QuadScalar min_displacement;
};
struct SurgeryResult {
    bool ok = false;
    std::string error;
    SurgeryChain chain;
    Word h;
    QuadScalar x_image;
    std::vector<SubstitutionCheck> substitution_checks;
};
/// The surgery chain: overlapping dyadic intervals shorter than eps from x to
/// y, conjugators mapping I onto them, and exponents moving x past y; the
/// eps-advancing substitution property is verified for sampled bumps.
SurgeryResult build_surgery_chain(GLambdaContext& ctx, const Interval& I, const QuadScalar& eps,
                                  const QuadScalar& x, const QuadScalar& y,
                                  const PLSegmentMap& alpha, unsigned seed = 1);

struct PointCheck {
    QuadScalar point, image, required;
    bool pass;
};
struct ZetaResult {
    bool ok = false;
    std::string error;
    Word zeta1, zeta2;
    SurgeryResult surgery;
    std::vector<PointCheck> fixes;      // integer fixing clause
    std::vector<PointCheck> advances;   // (1/4+n) . zeta2 > 1/2+n clause
};
/// The fixing-advancer pipeline: zeta1 from the surgery chain applied to h, zeta2 the
/// product of integer-translation conjugates over 0 <= k <= N; both clauses
/// verified exactly on the window.
ZetaResult build_fixing_advancer(GLambdaContext& ctx, const Word& h,
                                 const StabilityCertificate& cert, const Interval& window);

struct GadgetCheck {
    bool precondition_ok = false;
    std::string violation;
    bool identity_equal = false;  // [h1,[h2,g^-1]] == [h1,h2] on the window
};
/// The commutator gadget: whenever Supp(h1), Supp(h2) lie in X = union(n+I)
/// and X.g is disjoint from X on the window, [h1,[h2,g^-1]] = [h1,h2] there.
GadgetCheck gadget_identity_check(const GLambdaContext& ctx, const Word& h1, const Word& h2,
                                  const Word& g, const Interval& I, const Interval& window);

}  // namespace homeoforge
