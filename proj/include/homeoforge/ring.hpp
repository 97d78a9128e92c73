#pragma once

#include "homeoforge/thompson.hpp"
#include "homeoforge/word.hpp"

namespace homeoforge {

/*
 * Open arc (lo, hi) mod c with lo in [0, c), lo <= hi <= lo + c.
 * hi == lo encodes the empty arc. Membership and containment are exact.
 */
struct CircleArc {
    QuadScalar lo, hi, circ;

    static CircleArc make(const QuadScalar& lo, const QuadScalar& hi, const QuadScalar& circ);
    static CircleArc empty(const QuadScalar& circ) { return CircleArc{QuadScalar(0), QuadScalar(0), circ}; }

    QuadScalar length() const { return hi - lo; }
    bool is_empty() const { return lo == hi; }
    bool wraps() const { return hi > circ; }
    bool contains_point(const QuadScalar& x) const;
    bool contains_arc(const CircleArc& other) const;
    bool meets(const CircleArc& other) const;
    /// Connected components of the intersection (0, 1 or 2 arcs).
    std::vector<CircleArc> intersection(const CircleArc& other) const;
    bool operator==(const CircleArc& o) const;
    std::string str() const;
};

/// Image of an arc under an orientation-preserving circle map (exact endpoints).
CircleArc arc_image(const CircleArc& a, const CircleMap& f);
/// Image of an arc under a word over a circle-map registry.
CircleArc arc_image(const CircleArc& a, const GeneratorRegistry& reg, const Word& w);

struct RingConfig {
    int n = 0;
    QuadScalar circumference;
    std::vector<CircleArc> intervals;   // J_1..J_n, index 0 = J_1
    std::vector<CircleMap> generators;  // f_1..f_n
    std::vector<QuadScalar> marked;     // x_1..x_n
    GeneratorRegistry reg;              // ids "f1".."fn"

    const CircleArc& J(int i) const;       // 1-based, mod n
    const CircleMap& f(int i) const;
    const QuadScalar& x(int i) const;
    int wrap_index(int i) const;            // into [1, n]
    std::string gen_id(int i) const;
};

/// Build the registry entries "f1".."fn" from intervals/generators.
void finalize_ring(RingConfig& config);

/*
 * Dyadic n-ring with hard-push generators: grid points near i/n, intervals
 * J_i = (p_{i-1}, p_{i+1}), each f_i pushing J_i's content to within
 * margin*|J_i| of its supremum.
 */
RingConfig synthesize_ring(int n, const Rational& margin = Rational(1, 8));

struct StarViolation {
    enum Kind { Cover, Adjacency, SupportMismatch, MarkedPoint, OrbitClause } kind;
    int i = 0, j = 0, l = 0;
    std::string detail;
};
struct StarCertificate {
    // orbit[i-1][t] = (point after applying f_i..f_{i+t}, index of containing J)
    std::vector<std::vector<std::pair<QuadScalar, int>>> orbits;
};
using StarCheck = std::variant<StarCertificate, StarViolation>;
StarCheck verify_star(const RingConfig& config);
inline bool star_ok(const StarCheck& c) { return std::holds_alternative<StarCertificate>(c); }

struct ProbeReport {
    long words_checked = 0;
    std::vector<Word> trivial_words;  // reduced words acting as the identity on all test points
};
/// Every freely reduced word of length <= max_len moves some test point.
ProbeReport free_group_probe(const RingConfig& config, int max_len,
                             const std::vector<QuadScalar>& test_points);
std::vector<QuadScalar> default_probe_points(const RingConfig& config);

struct RouteResult {
    bool ok = false;
    std::string error;
    Word word;
    std::vector<CircleArc> trace;  // arc after each letter
};
/// Constructive routing: a word g with I.g inside J, every step exact.
/// theta_cap > 0 caps the working arc length (used to keep intermediates small).
RouteResult find_contracting_word(const RingConfig& config, const CircleArc& I,
                                  const CircleArc& J, int depth = 64,
                                  const QuadScalar& theta_cap = QuadScalar(0));

struct SmallFamily {
    // L[i-1][j-1]; container[i-1][j-1] = k with L_{i,j} inside J_k
    std::vector<std::vector<CircleArc>> L;
    std::vector<std::vector<int>> container;
    QuadScalar epsilon_small;  // arcs shorter than this are always I-small
};
SmallFamily build_small_family(const RingConfig& config);

/// Smallness plus the two exclusion clauses against the family, exact.
bool is_I_small(const CircleArc& a, const SmallFamily& family, const RingConfig& config,
                std::string* why = nullptr);

struct NuFamily {
    std::vector<std::vector<Word>> lambda_word;  // J_i . lambda_{i,j} inside L_{i,j}
    std::vector<std::vector<Word>> nu_word;      // nu_{i,j} = lambda^-1 f_i lambda
    std::vector<std::vector<CircleArc>> support; // exact support enclosure J_i . lambda
    bool verified = false;
    std::string error;
};
NuFamily build_nu(const RingConfig& config, const SmallFamily& family, int depth = 64);

struct XSet {
    // x_{i,j} = nu_{i,j}^-1 f_i, indexed [i-1][j-1]
    std::vector<std::vector<Word>> words;
    bool identities_verified = false;  // the displayed factorizations, as exact map equality
    std::string error;
};
XSet generating_set_X(const RingConfig& config, const SmallFamily& family, const NuFamily& nu);

/// abelianization probe: exponent sum per base generator
std::vector<long> exponent_sums(const RingConfig& config, const Word& w);

struct SpecialElement {
    Word f;           // base-generator word
    int i = 0, j = 0; // paired nu indices
    CircleArc supp;   // exact enclosure of Supp(f)
    Word xword;       // f nu_{i,j}^-1 as a word in X letters "x<i>,<j>"
};

/// Conjugation step of the special-element calculus; k = j on disjoint
/// supports, k = l (the letter's index) otherwise; invariants re-verified.
struct SpecialStepResult {
    bool ok = false;
    std::string error;
    SpecialElement element;
};
SpecialStepResult special_step(const RingConfig& config, const SmallFamily& family,
                               const NuFamily& nu, const SpecialElement& s,
                               int l, int sign);

/// X letter id "x<i>.<j>"
std::string x_letter_id(int i, int j);
/// Substitute X letters by their base-generator words.
Word expand_x_word(const XSet& xs, const Word& xword);

struct RealizeResult {
    bool ok = false;
    std::string error;       // structured routing-failure report when !ok
    int failed_step = -1;
    Word gamma;              // base-generator word with gamma|J = f_i^s|J
    Word gamma_x;            // the same element as a word in X letters
    std::vector<CircleArc> small_trace;  // I-small intermediate enclosures
};
RealizeResult realize_generator_on(const RingConfig& config, const SmallFamily& family,
                                   const NuFamily& nu, const XSet& xs, const CircleArc& J,
                                   int i, int sign, int l_cap = 64, int depth = 64);

struct WindingReport {
    Int winding;                    // net circumference multiple of the lifted orbit
    std::vector<int> reduced;       // reduced word as signed generator indices
    std::vector<QuadScalar> orbit;  // circle orbit of the reduced word
    bool endpoint_hit = false;      // some orbit point (t >= 1) is an interval endpoint
    int hit_step = -1;
};
WindingReport lift_winding_check(const RingConfig& config, const std::vector<int>& letters);
WindingReport lift_winding_check(const RingConfig& config, const Word& w);

struct TorusPoint {
    QuadScalar x, y;
    bool operator==(const TorusPoint& o) const { return x == o.x && y == o.y; }
};
/// eta_1: (x, y) -> (x + (y.g - y)/lambda, y.g); eta_2: (x, y) -> (x.g, y + lambda(x.g - x)).
/// The leaf invariant y - lambda x is asserted exactly on every call.
TorusPoint torus_action(const GeneratorRegistry& reg, const QuadScalar& lambda,
                        const Word& g, int which, const TorusPoint& p);

struct TranslationEstimate {
    QuadScalar estimate;  // (0 . w^k)/k
    QuadScalar lower, upper;  // estimate -/+ 1/k (circumference-normalized)
};
TranslationEstimate translation_number_estimate(const GeneratorRegistry& reg, const Word& w,
                                                long k, const QuadScalar& circumference);

}  // namespace homeoforge
