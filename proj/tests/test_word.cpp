#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <homeoforge/thompson.hpp>
#include <homeoforge/word.hpp>

#include <random>

using namespace homeoforge;

namespace {

QuadScalar q(long n, long d = 1) { return QuadScalar(Rational(n, d)); }
QuadScalar lam() { return QuadScalar(Rational(1), Rational(1), 2); }

// registry with the standard G_lambda generators
GeneratorRegistry standard_registry() {
    GeneratorRegistry reg;
    reg.register_periodized("x0bar", nu_embed(f_generator_x0()));
    reg.register_periodized("x1bar", nu_embed(f_generator_x1()));
    reg.register_periodized("rot", PeriodizedMap::translation(q(1), q(1, 2)));
    reg.register_periodized("c1", PeriodizedMap::translation(q(1), q(1)));
    reg.register_periodized("x0lam", PeriodizedMap(lam(), rescale_unit(f_generator_x0(), lam())));
    reg.register_periodized("x1lam", PeriodizedMap(lam(), rescale_unit(f_generator_x1(), lam())));
    reg.register_periodized("rotlam", PeriodizedMap::translation(lam(), lam() / q(2)));
    reg.register_periodized("clam", PeriodizedMap::translation(lam(), lam()));
    return reg;
}

Word random_word(std::mt19937_64& rng, int len) {
    static const char* ids[] = {"x0bar", "x1bar", "rot", "c1", "x0lam", "x1lam", "rotlam", "clam"};
    std::uniform_int_distribution<int> pick(0, 7);
    std::uniform_int_distribution<int> exp(1, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    Word w;
    for (int i = 0; i < len; ++i)
        w = w * Word::single(ids[pick(rng)], (sign(rng) ? 1 : -1) * exp(rng));
    return w;
}

}  // namespace

TEST_CASE("free reduction and word algebra") {
    Word w = Word::single("a") * Word::single("a") * Word::single("a", -1);
    CHECK(w == Word::single("a"));
    CHECK((Word::single("a", 2) * Word::single("a", -2)).empty());
    Word ab = Word::parse("a b^-1");
    CHECK(ab.inverse() == Word::parse("b a^-1"));
    CHECK(commutator(ab, ab).empty());
    CHECK(conjugate(ab, Word()) == ab);
    CHECK(Word::parse("x0bar^2 rotlam^-1").str() == "x0bar^2 rotlam^-1");
    CHECK(Word::parse(ab.str()) == ab);
    CHECK_THROWS_AS(Word::parse("a^x"), std::invalid_argument);
}

TEST_CASE("registry rejects duplicates and unknown ids") {
    GeneratorRegistry reg = standard_registry();
    CHECK_THROWS_AS(reg.register_periodized("x0bar", PeriodizedMap::identity(q(1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_word(reg, Word::single("nope"), q(0)), std::invalid_argument);
    reg.freeze();
    CHECK_THROWS_AS(reg.register_periodized("zz", PeriodizedMap::identity(q(1))), std::logic_error);
}

TEST_CASE("evaluate_word basics") {
    GeneratorRegistry reg = standard_registry();
    CHECK(evaluate_word(reg, Word(), q(7, 3)) == q(7, 3));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        Word g = random_word(rng, 3);
        Word gg = g * g.inverse();
        CHECK(gg.empty());
        QuadScalar x = q(i, 7);
        CHECK(evaluate_word(reg, g * g.inverse(), x) == x);
    }
    // pointwise oracle for a commutator: apply the two evaluations by hand
    Word w = commutator(Word::single("x0bar"), Word::single("clam"));
    QuadScalar by_hand = q(0);
    for (const Letter& l : w.letters()) {
        const GenEntry& e = reg.at(l.id);
        const PeriodizedMap& m = l.exp > 0 ? e.map : e.inverse_map;
        for (long r = 0; r < (l.exp > 0 ? l.exp : -l.exp); ++r) by_hand = m.eval(by_hand);
    }
    CHECK(evaluate_word(reg, w, q(0)) == by_hand);
    CHECK(by_hand != q(0));  // lambda-translation does not normalize x0bar's support
}

TEST_CASE("restrict_word agrees with evaluation and is bounded") {
    GeneratorRegistry reg = standard_registry();
    Interval I = Interval::closed(q(-2), q(2));
    CHECK(restrict_word(reg, Word(), I).is_identity());

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 12; ++trial) {
        Word w = random_word(rng, 4);
        PLSegmentMap r = restrict_word(reg, w, I);
        for (int i = 0; i <= 50; ++i) {
            QuadScalar x = q(-2) + q(4) * q(i, 50);
            CHECK(r.eval(x) == evaluate_word(reg, w, x));
        }
        // inverse word on the image interval undoes the restriction
        PLSegmentMap inv = restrict_word(
            reg, w.inverse(), Interval::closed(r.range_lo(), r.range_hi()));
        CHECK(r.then(inv).is_identity());
        // resource sanity: breakpoints bounded by per-period counts times span
        long budget = 2;
        for (const Letter& l : w.letters()) {
            const GenEntry& e = reg.at(l.id);
            long per = static_cast<long>(e.map.fundamental().breakpoints().size());
            long reps = l.exp > 0 ? l.exp : -l.exp;
            budget += reps * per * 8;  // 4-unit window spans at most ~8 periods of either scale
        }
        CHECK(static_cast<long>(r.breakpoints().size()) <= budget);
    }
}

TEST_CASE("free reduction never changes evaluation") {
    GeneratorRegistry reg = standard_registry();
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        Word w = random_word(rng, 3);
        Word padded = w * Word::single("x0bar") * Word::single("x0bar", -1);
        CHECK(padded == w);
        QuadScalar x = q(trial, 3);
        CHECK(evaluate_word(reg, padded, x) == evaluate_word(reg, w, x));
    }
}

TEST_CASE("word_identity_on") {
    GeneratorRegistry reg = standard_registry();
    Interval I = Interval::closed(q(-2), q(2));
    // commutator of words with disjoint supports: nu-embedded bumps
    GeneratorRegistry reg2 = standard_registry();
    reg2.register_periodized("bumpL", nu_embed(f_bump(Rational(1, 8), Rational(1, 4), true)));
    reg2.register_periodized("bumpR", nu_embed(f_bump(Rational(1, 2), Rational(3, 4), true)));
    CHECK(word_identity_on(reg2, commutator(Word::single("bumpL"), Word::single("bumpR")), I));
    CHECK_FALSE(word_identity_on(reg2, Word::single("bumpL"), I));
    CHECK(word_identity_on(reg, Word::parse("c1 c1^-1"), I));
}

TEST_CASE("lipschitz bound") {
    GeneratorRegistry reg = standard_registry();
    CHECK(lipschitz_bound(reg, Word()) == q(1));
    CHECK(lipschitz_bound(reg, Word::single("x0bar")) == q(2));
    CHECK(lipschitz_bound(reg, Word::single("x0bar", -1)) == q(2));  // inverse max slope
    CHECK(lipschitz_bound(reg, Word::single("rot")) == q(1));

    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> num(-300, 300);
    for (int trial = 0; trial < 5; ++trial) {
        Word w = random_word(rng, 4);
        QuadScalar bound = lipschitz_bound(reg, w);
        for (int i = 0; i < 100; ++i) {
            QuadScalar x = q(num(rng), 100);
            QuadScalar y = q(num(rng), 100);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            QuadScalar ratio = (evaluate_word(reg, w, y) - evaluate_word(reg, w, x)) / (y - x);
            CHECK(ratio <= bound);
        }
    }
}

TEST_CASE("word_translated_compare is zero for period-1 words on integer shifts") {
    GeneratorRegistry reg = standard_registry();
    Word w = Word::parse("x0bar x1bar^-1 rot");
    auto d = word_translated_compare(reg, w, Interval::closed(q(0), q(1)),
                                     Interval::closed(q(5), q(6)));
    CHECK(d.value == q(0));
    // genuinely mixed scales: nonzero between integer-shifted unit windows
    Word mixed = Word::parse("x0bar x0lam");
    auto d2 = word_translated_compare(reg, mixed, Interval::closed(q(0), q(1)),
                                      Interval::closed(q(1), q(2)));
    CHECK(d2.value > q(0));
}
