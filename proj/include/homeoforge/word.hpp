#pragma once

#include "homeoforge/plmap.hpp"

#include <map>
#include <string>

namespace homeoforge {

struct Letter {
    std::string id;
    long exp;  // nonzero
    bool operator==(const Letter& o) const { return id == o.id && exp == o.exp; }
};

/*
 * Freely reduced group word over a generator registry. The empty word is the
 * identity. Free reduction (merging adjacent letters with the same id) is the
 * only automatic simplification.
 */
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    static Word single(std::string id, long exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    /// Sum of |exp| over letters.
    long length() const;

    Word inverse() const;
    Word operator*(const Word& o) const;  // concatenate + freely reduce
    Word pow(long n) const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return !(*this == o); }

    /// Whitespace-separated `id^exp` tokens; exp omitted when 1.
    std::string str() const;
    static Word parse(std::string_view text);

private:
    std::vector<Letter> letters_;
};

inline Word commutator(const Word& a, const Word& b) {
    return a * b * a.inverse() * b.inverse();
}
inline Word conjugate(const Word& w, const Word& g) {
    return g.inverse() * w * g;
}

enum class GenKind { Periodized, Circle };

struct GenEntry {
    GenKind kind;
    PeriodizedMap map;          // the map itself, or the canonical lift for circle kind
    PeriodizedMap inverse_map;  // precomputed so concurrent reads never mutate
    QuadScalar scale;           // period (or circumference); tags the subgroup
};

/*
 * Append-only table id -> validated map. freeze() forbids further registration;
 * a frozen registry is safe to share across threads.
 */
class GeneratorRegistry {
public:
    void register_periodized(const std::string& id, const PeriodizedMap& m);
    void register_circle(const std::string& id, const CircleMap& m);
    bool has(const std::string& id) const { return entries_.count(id) != 0; }
    const GenEntry& at(const std::string& id) const;
    void freeze() { frozen_ = true; }
    std::vector<std::string> ids() const;

private:
    std::map<std::string, GenEntry> entries_;
    bool frozen_ = false;
};

/// Right action: x . w, applying letters left to right. Exact.
QuadScalar evaluate_word(const GeneratorRegistry& reg, const Word& w, const QuadScalar& x);

/// The exact finite PL map equal to w on the compact interval I, built by
/// composing factor restrictions while tracking the moving image interval.
PLSegmentMap restrict_word(const GeneratorRegistry& reg, const Word& w, const Interval& I);

/// True iff w acts as the identity on I, exactly.
bool word_identity_on(const GeneratorRegistry& reg, const Word& w, const Interval& I);

/// Product over letters of the factor's worst slope (exponent multiplicity):
/// an upper bound for the Lipschitz constant of w.
QuadScalar lipschitz_bound(const GeneratorRegistry& reg, const Word& w);

/// d_w(I, J) for a word: restrict to both intervals and compare transported.
SupDistance word_translated_compare(const GeneratorRegistry& reg, const Word& w,
                                    const Interval& I, const Interval& J);

}  // namespace homeoforge
