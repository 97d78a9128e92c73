#include "homeoforge/word.hpp"

#include <sstream>

namespace homeoforge {

namespace {

std::vector<Letter> reduce(std::vector<Letter> in) {
    std::vector<Letter> out;
    for (Letter& l : in) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().id == l.id) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(std::move(l));
        }
    }
    return out;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(reduce(std::move(letters))) {}

Word Word::single(std::string id, long exp) {
    if (exp == 0) return Word();
    return Word({Letter{std::move(id), exp}});
}

long Word::length() const {
    long n = 0;
    for (const Letter& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
    return n;
}

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.push_back({it->id, -it->exp});
    return Word(std::move(out));
}

Word Word::operator*(const Word& o) const {
    std::vector<Letter> all = letters_;
    all.insert(all.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(all));
}

Word Word::pow(long n) const {
    Word base = n < 0 ? inverse() : *this;
    long reps = n < 0 ? -n : n;
    Word acc;
    for (long i = 0; i < reps; ++i) acc = acc * base;
    return acc;
}

std::string Word::str() const {
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : letters_) {
        if (!first) os << ' ';
        os << l.id;
        if (l.exp != 1) os << '^' << l.exp;
        first = false;
    }
    return os.str();
}

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        auto caret = tok.find('^');
        std::string id = tok.substr(0, caret);
        long exp = 1;
        if (caret != std::string::npos) {
            std::string e = tok.substr(caret + 1);
            std::size_t used = 0;
            exp = std::stol(e, &used);
            if (used != e.size()) throw std::invalid_argument("word parse: bad exponent in '" + tok + "'");
        }
        if (id.empty()) throw std::invalid_argument("word parse: empty generator id");
        letters.push_back({std::move(id), exp});
    }
    return Word(std::move(letters));
}

void GeneratorRegistry::register_periodized(const std::string& id, const PeriodizedMap& m) {
    if (frozen_) throw std::logic_error("GeneratorRegistry: frozen");
    if (entries_.count(id)) throw std::invalid_argument("GeneratorRegistry: duplicate id '" + id + "'");
    entries_.emplace(id, GenEntry{GenKind::Periodized, m, m.inverse(), m.period()});
}

void GeneratorRegistry::register_circle(const std::string& id, const CircleMap& m) {
    if (frozen_) throw std::logic_error("GeneratorRegistry: frozen");
    if (entries_.count(id)) throw std::invalid_argument("GeneratorRegistry: duplicate id '" + id + "'");
    entries_.emplace(id, GenEntry{GenKind::Circle, m.lift(), m.lift().inverse(), m.circumference()});
}

const GenEntry& GeneratorRegistry::at(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end())
        throw std::invalid_argument("GeneratorRegistry: unknown id '" + id + "'");
    return it->second;
}

std::vector<std::string> GeneratorRegistry::ids() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [id, _] : entries_) out.push_back(id);
    return out;
}

QuadScalar evaluate_word(const GeneratorRegistry& reg, const Word& w, const QuadScalar& x) {
    QuadScalar cur = x;
    for (const Letter& l : w.letters()) {
        const GenEntry& e = reg.at(l.id);
        const PeriodizedMap& m = l.exp > 0 ? e.map : e.inverse_map;
        long reps = l.exp > 0 ? l.exp : -l.exp;
        for (long i = 0; i < reps; ++i) cur = m.eval(cur);
    }
    return cur;
}

PLSegmentMap restrict_word(const GeneratorRegistry& reg, const Word& w, const Interval& I) {
    if (!(I.lo < I.hi)) throw std::domain_error("restrict_word: degenerate interval");
    PLSegmentMap cur = PLSegmentMap::identity(Interval::closed(I.lo, I.hi));
    for (const Letter& l : w.letters()) {
        const GenEntry& e = reg.at(l.id);
        const PeriodizedMap& m = l.exp > 0 ? e.map : e.inverse_map;
        long reps = l.exp > 0 ? l.exp : -l.exp;
        for (long i = 0; i < reps; ++i) {
            PLSegmentMap step = m.restriction(cur.range_lo(), cur.range_hi());
            cur = cur.then(step);
        }
    }
    return cur;
}

bool word_identity_on(const GeneratorRegistry& reg, const Word& w, const Interval& I) {
    return restrict_word(reg, w, I).is_identity();
}

QuadScalar lipschitz_bound(const GeneratorRegistry& reg, const Word& w) {
    QuadScalar bound(1);
    for (const Letter& l : w.letters()) {
        const GenEntry& e = reg.at(l.id);
        QuadScalar worst = l.exp > 0 ? e.map.max_slope() : e.inverse_map.max_slope();
        long reps = l.exp > 0 ? l.exp : -l.exp;
        for (long i = 0; i < reps; ++i) bound = bound * worst;
    }
    return bound;
}

SupDistance word_translated_compare(const GeneratorRegistry& reg, const Word& w,
                                    const Interval& I, const Interval& J) {
    if (I.length() != J.length())
        throw std::domain_error("word_translated_compare: |I| != |J|");
    PLSegmentMap on_i = restrict_word(reg, w, I);
    PLSegmentMap on_j = restrict_word(reg, w, J);
    return translated_compare(on_i, on_j, Interval::closed(I.lo, I.hi), Interval::closed(J.lo, J.hi));
}

}  // namespace homeoforge
