#include "homeoforge/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace homeoforge {

unsigned long precision_guard_bits() {
    static const unsigned long bits = [] {
        const char* env = std::getenv("HOMEOFORGE_PRECISION_GUARD");
        if (!env || !*env) return 0ul;
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        return (end && *end == '\0') ? v : 0ul;
    }();
    return bits;
}

void precision_guard_enforce(const mpq_class& v) {
    unsigned long cap = precision_guard_bits();
    if (cap == 0) return;
    if (mpz_sizeinbase(v.get_num().get_mpz_t(), 2) > cap ||
        mpz_sizeinbase(v.get_den().get_mpz_t(), 2) > cap) {
        throw precision_guard_error("integer exceeds HOMEOFORGE_PRECISION_GUARD=" +
                                    std::to_string(cap) + " bits");
    }
}

namespace {

void guard_check(const Int& v) {
    unsigned long cap = precision_guard_bits();
    if (cap != 0 && mpz_sizeinbase(v.get_mpz_t(), 2) > cap) {
        throw precision_guard_error("integer exceeds HOMEOFORGE_PRECISION_GUARD="
                                    + std::to_string(cap) + " bits");
    }
}

}  // namespace

bool is_power_of_two(const Int& v) {
    if (sgn(v) <= 0) return false;
    return mpz_popcount(v.get_mpz_t()) == 1;
}

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
    guard_check(v_.get_num());
    guard_check(v_.get_den());
}

bool Rational::is_dyadic() const {
    return is_power_of_two(v_.get_den());
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_), raw_t{});
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_), raw_t{});
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (s.substr(pos, w.size()) == w) { pos += w.size(); return true; }
        return false;
    }
    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("scalar parse: digit expected in '" + std::string(s) + "'");
        return Int(std::string(s.substr(start, pos - start)), 10);
    }
    bool done() {
        skip_ws();
        return pos == s.size();
    }
};

Rational parse_unsigned_rational(Cursor& c) {
    Int num = c.integer();
    if (c.eat('/')) {
        Int den = c.integer();
        return Rational(num, den);
    }
    return Rational(num);
}

// term := rational ['*' root] | rational root | root,  root := "sqrt" int | "sqrt(" int ")"
struct Term {
    Rational coeff;
    long d = 0;  // 0 = rational term
};

Term parse_term(Cursor& c) {
    Term t;
    t.coeff = Rational(1);
    bool saw_coeff = false;
    if (c.peek_digit()) {
        t.coeff = parse_unsigned_rational(c);
        saw_coeff = true;
        if (!c.eat('*')) {
            if (!c.eat_word("sqrt")) return t;  // plain rational
        } else if (!c.eat_word("sqrt")) {
            throw std::invalid_argument("scalar parse: expected sqrt after '*'");
        }
    } else if (!c.eat_word("sqrt")) {
        throw std::invalid_argument("scalar parse: expected number or sqrt");
    }
    // we have consumed "sqrt"
    Int d;
    if (c.eat('(')) {
        d = c.integer();
        if (!c.eat(')')) throw std::invalid_argument("scalar parse: missing ')'");
    } else {
        d = c.integer();
    }
    if (!d.fits_slong_p()) throw std::invalid_argument("scalar parse: radicand too large");
    t.d = d.get_si();
    (void)saw_coeff;
    return t;
}

}  // namespace

QuadScalar::QuadScalar(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
    if (!b_.is_zero()) {
        if (d_ < 2) throw std::domain_error("QuadScalar: d must be >= 2");
        Int dz(d_);
        if (mpz_perfect_square_p(dz.get_mpz_t()))
            throw std::domain_error("QuadScalar: d must not be a perfect square");
    }
    normalize();
}

void QuadScalar::normalize() {
    if (b_.is_zero()) d_ = 0;
}

int QuadScalar::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // mixed signs: decide by a^2 vs b^2 d; equality impossible (sqrt(d) irrational)
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) throw std::logic_error("QuadScalar: a^2 == b^2 d with nonzero b");
    bool a_dominates = lhs > rhs;
    return a_dominates ? sa : sb;
}

namespace {

long merge_d(const QuadScalar& x, const QuadScalar& y) {
    long dx = x.field_d(), dy = y.field_d();
    if (dx == 0) return dy;
    if (dy == 0) return dx;
    if (dx != dy) throw std::domain_error("QuadScalar: mixed quadratic fields");
    return dx;
}

}  // namespace

QuadScalar QuadScalar::operator-() const {
    if (is_rational()) return QuadScalar(-a_);
    return QuadScalar(-a_, -b_, d_);
}

QuadScalar QuadScalar::operator+(const QuadScalar& o) const {
    long d = merge_d(*this, o);
    Rational b = b_ + o.b_;
    if (b.is_zero()) return QuadScalar(a_ + o.a_);
    return QuadScalar(a_ + o.a_, b, d);
}

QuadScalar QuadScalar::operator-(const QuadScalar& o) const {
    return *this + (-o);
}

QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
    long d = merge_d(*this, o);
    if (d == 0) return QuadScalar(a_ * o.a_);
    Rational ra = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational rb = a_ * o.b_ + b_ * o.a_;
    if (rb.is_zero()) return QuadScalar(ra);
    return QuadScalar(ra, rb, d);
}

QuadScalar QuadScalar::inverse() const {
    if (is_zero()) throw std::domain_error("QuadScalar: inverse of zero");
    if (is_rational()) return QuadScalar(Rational(1) / a_);
    // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
    Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
    return QuadScalar(a_ / norm, -b_ / norm, d_);
}

QuadScalar QuadScalar::operator/(const QuadScalar& o) const {
    return *this * o.inverse();
}

bool QuadScalar::operator==(const QuadScalar& o) const {
    return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
}

std::string QuadScalar::str() const {
    if (is_rational()) return a_.str();
    std::string radical = "sqrt(" + std::to_string(d_) + ")";
    std::string rad_term;
    Rational babs = abs(b_);
    if (babs == Rational(1)) rad_term = radical;
    else rad_term = babs.str() + "*" + radical;
    if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + rad_term;
    return a_.str() + (b_.sign() < 0 ? "-" : "+") + rad_term;
}

QuadScalar QuadScalar::parse(std::string_view text) {
    Cursor c{text};
    QuadScalar acc;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        c.skip_ws();
        if (c.eat('-')) sign = -1;
        else if (c.eat('+')) sign = 1;
        else if (!first) throw std::invalid_argument("scalar parse: expected '+' or '-'");
        Term t = parse_term(c);
        Rational coeff = sign < 0 ? -t.coeff : t.coeff;
        QuadScalar part = (t.d == 0) ? QuadScalar(coeff) : QuadScalar(Rational(0), coeff, t.d);
        acc = first ? part : acc + part;
        first = false;
    }
    if (first) throw std::invalid_argument("scalar parse: empty input");
    return acc;
}

Rational Rational::parse(std::string_view text) {
    QuadScalar q = QuadScalar::parse(text);
    if (!q.is_rational()) throw std::invalid_argument("rational parse: radical in input");
    return q.rational_part();
}

double QuadScalar::to_double() const {
    double v = a_.to_double();
    if (d_ != 0) v += b_.to_double() * std::sqrt(static_cast<double>(d_));
    return v;
}

int compare(const QuadScalar& x, const QuadScalar& y) {
    return (x - y).sign();
}

Int floor_int(const QuadScalar& x) {
    Int n = x.rational_part().floor();
    const Rational& b = x.radical_part();
    if (!b.is_zero()) {
        // estimate floor(b sqrt d) from an integer square root, then fix up exactly
        Int p = b.num(), q = b.den();
        Int rad = p * p * Int(x.field_d());
        Int s;
        mpz_sqrt(s.get_mpz_t(), rad.get_mpz_t());
        Int est;
        if (b.sign() > 0) {
            mpz_fdiv_q(est.get_mpz_t(), s.get_mpz_t(), q.get_mpz_t());
        } else {
            Int t = s + 1;
            mpz_cdiv_q(est.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
            est = -est;
        }
        n += est - 1;
    }
    while (QuadScalar(Rational(Int(n + 1))) <= x) ++n;
    while (QuadScalar(Rational(n)) > x) --n;
    return n;
}

Int period_index(const QuadScalar& x, const QuadScalar& c) {
    if (c.sign() <= 0) throw std::domain_error("period_index: period must be positive");
    return floor_int(x / c);
}

CFExpansion continued_fraction(const QuadScalar& lambda, int depth) {
    if (lambda.is_rational())
        throw std::domain_error("continued_fraction: rational input");
    if (depth < 1) throw std::domain_error("continued_fraction: depth must be >= 1");
    CFExpansion cf;
    std::vector<QuadScalar> seen;  // complete quotients, for period detection
    QuadScalar x = lambda;
    for (int k = 0; k < depth; ++k) {
        if (!cf.period_start) {
            for (std::size_t i = 0; i < seen.size(); ++i) {
                if (seen[i] == x) {
                    cf.period_start = i;
                    break;
                }
            }
        }
        if (cf.period_start) {
            // fill the remaining quotients from the detected period
            std::size_t ps = *cf.period_start;
            std::size_t plen = seen.size() - ps;
            cf.quotients.push_back(cf.quotients[ps + (k - ps) % plen]);
            continue;
        }
        seen.push_back(x);
        Int a = floor_int(x);
        cf.quotients.push_back(a);
        QuadScalar frac = x - QuadScalar(Rational(a));
        x = frac.inverse();  // frac != 0 since x is irrational
    }
    return cf;
}

std::vector<std::pair<Int, Int>> convergents(const CFExpansion& cf) {
    std::vector<std::pair<Int, Int>> out;
    Int p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
    for (const Int& a : cf.quotients) {
        Int p = a * p_prev + p_prev2;
        Int q = a * q_prev + q_prev2;
        out.emplace_back(p, q);
        p_prev2 = p_prev; p_prev = p;
        q_prev2 = q_prev; q_prev = q;
    }
    return out;
}

}  // namespace homeoforge
