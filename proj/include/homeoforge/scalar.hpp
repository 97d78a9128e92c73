#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homeoforge {

using Int = mpz_class;

/// Thrown when HOMEOFORGE_PRECISION_GUARD is set and a scalar exceeds the bit cap.
class precision_guard_error : public std::runtime_error {
public:
    explicit precision_guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bit cap from the environment (0 = unlimited). Read once per process.
unsigned long precision_guard_bits();
/// Throws precision_guard_error when the cap is set and v exceeds it.
void precision_guard_enforce(const mpq_class& v);

bool is_power_of_two(const Int& v);  // v == 2^k for some k >= 0

/*
 * Exact rational p/q, canonical: gcd(p,q)=1, q>0. Text form "p/q" (or "p"
 * when q=1), exact round-trip.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    const Int num() const { return v_.get_num(); }
    const Int den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    /// True iff the denominator is a power of two (membership in Z[1/2]).
    bool is_dyadic() const;

    Int floor() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_), raw_t{}); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_), raw_t{}); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_), raw_t{}); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    std::string str() const;
    static Rational parse(std::string_view text);

    double to_double() const { return v_.get_d(); }  // rendering only, never trusted

private:
    struct raw_t {};
    Rational(mpq_class v, raw_t) : v_(std::move(v)) { precision_guard_enforce(v_); }
    mpq_class v_;
};

Rational abs(const Rational& r);

/*
 * Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)), d >= 2 and not
 * a perfect square so sqrt(d) is irrational and (a, b) is canonical. Pure
 * rationals carry d = 0; arithmetic between distinct nonzero d values is
 * rejected. Sign and order are decided exactly by case analysis on the signs
 * of a, b and a comparison of a^2 with b^2 d; no floating point.
 */
class QuadScalar {
public:
    QuadScalar() : d_(0) {}
    QuadScalar(long n) : a_(n), d_(0) {}
    QuadScalar(const Rational& a) : a_(a), d_(0) {}
    QuadScalar(const Rational& a, const Rational& b, long d);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long field_d() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    bool is_dyadic_rational() const { return d_ == 0 && a_.is_dyadic(); }

    int sign() const;
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadScalar operator-() const;
    QuadScalar operator+(const QuadScalar& o) const;
    QuadScalar operator-(const QuadScalar& o) const;
    QuadScalar operator*(const QuadScalar& o) const;
    QuadScalar operator/(const QuadScalar& o) const;
    QuadScalar inverse() const;

    bool operator==(const QuadScalar& o) const;
    bool operator!=(const QuadScalar& o) const { return !(*this == o); }
    bool operator<(const QuadScalar& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadScalar& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QuadScalar& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QuadScalar& o) const { return (*this - o).sign() >= 0; }

    /// Text form "a+b*sqrt(d)" with rational a, b; exact round-trip with parse().
    std::string str() const;
    static QuadScalar parse(std::string_view text);

    double to_double() const;  // rendering only

private:
    void normalize();
    Rational a_, b_;
    long d_;  // 0 iff b_ == 0
};

inline QuadScalar abs(const QuadScalar& x) { return x.sign() < 0 ? -x : x; }

int compare(const QuadScalar& x, const QuadScalar& y);  // -1 / 0 / +1

/// Exact floor of x as an integer.
Int floor_int(const QuadScalar& x);

/// The n with n*c <= x < (n+1)*c; requires c > 0.
Int period_index(const QuadScalar& x, const QuadScalar& c);

/*
 * Continued-fraction expansion of a quadratic irrational. Quotients are exact;
 * for a quadratic irrational the tail is eventually periodic and period_start
 * marks where the complete quotient first repeated (if detected within depth).
 */
struct CFExpansion {
    std::vector<Int> quotients;
    std::optional<std::size_t> period_start;
};

/// First `depth` partial quotients of lambda (irrational input required).
CFExpansion continued_fraction(const QuadScalar& lambda, int depth);

/// Convergents p_k/q_k from the standard recurrence.
std::vector<std::pair<Int, Int>> convergents(const CFExpansion& cf);

}  // namespace homeoforge
