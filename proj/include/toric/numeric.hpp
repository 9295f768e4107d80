// Exact ordered-field scalars: arbitrary-precision rationals and elements of
// a real quadratic field Q(sqrt(d)).
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

using Integer = mpz_class;

/// Thrown when two quadratic scalars over different radicands meet.
class RadicandMismatch : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown by the string parsers.
class ScalarParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Reduced fraction p/q with q > 0.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Accepts "n", "p/q" and finite decimals such as "-1.25".
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Integer floor() const;
    Integer ceil() const;
    Rational abs() const { return Rational(::abs(v_)); }
    double to_double() const { return v_.get_d(); }
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

/// a + b*sqrt(d). A radicand of 0 marks a plain rational (b is then zero);
/// such values combine freely with any radicand. Two values with distinct
/// nonzero radicands cannot be combined.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational a, Rational b, std::int64_t radicand);

    static Scalar fraction(long num, long den) { return Scalar(Rational(num, den)); }

    /// Accepts every Rational form plus "a+b*sqrt(d)" / "a-b*sqrt(d)" and "b*sqrt(d)".
    static Scalar parse(std::string_view text);

    const Rational& rational_part() const { return a_; }
    const Rational& irrational_part() const { return b_; }
    std::int64_t radicand() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }

    /// Exact sign of the real number a + b*sqrt(d).
    int sign() const;
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    Integer floor() const;
    Integer ceil() const;
    double to_double() const;
    std::string to_string() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    friend Scalar operator-(const Scalar& x);

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    std::int64_t joint_radicand(const Scalar& o) const;
    void normalize();

    Rational a_;
    Rational b_;
    std::int64_t d_ = 0;
};

int sign_of(const Scalar& x);
std::strong_ordering compare(const Scalar& x, const Scalar& y);

Scalar min(const Scalar& x, const Scalar& y);
Scalar max(const Scalar& x, const Scalar& y);

bool is_square_free(std::int64_t d);

/// Decimal rendering with at most `places` fractional digits, trailing zeros trimmed.
std::string format_decimal(const Scalar& x, int places = 6);

}  // namespace toric
