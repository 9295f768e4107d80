#include "toric/numeric.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace toric {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ScalarParseError("not a rational number: '" + std::string(whole) + "'");
    Integer n(std::string(s), 10);
    return negative ? Integer(-n) : n;
}

// Smallest n with x < n + 1 and n <= x, located by galloping then bisection on exact comparisons.
template <typename Less>
Integer bracket_floor(Integer guess, Less less_than)
{
    // less_than(n) == (x < n)
    Integer lo = guess, hi = guess + 1;
    Integer step = 1;
    while (less_than(lo)) {
        hi = lo;
        lo -= step;
        step *= 2;
    }
    step = 1;
    while (!less_than(hi)) {
        lo = hi;
        hi += step;
        step *= 2;
    }
    while (hi - lo > 1) {
        Integer mid = lo + (hi - lo) / 2;
        if (less_than(mid))
            hi = mid;
        else
            lo = mid;
    }
    return lo;
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view s = trim(text);
    if (s.empty()) throw ScalarParseError("empty rational");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(trim(s.substr(0, slash)), text);
        std::string_view den_text = trim(s.substr(slash + 1));
        if (!all_digits(den_text)) throw ScalarParseError("bad denominator in '" + std::string(text) + "'");
        Integer den(std::string(den_text), 10);
        if (den == 0) throw ScalarParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
        if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac_part))
            throw ScalarParseError("not a decimal number: '" + std::string(text) + "'");
        Integer whole = int_part.empty() ? Integer(0) : Integer(std::string(int_part), 10);
        Integer frac(std::string(frac_part), 10);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        Rational r(whole * scale + frac, scale);
        return negative ? -r : r;
    }

    return Rational(parse_integer(s, text));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Integer Rational::floor() const
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

std::string Rational::to_string() const
{
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

// ------------------------------------------------------------------ Scalar

bool is_square_free(std::int64_t d)
{
    if (d < 1) return false;
    for (std::int64_t p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

Scalar::Scalar(Rational a, Rational b, std::int64_t radicand) : a_(std::move(a)), b_(std::move(b)), d_(radicand)
{
    if (b_.is_zero()) {
        d_ = 0;
        return;
    }
    if (radicand < 2 || !is_square_free(radicand))
        throw std::domain_error("radicand must be a square-free integer >= 2, got " + std::to_string(radicand));
}

void Scalar::normalize()
{
    if (b_.is_zero()) d_ = 0;
}

std::int64_t Scalar::joint_radicand(const Scalar& o) const
{
    if (d_ == 0) return o.d_;
    if (o.d_ == 0 || o.d_ == d_) return d_;
    throw RadicandMismatch("cannot combine sqrt(" + std::to_string(d_) + ") and sqrt(" + std::to_string(o.d_) + ")");
}

Scalar Scalar::parse(std::string_view text)
{
    std::string_view s = trim(text);
    auto root = s.find("sqrt(");
    if (root == std::string_view::npos) return Scalar(Rational::parse(s));

    auto close = s.find(')', root);
    if (close == std::string_view::npos || !trim(s.substr(close + 1)).empty())
        throw ScalarParseError("malformed quadratic scalar: '" + std::string(text) + "'");
    std::string_view radicand_text = trim(s.substr(root + 5, close - root - 5));
    if (!all_digits(radicand_text)) throw ScalarParseError("bad radicand in '" + std::string(text) + "'");
    std::int64_t d = std::stoll(std::string(radicand_text));

    std::string_view head = trim(s.substr(0, root));
    std::string coefficient_text;
    std::string_view rational_text;
    if (!head.empty() && head.back() == '*') {
        head = trim(head.substr(0, head.size() - 1));
        // split "a+b" / "a-b" / "b" at the last binary sign
        std::size_t split = std::string_view::npos;
        for (std::size_t i = head.size(); i-- > 1;) {
            if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '+' && head[i - 1] != '-' && head[i - 1] != '/') {
                split = i;
                break;
            }
        }
        if (split == std::string_view::npos) {
            coefficient_text = std::string(head);
        } else {
            rational_text = trim(head.substr(0, split));
            std::string_view coeff = trim(head.substr(split));
            coefficient_text = coeff.front() == '+' ? std::string(coeff.substr(1)) : std::string(coeff);
            // "+-1/2" style
            if (!coefficient_text.empty() && coefficient_text.front() == '+') coefficient_text.erase(0, 1);
        }
    } else {
        // "a+sqrt(d)", "-sqrt(d)", "sqrt(d)"
        if (head.empty() || head == "+") {
            coefficient_text = "1";
        } else if (head == "-") {
            coefficient_text = "-1";
        } else {
            char sign = head.back();
            if (sign != '+' && sign != '-') throw ScalarParseError("malformed quadratic scalar: '" + std::string(text) + "'");
            rational_text = trim(head.substr(0, head.size() - 1));
            coefficient_text = sign == '-' ? "-1" : "1";
        }
    }
    if (coefficient_text.empty()) throw ScalarParseError("missing coefficient in '" + std::string(text) + "'");
    Rational a = rational_text.empty() ? Rational(0) : Rational::parse(rational_text);
    Rational b = Rational::parse(coefficient_text);
    try {
        return Scalar(a, b, d);
    } catch (const std::domain_error& e) {
        throw ScalarParseError(e.what());
    }
}

int Scalar::sign() const
{
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 d
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(static_cast<long>(d_));
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;  // unreachable for square-free d >= 2
}

int sign_of(const Scalar& x) { return x.sign(); }

double Scalar::to_double() const
{
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

Integer Scalar::floor() const
{
    if (is_rational()) return a_.floor();
    Integer guess(std::floor(to_double()));
    return bracket_floor(guess, [this](const Integer& n) { return (*this - Scalar(Rational(n))).sign() < 0; });
}

Integer Scalar::ceil() const
{
    if (is_rational()) return a_.ceil();
    Integer f = floor();
    return (*this - Scalar(Rational(f))).is_zero() ? f : Integer(f + 1);
}

std::string Scalar::to_string() const
{
    if (is_rational()) return a_.to_string();
    std::string tail = "*sqrt(" + std::to_string(d_) + ")";
    if (a_.is_zero()) return b_.to_string() + tail;
    if (b_.sign() < 0) return a_.to_string() + "-" + (-b_).to_string() + tail;
    return a_.to_string() + "+" + b_.to_string() + tail;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    d_ = joint_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    d_ = joint_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    std::int64_t d = joint_radicand(o);
    Rational a = a_ * o.a_;
    if (!b_.is_zero() && !o.b_.is_zero()) a += b_ * o.b_ * Rational(static_cast<long>(d));
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (o.is_rational()) {
        a_ /= o.a_;
        b_ /= o.a_;
        normalize();
        return *this;
    }
    std::int64_t d = joint_radicand(o);
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(static_cast<long>(d));
    Scalar conj(o.a_ / norm, -o.b_ / norm, d);
    return *this *= conj;
}

Scalar operator-(const Scalar& x)
{
    Scalar r = x;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

bool operator==(const Scalar& x, const Scalar& y)
{
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.b_.is_zero() || x.d_ == y.d_;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y)
{
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering compare(const Scalar& x, const Scalar& y) { return x <=> y; }

Scalar min(const Scalar& x, const Scalar& y) { return y < x ? y : x; }
Scalar max(const Scalar& x, const Scalar& y) { return x < y ? y : x; }

std::string format_decimal(const Scalar& x, int places)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    Integer rounded = (x * Scalar(Rational(scale)) + Scalar::fraction(1, 2)).floor();
    bool negative = rounded < 0;
    if (negative) rounded = -rounded;
    std::string digits = rounded.get_str();
    if (digits.size() <= static_cast<std::size_t>(places)) digits.insert(0, places + 1 - digits.size(), '0');
    std::string whole = digits.substr(0, digits.size() - places);
    std::string frac = digits.substr(digits.size() - places);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = (negative ? "-" : "") + whole;
    if (!frac.empty()) out += "." + frac;
    return out == "-0" ? "0" : out;
}

}  // namespace toric
