#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace superform {

/// Exact rational on 128-bit integers, always stored reduced with positive
/// denominator. Arithmetic cross-reduces before multiplying and checks every
/// intermediate with the compiler overflow intrinsics; genuine overflow (never
/// reached by the desk-scale corpora) raises std::overflow_error rather than
/// wrapping silently.
class Rational {
public:
    using Int = __int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static Rational from_parts(Int n, Int d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational operator+(const Rational& o) const {
        Int g = gcd(den_, o.den_);
        Int lhs = checked_mul(num_, o.den_ / g);
        Int rhs = checked_mul(o.num_, den_ / g);
        return from_parts(checked_add(lhs, rhs), checked_mul(den_, o.den_ / g));
    }

    Rational operator-(const Rational& o) const { return *this + (-o); }

    Rational operator*(const Rational& o) const {
        Int g1 = gcd(abs_val(num_), o.den_);
        Int g2 = gcd(abs_val(o.num_), den_);
        Rational r;
        r.num_ = checked_mul(num_ / g1, o.num_ / g2);
        r.den_ = checked_mul(den_ / g2, o.den_ / g1);
        return r;
    }

    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return from_parts(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
    }

    Rational inverse() const {
        if (num_ == 0) throw std::domain_error("rational inverse of zero");
        return from_parts(den_, num_);
    }

    Rational pow(int e) const {
        Rational base = e >= 0 ? *this : inverse();
        int k = e >= 0 ? e : -e;
        Rational acc(1);
        for (int i = 0; i < k; ++i) acc = acc * base;
        return acc;
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        // Both denominators positive, so cross multiplication preserves order.
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        std::string s = int_to_string(num_);
        if (den_ != 1) s += "/" + int_to_string(den_);
        return s;
    }

    /// Accepts "p" or "p/q" with optional leading sign; nullopt on anything else.
    static std::optional<Rational> parse(std::string_view text) {
        std::size_t pos = 0;
        auto n = parse_int(text, pos);
        if (!n) return std::nullopt;
        if (pos == text.size()) return from_parts(*n, 1);
        if (text[pos] != '/') return std::nullopt;
        ++pos;
        auto d = parse_int(text, pos);
        if (!d || pos != text.size() || *d == 0) return std::nullopt;
        return from_parts(*n, *d);
    }

    static std::string int_to_string(Int v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        // Careful with the most negative value: peel digits from the negative side.
        std::string digits;
        Int cur = neg ? v : -v;
        while (cur != 0) {
            int digit = static_cast<int>(-(cur % 10));
            digits.push_back(static_cast<char>('0' + digit));
            cur /= 10;
        }
        if (neg) digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

private:
    static Int abs_val(Int v) { return v < 0 ? -v : v; }

    static Int gcd(Int a, Int b) {
        a = abs_val(a);
        b = abs_val(b);
        while (b != 0) {
            Int t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    static Int checked_add(Int a, Int b) {
        Int out;
        if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("rational overflow (add)");
        return out;
    }

    static Int checked_mul(Int a, Int b) {
        Int out;
        if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("rational overflow (mul)");
        return out;
    }

    static std::optional<Int> parse_int(std::string_view text, std::size_t& pos) {
        bool neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') return std::nullopt;
        Int acc = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            acc = checked_add(checked_mul(acc, 10), text[pos] - '0');
            ++pos;
        }
        return neg ? -acc : acc;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_, den_);
        num_ /= g;
        den_ /= g;
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

/// Scalar coefficient: exact rational when built from integer/rational
/// literals, IEEE double otherwise. Exact op exact stays exact; any mix
/// degrades to double (and never silently the other way).
class Coeff {
public:
    Coeff() : exact_(true), rat_(0), dbl_(0.0) {}
    Coeff(const Rational& r) : exact_(true), rat_(r), dbl_(0.0) {} // NOLINT
    Coeff(long long n) : exact_(true), rat_(n), dbl_(0.0) {}       // NOLINT
    Coeff(double v) : exact_(false), rat_(0), dbl_(v) {}           // NOLINT

    bool exact() const { return exact_; }
    const Rational& rat() const {
        if (!exact_) throw std::logic_error("coefficient is not exact");
        return rat_;
    }
    double value() const { return exact_ ? rat_.to_double() : dbl_; }
    bool is_zero() const { return exact_ ? rat_.is_zero() : dbl_ == 0.0; }

    Coeff operator-() const { return exact_ ? Coeff(-rat_) : Coeff(-dbl_); }

    Coeff operator+(const Coeff& o) const {
        if (exact_ && o.exact_) return Coeff(rat_ + o.rat_);
        return Coeff(value() + o.value());
    }
    Coeff operator-(const Coeff& o) const { return *this + (-o); }
    Coeff operator*(const Coeff& o) const {
        if (exact_ && o.exact_) return Coeff(rat_ * o.rat_);
        return Coeff(value() * o.value());
    }
    Coeff inverse() const { return exact_ ? Coeff(rat_.inverse()) : Coeff(1.0 / dbl_); }
    Coeff pow(int e) const {
        if (exact_) return Coeff(rat_.pow(e));
        double acc = 1.0;
        double base = e >= 0 ? dbl_ : 1.0 / dbl_;
        for (int i = 0, k = e >= 0 ? e : -e; i < k; ++i) acc *= base;
        return Coeff(acc);
    }

    /// Multiply by a plain integer (derivative exponents etc.) keeping exactness.
    Coeff times_int(long long k) const {
        return exact_ ? Coeff(rat_ * Rational(k)) : Coeff(dbl_ * static_cast<double>(k));
    }

    bool operator==(const Coeff& o) const {
        if (exact_ && o.exact_) return rat_ == o.rat_;
        return value() == o.value();
    }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

private:
    bool exact_;
    Rational rat_;
    double dbl_;
};

} // namespace superform
