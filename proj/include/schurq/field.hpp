#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace schurq {

using Rational = mpq_class;

// Which subfield of Q(i, sqrt2) an element lies in.
enum class Subfield { rational, gaussian, real_quadratic, generic };

struct Classification {
    Subfield subfield;
    bool integral; // all coordinates are integers
    std::string str() const;
};

// An element a + b*i + c*sqrt2 + d*i*sqrt2 of the number field Q(i, sqrt2),
// stored as exact rational coordinates over the basis {1, i, sqrt2, i*sqrt2}.
// The representation is unique; all arithmetic is exact.
class FieldElem {
  public:
    FieldElem() : a_(0), b_(0), c_(0), d_(0) {}
    FieldElem(long n) : a_(n), b_(0), c_(0), d_(0) {}
    FieldElem(const Rational& a) : a_(a), b_(0), c_(0), d_(0) {}
    FieldElem(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static FieldElem zero() { return FieldElem(); }
    static FieldElem one() { return FieldElem(1); }
    static FieldElem i() { return FieldElem(0, 1, 0, 0); }
    static FieldElem sqrt2() { return FieldElem(0, 0, 1, 0); }
    static FieldElem rational(long num, long den);
    // (sqrt2)^e for any integer e, negative exponents included.
    static FieldElem sqrt2_pow(long e);
    // 2^e for any integer e.
    static FieldElem two_pow(long e);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool operator==(const FieldElem& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem operator+(const FieldElem& o) const {
        return FieldElem(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_);
    }
    FieldElem operator-(const FieldElem& o) const {
        return FieldElem(a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_);
    }
    FieldElem operator-() const { return FieldElem(-a_, -b_, -c_, -d_); }
    FieldElem operator*(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    // Multiplicative inverse, rationalizing through the conjugations
    // i -> -i and sqrt2 -> -sqrt2. Throws std::domain_error on zero.
    FieldElem inverse() const;
    FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }

    FieldElem conj_i() const { return FieldElem(a_, -b_, c_, -d_); }
    FieldElem conj_sqrt2() const { return FieldElem(a_, b_, -c_, -d_); }

    Classification classify() const;
    // True when the element is a rational integer.
    bool is_integer() const;

    // Canonical serialization "a/b + c/d*i + e/f*r2 + g/h*ir2" with
    // lowest-terms rationals. parse() is its exact inverse.
    std::string str() const;
    static FieldElem parse(const std::string& text);
    // Compact human-readable form, e.g. "2", "-1/2*r2", "1 + i".
    std::string short_str() const;

  private:
    Rational a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

FieldElem pow(const FieldElem& x, long e);

} // namespace schurq
