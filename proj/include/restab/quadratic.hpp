#ifndef RESTAB_QUADRATIC_HPP
#define RESTAB_QUADRATIC_HPP

#include <string>

#include "restab/rational.hpp"

namespace restab {

/// Exact real quadratic irrationality a + b sqrt(n) with rational a, b and a
/// nonnegative integer radicand n. Comparisons are decided by exact sign
/// algebra (isolate radicals, square with sign bookkeeping); no floating
/// point anywhere. Values from distinct fields (different n) compare fine.
class QuadraticNumber {
  public:
    QuadraticNumber() : a_(0), b_(0), n_(0) {}
    /* implicit */ QuadraticNumber(const Rational& a) : a_(a), b_(0), n_(0) {}
    QuadraticNumber(Rational a, Rational b, Integer n);

    /// sqrt(x) of a nonnegative rational: sqrt(p/q) = sqrt(pq)/q.
    static QuadraticNumber sqrt_of(const Rational& x);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    const Integer& radicand() const { return n_; }

    bool is_rational() const { return sgn(b_) == 0; }
    /// Requires is_rational().
    const Rational& rational_value() const { return a_; }

    QuadraticNumber operator-() const;
    QuadraticNumber operator+(const Rational& r) const;
    QuadraticNumber operator-(const Rational& r) const;
    QuadraticNumber operator*(const Rational& r) const;

    int sign() const;

    /// Exact canonical rendering: "p/q" when rational, else "(p+q*sqrt(n))/L"
    /// over a common positive denominator L, e.g. "(-3+1*sqrt(13))/2".
    std::string to_string() const;

    /// Decimal approximation to `digits` fractional digits, computed with
    /// integer square roots only (truncated toward minus infinity) and
    /// prefixed with "~" to mark it approximate.
    std::string decimal_string(unsigned digits) const;

    /// floor(value) as an exact integer.
    Integer floor() const;

  private:
    Rational a_, b_;
    Integer n_;
    void normalize();
};

/// Sign of x - y; total order across distinct radicands.
int compare(const QuadraticNumber& x, const QuadraticNumber& y);

inline bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) {
    return compare(x, y) < 0;
}
inline bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) {
    return compare(x, y) > 0;
}
inline bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return compare(x, y) == 0;
}

/// Sign of A + B sqrt(N), exact.
int sign_with_radical(const Rational& A, const Rational& B, const Integer& N);

/// Sign of A + B1 sqrt(N1) + B2 sqrt(N2), exact.
int sign_with_two_radicals(const Rational& A, const Rational& B1, const Integer& N1,
                           const Rational& B2, const Integer& N2);

}  // namespace restab

#endif
