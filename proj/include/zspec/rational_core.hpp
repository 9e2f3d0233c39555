#pragma once

// Exact arithmetic foundation: arbitrary-precision rationals (GMP),
// continued-fraction chains, 2x2 integer matrices and quadratic surds
// (p + q*sqrt(D))/r with exact, purely integer sign analysis.
//
// All types are immutable values and all operations are pure functions;
// everything here is safe to share across threads.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zspec {

using Int = mpz_class;
using Rat = mpq_class;

// Reduced rational with positive denominator.
Rat make_rat(const Int& num, const Int& den);

inline const Int num(const Rat& x) { return x.get_num(); }
inline const Int den(const Rat& x) { return x.get_den(); }

// Finite sequence of positive partial quotients a1..an plus a nonnegative
// integer part a0 (default 0).  The empty chain is allowed as a value and
// rejected by the operations that need a nonempty one.
class Chain {
 public:
  Chain() = default;
  explicit Chain(std::vector<long> terms, long integer_part = 0);

  static Chain parse(const std::string& text);  // "[0;1,1,2]" or "[1,1,2]"
  std::string str() const;

  const std::vector<long>& terms() const { return terms_; }
  long integer_part() const { return integer_part_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  long operator[](std::size_t i) const { return terms_[i]; }

  Chain reversed() const;
  Chain prefix(std::size_t n) const;
  Chain suffix(std::size_t from) const;

  bool operator==(const Chain&) const = default;
  bool operator<(const Chain& o) const;  // lexicographic, for ordered containers

 private:
  std::vector<long> terms_;
  long integer_part_ = 0;
};

Chain concat(const Chain& a, const Chain& b);

// [[a, b], [c, d]]
struct Mat2 {
  Int a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  Mat2 operator*(const Mat2& o) const;
  Int trace() const { return a + d; }
  Int det() const { return a * d - b * c; }
  bool operator==(const Mat2&) const = default;
};

// Exact value (p + q*sqrt(d))/r with d > 0 non-square, r > 0 and
// gcd(p,q,r) = 1.  q == 0 encodes a rational value (d is then a dummy 2).
// d is square-reduced opportunistically; comparisons never rely on it.
class QuadraticSurd {
 public:
  QuadraticSurd(Int p, Int q, Int d, Int r);
  static QuadraticSurd from_rational(const Rat& x);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& d() const { return d_; }
  const Int& r() const { return r_; }

  bool is_rational() const { return q_ == 0; }
  Rat as_rational() const;  // requires is_rational()

  int sign() const;
  QuadraticSurd negated() const;
  QuadraticSurd abs() const;
  QuadraticSurd reciprocal() const;        // value must be nonzero
  QuadraticSurd plus(const Rat& x) const;
  QuadraticSurd minus(const Rat& x) const; // this - x

  int cmp(const QuadraticSurd& o) const;
  int cmp(const Rat& x) const;
  bool operator==(const QuadraticSurd& o) const { return cmp(o) == 0; }

  // Correctly rounded decimal rendering with `digits` fractional digits,
  // computed from integer square-root bounds (no floating point).
  std::string decimal(std::size_t digits) const;
  double to_double() const;
  std::string str() const;  // "(p+q*sqrt(d))/r" with the obvious shortenings

 private:
  struct NoReduce {};
  QuadraticSurd(Int p, Int q, Int d, Int r, NoReduce);
  void normalize(bool reduce_square_part);

  Int p_, q_, d_, r_;
};

// rational - surd
QuadraticSurd sub(const Rat& x, const QuadraticSurd& s);

enum class Parity { Canonical, Even, Odd };

// Value of [a0; a1, ..., an] by the continuant recurrence.
Rat rat_from_cf(const Chain& chain);

// [0; chain]; the empty chain contributes 0.
Rat rho(const Chain& chain);

// Continued fraction of a value in (0,1).  Canonical means last term >= 2;
// Even/Odd force the length parity via the  [...,x] == [...,x-1,1]  rewrite.
Chain cf_from_rat(const Rat& value, Parity parity);

// Product of [[a_i,1],[1,0]] over the terms; integer part ignored.
Mat2 matrix_of_chain(const Chain& chain);

Rat mobius_apply(const Mat2& m, const Rat& x);
QuadraticSurd mobius_apply(const Mat2& m, const QuadraticSurd& x);

// Attracting fixed point x > 1 of a chain matrix: the value of the purely
// periodic continued fraction whose period is the chain.  A perfect-square
// discriminant (rational fixed point) is reported as degenerate; it cannot
// occur for chains of positive terms.
QuadraticSurd fixed_point(const Mat2& m);

// Exact three-way comparison: -1, 0, +1.
int surd_cmp(const QuadraticSurd& a, const QuadraticSurd& b);
int surd_cmp(const QuadraticSurd& a, const Rat& b);
int surd_cmp(const Rat& a, const QuadraticSurd& b);

// Value of [0; preperiod, period, period, ...]; preperiod may be empty.
QuadraticSurd periodic_cf_value(const Chain& preperiod, const Chain& period);

// Correctly rounded decimal rendering of an exact rational (ties to even).
std::string decimal_string(const Rat& x, std::size_t digits);

}  // namespace zspec
