#include "zspec/rational_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace zspec {

namespace {

int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

Int isqrt(const Int& x) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

bool is_square(const Int& x) {
  return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

Int pow10(std::size_t n) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(n));
  return r;
}

// sign of a + b*sqrt(k), k >= 0
int sign_sqrt1(const Int& a, const Int& b, const Int& k) {
  if (b == 0 || k == 0) return sgn(a);
  if (a == 0) return sgn(b);
  if (sgn(a) == sgn(b)) return sgn(a);
  const int c = cmp(a * a, b * b * k);
  if (c == 0) return 0;
  return sgn(a) > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
}

// sign of x + u*sqrt(d1) + v*sqrt(d2)
int sign_sqrt2(const Int& x, const Int& u, const Int& d1, const Int& v,
               const Int& d2) {
  if (u == 0) return sign_sqrt1(x, v, d2);
  if (v == 0) return sign_sqrt1(x, u, d1);
  int ssum;
  if (sgn(u) == sgn(v)) {
    ssum = sgn(u);
  } else {
    const int c = cmp(u * u * d1, v * v * d2);
    ssum = c == 0 ? 0 : sgn(u) * (c > 0 ? 1 : -1);
  }
  if (x == 0) return ssum;
  if (ssum == 0) return sgn(x);
  if (sgn(x) == ssum) return ssum;
  // |x| against |u*sqrt(d1) + v*sqrt(d2)|
  const Int lhs = x * x - u * u * d1 - v * v * d2;
  const int t = sign_sqrt1(lhs, -2 * u * v, d1 * d2);
  if (t == 0) return 0;
  return t > 0 ? sgn(x) : ssum;
}

// Pull square divisors out of d into q, by trial division.  Full square-free
// factorization is deliberately not attempted; comparison never needs it.
void square_reduce(Int& d, Int& q) {
  constexpr unsigned long kCap = 1'000'000;
  if (mpz_fits_ulong_p(d.get_mpz_t())) {
    unsigned long long dd = mpz_get_ui(d.get_mpz_t());
    unsigned long long qq = 1;
    for (unsigned long long f = 2; f <= kCap && f * f <= dd;
         f = (f == 2 ? 3 : f + 2)) {
      while (dd % (f * f) == 0) {
        dd /= f * f;
        qq *= f;
      }
    }
    d = Int(static_cast<unsigned long>(dd));
    q *= Int(static_cast<unsigned long>(qq));
    return;
  }
  // Large d: cheap opportunism only.
  for (unsigned long f = 2; f <= 10'000; f = (f == 2 ? 3 : f + 2)) {
    const unsigned long f2 = f * f;
    while (mpz_divisible_ui_p(d.get_mpz_t(), f2)) {
      d /= f2;
      q *= f;
    }
  }
}

}  // namespace

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- Chain

Chain::Chain(std::vector<long> terms, long integer_part)
    : terms_(std::move(terms)), integer_part_(integer_part) {
  if (integer_part_ < 0)
    throw std::domain_error("Chain: negative integer part");
  for (long t : terms_)
    if (t < 1) throw std::domain_error("Chain: every term must be >= 1");
}

Chain Chain::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("Chain::parse: expected [..] literal");
  std::string body = text.substr(1, text.size() - 2);
  long a0 = 0;
  const auto semi = body.find(';');
  if (semi != std::string::npos) {
    a0 = std::stol(body.substr(0, semi));
    body = body.substr(semi + 1);
  }
  std::vector<long> terms;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const long v = std::stol(item, &used);
    if (used != item.size())
      throw std::invalid_argument("Chain::parse: bad term '" + item + "'");
    terms.push_back(v);
  }
  if (terms.empty()) throw std::invalid_argument("Chain::parse: no terms");
  return Chain(std::move(terms), a0);
}

std::string Chain::str() const {
  std::string out = "[" + std::to_string(integer_part_) + ";";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(terms_[i]);
  }
  out += ']';
  return out;
}

Chain Chain::reversed() const {
  std::vector<long> t(terms_.rbegin(), terms_.rend());
  return Chain(std::move(t), integer_part_);
}

Chain Chain::prefix(std::size_t n) const {
  return Chain(std::vector<long>(terms_.begin(), terms_.begin() + n));
}

Chain Chain::suffix(std::size_t from) const {
  return Chain(std::vector<long>(terms_.begin() + from, terms_.end()));
}

bool Chain::operator<(const Chain& o) const {
  if (integer_part_ != o.integer_part_) return integer_part_ < o.integer_part_;
  return terms_ < o.terms_;
}

Chain concat(const Chain& a, const Chain& b) {
  std::vector<long> t = a.terms();
  t.insert(t.end(), b.terms().begin(), b.terms().end());
  return Chain(std::move(t), a.integer_part());
}

// ---------------------------------------------------------------- Mat2

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d,
          c * o.a + d * o.c, c * o.b + d * o.d};
}

// ------------------------------------------------------- QuadraticSurd

QuadraticSurd::QuadraticSurd(Int p, Int q, Int d, Int r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
  normalize(true);
}

QuadraticSurd::QuadraticSurd(Int p, Int q, Int d, Int r, NoReduce)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
  normalize(false);
}

void QuadraticSurd::normalize(bool reduce_square_part) {
  if (r_ == 0) throw std::domain_error("QuadraticSurd: zero denominator");
  if (q_ != 0 && d_ <= 0)
    throw std::domain_error("QuadraticSurd: nonpositive radicand");
  if (q_ != 0 && is_square(d_)) {
    p_ += q_ * isqrt(d_);
    q_ = 0;
  }
  if (q_ == 0) {
    d_ = 2;
  } else if (reduce_square_part) {
    square_reduce(d_, q_);
  }
  if (sgn(r_) < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  Int g = gcd(gcd(p_, q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

QuadraticSurd QuadraticSurd::from_rational(const Rat& x) {
  return QuadraticSurd(num(x), 0, 2, den(x), NoReduce{});
}

Rat QuadraticSurd::as_rational() const {
  if (!is_rational())
    throw std::domain_error("QuadraticSurd: irrational value");
  return make_rat(p_, r_);
}

int QuadraticSurd::sign() const { return sign_sqrt1(p_, q_, d_); }

QuadraticSurd QuadraticSurd::negated() const {
  return QuadraticSurd(-p_, -q_, d_, r_, NoReduce{});
}

QuadraticSurd QuadraticSurd::abs() const {
  return sign() < 0 ? negated() : *this;
}

QuadraticSurd QuadraticSurd::reciprocal() const {
  // r/(p + q*sqrt(d)) rationalized by the conjugate
  const Int norm = p_ * p_ - q_ * q_ * d_;
  if (norm == 0 || (q_ == 0 && p_ == 0))
    throw std::domain_error("QuadraticSurd: reciprocal of zero");
  return QuadraticSurd(r_ * p_, -r_ * q_, d_, norm, NoReduce{});
}

QuadraticSurd QuadraticSurd::plus(const Rat& x) const {
  return QuadraticSurd(p_ * den(x) + num(x) * r_, q_ * den(x), d_,
                       r_ * den(x), NoReduce{});
}

QuadraticSurd QuadraticSurd::minus(const Rat& x) const { return plus(-x); }

QuadraticSurd sub(const Rat& x, const QuadraticSurd& s) {
  return s.minus(x).negated();
}

int QuadraticSurd::cmp(const QuadraticSurd& o) const {
  return sign_sqrt2(p_ * o.r_ - o.p_ * r_, q_ * o.r_, d_, -o.q_ * r_, o.d_);
}

int QuadraticSurd::cmp(const Rat& x) const {
  return sign_sqrt1(p_ * den(x) - num(x) * r_, q_ * den(x), d_);
}

int surd_cmp(const QuadraticSurd& a, const QuadraticSurd& b) { return a.cmp(b); }
int surd_cmp(const QuadraticSurd& a, const Rat& b) { return a.cmp(b); }
int surd_cmp(const Rat& a, const QuadraticSurd& b) { return -b.cmp(a); }

std::string QuadraticSurd::decimal(std::size_t digits) const {
  if (is_rational()) return decimal_string(as_rational(), digits);
  // v*10^n lies in the open unit interval (lo, lo+1)/r / 10^g for growing
  // guard g; stop once both endpoints round to the same integer.  The value
  // is irrational, so this terminates.
  for (std::size_t guard = 8;; guard *= 2) {
    const Int scale = pow10(digits + guard);
    const Int s = isqrt(q_ * q_ * d_ * scale * scale);
    const Int lo = p_ * scale + (sgn(q_) > 0 ? s : -s - 1);
    const Int denom = r_ * pow10(guard);
    auto round_nearest = [&](const Int& x) {
      Int n = 2 * x + denom, fl;
      mpz_fdiv_q(fl.get_mpz_t(), n.get_mpz_t(), Int(2 * denom).get_mpz_t());
      return fl;
    };
    const Int r0 = round_nearest(lo), r1 = round_nearest(lo + 1);
    if (r0 == r1) {
      Int m = r0;
      const bool neg = sgn(m) < 0;
      if (neg) m = -m;
      std::string sdig = m.get_str();
      if (sdig.size() <= digits)
        sdig.insert(0, digits + 1 - sdig.size(), '0');
      sdig.insert(sdig.size() - digits, ".");
      return (neg ? "-" : "") + sdig;
    }
  }
}

double QuadraticSurd::to_double() const {
  return (p_.get_d() + q_.get_d() * std::sqrt(d_.get_d())) / r_.get_d();
}

std::string QuadraticSurd::str() const {
  if (is_rational()) {
    const Rat v = as_rational();
    return num(v).get_str() + (den(v) == 1 ? "" : "/" + den(v).get_str());
  }
  std::string out;
  if (p_ != 0) out += p_.get_str();
  if (q_ == 1)
    out += out.empty() ? "" : "+";
  else if (q_ == -1)
    out += "-";
  else
    out += (sgn(q_) > 0 && !out.empty() ? "+" : "") + q_.get_str() + "*";
  out += "sqrt(" + d_.get_str() + ")";
  if (r_ != 1) out = "(" + out + ")/" + r_.get_str();
  return out;
}

std::string decimal_string(const Rat& x, std::size_t digits) {
  Int n = num(x) * pow10(digits);
  const Int d = den(x);
  const bool neg = sgn(n) < 0;
  if (neg) n = -n;
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  const int c = cmp(2 * r, d);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;  // ties to even
  std::string s = q.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

// ------------------------------------------------------- CF operations

Rat rat_from_cf(const Chain& chain) {
  if (chain.empty()) throw std::domain_error("rat_from_cf: empty chain");
  Int p_prev = 1, p = chain.integer_part(), q_prev = 0, q = 1;
  for (long t : chain.terms()) {
    Int pn = t * p + p_prev, qn = t * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
  }
  return make_rat(p, q);
}

Rat rho(const Chain& chain) {
  if (chain.empty()) return Rat(0);
  return rat_from_cf(Chain(chain.terms(), 0));
}

Chain cf_from_rat(const Rat& value, Parity parity) {
  if (value <= 0 || value >= 1)
    throw std::domain_error("cf_from_rat: value must lie in (0,1)");
  Int x = den(value), y = num(value);
  std::vector<long> terms;
  while (y != 0) {
    Int t, r;
    mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    terms.push_back(t.get_si());
    x = y;
    y = r;
  }
  const bool want_even = parity == Parity::Even;
  if (parity != Parity::Canonical && (terms.size() % 2 == 0) != want_even) {
    terms.back() -= 1;  // last term >= 2 in the canonical expansion
    terms.push_back(1);
  }
  return Chain(std::move(terms), 0);
}

Mat2 matrix_of_chain(const Chain& chain) {
  if (chain.empty()) throw std::domain_error("matrix_of_chain: empty chain");
  Mat2 m = Mat2::identity();
  for (long t : chain.terms()) m = m * Mat2{t, 1, 1, 0};
  return m;
}

Rat mobius_apply(const Mat2& m, const Rat& x) {
  const Int n = m.a * num(x) + m.b * den(x);
  const Int d = m.c * num(x) + m.d * den(x);
  if (d == 0) throw std::domain_error("mobius_apply: pole");
  return make_rat(n, d);
}

QuadraticSurd mobius_apply(const Mat2& m, const QuadraticSurd& x) {
  if (x.is_rational())
    return QuadraticSurd::from_rational(mobius_apply(m, x.as_rational()));
  // numerator (m.a*p + m.b*r) + m.a*q*sqrt(d), denominator likewise; the
  // quotient is rationalized by the denominator's conjugate.
  const Int e = m.c * x.p() + m.d * x.r();
  const Int f = m.c * x.q();
  const Int norm = e * e - f * f * x.d();
  if (norm == 0) throw std::domain_error("mobius_apply: pole");
  const Int g = m.a * x.p() + m.b * x.r();
  const Int h = m.a * x.q();
  return QuadraticSurd(g * e - h * f * x.d(), h * e - g * f, x.d(), norm);
}

QuadraticSurd fixed_point(const Mat2& m) {
  if (m.c <= 0)
    throw std::domain_error("fixed_point: bottom-left entry must be positive");
  const Int disc = (m.a - m.d) * (m.a - m.d) + 4 * m.b * m.c;
  if (disc <= 0 || is_square(disc))
    throw std::domain_error("fixed_point: degenerate (rational) fixed point");
  return QuadraticSurd(m.a - m.d, 1, disc, 2 * m.c);
}

QuadraticSurd periodic_cf_value(const Chain& preperiod, const Chain& period) {
  if (period.empty())
    throw std::domain_error("periodic_cf_value: empty period");
  const QuadraticSurd tail = fixed_point(matrix_of_chain(period));
  Mat2 m = Mat2{0, 1, 1, 0};  // leading partial quotient 0
  if (!preperiod.empty()) m = m * matrix_of_chain(preperiod);
  return mobius_apply(m, tail);
}

}  // namespace zspec
