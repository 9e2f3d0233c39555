#include "zspec/zaremba.hpp"

#include <numeric>

namespace zspec {

namespace {

constexpr long kMaxBrute = 3'000'000'000L;  // q*d stays within 64 bits

void check_fraction(long a, long b, const char* who) {
  if (b < 2) throw std::domain_error(std::string(who) + ": b must be >= 2");
  if (a <= 0 || a >= b)
    throw std::domain_error(std::string(who) + ": need 0 < a < b");
  if (std::gcd(a, b) != 1)
    throw std::domain_error(std::string(who) + ": a/b must be reduced");
}

std::pair<long, long> to_small_fraction(const Rat& value, const char* who) {
  if (!mpz_fits_slong_p(num(value).get_mpz_t()) ||
      !mpz_fits_slong_p(den(value).get_mpz_t()))
    throw std::domain_error(std::string(who) + ": fraction too large");
  return {num(value).get_si(), den(value).get_si()};
}

long inverse_mod(long x, long p) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), Int(x).get_mpz_t(), Int(p).get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: not invertible");
  return r.get_si();
}

}  // namespace

LatticeSpec::LatticeSpec(long p, long g1, long g2) : p(p), g1(g1), g2(g2) {
  if (p < 2) throw std::domain_error("LatticeSpec: p must be >= 2");
  if (std::gcd(std::gcd(std::abs(g1), std::abs(g2)), p) != 1)
    throw std::domain_error("LatticeSpec: g must be coprime to p");
}

ZResult z_bruteforce(long a, long b) {
  check_fraction(a, b, "z_bruteforce");
  if (b > kMaxBrute) throw std::domain_error("z_bruteforce: b too large");
  long best = 0, witness = 0, r = 0;
  for (long q = 1; q < b; ++q) {
    r += a;
    if (r >= b) r -= b;
    const long d = std::min(r, b - r);
    const long cand = q * d;
    if (witness == 0 || cand < best) {
      best = cand;
      witness = q;
    }
  }
  return {make_rat(best, b), ZMethod::BruteForce, witness};
}

ZResult z_bruteforce(const Rat& value) {
  const auto [a, b] = to_small_fraction(value, "z_bruteforce");
  return z_bruteforce(a, b);
}

ZResult z_perron(const Rat& value) {
  if (value <= 0 || value >= 1 || den(value) < 2)
    throw std::domain_error("z_perron: need a reduced fraction in (0,1)");
  const PerronResult pr = perron_value(cf_from_rat(value, Parity::Canonical));
  return {Rat(1) / pr.value, ZMethod::Perron,
          static_cast<long>(pr.witness_index)};
}

ZResult z_perron(long a, long b) {
  check_fraction(a, b, "z_perron");
  return z_perron(make_rat(a, b));
}

Rat lattice_lambda(const LatticeSpec& spec) {
  const long p = spec.p;
  if (p > kMaxBrute) throw std::domain_error("lattice_lambda: p too large");
  const bool g2_unit = std::gcd(std::abs(spec.g2) % p, p) == 1;
  const bool g1_unit = std::gcd(std::abs(spec.g1) % p, p) == 1;
  if (!g2_unit && !g1_unit)
    throw std::domain_error(
        "lattice_lambda: neither coordinate of g is invertible mod p");
  // v == -g1*g2^-1 * u (mod p), or the same with the roles of u, v swapped.
  const long gn = g2_unit ? spec.g1 : spec.g2;
  const long gd = g2_unit ? spec.g2 : spec.g1;
  const Int m_big = ((-Int(gn) * inverse_mod(((gd % p) + p) % p, p)) % p + p) % p;
  const long m = m_big.get_si();
  long best = 0, r = 0;
  for (long u = 1; u < p; ++u) {
    r += m;
    if (r >= p) r -= p;
    const long v = r == 0 ? p : std::min(r, p - r);
    const long cand = u * v;
    if (best == 0 || cand < best) best = cand;
  }
  return make_rat(best, p);
}

}  // namespace zspec
