#include "zspec/markoff.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

namespace zspec {

namespace {

std::array<Int, 3> sorted_coords(const Int& x, const Int& y, const Int& z) {
  std::array<Int, 3> a{x, y, z};
  std::sort(a.begin(), a.end());
  return a;
}

Int exact_third(const Int& t) {
  if (t % 3 != 0)
    throw ClassificationViolation("trace_triple: trace not divisible by 3");
  return t / 3;
}

}  // namespace

MarkoffTriple::MarkoffTriple(Int x, Int y, Int z)
    : x(std::move(x)), y(std::move(y)), z(std::move(z)) {
  if (this->x <= 0 || this->y <= 0 || this->z <= 0)
    throw std::domain_error("MarkoffTriple: entries must be positive");
  if (this->x * this->x + this->y * this->y + this->z * this->z !=
      3 * this->x * this->y * this->z)
    throw std::domain_error("MarkoffTriple: not a Markoff solution");
  if (gcd(this->x, this->y) != 1 || gcd(this->y, this->z) != 1 ||
      gcd(this->x, this->z) != 1)
    throw std::domain_error("MarkoffTriple: entries share a prime factor");
}

MarkoffTriple MarkoffTriple::sorted() const {
  const auto a = sorted_coords(x, y, z);
  return {a[0], a[1], a[2]};
}

std::vector<MarkoffTriple> markoff_tree(const Int& max_value) {
  std::vector<MarkoffTriple> out;
  if (max_value < 1) return out;
  std::set<std::array<Int, 3>> seen;
  std::deque<std::array<Int, 3>> queue;
  seen.insert({1, 1, 1});
  queue.push_back({1, 1, 1});
  while (!queue.empty()) {
    const auto [x, y, z] = queue.front();
    queue.pop_front();
    for (const auto& next : {sorted_coords(3 * y * z - x, y, z),
                             sorted_coords(x, 3 * x * z - y, z),
                             sorted_coords(x, y, 3 * x * y - z)}) {
      if (next[2] <= max_value && seen.insert(next).second)
        queue.push_back(next);
    }
  }
  for (const auto& t : seen) out.push_back({t[0], t[1], t[2]});
  return out;
}

MarkoffTriple trace_triple(const NielsenWord& psi) {
  const auto trace_of = [&](const char* base) {
    const ABWord w = apply_nielsen(psi, ABWord(base));
    return matrix_of_chain(chain_from_word(w)).trace();
  };
  const Int x = exact_third(trace_of("a"));
  const Int y = exact_third(trace_of("b"));
  const Int z = exact_third(trace_of("ab"));
  try {
    return {x, y, z};
  } catch (const std::domain_error& e) {
    throw ClassificationViolation(std::string("trace_triple: ") + e.what());
  }
}

Int z_prime(const MarkoffTriple& t) {
  if (t.z < 2) throw std::domain_error("z_prime: z must be >= 2");
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), t.y.get_mpz_t(), t.z.get_mpz_t()) == 0)
    throw ClassificationViolation("z_prime: y not invertible mod z");
  Int zp = (-t.x * inv) % t.z;
  if (zp < 0) zp += t.z;
  if (zp == 0)
    throw ClassificationViolation("z_prime: no solution in (0, z)");
  return zp;
}

bool matrix_form_check(const NielsenWord& psi) {
  const Mat2 m = matrix_of_chain(chain_from_word(apply_nielsen(psi, ABWord("ab"))));
  const MarkoffTriple t = trace_triple(psi);
  const Int zp = z_prime(t);
  return m.c == t.z && m.d == zp && m.a == 3 * t.z - zp;
}

LimitPoint limit_point(const Int& m) {
  if (m < 1) throw std::domain_error("limit_point: m must be >= 1");
  // 2m/(sqrt(9m^2-4)+3m) rationalized by the conjugate: the denominator
  // norm is (9m^2-4) - 9m^2 = -4.
  return {m, QuadraticSurd(3 * m * m, -m, 9 * m * m - 4, 2)};
}

QuadraticSurd limit_of_family(const NielsenWord& psi) {
  const SymmetricSection sec = symmetric_section(psi);
  const Chain pi = chain_from_word(sec.pi1 + sec.pi2);
  const Chain pi2 = chain_from_word(sec.pi2);
  const QuadraticSurd periodic = periodic_cf_value(pi2, pi);
  const Rat bracket = Rat(1) / rho(pi);
  return periodic.plus(bracket).reciprocal();
}

}  // namespace zspec
