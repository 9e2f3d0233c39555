#include "zspec/spectrum.hpp"

#include "zspec/zaremba.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace zspec {

namespace {

const Rat kThird = make_rat(1, 3);

Chain twos(long n) { return Chain(std::vector<long>(n, 2)); }
Chain ones(long n) { return Chain(std::vector<long>(n, 1)); }

void validate_below_third(const std::vector<long>& ns) {
  if (ns.size() < 2)
    throw std::domain_error("below_third: need at least two block lengths");
  for (long n : ns)
    if (n < 1) throw std::domain_error("below_third: lengths must be >= 1");
  if (ns[0] % 2 == 0)
    throw std::domain_error("below_third: n1 must be odd");
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[0])
      throw std::domain_error("below_third: n1 must be smaller than every ni");
}

bool n2_even_maximal(const std::vector<long>& ns) {
  if (ns.size() < 2 || ns[1] % 2 != 0) return false;
  for (std::size_t i = 0; i < ns.size(); ++i)
    if (i != 1 && ns[i] >= ns[1]) return false;
  return true;
}

}  // namespace

Int fibonacci(long n) {
  if (n < 1) throw std::domain_error("fibonacci: n must be >= 1");
  Int a = 1, b = 1;
  for (long i = 2; i < n; ++i) {
    Int c = a + b;
    a = b;
    b = c;
  }
  return b;
}

std::string Provenance::str() const {
  switch (family) {
    case Family::Fibonacci: return "fibonacci(n=" + std::to_string(n) + ")";
    case Family::AllTwos: return "all_twos(n=" + std::to_string(n) + ")";
    case Family::Nielsen:
      return "nielsen(psi=" + psi.letters() + ",k=" + std::to_string(k) + ")";
  }
  return "?";
}

std::optional<SpectrumPoint> fibonacci_family(long n) {
  if (n < 3) throw std::domain_error("fibonacci_family: n must be >= 3");
  const Rat value = make_rat(fibonacci(n - 2), fibonacci(n));
  if (value <= kThird) return std::nullopt;
  const Rat witness = make_rat(fibonacci(n - 1), fibonacci(n));
  return SpectrumPoint{value, witness, den(witness),
                       {{Provenance::Family::Fibonacci, n, {}, 0, witness}}};
}

std::optional<SpectrumPoint> all_twos_family(long n) {
  if (n < 0) throw std::domain_error("all_twos_family: n must be >= 0");
  const Rat bracket = Rat(1) / rho(twos(n + 1));  // [2; 2 x n]
  const Rat value = Rat(1) / (make_rat(1, 2) + bracket);
  if (value <= kThird) return std::nullopt;  // exactly n = 1
  const Rat witness = rho(twos(n + 2));
  return SpectrumPoint{value, witness, den(witness),
                       {{Provenance::Family::AllTwos, n, {}, 0, witness}}};
}

std::vector<SpectrumPoint> classified_spectrum(long max_denominator) {
  if (max_denominator < 2)
    throw std::domain_error("classified_spectrum: bound must be >= 2");
  std::map<Rat, SpectrumPoint> points;
  const auto add = [&](const SpectrumPoint& p) {
    auto [it, fresh] = points.emplace(p.value, p);
    if (!fresh)
      it->second.provenances.push_back(p.provenances.front());
  };
  for (long n = 3; fibonacci(n) <= max_denominator; ++n)
    if (auto p = fibonacci_family(n)) add(*p);
  for (long n = 0; den(rho(twos(n + 2))) <= max_denominator; ++n)
    if (auto p = all_twos_family(n)) add(*p);
  for (const NielsenRecord& rec : enumerate_admissible(max_denominator))
    add({rec.z,
         rec.rho,
         den(rec.rho),
         {{Provenance::Family::Nielsen, 0, rec.psi, rec.k, rec.rho}}});
  std::vector<SpectrumPoint> out;
  out.reserve(points.size());
  for (auto& [value, p] : points) out.push_back(std::move(p));
  return out;
}

std::vector<BruteEntry> bruteforce_spectrum(long max_denominator,
                                            const Rat& threshold) {
  if (max_denominator < 2)
    throw std::domain_error("bruteforce_spectrum: bound must be >= 2");
  std::map<Rat, std::vector<Rat>> grouped;
  for (long b = 2; b <= max_denominator; ++b)
    for (long a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Rat z = z_bruteforce(a, b).value;
      if (z > threshold) grouped[z].push_back(make_rat(a, b));
    }
  std::vector<BruteEntry> out;
  out.reserve(grouped.size());
  for (auto& [value, wits] : grouped) out.push_back({value, std::move(wits)});
  return out;
}

VerificationReport verify_classification(long max_denominator) {
  VerificationReport rep;
  rep.bound = max_denominator;
  for (const auto& e : bruteforce_spectrum(max_denominator, kThird))
    rep.brute_values.push_back(e.value);
  for (const auto& p : classified_spectrum(max_denominator))
    rep.classified_values.push_back(p.value);
  std::set_difference(rep.brute_values.begin(), rep.brute_values.end(),
                      rep.classified_values.begin(),
                      rep.classified_values.end(),
                      std::back_inserter(rep.missing_from_classified));
  std::set_difference(rep.classified_values.begin(),
                      rep.classified_values.end(), rep.brute_values.begin(),
                      rep.brute_values.end(),
                      std::back_inserter(rep.missing_from_brute));
  rep.agree =
      rep.missing_from_classified.empty() && rep.missing_from_brute.empty();
  return rep;
}

Chain construct_R(const std::vector<long>& ns) {
  if (ns.size() < 2)
    throw std::domain_error("construct_R: need at least two block lengths");
  std::vector<long> t;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1)
      throw std::domain_error("construct_R: lengths must be >= 1");
    if (i) {
      t.push_back(2);
      t.push_back(2);
    }
    t.insert(t.end(), ns[i], 1);
  }
  return Chain(std::move(t));
}

BelowThirdResult below_third_value(const std::vector<long>& ns) {
  validate_below_third(ns);
  const Chain chain = construct_R(ns);
  BelowThirdResult res;
  res.z = Rat(1) / perron_value(chain).value;
  res.in_window = res.z > 0 && res.z < kThird;
  res.epsilon_bound = kThird - res.z;
  res.section_formula_applies = n2_even_maximal(ns);
  if (res.section_formula_applies &&
      below_third_section_formula(ns) != res.z)
    throw ClassificationViolation(
        "below_third_value: section formula disagrees with Perron");
  return res;
}

Rat below_third_section_formula(const std::vector<long>& ns) {
  validate_below_third(ns);
  if (!n2_even_maximal(ns))
    throw std::domain_error(
        "below_third_section_formula: needs n2 even and strictly maximal");
  std::vector<long> tail;
  for (std::size_t i = 1; i < ns.size(); ++i) {
    tail.push_back(2);
    tail.push_back(2);
    tail.insert(tail.end(), ns[i], 1);
  }
  const Rat bracket = Rat(1) / rho(Chain(std::move(tail)));
  return Rat(1) / (bracket + rho(ones(ns[0])));
}

std::vector<LimitTableEntry> limit_points_above_third(const Int& max_m,
                                                      std::size_t digits) {
  std::set<Int> numbers;
  for (const MarkoffTriple& t : markoff_tree(max_m)) {
    numbers.insert(t.x);
    numbers.insert(t.y);
    numbers.insert(t.z);
  }
  std::vector<LimitTableEntry> out;
  for (const Int& m : numbers) {
    const LimitPoint lp = limit_point(m);
    out.push_back({m, lp.value, lp.value.decimal(digits)});
  }
  return out;
}

}  // namespace zspec
