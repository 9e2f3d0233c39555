#pragma once

// Assembly of the classified spectrum above 1/3 (Fibonacci family, all-twos
// family, Nielsen family), the exhaustive brute-force spectrum, and their
// comparison; plus the family R(n1,...,nk) of points just below 1/3 and the
// table of exact limit points.

#include "zspec/markoff.hpp"
#include "zspec/nielsen.hpp"
#include "zspec/rational_core.hpp"

namespace zspec {

struct Provenance {
  enum class Family { Fibonacci, AllTwos, Nielsen } family;
  long n = 0;       // Fibonacci index or all-twos length parameter
  NielsenWord psi;  // Nielsen family only
  long k = 0;       //
  Rat witness;      // a rho with Z(rho) = value

  std::string str() const;
};

struct SpectrumPoint {
  Rat value;
  Rat witness;  // representative: the first provenance's witness
  Int denominator;
  std::vector<Provenance> provenances;
};

// Candidate F_{n-2}/F_n with witness F_{n-1}/F_n (F_1 = F_2 = 1, n >= 3);
// empty when the value is not strictly above 1/3 (exactly n = 4).
std::optional<SpectrumPoint> fibonacci_family(long n);

// Candidate (1/2 + [2; 2 x n])^-1 with witness [0; 2 x (n+2)], any n >= 0;
// empty when the value is not strictly above 1/3 (exactly n = 1).
std::optional<SpectrumPoint> all_twos_family(long n);

// Union of the three families restricted to witnesses with denominator
// <= max_denominator, deduplicated by value with all provenances kept,
// sorted by value ascending.
std::vector<SpectrumPoint> classified_spectrum(long max_denominator);

struct BruteEntry {
  Rat value;
  std::vector<Rat> witnesses;  // every reduced a/b with Z(a/b) = value
};

// Exhaustive sweep over all reduced a/b with b <= max_denominator, keeping
// values strictly above the threshold; sorted by value ascending.
std::vector<BruteEntry> bruteforce_spectrum(long max_denominator,
                                            const Rat& threshold);

struct VerificationReport {
  long bound = 0;
  std::vector<Rat> brute_values;
  std::vector<Rat> classified_values;
  std::vector<Rat> missing_from_classified;
  std::vector<Rat> missing_from_brute;
  bool agree = false;
};

VerificationReport verify_classification(long max_denominator);

// The chain 1 x n1, 2,2, 1 x n2, 2,2, ..., 2,2, 1 x nk  (k >= 2).
Chain construct_R(const std::vector<long>& ns);

struct BelowThirdResult {
  Rat z;
  bool in_window = false;  // 0 < z < 1/3 strictly
  Rat epsilon_bound;       // 1/3 - z
  bool section_formula_applies = false;  // n2 even and strictly maximal
};

// Z of construct_R(ns) for n1 odd and n1 < ni for all i >= 2.  When n2 is
// even and strictly maximal the first-2-block section formula is evaluated
// and checked against the direct value.
BelowThirdResult below_third_value(const std::vector<long>& ns);

// 1/([2; 2, 1 x n2, 2,2, ..., 1 x nk] + [0; 1 x n1]); requires the
// n2-even-and-maximal shape.
Rat below_third_section_formula(const std::vector<long>& ns);

struct LimitTableEntry {
  Int m;
  QuadraticSurd value;
  std::string decimal;
};

// One entry per Markoff number m <= max_m, ascending.
std::vector<LimitTableEntry> limit_points_above_third(const Int& max_m,
                                                      std::size_t digits);

Int fibonacci(long n);  // F_1 = F_2 = 1

}  // namespace zspec
