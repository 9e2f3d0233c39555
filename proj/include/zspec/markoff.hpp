#pragma once

// Markoff triples, the trace triple of a Nielsen word, the z' congruence and
// the matrix shape of M_{Psi(ab)}, and the exact limit points
// 2m/(sqrt(9m^2-4)+3m) of the spectrum above 1/3.

#include "zspec/nielsen.hpp"
#include "zspec/rational_core.hpp"

namespace zspec {

// Positive solution of x^2 + y^2 + z^2 = 3xyz with pairwise coprime entries.
struct MarkoffTriple {
  Int x, y, z;

  MarkoffTriple(Int x, Int y, Int z);
  MarkoffTriple sorted() const;
  bool operator==(const MarkoffTriple&) const = default;
};

struct LimitPoint {
  Int m;
  QuadraticSurd value;
};

// All triples (sorted ascending) with largest coordinate <= max_value,
// generated from (1,1,1) by the Vieta moves; lexicographically ordered.
std::vector<MarkoffTriple> markoff_tree(const Int& max_value);

// (Tr M_{Psi(a)}, Tr M_{Psi(b)}, Tr M_{Psi(ab)}) / 3; the divisions must be
// exact and the result a valid triple, else ClassificationViolation.
MarkoffTriple trace_triple(const NielsenWord& psi);

// The unique 0 < z' < z with x + y*z' == 0 (mod z); needs z >= 2.
Int z_prime(const MarkoffTriple& t);

// M_{Psi(ab)} == [[3z - z', *], [z, z']].
bool matrix_form_check(const NielsenWord& psi);

// Exact value 2m/(sqrt(9m^2-4)+3m) in canonical form.
LimitPoint limit_point(const Int& m);

// 1/([Pi2 periodized-Pi]^-1 + [Pi]); equals limit_point(trace z) exactly.
QuadraticSurd limit_of_family(const NielsenWord& psi);

}  // namespace zspec
