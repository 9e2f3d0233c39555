#pragma once

// The Z function: Z(a/b) = min_{0<q<b} q*||q*a/b||, computed three ways —
// direct minimization, Perron's section formula, and the lattice form
// lambda_1^* of the integer lattice {(u,v): u*g1 + v*g2 == 0 mod p}.

#include "zspec/chains.hpp"
#include "zspec/rational_core.hpp"

namespace zspec {

enum class ZMethod { BruteForce, Perron, Lattice };

struct ZResult {
  Rat value;
  ZMethod method;
  // Smallest minimizing q for BruteForce, smallest maximizing section index
  // (1-based) for Perron.
  long witness = 0;
};

struct LatticeSpec {
  long p;
  long g1, g2;

  LatticeSpec(long p, long g1, long g2);
};

ZResult z_bruteforce(long a, long b);
ZResult z_bruteforce(const Rat& value);

ZResult z_perron(long a, long b);
ZResult z_perron(const Rat& value);

// p^-1 * min |u*v| over nonzero-product lattice vectors, enumerating one
// coordinate over 1..p-1 and taking the absolutely least nonzero
// representative of the other; residue 0 contributes |v| = p.  Any vector
// with |u| >= p is dominated by its reduction mod p, so the range suffices.
Rat lattice_lambda(const LatticeSpec& spec);

}  // namespace zspec
