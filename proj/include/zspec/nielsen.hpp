#pragma once

// Nielsen substitutions U: a->ab, b->b and V: a->a, b->ab, their adjusted
// variants Ubar(T) = b*U(T) and Vbar(T) = a^-1*V(T), the reduction of an
// admissible word to the base b(ab)^k, the symmetric section Pi1*Pi2 of
// Psi(ab), and the generated family r_k^Psi with its closed-form Z value.

#include "zspec/chains.hpp"
#include "zspec/rational_core.hpp"

namespace zspec {

// Word over {U, V}.  A word s1 s2 ... st acts as s1 o s2 o ... o st: the
// rightmost letter is applied first.
class NielsenWord {
 public:
  NielsenWord() = default;
  explicit NielsenWord(std::string letters);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const NielsenWord&) const = default;
  bool operator<(const NielsenWord& o) const { return letters_ < o.letters_; }

 private:
  std::string letters_;
};

// Signals that a computation contradicts the classification the library is
// built around; any throw of this in the test suite is a failure.
class ClassificationViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

ABWord apply_nielsen(const NielsenWord& w, const ABWord& x);
ABWord apply_ubar(const ABWord& t);
ABWord apply_vbar(const ABWord& t);
// The corresponding word on Ubar/Vbar, rightmost letter applied first.
ABWord apply_a_nielsen(const NielsenWord& w, const ABWord& x);

enum class NielsenLetter { U, V };

struct BarReduction {
  NielsenLetter letter;
  ABWord preimage;
};

// One inverse A-Nielsen step on a mixed admissible word: Type I words invert
// through Ubar, Type II through Vbar; the preimage is strictly shorter and
// the apply round-trip is checked.  Returns nothing exactly on b(ab)^k.
std::optional<BarReduction> bar_reduce(const ABWord& t);

struct Decomposition {
  NielsenWord psi;
  long k;
};

// Repeated bar_reduce down to b(ab)^k; leftmost letter of psi was peeled
// first (outermost).  apply_a_nielsen(psi, b(ab)^k) reproduces the input.
Decomposition decompose(const ABWord& t);

// The two palindromic halves of Psi(ab): Pi1 bounded by a, Pi2 by b.
struct SymmetricSection {
  ABWord pi1, pi2;
};

SymmetricSection symmetric_section(const NielsenWord& psi);

// Chain of Pi2 (Pi1 Pi2)^k.
Chain build_r(const NielsenWord& psi, long k);

// Z(r_k^Psi) = ( [Pi] + 1/[Pi2 Pi^{k-1}] )^-1 with [.] the chain value read
// with its first term as integer part.
Rat z_closed_form(const NielsenWord& psi, long k);

struct NielsenRecord {
  NielsenWord psi;
  long k;
  Chain chain;
  Rat rho;
  Rat z;
};

// Every (psi, k) whose r_k^Psi has denominator(rho) <= max_denominator,
// ordered by |psi|, then psi lexicographically, then k.  Finite: the
// denominator grows strictly under both word extension and k.
std::vector<NielsenRecord> enumerate_admissible(long max_denominator);

}  // namespace zspec
