#pragma once

// Chains over {1,2}: sections and their values, Perron's formula for the
// worst section, the admissibility filter built from the small-subchain
// lemmata, and the word encoding a = (2,2), b = (1,1).

#include "zspec/rational_core.hpp"

namespace zspec {

// Split of a chain into R = first split_index terms and S = the rest.
struct Section {
  Chain chain;
  std::size_t split_index = 0;

  Chain r() const { return chain.prefix(split_index); }
  Chain s() const { return chain.suffix(split_index); }
};

// Word over the letters a, b.
class ABWord {
 public:
  ABWord() = default;
  explicit ABWord(std::string letters);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  ABWord reversed() const;

  bool operator==(const ABWord&) const = default;
  bool operator<(const ABWord& o) const { return letters_ < o.letters_; }

 private:
  std::string letters_;
};

ABWord operator+(const ABWord& x, const ABWord& y);

enum class WordType { TypeI, TypeII };

// Type I:  b^{e1} a b^{e2} a ... a b^{en}   (isolated a's)
// Type II: b a^{e1} b a^{e2} ... a^{en} b   (isolated b's)
struct CharSeq {
  WordType type;
  std::vector<long> exponents;

  bool operator==(const CharSeq&) const = default;
};

enum class RejectTag {
  Contains121,
  Contains212,
  OddCluster,
  BothLettersExceedTwo,
  BadEndpoints,
  SectionBelowThird,
};

struct RejectionReason {
  RejectTag tag;
  std::size_t location = 0;  // index in the chain where the test fails

  bool operator==(const RejectionReason&) const = default;
};

std::string reject_tag_name(RejectTag tag);

// Rewrites the two end identifications  [...2] == [...11]  and
// [11...] == [2...]  until the chain starts and ends with an even (possibly
// zero) number of 2's.  Idempotent; preserves the Z value, not the rational.
Chain canonicalize_chain(const Chain& chain);

Chain reverse_chain(const Chain& chain);

// Z(R|S) = 1/(rho(R*) + 1/rho(S)); R may be empty, S may not.
Rat section_value(const Section& s);

struct PerronResult {
  Rat value;                  // max_i [a_i;a_{i+1},..,a_n] + [0;a_{i-1},..,a_1]
  std::size_t witness_index;  // smallest maximizing i, 1-based
};

PerronResult perron_value(const Chain& chain);

// Chain ordering: T1 < T2 iff rho(T1) > rho(T2).
bool chain_less(const Chain& t1, const Chain& t2);

// First applicable small-lemma violation, or nothing.  A pass certifies
// nothing; every reported rejection implies Z <= 1/3.  Requires a canonical
// chain over {1,2}.  Chains identified with a pure power [0;2^m] (the word
// shapes a^j b / b a^j and the middle form (1,1,2^odd,1,1)) are skipped by
// the endpoint and cluster tests: their Z values come from the all-twos
// family and may exceed 1/3.
std::optional<RejectionReason> quick_reject(const Chain& chain);

// Z(chain) > 1/3, decided exactly via Perron.
bool is_admissible(const Chain& chain);

// Bijection between even-clustered {1,2}-chains and ab-words.
ABWord word_from_chain(const Chain& chain);
Chain chain_from_word(const ABWord& word);

// The type and exponent sequence of a word that starts and ends with b.
// Alternating words b(ab)^k report as Type II with all-ones exponents.
CharSeq characteristic_sequence(const ABWord& word);

}  // namespace zspec
