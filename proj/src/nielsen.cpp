#include "zspec/nielsen.hpp"

#include <algorithm>

namespace zspec {

namespace {

std::string substitute(char move, const std::string& w) {
  std::string out;
  out.reserve(w.size() * 2);
  for (char c : w) {
    if (move == 'U')
      out += (c == 'a') ? "ab" : "b";
    else
      out += (c == 'a') ? "a" : "ab";
  }
  return out;
}

// Inverse of U on its image: every 'a' consumes the following 'b'.
std::optional<std::string> u_inverse(const std::string& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    if (w[i] == 'a') {
      if (i + 1 >= w.size() || w[i + 1] != 'b') return std::nullopt;
      out += 'a';
      i += 2;
    } else {
      out += 'b';
      ++i;
    }
  }
  return out;
}

// Inverse of V on its image: every 'b' consumes the preceding 'a'.
std::optional<std::string> v_inverse(const std::string& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    if (w[i] == 'b') return std::nullopt;
    if (i + 1 < w.size() && w[i + 1] == 'b') {
      out += 'b';
      i += 2;
    } else {
      out += 'a';
      ++i;
    }
  }
  return out;
}

bool is_alternating_base(const std::string& w) {
  if (w.size() % 2 == 0 || w.front() != 'b') return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != (i % 2 == 0 ? 'b' : 'a')) return false;
  return w.size() >= 3;
}

bool is_mixed(const std::string& w) {
  return w.find('a') != std::string::npos && w.find('b') != std::string::npos;
}

}  // namespace

NielsenWord::NielsenWord(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (c != 'U' && c != 'V')
      throw std::invalid_argument("NielsenWord: letters must be U or V");
}

ABWord apply_nielsen(const NielsenWord& w, const ABWord& x) {
  std::string s = x.letters();
  const std::string& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) s = substitute(*it, s);
  return ABWord(s);
}

ABWord apply_ubar(const ABWord& t) {
  return ABWord("b" + substitute('U', t.letters()));
}

ABWord apply_vbar(const ABWord& t) {
  const std::string s = substitute('V', t.letters());
  if (s.empty() || s.front() != 'a')
    throw std::domain_error("apply_vbar: image does not start with a");
  return ABWord(s.substr(1));
}

ABWord apply_a_nielsen(const NielsenWord& w, const ABWord& x) {
  ABWord t = x;
  const std::string& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it)
    t = (*it == 'U') ? apply_ubar(t) : apply_vbar(t);
  return t;
}

std::optional<BarReduction> bar_reduce(const ABWord& t) {
  const std::string& w = t.letters();
  if (!is_mixed(w))
    throw std::domain_error("bar_reduce: word must contain both letters");
  const CharSeq cs = characteristic_sequence(t);  // validates the shape
  if (!is_admissible(chain_from_word(t)))
    throw std::domain_error("bar_reduce: word is not admissible");
  if (is_alternating_base(w)) return std::nullopt;

  // Ubar images are exactly the Type I words, Vbar images the Type II ones
  // (U isolates a's, V isolates b's).
  BarReduction red;
  if (cs.type == WordType::TypeI) {
    const auto pre = u_inverse(w.substr(1));
    if (w.front() != 'b' || !pre)
      throw std::domain_error("bar_reduce: not a Ubar image");
    red = {NielsenLetter::U, ABWord(*pre)};
    if (!(apply_ubar(red.preimage) == t))
      throw ClassificationViolation("bar_reduce: Ubar round-trip failed");
  } else {
    const auto pre = v_inverse("a" + w);
    if (!pre) throw std::domain_error("bar_reduce: not a Vbar image");
    red = {NielsenLetter::V, ABWord(*pre)};
    if (!(apply_vbar(red.preimage) == t))
      throw ClassificationViolation("bar_reduce: Vbar round-trip failed");
  }
  if (red.preimage.size() >= t.size())
    throw ClassificationViolation("bar_reduce: preimage did not shrink");
  return red;
}

Decomposition decompose(const ABWord& t) {
  if (!is_mixed(t.letters()))
    throw std::domain_error("decompose: word must contain both letters");
  std::string letters;
  ABWord cur = t;
  while (auto red = bar_reduce(cur)) {
    letters += red->letter == NielsenLetter::U ? 'U' : 'V';
    cur = red->preimage;
  }
  const Decomposition result{NielsenWord(letters),
                             static_cast<long>(cur.size() / 2)};
  if (!(apply_a_nielsen(result.psi, cur) == t))
    throw ClassificationViolation("decompose: reassembly mismatch");
  return result;
}

SymmetricSection symmetric_section(const NielsenWord& psi) {
  std::string pi1 = "a", pi2 = "b";
  const std::string& ls = psi.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    if (*it == 'U') {
      std::string s = substitute('U', pi1);  // ends with b: pi1 ends with a
      s.pop_back();
      pi1 = s;
      pi2 = "b" + substitute('U', pi2);
    } else {
      pi1 = substitute('V', pi1) + "a";
      std::string s = substitute('V', pi2);  // starts with a: pi2 starts
      pi2 = s.substr(1);                     // with b, V(b) = ab
    }
  }
  return {ABWord(pi1), ABWord(pi2)};
}

Chain build_r(const NielsenWord& psi, long k) {
  if (k < 1) throw std::domain_error("build_r: k must be >= 1");
  const SymmetricSection sec = symmetric_section(psi);
  std::string w = sec.pi2.letters();
  for (long i = 0; i < k; ++i)
    w += sec.pi1.letters() + sec.pi2.letters();
  return chain_from_word(ABWord(w));
}

Rat z_closed_form(const NielsenWord& psi, long k) {
  if (k < 1) throw std::domain_error("z_closed_form: k must be >= 1");
  const SymmetricSection sec = symmetric_section(psi);
  const std::string pi = sec.pi1.letters() + sec.pi2.letters();
  std::string tail = sec.pi2.letters();
  for (long i = 0; i + 1 < k; ++i) tail += pi;
  const Rat bracket = Rat(1) / rho(chain_from_word(ABWord(pi)));
  return Rat(1) / (bracket + rho(chain_from_word(ABWord(tail))));
}

std::vector<NielsenRecord> enumerate_admissible(long max_denominator) {
  if (max_denominator < 2)
    throw std::domain_error("enumerate_admissible: bound must be >= 2");
  std::vector<NielsenRecord> out;
  for (std::size_t len = 0;; ++len) {
    bool any_fit = false;
    for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
      std::string letters(len, 'U');
      for (std::size_t i = 0; i < len; ++i)
        if (bits >> (len - 1 - i) & 1) letters[i] = 'V';
      const NielsenWord psi(letters);
      for (long k = 1;; ++k) {
        const Chain r = build_r(psi, k);
        const Rat value = rho(r);
        if (den(value) > max_denominator) break;
        any_fit = true;
        out.push_back({psi, k, r, value, z_closed_form(psi, k)});
      }
    }
    if (!any_fit) break;  // denominators only grow under word extension
  }
  return out;
}

}  // namespace zspec
