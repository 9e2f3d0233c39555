#include "zspec/chains.hpp"

#include <algorithm>

namespace zspec {

namespace {

struct Run {
  long term;
  std::size_t length;
  std::size_t start;
};

std::vector<Run> run_lengths(const Chain& chain) {
  std::vector<Run> out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!out.empty() && out.back().term == chain[i]) {
      ++out.back().length;
    } else {
      out.push_back({chain[i], 1, i});
    }
  }
  return out;
}

void require_terms_12(const Chain& chain, const char* who) {
  for (long t : chain.terms())
    if (t != 1 && t != 2)
      throw std::domain_error(std::string(who) + ": terms must be 1 or 2");
}

std::size_t leading_two_run(const std::vector<long>& t) {
  std::size_t n = 0;
  while (n < t.size() && t[n] == 2) ++n;
  return n;
}

std::size_t trailing_two_run(const std::vector<long>& t) {
  std::size_t n = 0;
  while (n < t.size() && t[t.size() - 1 - n] == 2) ++n;
  return n;
}

// Replace an odd trailing block of 2's using [...2] == [...11].
void fix_tail(std::vector<long>& t) {
  if (trailing_two_run(t) % 2 == 1) {
    t.pop_back();
    t.push_back(1);
    t.push_back(1);
  }
}

std::optional<std::size_t> find_subchain(const Chain& chain,
                                         std::initializer_list<long> pat) {
  const auto& t = chain.terms();
  const std::vector<long> p(pat);
  if (t.size() < p.size()) return std::nullopt;
  for (std::size_t i = 0; i + p.size() <= t.size(); ++i)
    if (std::equal(p.begin(), p.end(), t.begin() + i)) return i;
  return std::nullopt;
}

// Word shapes a^j b and b a^j, and the chain (1,1,2^odd,1,1), are the
// canonical avatars of the pure chains [0;2^m] with m odd; the endpoint and
// even-cluster lemmata do not apply to them.
bool is_pure_power_avatar_word(const std::string& w) {
  if (w.size() < 2) return false;
  const auto all_a = [](auto first, auto last) {
    return std::all_of(first, last, [](char c) { return c == 'a'; });
  };
  if (w.front() == 'b' && all_a(w.begin() + 1, w.end())) return true;
  if (w.back() == 'b' && all_a(w.begin(), w.end() - 1)) return true;
  return false;
}

bool is_pure_power_middle_form(const std::vector<Run>& runs) {
  return runs.size() == 3 && runs[0].term == 1 && runs[0].length == 2 &&
         runs[1].term == 2 && runs[1].length % 2 == 1 && runs[2].length == 2;
}

}  // namespace

ABWord::ABWord(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (c != 'a' && c != 'b')
      throw std::invalid_argument("ABWord: letters must be a or b");
}

ABWord ABWord::reversed() const {
  return ABWord(std::string(letters_.rbegin(), letters_.rend()));
}

ABWord operator+(const ABWord& x, const ABWord& y) {
  return ABWord(x.letters() + y.letters());
}

std::string reject_tag_name(RejectTag tag) {
  switch (tag) {
    case RejectTag::Contains121: return "Contains121";
    case RejectTag::Contains212: return "Contains212";
    case RejectTag::OddCluster: return "OddCluster";
    case RejectTag::BothLettersExceedTwo: return "BothLettersExceedTwo";
    case RejectTag::BadEndpoints: return "BadEndpoints";
    case RejectTag::SectionBelowThird: return "SectionBelowThird";
  }
  return "?";
}

Chain canonicalize_chain(const Chain& chain) {
  require_terms_12(chain, "canonicalize_chain");
  std::vector<long> t = chain.terms();
  // Head rewrites are the tail rule applied to the reversed chain.
  while (leading_two_run(t) % 2 == 1 || trailing_two_run(t) % 2 == 1) {
    fix_tail(t);
    std::reverse(t.begin(), t.end());
    fix_tail(t);
    std::reverse(t.begin(), t.end());
  }
  return Chain(std::move(t), chain.integer_part());
}

Chain reverse_chain(const Chain& chain) { return chain.reversed(); }

Rat section_value(const Section& s) {
  const Chain right = s.s();
  if (right.empty())
    throw std::domain_error("section_value: S must be nonempty");
  const Rat r_star = rho(s.r().reversed());
  return Rat(1) / (r_star + Rat(1) / rho(right));
}

PerronResult perron_value(const Chain& chain) {
  if (chain.empty()) throw std::domain_error("perron_value: empty chain");
  const std::size_t n = chain.size();
  // heads[i] = [0; a_{i-1},...,a_1], tails[i] = [a_i; a_{i+1},...,a_n]
  std::vector<Rat> heads(n + 1), tails(n + 2);
  heads[1] = 0;
  for (std::size_t i = 2; i <= n; ++i)
    heads[i] = Rat(1) / (Rat(chain[i - 2]) + heads[i - 1]);
  tails[n] = chain[n - 1];
  for (std::size_t i = n - 1; i >= 1; --i)
    tails[i] = Rat(chain[i - 1]) + Rat(1) / tails[i + 1];
  Rat best;
  std::size_t wit = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const Rat v = tails[i] + heads[i];
    if (wit == 0 || v > best) {
      best = v;
      wit = i;
    }
  }
  return {best, wit};
}

bool chain_less(const Chain& t1, const Chain& t2) {
  if (t1.empty() || t2.empty())
    throw std::domain_error("chain_less: empty chain");
  return rho(t1) > rho(t2);
}

std::optional<RejectionReason> quick_reject(const Chain& chain) {
  require_terms_12(chain, "quick_reject");
  if (leading_two_run(chain.terms()) % 2 == 1 ||
      trailing_two_run(chain.terms()) % 2 == 1)
    throw std::domain_error("quick_reject: chain is not canonical");

  if (auto i = find_subchain(chain, {1, 2, 1}))
    return RejectionReason{RejectTag::Contains121, *i};
  if (chain.terms() != std::vector<long>{1, 1, 1, 1, 1}) {
    if (auto i = find_subchain(chain, {2, 1, 2}))
      return RejectionReason{RejectTag::Contains212, *i};
  }

  const auto runs = run_lengths(chain);
  const bool mixed = runs.size() > 1;
  if (mixed && !is_pure_power_middle_form(runs)) {
    for (const Run& r : runs)
      if (r.length % 2 == 1)
        return RejectionReason{RejectTag::OddCluster, r.start};
  }
  if (mixed) {
    std::size_t long_one = 0, long_two = 0, where = chain.size();
    for (const Run& r : runs) {
      if (r.length > 4) {
        (r.term == 1 ? long_one : long_two) = r.length;
        where = std::min(where, r.start);
      }
    }
    if (long_one > 0 && long_two > 0)
      return RejectionReason{RejectTag::BothLettersExceedTwo, where};
  }
  if (mixed && std::all_of(runs.begin(), runs.end(),
                           [](const Run& r) { return r.length % 2 == 0; })) {
    const std::string w = word_from_chain(chain).letters();
    if (!is_pure_power_avatar_word(w)) {
      if (w.front() == 'a') return RejectionReason{RejectTag::BadEndpoints, 0};
      if (w.back() == 'a')
        return RejectionReason{RejectTag::BadEndpoints, chain.size() - 1};
    }
  }
  return std::nullopt;
}

bool is_admissible(const Chain& chain) {
  return perron_value(chain).value < 3;
}

ABWord word_from_chain(const Chain& chain) {
  require_terms_12(chain, "word_from_chain");
  std::string w;
  for (const Run& r : run_lengths(chain)) {
    if (r.length % 2 == 1)
      throw std::domain_error("word_from_chain: odd cluster at index " +
                              std::to_string(r.start));
    w.append(r.length / 2, r.term == 2 ? 'a' : 'b');
  }
  return ABWord(w);
}

Chain chain_from_word(const ABWord& word) {
  std::vector<long> t;
  for (char c : word.letters()) {
    const long v = c == 'a' ? 2 : 1;
    t.push_back(v);
    t.push_back(v);
  }
  return Chain(std::move(t));
}

CharSeq characteristic_sequence(const ABWord& word) {
  const std::string& w = word.letters();
  if (w.empty() || w.front() != 'b' || w.back() != 'b')
    throw std::domain_error(
        "characteristic_sequence: word must start and end with b");
  std::vector<long> a_runs, b_runs;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    (w[i] == 'a' ? a_runs : b_runs).push_back(static_cast<long>(j - i));
    i = j;
  }
  const bool a_isolated =
      std::all_of(a_runs.begin(), a_runs.end(), [](long l) { return l == 1; });
  const bool b_isolated =
      std::all_of(b_runs.begin(), b_runs.end(), [](long l) { return l == 1; });
  if (a_runs.empty()) return {WordType::TypeI, b_runs};
  if (a_isolated && b_isolated)  // alternating b(ab)^k
    return {WordType::TypeII, std::vector<long>(a_runs.size(), 1)};
  if (a_isolated) return {WordType::TypeI, b_runs};
  if (b_isolated) return {WordType::TypeII, a_runs};
  throw std::domain_error("characteristic_sequence: word matches neither type");
}

}  // namespace zspec
