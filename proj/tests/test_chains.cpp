#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zspec/chains.hpp"

#include <set>

using namespace zspec;

namespace {

Chain ch(std::vector<long> t) { return Chain(std::move(t)); }
Rat rat(long n, long d) { return make_rat(n, d); }

// every {1,2}-chain of length in [1, max_len]
template <typename F>
void for_each_chain(std::size_t max_len, F&& f) {
  for (std::size_t len = 1; len <= max_len; ++len)
    for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
      std::vector<long> t(len);
      for (std::size_t i = 0; i < len; ++i) t[i] = (bits >> i & 1) ? 2 : 1;
      f(Chain(std::move(t)));
    }
}

bool endpoints_even(const Chain& c) {
  std::size_t lead = 0, trail = 0;
  while (lead < c.size() && c[lead] == 2) ++lead;
  while (trail < c.size() && c[c.size() - 1 - trail] == 2) ++trail;
  return lead % 2 == 0 && trail % 2 == 0;
}

}  // namespace

TEST_CASE("canonicalize_chain rewrites both ends to even blocks of 2s") {
  CHECK(canonicalize_chain(ch({1, 1, 2, 2, 2})) == ch({1, 1, 2, 2, 1, 1}));
  CHECK(canonicalize_chain(ch({1, 1, 2, 2, 1, 1})) == ch({1, 1, 2, 2, 1, 1}));
  CHECK(canonicalize_chain(ch({2, 1, 1, 2, 2, 1, 1})) ==
        ch({1, 1, 1, 1, 2, 2, 1, 1}));
  CHECK(canonicalize_chain(ch({2})) == ch({1, 1}));
  CHECK_THROWS_AS(canonicalize_chain(ch({1, 3, 1})), std::domain_error);

  for_each_chain(10, [](const Chain& c) {
    const Chain k = canonicalize_chain(c);
    REQUIRE(endpoints_even(k));
    REQUIRE(canonicalize_chain(k) == k);  // idempotent
    // the rewrites preserve Z
    REQUIRE(perron_value(k).value == perron_value(c).value);
  });
}

TEST_CASE("reverse_chain") {
  CHECK(reverse_chain(ch({1, 1, 2, 2})) == ch({2, 2, 1, 1}));
  CHECK(reverse_chain(ch({1, 2, 1})) == ch({1, 2, 1}));
  CHECK(reverse_chain(ch({1, 1, 2, 2, 1, 1})) == ch({1, 1, 2, 2, 1, 1}));
}

TEST_CASE("section_value") {
  CHECK(section_value({ch({1, 1, 2, 2}), 2}) == rat(1, 3));
  CHECK(section_value({ch({2, 2}), 0}) == rat(2, 5));
  CHECK(section_value({ch({1, 1, 2, 2, 1, 1}), 3}) == rat(10, 29));
  CHECK_THROWS_AS(section_value({ch({1, 1}), 2}), std::domain_error);
}

TEST_CASE("perron_value with smallest maximizing index") {
  const auto p1 = perron_value(ch({1, 1, 1, 1, 1}));
  CHECK(p1.value == rat(8, 3));
  CHECK(p1.witness_index == 2);
  const auto p2 = perron_value(ch({1, 1, 2, 2, 1, 1}));
  CHECK(p2.value == rat(29, 10));
  CHECK(p2.witness_index == 3);
  const auto p3 = perron_value(ch({2}));
  CHECK(p3.value == rat(2, 1));
  CHECK(p3.witness_index == 1);
}

TEST_CASE("perron agrees with the best section, exhaustively to length 12") {
  for_each_chain(12, [](const Chain& c) {
    Rat best;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Rat v = section_value({c, i});
      if (first || v < best) best = v;
      first = false;
    }
    REQUIRE(Rat(1) / perron_value(c).value == best);
  });
}

TEST_CASE("chain ordering reverses the rho ordering") {
  CHECK(chain_less(ch({1, 1}), ch({2, 2})));
  CHECK_FALSE(chain_less(ch({2, 2}), ch({1, 1})));
  CHECK_FALSE(chain_less(ch({1, 1}), ch({1, 1})));
  CHECK(chain_less(ch({1}), ch({1, 1})));
}

TEST_CASE("quick_reject lemma filters in order") {
  const auto r1 = quick_reject(ch({2, 2, 1, 2, 1, 1}));
  REQUIRE(r1.has_value());
  CHECK(r1->tag == RejectTag::Contains121);
  CHECK(r1->location == 2);

  CHECK_FALSE(quick_reject(ch({1, 1, 1, 1, 1})).has_value());

  const auto r2 = quick_reject(ch({2, 2, 1, 1, 2, 2, 1, 1, 2, 2}));
  REQUIRE(r2.has_value());
  CHECK(r2->tag == RejectTag::BadEndpoints);

  // 1-cluster of length 6 and 2-cluster of length 6 both present
  const auto r3 =
      quick_reject(ch({1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 1, 1}));
  REQUIRE(r3.has_value());
  CHECK(r3->tag == RejectTag::BothLettersExceedTwo);

  const auto r4 = quick_reject(ch({1, 1, 2, 2, 2, 2, 1, 1, 1, 2, 2, 1, 1}));
  REQUIRE(r4.has_value());
  CHECK(r4->tag == RejectTag::OddCluster);
  CHECK(r4->location == 6);

  const auto r5 = quick_reject(ch({2, 2, 1, 2, 2}));
  REQUIRE(r5.has_value());
  CHECK(r5->tag == RejectTag::Contains212);
  CHECK(r5->location == 1);

  // non-canonical input is a domain error
  CHECK_THROWS_AS(quick_reject(ch({2, 1, 2})), std::domain_error);
  CHECK_THROWS_AS(quick_reject(ch({1, 3})), std::domain_error);

  // chains identified with [0;2^odd] pass the filter despite their shape
  CHECK_FALSE(quick_reject(ch({2, 2, 2, 2, 1, 1})).has_value());
  CHECK_FALSE(quick_reject(ch({1, 1, 2, 2, 2, 1, 1})).has_value());
}

TEST_CASE("is_admissible decides Z > 1/3 exactly") {
  CHECK(is_admissible(ch({1, 1, 2, 2, 1, 1})));
  CHECK_FALSE(is_admissible(ch({2, 2, 2})));  // Z = 1/3 exactly
  CHECK_FALSE(is_admissible(ch({1, 2, 1})));
  CHECK(is_admissible(ch({2, 2})));
  CHECK_FALSE(is_admissible(ch({1, 2, 3})));  // term 3 forces Z <= 1/3
}

TEST_CASE("quick_reject is sound for every canonical chain to length 14") {
  std::size_t passing = 0, passing_inadmissible = 0;
  for_each_chain(14, [&](const Chain& c) {
    if (!endpoints_even(c)) return;
    const auto r = quick_reject(c);
    if (r.has_value()) {
      REQUIRE_FALSE(is_admissible(c));
    } else {
      ++passing;
      if (!is_admissible(c)) ++passing_inadmissible;
    }
  });
  // the filter is not a decision procedure; report how incomplete it is
  CHECK(passing > 0);
  MESSAGE("filter-passing chains: ", passing, ", inadmissible among them: ",
          passing_inadmissible, " (fraction ",
          double(passing_inadmissible) / double(passing), ")");
}

TEST_CASE("Z(T) = Z(T*) for every {1,2}-chain to length 14") {
  for_each_chain(14, [](const Chain& c) {
    REQUIRE(perron_value(c).value == perron_value(c.reversed()).value);
  });
}

TEST_CASE("the identity section has value exactly 1/3") {
  // Z(S* 1 1 | 2 2 S) = 1/3 for every word S with |S| <= 6
  std::vector<std::string> words{""};
  for (std::size_t len = 1; len <= 6; ++len)
    for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
      std::string w(len, 'a');
      for (std::size_t i = 0; i < len; ++i)
        if (bits >> i & 1) w[i] = 'b';
      words.push_back(w);
    }
  for (const std::string& w : words) {
    const Chain s = chain_from_word(ABWord(w));
    const Chain left = concat(s.reversed(), ch({1, 1}));
    const Chain full = concat(left, concat(ch({2, 2}), s));
    REQUIRE(section_value({full, left.size()}) == rat(1, 3));
  }
}

TEST_CASE("sections R* 1 1 2 2 S of admissible chains satisfy [S] < [R]") {
  std::size_t checked = 0;
  for_each_chain(14, [&](const Chain& c) {
    if (!is_admissible(c)) return;
    const auto& t = c.terms();
    for (std::size_t i = 0; i + 4 <= t.size(); ++i) {
      if (t[i] != 1 || t[i + 1] != 1 || t[i + 2] != 2 || t[i + 3] != 2)
        continue;
      const Chain r_star = c.prefix(i);
      const Chain s = c.suffix(i + 4);
      if (r_star.empty() || s.empty()) continue;
      ++checked;
      REQUIRE(chain_less(s, r_star.reversed()));
    }
  });
  CHECK(checked > 0);
}

TEST_CASE("word encoding round trip and errors") {
  CHECK(word_from_chain(ch({1, 1, 2, 2, 1, 1})) == ABWord("bab"));
  CHECK(chain_from_word(ABWord("baab")) == ch({1, 1, 2, 2, 2, 2, 1, 1}));
  CHECK_THROWS_AS(word_from_chain(ch({1, 1, 1, 2, 2})), std::domain_error);
  for_each_chain(10, [](const Chain& c) {
    bool even_clusters = true;
    std::size_t i = 0;
    while (i < c.size()) {
      std::size_t j = i;
      while (j < c.size() && c[j] == c[i]) ++j;
      if ((j - i) % 2) even_clusters = false;
      i = j;
    }
    if (even_clusters) REQUIRE(chain_from_word(word_from_chain(c)) == c);
  });
}

TEST_CASE("characteristic sequences") {
  CHECK(characteristic_sequence(ABWord("bab")) ==
        CharSeq{WordType::TypeII, {1}});
  CHECK(characteristic_sequence(ABWord("bbabb")) ==
        CharSeq{WordType::TypeI, {2, 2}});
  CHECK(characteristic_sequence(ABWord("baab")) ==
        CharSeq{WordType::TypeII, {2}});
  CHECK(characteristic_sequence(ABWord("babab")) ==
        CharSeq{WordType::TypeII, {1, 1}});
  CHECK(characteristic_sequence(ABWord("bb")) == CharSeq{WordType::TypeI, {2}});
  CHECK_THROWS_AS(characteristic_sequence(ABWord("ab")), std::domain_error);
  CHECK_THROWS_AS(characteristic_sequence(ABWord("baabba")),
                  std::domain_error);
  CHECK_THROWS_AS(characteristic_sequence(ABWord("bbaabb")),
                  std::domain_error);
}

TEST_CASE("chain text format") {
  CHECK(Chain::parse("[0;1,1,2,2,1,1]") == ch({1, 1, 2, 2, 1, 1}));
  CHECK(Chain::parse("[1,2]") == ch({1, 2}));
  CHECK(Chain::parse("[3;7,15,1]").integer_part() == 3);
  CHECK(ch({1, 1, 2}).str() == "[0;1,1,2]");
  CHECK_THROWS_AS(Chain::parse("[]"), std::invalid_argument);
  CHECK_THROWS_AS(Chain::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Chain::parse("[0;1,x]"), std::invalid_argument);
}
