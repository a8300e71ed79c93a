#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "synclib/corpus.hpp"
#include "synclib/spectrum.hpp"

using namespace synclib;

TEST_CASE("cerny construction") {
  const Automaton a = cerny(3);
  CHECK(a == Automaton(3, 2, {1, 1, 2, 1, 0, 2}));
  CHECK_THROWS_AS(cerny(1), PreconditionError);
  for (std::uint32_t n = 2; n <= 10; ++n) {
    CHECK(is_synchronizing(cerny(n)));
  }
}

TEST_CASE("cerny reset threshold is (n-1)^2 at the small end") {
  CHECK(exact_rt(cerny(2)).first == 1);
  CHECK(exact_rt(cerny(3)).first == 4);
  CHECK(exact_rt(cerny(4)).first == 9);
}

TEST_CASE("random generation is reproducible") {
  const Automaton a = random_automaton(10, 2, 42);
  const Automaton b = random_automaton(10, 2, 42);
  CHECK(a == b);
  CHECK(!(random_automaton(10, 2, 43) == a));
  CHECK(is_synchronizing(random_automaton(1, 1, 7)));
}

TEST_CASE("majority of random n=10 m=2 automata synchronize") {
  int count = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    if (is_synchronizing(random_automaton(10, 2, seed))) ++count;
  }
  CHECK(count > 250);
}

TEST_CASE("dfa text format") {
  const std::string text = "3 2\n1 1\n2 1\n0 2\n";
  const Automaton a = parse_dfa(text);
  CHECK(a == cerny(3));
  CHECK(serialize_dfa(a) == text);

  CHECK(parse_dfa("# comment\n\n3 2\n# rows\n1 1\n2 1\n0 2\n") == cerny(3));
}

TEST_CASE("dfa parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_dfa("3 2\n1 5\n2 1\n0 2\n"),
                       "state index 5 out of range at line 2", ParseError);
  CHECK_THROWS_AS(parse_dfa(""), ParseError);
  CHECK_THROWS_AS(parse_dfa("x y\n"), ParseError);
  CHECK_THROWS_AS(parse_dfa("3 2\n1 1\n2 1\n"), ParseError);          // missing row
  CHECK_THROWS_AS(parse_dfa("3 2\n1 1\n2 1\n0 2\n0 0\n"), ParseError);  // extra row
  CHECK_THROWS_AS(parse_dfa("3 2\n1 1 1\n2 1\n0 2\n"), ParseError);   // extra entry
  CHECK_THROWS_AS(parse_dfa("3 2\n1\n2 1\n0 2\n"), ParseError);       // short row

  try {
    parse_dfa("3 2\n1 1\n2 9\n0 2\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("round trip on random automata") {
  SplitMix64 rng(0xc0de);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(20));
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng.below(4));
    const Automaton a = random_automaton(n, m, rng.next());
    CHECK(parse_dfa(serialize_dfa(a)) == a);
  }
}

TEST_CASE("corpus generation naming and seeds") {
  CorpusSpec spec;
  spec.kind = CorpusSpec::Kind::Random;
  spec.n = 6;
  spec.m = 3;
  spec.seed = 100;
  spec.count = 3;
  const auto files = generate_corpus(spec);
  REQUIRE(files.size() == 3);
  CHECK(files[0].first == "random_n6_m3_s100.dfa");
  CHECK(files[2].first == "random_n6_m3_s102.dfa");
  CHECK(files[1].second == random_automaton(6, 3, 101));

  CorpusSpec cerny_spec;
  cerny_spec.kind = CorpusSpec::Kind::Cerny;
  cerny_spec.n = 4;
  const auto cerny_files = generate_corpus(cerny_spec);
  REQUIRE(cerny_files.size() == 1);
  CHECK(cerny_files[0].first == "cerny_n4.dfa");
  CHECK(cerny_files[0].second == cerny(4));
}
