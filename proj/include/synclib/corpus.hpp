#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synclib/automaton.hpp"

namespace synclib {

// splitmix64: the portable generator used for every seeded corpus.
// state += 0x9E3779B97F4A7C15; z = state;
// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
// z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
// return z ^ (z >> 31);
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound) by plain modulo (documented rule;
  // the tiny bias is irrelevant for corpus generation).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Letter 0 cycles the states, letter 1 sends 0 to 1 and fixes the rest.
Automaton cerny(std::uint32_t n);

// Each table entry is drawn as splitmix64(seed) % n, iterating states in
// the outer loop and letters in the inner loop.
Automaton random_automaton(std::uint32_t n, std::uint32_t m, std::uint64_t seed);

// Text format (".dfa"): first content line "n m", then n rows of m
// space-separated state indices (row q lists q·a for a = 0..m-1).
// Lines starting with '#' are comments; blank lines are ignored.
Automaton parse_dfa(std::string_view text);
std::string serialize_dfa(const Automaton& aut);

struct CorpusSpec {
  enum class Kind { Cerny, Random };
  Kind kind;
  std::uint32_t n = 0;
  std::uint32_t m = 2;
  std::uint64_t seed = 1;
  std::uint32_t count = 1;
};

// (filename, automaton) pairs for a generator spec. Random corpora use
// seeds seed, seed+1, ..., seed+count-1, one per file.
std::vector<std::pair<std::string, Automaton>> generate_corpus(const CorpusSpec& spec);

}  // namespace synclib
