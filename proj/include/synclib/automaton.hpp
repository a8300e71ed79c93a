#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "synclib/errors.hpp"

namespace synclib {

using State = std::uint32_t;
using Letter = std::uint32_t;

// Complete deterministic transition table over n states and m letters.
// States and letters are 0-based dense indices; the alphabet is abstract.
class Automaton {
 public:
  // table is row-major: table[q*m + a] = q·a. Every entry must be < n.
  Automaton(std::uint32_t n, std::uint32_t m, std::vector<State> table);

  std::uint32_t states() const { return n_; }
  std::uint32_t letters() const { return m_; }
  State step(State q, Letter a) const { return table_[q * m_ + a]; }

  bool operator==(const Automaton&) const = default;

 private:
  std::uint32_t n_;
  std::uint32_t m_;
  std::vector<State> table_;
};

// Subset of [0, n) as a fixed-width bit vector sized to the ambient
// state count. Values are immutable in spirit: operations return copies.
class StateSet {
 public:
  StateSet() = default;

  static StateSet empty(std::uint32_t n);
  static StateSet full(std::uint32_t n);
  static StateSet of(std::uint32_t n, std::initializer_list<State> states);

  std::uint32_t universe() const { return n_; }
  bool contains(State q) const {
    return (blocks_[q >> 6] >> (q & 63)) & 1u;
  }
  void insert(State q) { blocks_[q >> 6] |= std::uint64_t{1} << (q & 63); }

  std::uint32_t count() const;
  bool none() const;
  bool is_subset_of(const StateSet& other) const;

  // Members in increasing order.
  std::vector<State> states() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      std::uint64_t w = blocks_[b];
      while (w != 0) {
        f(static_cast<State>(b * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  bool operator==(const StateSet&) const = default;

  std::size_t hash() const;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> blocks_;
};

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

// Finite sequence of letter indices. The empty word acts as identity.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  // Display form: 'a','b','c',... for alphabets of at most 26 letters,
  // bracketed integer list otherwise.
  std::string display(std::uint32_t m) const;

  bool operator==(const Word&) const = default;
  // Length-agnostic lexicographic order on letter indices.
  bool operator<(const Word& other) const { return letters < other.letters; }
};

Word concat(const Word& u, const Word& v);

// { s·a : s ∈ S }
StateSet apply_letter(const StateSet& set, Letter a, const Automaton& aut);

// { s·w : s ∈ S }; never grows: |result| <= |S|.
StateSet apply_word(const StateSet& set, const Word& w, const Automaton& aut);

// The full state mapping q -> q·w, computed by composing letter maps.
std::vector<State> state_map(const Word& w, const Automaton& aut);

std::uint32_t rank(const Word& w, const Automaton& aut);    // |Q·w|
std::uint32_t corank(const Word& w, const Automaton& aut);  // n - |Q·w|

// Union of the one-element preimages σ·u⁻¹ over σ ∈ Q·u. For a word of
// corank r this set always has at least n-2r states.
StateSet singleton_kernel(const Word& u, const Automaton& aut);

// Pairwise-merge criterion via backward search on the pair graph.
bool is_synchronizing(const Automaton& aut);

}  // namespace synclib
