#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "synclib/automaton.hpp"

namespace synclib {

// Cap on distinct image subsets a breadth-first search may store; the
// reachable image family can be exponential in n.
inline constexpr std::size_t kDefaultNodeBudget = std::size_t{1} << 22;

// One reachable image of Q with its shortest length and the
// lexicographically least shortest witness.
struct ImageEntry {
  StateSet set;
  std::uint64_t depth;
  Word word;
};

// Reachable image family { Q·w : w ∈ Σ* } in discovery order.
struct ImageFamily {
  std::vector<ImageEntry> entries;
  std::unordered_map<StateSet, std::size_t, StateSetHash> index;

  const ImageEntry* find(const StateSet& s) const {
    auto it = index.find(s);
    return it == index.end() ? nullptr : &entries[it->second];
  }
};

// Exhaustive breadth-first exploration of the images of Q.
ImageFamily image_bfs(const Automaton& aut, std::size_t node_budget = kDefaultNodeBudget);

// Shortest word w (lexicographically least among shortest) with
// accept(start·w) true, searching breadth-first over images of start.
// Returns nullopt when the whole reachable family fails the predicate.
std::optional<Word> shortest_image_word(const Automaton& aut, const StateSet& start,
                                        const std::function<bool(const StateSet&)>& accept,
                                        std::size_t node_budget = kDefaultNodeBudget);

// Gap δ_j = λ_{j+1} - λ_j; the last gap δ_ρ may be infinite (λ_n = +∞).
struct GapValue {
  bool infinite = false;
  std::uint64_t value = 0;

  bool exceeds(std::uint64_t bound) const { return infinite || value > bound; }
  bool operator==(const GapValue&) const = default;
};

// The λ-spectrum of a synchronizing automaton together with the derived
// gaps, the corank ρ where gaps first exceed n, and bucket counts s_r.
struct RankProfile {
  std::uint32_t n = 0;
  // lambda[i] = minimal length of a word of corank at least i, i < n.
  std::vector<std::uint64_t> lambda;
  std::uint32_t rho = 0;
  // delta[j] for j = 0..rho.
  std::vector<GapValue> delta;
  // s[r] for r = 0..floor(n/2): gaps δ_j with j <= rho and δ_j in {2r-1, 2r}.
  std::vector<std::uint32_t> s;
  // witness[i]: lexicographically least word of length lambda[i] and
  // corank >= i.
  std::vector<Word> witness;

  std::uint32_t bucket_limit() const { return n / 2; }
  // 1·s_1 + 2·s_2 + ... + r·s_r
  std::uint64_t weighted_bucket_sum(std::uint32_t r) const;
};

RankProfile rank_profile(const Automaton& aut, std::size_t node_budget = kDefaultNodeBudget);

// Reset threshold and one shortest reset word (= λ_{n-1} and its witness).
std::pair<std::uint64_t, Word> exact_rt(const Automaton& aut,
                                        std::size_t node_budget = kDefaultNodeBudget);

}  // namespace synclib
