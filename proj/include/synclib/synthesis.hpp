#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "synclib/spectrum.hpp"

namespace synclib {

// Shortest word w (lexicographically least among shortest) such that
// either targets ⊄ from·w or |from·w| < |from|. Throws
// PremiseViolatedError when the exhaustive search over images of `from`
// finds no qualifying word. When targets is a proper subset of `from`
// and a qualifying word exists, the returned length never exceeds
// n - |targets| (asserted empirically by the test suites).
Word escape_word(const StateSet& targets, const StateSet& from, const Automaton& aut,
                 std::size_t node_budget = kDefaultNodeBudget);

// Appends the shortest compressing word to u: returns u·w with
// |Q·u·w| < |Q·u|. For input corank r the classical greedy bound gives
// |w| <= (r+1)(r+2)/2. Requires corank(u) <= n-2.
Word compress_step(const Word& u, const Automaton& aut,
                   std::size_t node_budget = kDefaultNodeBudget);

// Builds v·w·u where w = escape_word(singleton_kernel(u), Q·v). Requires
// corank(u) = r with 1 <= r and 2r < n (so the kernel is nonempty), and
// a caller-guaranteed v of length λ that is rank-minimal among all words
// of length at most λ+2r (the pipeline passes λ-spectrum witnesses,
// which satisfy this by the gap condition δ_τ > 2r). Postconditions
// checked: |w| <= 2r and corank(v·w·u) >= r+1; violations throw
// PremiseViolatedError.
Word prepend_step(const Word& u, const Word& v, const Automaton& aut,
                  std::size_t node_budget = kDefaultNodeBudget);

enum class StepKind { Initial, Compress, Prepend, FinalCompress };

std::string to_string(StepKind kind);

struct TraceStep {
  StepKind kind;
  std::uint32_t input_corank = 0;
  std::size_t added_len = 0;   // letters added by this step
  std::uint64_t budget = 0;    // inclusive cited budget for added_len
  std::size_t word_len = 0;    // word length after the step
  std::uint32_t result_corank = 0;
  bool bound_ok = false;
  // Prepend details: added_len = prepend_len + escape_len.
  std::size_t prepend_len = 0;  // |v| = λ_τ
  std::size_t escape_len = 0;   // |w|, at most 2r
};

struct SynthesisTrace {
  Word final_word;
  std::vector<TraceStep> steps;
  bool all_bounds_ok = false;
};

// Constructive reset-word synthesis: start from the λ_ρ witness, then
// while corank r <= n/2 - 1 take the shorter of the compress candidate
// and the prepend candidate (ties prefer compress), then finish to rank
// one by repeated compression. Every step records its cited budget.
SynthesisTrace synthesize(const Automaton& aut, std::size_t node_budget = kDefaultNodeBudget);

// Same, reusing an already computed profile of the same automaton.
SynthesisTrace synthesize_with_profile(const Automaton& aut, const RankProfile& profile,
                                       std::size_t node_budget = kDefaultNodeBudget);

}  // namespace synclib
