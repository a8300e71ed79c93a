#include "synclib/synthesis.hpp"

namespace synclib {

namespace {

std::uint64_t compress_budget(std::uint32_t r) {
  return static_cast<std::uint64_t>(r + 1) * (r + 2) / 2;
}

}  // namespace

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Initial:
      return "initial";
    case StepKind::Compress:
      return "compress";
    case StepKind::Prepend:
      return "prepend";
    case StepKind::FinalCompress:
      return "final-compress";
  }
  return "?";
}

Word escape_word(const StateSet& targets, const StateSet& from, const Automaton& aut,
                 std::size_t node_budget) {
  if (targets.none()) {
    throw PreconditionError("escape_word needs a nonempty target set");
  }
  const std::uint32_t start_size = from.count();
  auto accept = [&](const StateSet& image) {
    return !targets.is_subset_of(image) || image.count() < start_size;
  };
  std::optional<Word> w = shortest_image_word(aut, from, accept, node_budget);
  if (!w) {
    throw PremiseViolatedError("no escape word exists for the given sets");
  }
  return *w;
}

Word compress_step(const Word& u, const Automaton& aut, std::size_t node_budget) {
  const std::uint32_t n = aut.states();
  const StateSet image = apply_word(StateSet::full(n), u, aut);
  const std::uint32_t size = image.count();
  if (size < 2) {
    throw PreconditionError("compress_step needs corank(u) <= n-2");
  }
  auto accept = [&](const StateSet& s) { return s.count() < size; };
  std::optional<Word> w = shortest_image_word(aut, image, accept, node_budget);
  if (!w) {
    throw PremiseViolatedError("image of u cannot be compressed further");
  }
  return concat(u, *w);
}

Word prepend_step(const Word& u, const Word& v, const Automaton& aut,
                  std::size_t node_budget) {
  const std::uint32_t n = aut.states();
  const std::uint32_t r = corank(u, aut);
  // 2r < n keeps the singleton kernel nonempty (|A| >= n-2r >= 1).
  if (r < 1 || 2 * static_cast<std::uint64_t>(r) >= n) {
    throw PreconditionError("prepend_step needs corank(u) in [1, n/2 - 1]");
  }
  const StateSet kernel = singleton_kernel(u, aut);
  const StateSet from = apply_word(StateSet::full(n), v, aut);
  const Word w = escape_word(kernel, from, aut, node_budget);
  if (w.size() > 2 * static_cast<std::size_t>(r)) {
    throw PremiseViolatedError("escape word longer than 2r; v was not rank-minimal");
  }
  Word result = concat(concat(v, w), u);
  if (corank(result, aut) < r + 1) {
    throw PremiseViolatedError("prepend step did not gain corank; v was not rank-minimal");
  }
  return result;
}

SynthesisTrace synthesize_with_profile(const Automaton& aut, const RankProfile& profile,
                                       std::size_t node_budget) {
  const std::uint32_t n = aut.states();
  if (n < 2) {
    throw PreconditionError("synthesize needs n >= 2");
  }

  SynthesisTrace trace;
  Word cur = profile.witness[profile.rho];
  std::uint32_t r = corank(cur, aut);

  {
    TraceStep step;
    step.kind = StepKind::Initial;
    step.input_corank = 0;
    step.added_len = cur.size();
    step.budget = static_cast<std::uint64_t>(n) * n - 1;  // λ_ρ < n²
    step.word_len = cur.size();
    step.result_corank = r;
    step.bound_ok = step.added_len <= step.budget;
    trace.steps.push_back(step);
  }

  // Middle phase: r <= n/2 - 1 via exact integer comparison.
  while (2 * static_cast<std::uint64_t>(r) <= n - 2) {
    const Word cand_compress = compress_step(cur, aut, node_budget);

    // τ = minimal index with δ_τ > 2r; exists because δ_ρ > n >= 2r+2.
    std::uint32_t tau = 0;
    while (!profile.delta[tau].exceeds(2 * static_cast<std::uint64_t>(r))) {
      ++tau;
    }
    const Word& v = profile.witness[tau];
    const Word cand_prepend = prepend_step(cur, v, aut, node_budget);

    TraceStep step;
    step.input_corank = r;
    if (cand_compress.size() <= cand_prepend.size()) {
      step.kind = StepKind::Compress;
      step.added_len = cand_compress.size() - cur.size();
      step.budget = compress_budget(r);
      cur = cand_compress;
    } else {
      step.kind = StepKind::Prepend;
      step.added_len = cand_prepend.size() - cur.size();
      step.budget = 2 * profile.weighted_bucket_sum(r) + 2 * static_cast<std::uint64_t>(r);
      step.prepend_len = v.size();
      step.escape_len = step.added_len - v.size();
      cur = cand_prepend;
    }
    r = corank(cur, aut);
    step.word_len = cur.size();
    step.result_corank = r;
    step.bound_ok = step.added_len <= step.budget;
    trace.steps.push_back(step);
  }

  // Finish to rank one.
  while (r < n - 1) {
    const Word next = compress_step(cur, aut, node_budget);
    TraceStep step;
    step.kind = StepKind::FinalCompress;
    step.input_corank = r;
    step.added_len = next.size() - cur.size();
    step.budget = compress_budget(r);
    cur = next;
    r = corank(cur, aut);
    step.word_len = cur.size();
    step.result_corank = r;
    step.bound_ok = step.added_len <= step.budget;
    trace.steps.push_back(step);
  }

  trace.final_word = cur;
  trace.all_bounds_ok = true;
  for (const TraceStep& step : trace.steps) {
    trace.all_bounds_ok = trace.all_bounds_ok && step.bound_ok;
  }
  return trace;
}

SynthesisTrace synthesize(const Automaton& aut, std::size_t node_budget) {
  const RankProfile profile = rank_profile(aut, node_budget);
  return synthesize_with_profile(aut, profile, node_budget);
}

}  // namespace synclib
