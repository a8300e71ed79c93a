#include "synclib/spectrum.hpp"

#include <algorithm>
#include <limits>

namespace synclib {

namespace {

constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

// Breadth-first traversal over images of a start set.
//
// Nodes are discovered by processing the queue in order and trying
// letters in increasing index order. Within one level the discovery
// order therefore equals the lexicographic order of the stored witness
// words, and the first witness recorded for a node is the
// lexicographically least among its shortest words. This is what makes
// every output of this module deterministic.
class ImageSearch {
 public:
  ImageSearch(const Automaton& aut, StateSet start, std::size_t budget)
      : aut_(aut), budget_(budget) {
    add_node(std::move(start), 0, 0);
  }

  // Expands node `id`, calling on_discover(new_id) for each new image.
  template <typename F>
  void expand(std::uint32_t id, F&& on_discover) {
    const StateSet& set = *sets_[id];
    for (Letter a = 0; a < aut_.letters(); ++a) {
      StateSet next = apply_letter(set, a, aut_);
      auto [it, inserted] = index_.try_emplace(std::move(next), 0);
      if (!inserted) continue;
      if (sets_.size() >= budget_) {
        throw ResourceLimitError("image search exceeded node budget of " +
                                 std::to_string(budget_));
      }
      it->second = static_cast<std::uint32_t>(sets_.size());
      sets_.push_back(&it->first);
      parent_.push_back(id);
      via_.push_back(a);
      depth_.push_back(depth_[id] + 1);
      on_discover(it->second);
    }
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(sets_.size()); }
  const StateSet& set_of(std::uint32_t id) const { return *sets_[id]; }
  std::uint64_t depth_of(std::uint32_t id) const { return depth_[id]; }

  Word word_of(std::uint32_t id) const {
    Word w;
    w.letters.reserve(depth_[id]);
    for (std::uint32_t cur = id; cur != 0; cur = parent_[cur]) {
      w.letters.push_back(via_[cur]);
    }
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
  }

 private:
  void add_node(StateSet set, std::uint32_t parent, Letter via) {
    auto [it, inserted] = index_.try_emplace(std::move(set), 0);
    it->second = static_cast<std::uint32_t>(sets_.size());
    sets_.push_back(&it->first);
    parent_.push_back(parent);
    via_.push_back(via);
    depth_.push_back(0);
  }

  const Automaton& aut_;
  std::size_t budget_;
  // Keys live in the map; node ids index the parallel vectors.
  std::unordered_map<StateSet, std::uint32_t, StateSetHash> index_;
  std::vector<const StateSet*> sets_;
  std::vector<std::uint32_t> parent_;
  std::vector<Letter> via_;
  std::vector<std::uint64_t> depth_;
};

}  // namespace

ImageFamily image_bfs(const Automaton& aut, std::size_t node_budget) {
  ImageSearch search(aut, StateSet::full(aut.states()), node_budget);
  for (std::uint32_t cursor = 0; cursor < search.size(); ++cursor) {
    search.expand(cursor, [](std::uint32_t) {});
  }
  ImageFamily family;
  family.entries.reserve(search.size());
  for (std::uint32_t id = 0; id < search.size(); ++id) {
    family.entries.push_back({search.set_of(id), search.depth_of(id), search.word_of(id)});
    family.index.emplace(search.set_of(id), id);
  }
  return family;
}

std::optional<Word> shortest_image_word(const Automaton& aut, const StateSet& start,
                                        const std::function<bool(const StateSet&)>& accept,
                                        std::size_t node_budget) {
  if (accept(start)) {
    return Word{};
  }
  ImageSearch search(aut, start, node_budget);
  for (std::uint32_t cursor = 0; cursor < search.size(); ++cursor) {
    std::optional<std::uint32_t> hit;
    search.expand(cursor, [&](std::uint32_t id) {
      if (!hit && accept(search.set_of(id))) {
        hit = id;
      }
    });
    if (hit) {
      return search.word_of(*hit);
    }
  }
  return std::nullopt;
}

std::uint64_t RankProfile::weighted_bucket_sum(std::uint32_t r) const {
  std::uint64_t sum = 0;
  const std::uint32_t top = std::min<std::uint32_t>(r, bucket_limit());
  for (std::uint32_t j = 1; j <= top; ++j) {
    sum += static_cast<std::uint64_t>(j) * s[j];
  }
  return sum;
}

RankProfile rank_profile(const Automaton& aut, std::size_t node_budget) {
  const std::uint32_t n = aut.states();
  if (!is_synchronizing(aut)) {
    throw NotSynchronizingError("automaton is not synchronizing");
  }

  // first_node[c] = first discovered node of corank exactly c. Discovery
  // order makes its witness the lexicographically least shortest word of
  // that corank.
  std::vector<std::int64_t> first_node(n, -1);
  ImageSearch search(aut, StateSet::full(n), node_budget);
  first_node[0] = 0;

  bool singleton_seen = (n == 1);
  std::uint64_t stop_depth = kInf;  // finish discovering this level, then stop
  for (std::uint32_t cursor = 0; cursor < search.size(); ++cursor) {
    if (search.depth_of(cursor) >= stop_depth) break;
    search.expand(cursor, [&](std::uint32_t id) {
      const std::uint32_t c = n - search.set_of(id).count();
      if (first_node[c] < 0) {
        first_node[c] = id;
        if (c == n - 1 && !singleton_seen) {
          singleton_seen = true;
          stop_depth = search.depth_of(id);
        }
      }
    });
  }
  if (!singleton_seen) {
    throw NotSynchronizingError("no reset word found");  // unreachable after pair check
  }

  const std::uint64_t rt = (n == 1) ? 0 : search.depth_of(static_cast<std::uint32_t>(first_node[n - 1]));

  RankProfile prof;
  prof.n = n;
  prof.lambda.assign(n, kInf);
  prof.witness.assign(n, Word{});

  // λ_i = min over coranks c >= i of the first depth reaching c; the
  // reset word caps every lambda at rt, so the early stop is exact.
  std::vector<std::uint64_t> depth_of_corank(n, kInf);
  std::vector<Word> word_of_corank(n);
  for (std::uint32_t c = 0; c < n; ++c) {
    if (first_node[c] >= 0) {
      const auto id = static_cast<std::uint32_t>(first_node[c]);
      depth_of_corank[c] = search.depth_of(id);
      word_of_corank[c] = search.word_of(id);
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint64_t best = kInf;
    const Word* best_word = nullptr;
    for (std::uint32_t c = i; c < n; ++c) {
      if (depth_of_corank[c] < best ||
          (depth_of_corank[c] == best && best_word != nullptr &&
           word_of_corank[c] < *best_word)) {
        best = depth_of_corank[c];
        best_word = &word_of_corank[c];
      }
    }
    prof.lambda[i] = best;
    if (best_word != nullptr) {
      prof.witness[i] = *best_word;
    }
  }
  prof.lambda[n - 1] = rt;

  // Gaps, ρ, buckets. λ_n = +∞ makes δ_{n-1} infinite, so ρ always exists.
  auto gap = [&](std::uint32_t j) -> GapValue {
    if (j + 1 >= n) return GapValue{true, 0};
    return GapValue{false, prof.lambda[j + 1] - prof.lambda[j]};
  };
  std::uint32_t rho = 0;
  while (!gap(rho).exceeds(n)) {
    ++rho;
  }
  prof.rho = rho;
  prof.delta.clear();
  for (std::uint32_t j = 0; j <= rho; ++j) {
    prof.delta.push_back(gap(j));
  }
  prof.s.assign(prof.bucket_limit() + 1, 0);
  for (std::uint32_t j = 0; j <= rho; ++j) {
    const GapValue d = prof.delta[j];
    if (d.infinite) continue;
    const std::uint64_t r = (d.value + 1) / 2;  // δ in {2r-1, 2r}
    if (r <= prof.bucket_limit()) {
      ++prof.s[static_cast<std::uint32_t>(r)];
    }
  }
  return prof;
}

std::pair<std::uint64_t, Word> exact_rt(const Automaton& aut, std::size_t node_budget) {
  RankProfile prof = rank_profile(aut, node_budget);
  return {prof.lambda[aut.states() - 1], prof.witness[aut.states() - 1]};
}

}  // namespace synclib
