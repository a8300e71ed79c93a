#include "synclib/automaton.hpp"

#include <algorithm>
#include <deque>

namespace synclib {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Automaton::Automaton(std::uint32_t n, std::uint32_t m, std::vector<State> table)
    : n_(n), m_(m), table_(std::move(table)) {
  if (n == 0 || m == 0) {
    throw PreconditionError("automaton needs at least one state and one letter");
  }
  if (table_.size() != static_cast<std::size_t>(n) * m) {
    throw PreconditionError("transition table has wrong size");
  }
  for (State q : table_) {
    if (q >= n) {
      throw PreconditionError("transition table entry out of range");
    }
  }
}

StateSet StateSet::empty(std::uint32_t n) {
  StateSet s;
  s.n_ = n;
  s.blocks_.assign((n + 63) / 64, 0);
  return s;
}

StateSet StateSet::full(std::uint32_t n) {
  StateSet s = empty(n);
  for (std::size_t b = 0; b < s.blocks_.size(); ++b) {
    s.blocks_[b] = ~std::uint64_t{0};
  }
  if (n % 64 != 0 && !s.blocks_.empty()) {
    s.blocks_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
  }
  return s;
}

StateSet StateSet::of(std::uint32_t n, std::initializer_list<State> states) {
  StateSet s = empty(n);
  for (State q : states) {
    s.insert(q);
  }
  return s;
}

std::uint32_t StateSet::count() const {
  std::uint32_t c = 0;
  for (std::uint64_t b : blocks_) {
    c += static_cast<std::uint32_t>(std::popcount(b));
  }
  return c;
}

bool StateSet::none() const {
  for (std::uint64_t b : blocks_) {
    if (b != 0) return false;
  }
  return true;
}

bool StateSet::is_subset_of(const StateSet& other) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if ((blocks_[i] & ~other.blocks_[i]) != 0) return false;
  }
  return true;
}

std::vector<State> StateSet::states() const {
  std::vector<State> out;
  out.reserve(count());
  for_each([&](State q) { out.push_back(q); });
  return out;
}

std::size_t StateSet::hash() const {
  std::uint64_t h = mix64(n_);
  for (std::uint64_t b : blocks_) {
    h = mix64(h ^ b);
  }
  return static_cast<std::size_t>(h);
}

std::string Word::display(std::uint32_t m) const {
  std::string out;
  if (m <= 26) {
    out.reserve(letters.size());
    for (Letter a : letters) {
      out.push_back(static_cast<char>('a' + a));
    }
  } else {
    out.push_back('[');
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(letters[i]);
    }
    out.push_back(']');
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

StateSet apply_letter(const StateSet& set, Letter a, const Automaton& aut) {
  if (a >= aut.letters()) {
    throw InvalidWordError("letter index " + std::to_string(a) + " out of range");
  }
  StateSet out = StateSet::empty(aut.states());
  set.for_each([&](State q) { out.insert(aut.step(q, a)); });
  return out;
}

StateSet apply_word(const StateSet& set, const Word& w, const Automaton& aut) {
  StateSet cur = set;
  for (Letter a : w.letters) {
    cur = apply_letter(cur, a, aut);
  }
  return cur;
}

std::vector<State> state_map(const Word& w, const Automaton& aut) {
  const std::uint32_t n = aut.states();
  std::vector<State> f(n);
  for (State q = 0; q < n; ++q) {
    f[q] = q;
  }
  for (Letter a : w.letters) {
    if (a >= aut.letters()) {
      throw InvalidWordError("letter index " + std::to_string(a) + " out of range");
    }
    for (State q = 0; q < n; ++q) {
      f[q] = aut.step(f[q], a);
    }
  }
  return f;
}

std::uint32_t rank(const Word& w, const Automaton& aut) {
  const std::vector<State> f = state_map(w, aut);
  std::vector<char> seen(aut.states(), 0);
  std::uint32_t r = 0;
  for (State q : f) {
    if (!seen[q]) {
      seen[q] = 1;
      ++r;
    }
  }
  return r;
}

std::uint32_t corank(const Word& w, const Automaton& aut) {
  return aut.states() - rank(w, aut);
}

StateSet singleton_kernel(const Word& u, const Automaton& aut) {
  const std::uint32_t n = aut.states();
  const std::vector<State> f = state_map(u, aut);
  std::vector<std::uint32_t> preimage_size(n, 0);
  for (State q = 0; q < n; ++q) {
    ++preimage_size[f[q]];
  }
  StateSet kernel = StateSet::empty(n);
  for (State q = 0; q < n; ++q) {
    if (preimage_size[f[q]] == 1) {
      kernel.insert(q);
    }
  }
  return kernel;
}

bool is_synchronizing(const Automaton& aut) {
  const std::uint32_t n = aut.states();
  if (n == 1) return true;
  const std::uint32_t m = aut.letters();

  // inv[a*n + q] = preimage of q under letter a
  std::vector<std::vector<State>> inv(static_cast<std::size_t>(n) * m);
  for (State q = 0; q < n; ++q) {
    for (Letter a = 0; a < m; ++a) {
      inv[static_cast<std::size_t>(a) * n + aut.step(q, a)].push_back(q);
    }
  }

  auto pair_id = [n](State p, State q) {
    return static_cast<std::size_t>(p) * n + q;  // requires p < q
  };
  std::vector<char> mergeable(static_cast<std::size_t>(n) * n, 0);
  std::deque<std::pair<State, State>> queue;

  auto mark = [&](State p, State q) {
    if (p == q) return;
    if (p > q) std::swap(p, q);
    if (!mergeable[pair_id(p, q)]) {
      mergeable[pair_id(p, q)] = 1;
      queue.emplace_back(p, q);
    }
  };

  // Pairs merged by a single letter seed the backward search.
  for (Letter a = 0; a < m; ++a) {
    for (State q = 0; q < n; ++q) {
      const auto& pre = inv[static_cast<std::size_t>(a) * n + q];
      for (std::size_t i = 0; i < pre.size(); ++i) {
        for (std::size_t j = i + 1; j < pre.size(); ++j) {
          mark(pre[i], pre[j]);
        }
      }
    }
  }

  std::size_t marked = queue.size();
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < m; ++a) {
      const auto& px = inv[static_cast<std::size_t>(a) * n + x];
      const auto& py = inv[static_cast<std::size_t>(a) * n + y];
      for (State p : px) {
        for (State q : py) {
          State lo = p, hi = q;
          if (lo == hi) continue;
          if (lo > hi) std::swap(lo, hi);
          if (!mergeable[pair_id(lo, hi)]) {
            mergeable[pair_id(lo, hi)] = 1;
            queue.emplace_back(lo, hi);
            ++marked;
          }
        }
      }
    }
  }

  return marked == static_cast<std::size_t>(n) * (n - 1) / 2;
}

}  // namespace synclib
