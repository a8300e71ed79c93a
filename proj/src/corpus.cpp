#include "synclib/corpus.hpp"

#include <sstream>

namespace synclib {

Automaton cerny(std::uint32_t n) {
  if (n < 2) {
    throw PreconditionError("cerny automaton needs n >= 2");
  }
  std::vector<State> table(static_cast<std::size_t>(n) * 2);
  for (State q = 0; q < n; ++q) {
    table[q * 2 + 0] = (q + 1) % n;
    table[q * 2 + 1] = (q == 0) ? 1 : q;
  }
  return Automaton(n, 2, std::move(table));
}

Automaton random_automaton(std::uint32_t n, std::uint32_t m, std::uint64_t seed) {
  if (n == 0 || m == 0) {
    throw PreconditionError("random automaton needs n, m >= 1");
  }
  SplitMix64 rng(seed);
  std::vector<State> table(static_cast<std::size_t>(n) * m);
  for (State q = 0; q < n; ++q) {
    for (Letter a = 0; a < m; ++a) {
      table[static_cast<std::size_t>(q) * m + a] = static_cast<State>(rng.below(n));
    }
  }
  return Automaton(n, m, std::move(table));
}

Automaton parse_dfa(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  std::uint32_t n = 0, m = 0;
  bool have_header = false;
  std::vector<State> table;
  std::uint32_t rows = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;

    std::istringstream fields(line);
    if (!have_header) {
      long long vn = -1, vm = -1;
      std::string extra;
      if (!(fields >> vn >> vm) || (fields >> extra) || vn < 1 || vm < 1) {
        throw ParseError("malformed header, expected \"n m\"", lineno);
      }
      n = static_cast<std::uint32_t>(vn);
      m = static_cast<std::uint32_t>(vm);
      table.reserve(static_cast<std::size_t>(n) * m);
      have_header = true;
      continue;
    }

    if (rows == n) {
      throw ParseError("unexpected content after " + std::to_string(n) + " rows", lineno);
    }
    for (std::uint32_t a = 0; a < m; ++a) {
      long long v = -1;
      if (!(fields >> v)) {
        throw ParseError("row has fewer than " + std::to_string(m) + " entries", lineno);
      }
      if (v < 0 || v >= static_cast<long long>(n)) {
        throw ParseError("state index " + std::to_string(v) + " out of range", lineno);
      }
      table.push_back(static_cast<State>(v));
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError("row has more than " + std::to_string(m) + " entries", lineno);
    }
    ++rows;
  }

  if (!have_header) {
    throw ParseError("missing header", lineno == 0 ? 1 : lineno);
  }
  if (rows != n) {
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(rows),
                     lineno == 0 ? 1 : lineno);
  }
  return Automaton(n, m, std::move(table));
}

std::string serialize_dfa(const Automaton& aut) {
  std::string out = std::to_string(aut.states()) + " " + std::to_string(aut.letters()) + "\n";
  for (State q = 0; q < aut.states(); ++q) {
    for (Letter a = 0; a < aut.letters(); ++a) {
      if (a > 0) out.push_back(' ');
      out += std::to_string(aut.step(q, a));
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<std::pair<std::string, Automaton>> generate_corpus(const CorpusSpec& spec) {
  std::vector<std::pair<std::string, Automaton>> out;
  if (spec.kind == CorpusSpec::Kind::Cerny) {
    out.emplace_back("cerny_n" + std::to_string(spec.n) + ".dfa", cerny(spec.n));
    return out;
  }
  for (std::uint32_t i = 0; i < spec.count; ++i) {
    const std::uint64_t seed = spec.seed + i;
    std::string name = "random_n" + std::to_string(spec.n) + "_m" + std::to_string(spec.m) +
                       "_s" + std::to_string(seed) + ".dfa";
    out.emplace_back(std::move(name), random_automaton(spec.n, spec.m, seed));
  }
  return out;
}

}  // namespace synclib
