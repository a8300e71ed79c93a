#include "synclib/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "synclib/certify.hpp"
#include "synclib/corpus.hpp"
#include "synclib/optimizer.hpp"
#include "synclib/spectrum.hpp"
#include "synclib/synthesis.hpp"

namespace synclib {

namespace {

using nlohmann::json;

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Envelope with key-sorted fields; timing is optional so identical
// invocations can produce byte-identical output.
void emit_envelope(std::ostream& out, const std::string& command, const std::string& digest,
                   json payload, bool with_timing, const Timer& timer) {
  json env;
  env["command"] = command;
  env["input_digest"] = "fnv1a64:" + digest;
  env["payload"] = std::move(payload);
  if (with_timing) {
    env["timing_ms"] = timer.elapsed_ms();
  }
  env["version"] = kToolVersion;
  out << env.dump(2) << "\n";
}

json rational_json(const Rat& value) { return to_string(value); }

json word_json(const Word& w, std::uint32_t m) { return w.display(m); }

json profile_json(const RankProfile& prof, std::uint32_t m) {
  json payload;
  payload["n"] = prof.n;
  payload["lambda"] = prof.lambda;
  json delta = json::array();
  for (const GapValue& d : prof.delta) {
    if (d.infinite) {
      delta.push_back(nullptr);
    } else {
      delta.push_back(d.value);
    }
  }
  payload["delta"] = std::move(delta);
  payload["rho"] = prof.rho;
  payload["s"] = prof.s;
  json witnesses = json::array();
  for (const Word& w : prof.witness) {
    witnesses.push_back(word_json(w, m));
  }
  payload["witnesses"] = std::move(witnesses);
  return payload;
}

json trace_json(const SynthesisTrace& trace, std::uint32_t m) {
  json payload;
  payload["final_word"] = word_json(trace.final_word, m);
  payload["final_len"] = trace.final_word.size();
  payload["all_bounds_ok"] = trace.all_bounds_ok;
  json steps = json::array();
  for (const TraceStep& step : trace.steps) {
    json s;
    s["kind"] = to_string(step.kind);
    s["input_corank"] = step.input_corank;
    s["added_len"] = step.added_len;
    s["budget"] = step.budget;
    s["word_len"] = step.word_len;
    s["result_corank"] = step.result_corank;
    s["bound_ok"] = step.bound_ok;
    if (step.kind == StepKind::Prepend) {
      s["prepend_len"] = step.prepend_len;
      s["escape_len"] = step.escape_len;
    }
    steps.push_back(std::move(s));
  }
  payload["steps"] = std::move(steps);
  return payload;
}

json certificate_json(const CertificateReport& report) {
  json payload;
  payload["n"] = report.n;
  payload["m"] = report.m;
  if (report.rt_exact) {
    payload["rt_exact"] = *report.rt_exact;
  }
  payload["rt_constructed"] = report.rt_constructed;
  payload["cerny_bound"] = report.cerny_bound;
  payload["pin_frankl_bound"] = report.pin_frankl_bound;
  payload["bucket_cubic_bound"] = rational_json(report.bucket_cubic_bound);
  json flags;
  if (report.rt_exact) {
    flags["exact_le_cerny"] = *report.exact_le_cerny;
    flags["exact_le_pin_frankl"] = *report.exact_le_pin_frankl;
    flags["exact_le_bucket_bound"] = *report.exact_le_bucket_bound;
  }
  flags["constructed_le_pin_frankl"] = report.constructed_le_pin_frankl;
  flags["constructed_le_bucket_bound"] = report.constructed_le_bucket_bound;
  payload["flags"] = std::move(flags);
  return payload;
}

std::string format_double(double v, int digits = 8) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

int command_gen(const CorpusSpec& spec, const std::string& out_dir, std::ostream& out) {
  std::filesystem::create_directories(out_dir);
  for (const auto& [name, aut] : generate_corpus(spec)) {
    const std::filesystem::path path = std::filesystem::path(out_dir) / name;
    std::ofstream file(path);
    if (!file) {
      throw Error("cannot write file: " + path.string());
    }
    file << serialize_dfa(aut);
    out << path.string() << "\n";
  }
  return kExitOk;
}

struct ReportOptions {
  std::string file;
  bool as_json = false;
  bool no_timing = false;
  std::size_t budget = kDefaultNodeBudget;
};

int command_rt(const ReportOptions& opt, std::ostream& out) {
  Timer timer;
  const std::string text = read_file(opt.file);
  const Automaton aut = parse_dfa(text);
  auto [rt, word] = exact_rt(aut, opt.budget);
  if (opt.as_json) {
    json payload;
    payload["n"] = aut.states();
    payload["m"] = aut.letters();
    payload["rt"] = rt;
    payload["word"] = word_json(word, aut.letters());
    emit_envelope(out, "rt", fnv1a64_hex(text), std::move(payload), !opt.no_timing, timer);
  } else {
    out << "rt=" << rt << " word=" << word.display(aut.letters()) << "\n";
  }
  return kExitOk;
}

int command_spectrum(const ReportOptions& opt, std::ostream& out) {
  Timer timer;
  const std::string text = read_file(opt.file);
  const Automaton aut = parse_dfa(text);
  const RankProfile prof = rank_profile(aut, opt.budget);
  if (opt.as_json) {
    emit_envelope(out, "spectrum", fnv1a64_hex(text), profile_json(prof, aut.letters()),
                  !opt.no_timing, timer);
  } else {
    out << "n=" << prof.n << " rho=" << prof.rho << "\n";
    out << "lambda:";
    for (std::uint64_t v : prof.lambda) out << " " << v;
    out << "\ndelta:";
    for (const GapValue& d : prof.delta) {
      if (d.infinite) {
        out << " inf";
      } else {
        out << " " << d.value;
      }
    }
    out << "\ns:";
    for (std::uint32_t v : prof.s) out << " " << v;
    out << "\n";
    for (std::uint32_t i = 0; i < prof.n; ++i) {
      out << "witness[" << i << "]=" << prof.witness[i].display(aut.letters()) << "\n";
    }
  }
  return kExitOk;
}

int command_synth(const ReportOptions& opt, std::ostream& out) {
  Timer timer;
  const std::string text = read_file(opt.file);
  const Automaton aut = parse_dfa(text);
  const SynthesisTrace trace = synthesize(aut, opt.budget);
  if (opt.as_json) {
    emit_envelope(out, "synth", fnv1a64_hex(text), trace_json(trace, aut.letters()),
                  !opt.no_timing, timer);
  } else {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const TraceStep& s = trace.steps[i];
      out << "step " << (i + 1) << ": " << to_string(s.kind) << " corank " << s.input_corank
          << "->" << s.result_corank << " added " << s.added_len << " budget " << s.budget
          << (s.bound_ok ? " ok" : " VIOLATED") << "\n";
    }
    out << "final: len=" << trace.final_word.size()
        << " word=" << trace.final_word.display(aut.letters())
        << " all_bounds_ok=" << (trace.all_bounds_ok ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int command_certify(const ReportOptions& opt, bool with_exact, std::ostream& out) {
  Timer timer;
  const std::string text = read_file(opt.file);
  const Automaton aut = parse_dfa(text);
  const CertificateReport report = certify(aut, with_exact, opt.budget);
  if (opt.as_json) {
    emit_envelope(out, "certify", fnv1a64_hex(text), certificate_json(report), !opt.no_timing,
                  timer);
  } else {
    out << "n=" << report.n << " m=" << report.m << "\n";
    if (report.rt_exact) {
      out << "rt_exact=" << *report.rt_exact << "\n";
    }
    out << "rt_constructed=" << report.rt_constructed << "\n";
    out << "cerny_bound=" << report.cerny_bound << "\n";
    out << "pin_frankl_bound=" << report.pin_frankl_bound << "\n";
    out << "bucket_cubic_bound=" << to_string(report.bucket_cubic_bound) << "\n";
    out << "flags_ok=" << (report.all_flags_ok() ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int command_bound_table(const std::vector<std::uint32_t>& ns, bool as_json, bool no_timing,
                        std::ostream& out) {
  Timer timer;
  const BoundTable table = bound_table(ns);
  const double coef = boost::rational_cast<double>(table.coefficient);
  if (as_json) {
    json payload;
    json rows = json::array();
    for (const BoundRow& row : table.rows) {
      json r;
      r["n"] = row.n;
      r["cerny"] = row.cerny;
      r["pin_frankl"] = row.pin_frankl;
      rows.push_back(std::move(r));
    }
    payload["rows"] = std::move(rows);
    payload["coefficient"] = format_double(coef);
    payload["coefficient_exact"] = rational_json(table.coefficient);
    std::string digest_src = "bound-table";
    for (std::uint32_t n : ns) digest_src += "," + std::to_string(n);
    emit_envelope(out, "certify", fnv1a64_hex(digest_src), std::move(payload), !no_timing,
                  timer);
  } else {
    out << "n cerny pin_frankl\n";
    for (const BoundRow& row : table.rows) {
      out << row.n << " " << row.cerny << " " << row.pin_frankl << "\n";
    }
    out << "coefficient " << format_double(coef) << " (" << to_string(table.coefficient)
        << ")\n";
  }
  return kExitOk;
}

int command_opt(const std::vector<std::uint32_t>& ns, bool as_json, bool as_csv,
                bool no_timing, unsigned threads, std::ostream& out) {
  Timer timer;
  const ConvergenceReport report = convergence_report(ns, threads);
  std::string digest_src = "n-list";
  for (std::uint32_t n : ns) digest_src += "," + std::to_string(n);

  if (as_json) {
    json payload;
    json rows = json::array();
    for (const ConvergenceRow& row : report.rows) {
      json r;
      r["n"] = row.n;
      r["best_rho"] = row.best_rho;
      r["lp_value"] = row.lp_value;
      r["lp_ratio"] = row.lp_ratio;
      r["psi_value"] = row.psi_value;
      r["psi_ratio"] = row.psi_ratio;
      r["gap"] = row.gap;
      rows.push_back(std::move(r));
    }
    payload["rows"] = std::move(rows);
    payload["coefficient"] = report.coefficient;
    emit_envelope(out, "opt", fnv1a64_hex(digest_src), std::move(payload), !no_timing, timer);
  } else if (as_csv) {
    out << "n,best_rho,lp_value,lp_ratio,psi_value,psi_ratio,gap\n";
    for (const ConvergenceRow& row : report.rows) {
      out << row.n << "," << row.best_rho << "," << format_double(row.lp_value, 4) << ","
          << format_double(row.lp_ratio) << "," << format_double(row.psi_value, 4) << ","
          << format_double(row.psi_ratio) << "," << format_double(row.gap, 4) << "\n";
    }
    out << "coefficient," << format_double(report.coefficient) << "\n";
  } else {
    out << "n best_rho lp_value lp_ratio psi_value psi_ratio gap\n";
    for (const ConvergenceRow& row : report.rows) {
      out << row.n << " " << row.best_rho << " " << format_double(row.lp_value, 4) << " "
          << format_double(row.lp_ratio) << " " << format_double(row.psi_value, 4) << " "
          << format_double(row.psi_ratio) << " " << format_double(row.gap, 4) << "\n";
    }
    out << "coefficient " << format_double(report.coefficient) << "\n";
  }
  return kExitOk;
}

std::vector<std::uint32_t> parse_n_list(const std::string& csv) {
  std::vector<std::uint32_t> ns;
  std::istringstream in(csv);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    ns.push_back(static_cast<std::uint32_t>(std::stoul(part)));
  }
  if (ns.empty()) {
    throw Error("empty n-list");
  }
  return ns;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"synchronizing-automata toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate .dfa corpora");
  std::string gen_kind;
  CorpusSpec spec;
  std::string out_dir = ".";
  gen->add_option("--kind", gen_kind, "cerny|random")->required();
  gen->add_option("--n", spec.n, "state count")->required();
  gen->add_option("--m", spec.m, "alphabet size (random only)");
  gen->add_option("--seed", spec.seed, "base seed (random only)");
  gen->add_option("--count", spec.count, "number of files (random only)");
  gen->add_option("--out", out_dir, "output directory");

  auto add_report_options = [](CLI::App* cmd, ReportOptions& opt) {
    cmd->add_option("file", opt.file, "input .dfa file")->required();
    cmd->add_flag("--json", opt.as_json, "emit a JSON report");
    cmd->add_flag("--no-timing", opt.no_timing, "suppress the timing field");
    cmd->add_option("--budget", opt.budget, "image-search node budget");
  };

  ReportOptions rt_opt, spectrum_opt, synth_opt, certify_opt;
  auto* rt_cmd = app.add_subcommand("rt", "exact reset threshold and witness");
  add_report_options(rt_cmd, rt_opt);
  auto* spectrum_cmd = app.add_subcommand("spectrum", "λ-spectrum, gaps, ρ and buckets");
  add_report_options(spectrum_cmd, spectrum_opt);
  auto* synth_cmd = app.add_subcommand("synth", "constructive reset word with budget flags");
  add_report_options(synth_cmd, synth_opt);

  auto* certify_cmd = app.add_subcommand("certify", "bound certificate for one automaton");
  bool with_exact = false;
  std::string table_list;
  certify_cmd->add_option("file", certify_opt.file, "input .dfa file");
  certify_cmd->add_flag("--json", certify_opt.as_json, "emit a JSON report");
  certify_cmd->add_flag("--no-timing", certify_opt.no_timing, "suppress the timing field");
  certify_cmd->add_option("--budget", certify_opt.budget, "image-search node budget");
  certify_cmd->add_flag("--exact", with_exact, "include the exact reset threshold");
  certify_cmd->add_option("--bound-table", table_list,
                          "comma-separated n values: print bound table instead");

  auto* opt_cmd = app.add_subcommand("opt", "optimizer convergence report");
  std::string n_list = "258,516,1032,2064";
  bool opt_json = false, opt_csv = false, opt_no_timing = false;
  unsigned opt_threads = 0;
  opt_cmd->add_option("--n-list", n_list, "comma-separated n values");
  opt_cmd->add_flag("--json", opt_json, "emit a JSON report");
  opt_cmd->add_flag("--csv", opt_csv, "emit CSV rows");
  opt_cmd->add_flag("--no-timing", opt_no_timing, "suppress the timing field");
  opt_cmd->add_option("--threads", opt_threads, "solver threads (0 = auto)");

  std::vector<std::string> argv_copy(args);
  try {
    std::vector<const char*> argv;
    argv.push_back("synctool");
    for (const std::string& a : argv_copy) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (gen_kind == "cerny") {
        spec.kind = CorpusSpec::Kind::Cerny;
      } else if (gen_kind == "random") {
        spec.kind = CorpusSpec::Kind::Random;
      } else {
        err << "error: unknown --kind '" << gen_kind << "'\n";
        return kExitUsage;
      }
      return command_gen(spec, out_dir, out);
    }
    if (rt_cmd->parsed()) return command_rt(rt_opt, out);
    if (spectrum_cmd->parsed()) return command_spectrum(spectrum_opt, out);
    if (synth_cmd->parsed()) return command_synth(synth_opt, out);
    if (certify_cmd->parsed()) {
      if (!table_list.empty()) {
        return command_bound_table(parse_n_list(table_list), certify_opt.as_json,
                                   certify_opt.no_timing, out);
      }
      if (certify_opt.file.empty()) {
        err << "error: certify needs a file or --bound-table\n";
        return kExitUsage;
      }
      return command_certify(certify_opt, with_exact, out);
    }
    if (opt_cmd->parsed()) {
      return command_opt(parse_n_list(n_list), opt_json, opt_csv, opt_no_timing, opt_threads,
                         out);
    }
    err << "error: no subcommand\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotSynchronizingError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotSynchronizing;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace synclib
