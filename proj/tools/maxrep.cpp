// maxrep: maximal square / k-repeating subsequence toolkit.
//
// Subcommands:
//   mss          maximal square subsequence of the input
//   krep         maximal k-repeating subsequence (optionally constrained)
//   enum-starts  stream the block-start tuples for sigma^r
//   verify       oracle verdicts for candidates, MCS outputs, or run reports
//   bench        seeded random-corpus timing harness (CSV)
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxrep/embedding.hpp"
#include "maxrep/errors.hpp"
#include "maxrep/krep.hpp"
#include "maxrep/mcs.hpp"
#include "maxrep/oracle.hpp"
#include "maxrep/report.hpp"
#include "maxrep/result.hpp"
#include "maxrep/seq.hpp"
#include "maxrep/square.hpp"

namespace {

using namespace maxrep;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputFlags {
  std::string text;
  bool text_given = false;
  std::string file;
  bool bytes = false;
  bool strict = false;
};

void add_input_flags(CLI::App* cmd, InputFlags* in) {
  cmd->add_option("--text", in->text, "input given inline");
  cmd->add_option("--input", in->file, "read input from a file");
  cmd->add_flag("--bytes", in->bytes,
                "treat input as raw bytes (default: UTF-8 text)");
  cmd->add_flag("--strict", in->strict,
                "reject input that decodes to the empty sequence");
}

std::string read_stream(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Seq load_input(const CLI::App* cmd, InputFlags& in) {
  in.text_given = cmd->count("--text") > 0;
  if (const char* env = std::getenv("MAXREP_BYTE_MODE");
      env && std::string(env) == "1") {
    in.bytes = true;
  }
  std::string raw;
  if (in.text_given) {
    raw = in.text;
  } else if (!in.file.empty()) {
    std::ifstream f(in.file, std::ios::binary);
    if (!f) throw UsageError("cannot read input file: " + in.file);
    raw = read_stream(f);
  } else {
    raw = read_stream(std::cin);
  }
  Seq s;
  if (in.bytes) {
    s = Seq::from_bytes(raw);
  } else {
    if (raw.ends_with("\r\n")) {
      raw.erase(raw.size() - 2);
    } else if (raw.ends_with("\n")) {
      raw.erase(raw.size() - 1);
    }
    try {
      s = Seq::from_utf8(raw);
    } catch (const BadEncoding& e) {
      throw UsageError(std::string("unreadable input: ") + e.what());
    }
  }
  if (in.strict && s.empty()) {
    throw UsageError("input is empty after decoding (strict mode)");
  }
  return s;
}

Symbol parse_symbol(const std::string& text, bool bytes) {
  Seq s;
  if (bytes) {
    s = Seq::from_bytes(text);
  } else {
    try {
      s = Seq::from_utf8(text);
    } catch (const BadEncoding&) {
      throw UsageError("--sigma is not valid UTF-8");
    }
  }
  if (s.size() != 1) throw UsageError("--sigma must be exactly one symbol");
  return s.at(1);
}

double ms_between(std::chrono::steady_clock::time_point a,
                  std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

nlohmann::json counterexample_json(
    const std::optional<std::pair<std::size_t, Symbol>>& ce, bool bytes) {
  if (!ce) return nullptr;
  nlohmann::json j;
  j["gap"] = ce->first;
  j["symbol"] = encode_symbols(Seq::repeated(ce->second, 1), bytes);
  return j;
}

void print_report(const RunReport& rep, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(rep) << "\n";
    return;
  }
  std::cout << "result:   " << rep.result << "\n"
            << "length:   " << rep.result_length << "\n"
            << "unit:     " << rep.unit << "\n"
            << "k:        " << rep.k << "\n"
            << "verified: " << (rep.verified ? "true" : "false") << "\n"
            << "elapsed:  " << rep.elapsed_ms << " ms\n";
}

int run_mss(const CLI::App* cmd, InputFlags& in, bool verify, bool as_json) {
  Seq s = load_input(cmd, in);
  auto t0 = std::chrono::steady_clock::now();
  KRepResult res = maximal_square_subsequence(s);
  auto t1 = std::chrono::steady_clock::now();

  RunReport rep = make_report("mss", s, in.bytes, res, ms_between(t0, t1));
  bool ok = res.verified;
  if (verify) {
    auto v = oracle::check_maximal_k_rep(s, res.unit, 2);
    ok = ok && v.is_maximal;
    rep.maximality_checked = true;
    rep.verified = ok;
  }
  print_report(rep, as_json);
  return ok ? 0 : 1;
}

int run_krep(const CLI::App* cmd, InputFlags& in, std::int64_t k,
             const std::string& constraint, bool constraint_given,
             const std::string& sigma_arg, bool sigma_given, bool verify,
             bool as_json) {
  if (k < 1) throw UsageError("k must be at least 1");
  Seq s = load_input(cmd, in);
  const auto kk = static_cast<std::size_t>(k);

  KRepResult res;
  auto t0 = std::chrono::steady_clock::now();
  auto t1 = t0;
  if (constraint_given) {
    Seq x = in.bytes ? Seq::from_bytes(constraint) : Seq::from_utf8(constraint);
    if (x.empty()) throw UsageError("--constraint must be nonempty");
    Symbol sigma;
    if (sigma_given) {
      sigma = parse_symbol(sigma_arg, in.bytes);
    } else {
      OccIndex xo(x);
      auto best = most_frequent_symbol(xo, 1);
      sigma = *best;  // x is nonempty
    }
    if (x.count(sigma) == 0) {
      throw UsageError("--sigma does not occur in the constraint");
    }
    auto pre = oracle::check_k_repeating(s, x, kk);
    if (!pre.ok) {
      throw UsageError(
          "constraint is not " + std::to_string(k) +
          "-repeating: greedy match ran out in copy " +
          std::to_string(pre.fail_copy) + " at constraint position " +
          std::to_string(pre.fail_offset));
    }
    t0 = std::chrono::steady_clock::now();
    ExtendedParts parts = extend_k_rep_parts(s, x, sigma, kk);
    t1 = std::chrono::steady_clock::now();
    res = make_k_rep_result(s, parts.unit(), kk, sigma, parts.prefix,
                            parts.suffix);
  } else {
    t0 = std::chrono::steady_clock::now();
    res = maximal_k_repeating(s, kk);
    t1 = std::chrono::steady_clock::now();
  }

  RunReport rep = make_report("krep", s, in.bytes, res, ms_between(t0, t1));
  bool ok = res.verified;
  if (verify) {
    auto v = oracle::check_maximal_k_rep(s, res.unit, kk);
    ok = ok && v.is_maximal;
    rep.maximality_checked = true;
    rep.verified = ok;
  }
  print_report(rep, as_json);
  return ok ? 0 : 1;
}

int run_enum_starts(const CLI::App* cmd, InputFlags& in, std::int64_t k,
                    std::int64_t r, const std::string& sigma_arg,
                    bool count_only) {
  if (k < 1) throw UsageError("k must be at least 1");
  if (r < 1) throw UsageError("r must be at least 1");
  Seq s = load_input(cmd, in);
  Symbol sigma = parse_symbol(sigma_arg, in.bytes);
  std::vector<Index> positions = occ_positions(s, sigma);
  const auto kk = static_cast<std::size_t>(k);
  const auto rr = static_cast<std::size_t>(r);
  if (positions.size() < kk * rr) {
    throw UsageError("sigma occurs " + std::to_string(positions.size()) +
                     " times; need at least k*r = " + std::to_string(kk * rr));
  }
  auto range = enum_sigma_starts(rr, kk, std::move(positions));
  if (count_only) {
    std::uint64_t count = 0;
    for (const auto& start : range) {
      (void)start;
      ++count;
    }
    std::cout << count << " = C(" << range.slack() + kk << "," << kk << ")\n";
    return 0;
  }
  for (const auto& start : range) {
    std::cout << "(";
    for (std::size_t i = 0; i < start.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << start[i];
    }
    std::cout << ")\n";
  }
  return 0;
}

int run_verify_krep(const CLI::App* cmd, InputFlags& in, std::int64_t k,
                    const std::string& candidate) {
  if (k < 1) throw UsageError("k must be at least 1");
  Seq s = load_input(cmd, in);
  const auto kk = static_cast<std::size_t>(k);
  Seq cand =
      in.bytes ? Seq::from_bytes(candidate) : Seq::from_utf8(candidate);

  nlohmann::json j;
  j["schema"] = 1;
  j["mode"] = "krep";
  j["k"] = kk;

  bool shape_ok = cand.size() % static_cast<Index>(kk) == 0;
  Seq unit;
  if (shape_ok) {
    unit = cand.closed(1, cand.size() / static_cast<Index>(kk));
    shape_ok = unit.repeat(kk) == cand;
  }
  if (!shape_ok) {
    j["is_valid"] = false;
    j["is_maximal"] = false;
    j["error"] = "candidate is not a k-fold repetition";
    std::cout << j.dump(2) << "\n";
    return 1;
  }
  j["unit"] = encode_symbols(unit, in.bytes);

  bool valid = oracle::check_k_repeating(s, unit, kk).ok;
  j["is_valid"] = valid;
  if (!valid) {
    j["is_maximal"] = false;
    std::cout << j.dump(2) << "\n";
    return 1;
  }
  auto v = oracle::check_maximal_k_rep(s, unit, kk);
  j["is_maximal"] = v.is_maximal;
  j["counterexample"] = counterexample_json(v.counterexample, in.bytes);
  std::cout << j.dump(2) << "\n";
  return v.is_maximal ? 0 : 1;
}

int run_verify_mcs(const std::vector<std::string>& hosts_arg,
                   const std::string& constraint,
                   const std::string& candidate, bool bytes) {
  if (hosts_arg.empty()) throw UsageError("--hosts must name at least one host");
  std::vector<Seq> hosts;
  for (const auto& h : hosts_arg) {
    hosts.push_back(bytes ? Seq::from_bytes(h) : Seq::from_utf8(h));
  }
  Seq c = bytes ? Seq::from_bytes(constraint) : Seq::from_utf8(constraint);
  Seq m = bytes ? Seq::from_bytes(candidate) : Seq::from_utf8(candidate);

  auto v = oracle::verify_mcs_output(hosts, c, m);
  nlohmann::json j;
  j["schema"] = 1;
  j["mode"] = "mcs";
  j["contains_constraint"] = v.contains_constraint;
  j["common"] = v.common;
  if (v.failing_host) j["failing_host"] = *v.failing_host;
  j["maximal"] = v.maximal;
  j["counterexample"] = counterexample_json(v.counterexample, bytes);
  j["ok"] = v.ok();
  std::cout << j.dump(2) << "\n";
  return v.ok() ? 0 : 1;
}

int run_verify_report(const CLI::App* cmd, InputFlags& in,
                      const std::string& file) {
  std::ifstream f(file);
  if (!f) throw UsageError("cannot read report file: " + file);
  RunReport rep;
  try {
    rep = report_from_json(read_stream(f));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  Seq s;
  if (cmd->count("--text") > 0 || !in.file.empty()) {
    in.bytes = rep.byte_mode;
    s = load_input(cmd, in);
  } else if (rep.input) {
    s = decode_symbols(*rep.input, rep.byte_mode);
  } else {
    throw UsageError("report carries no input; pass --text or --input");
  }

  nlohmann::json j;
  j["schema"] = 1;
  j["mode"] = "report";
  bool witness_ok = recheck_witness(rep, s);
  j["witness_ok"] = witness_ok;

  Seq unit = decode_symbols(rep.unit, rep.byte_mode);
  Seq result = decode_symbols(rep.result, rep.byte_mode);
  bool consistent = rep.command == "mss" ? result == unit.repeat(2)
                                         : result == unit;
  consistent = consistent && rep.input_length == static_cast<std::size_t>(s.size());
  j["result_consistent"] = consistent;

  bool valid = witness_ok && consistent &&
               oracle::check_k_repeating(s, unit, rep.k).ok;
  j["is_valid"] = valid;
  bool maximal = false;
  if (valid) {
    auto v = oracle::check_maximal_k_rep(s, unit, rep.k);
    maximal = v.is_maximal;
    j["counterexample"] = counterexample_json(v.counterexample, rep.byte_mode);
  }
  j["is_maximal"] = maximal;
  j["ok"] = valid && maximal;
  std::cout << j.dump(2) << "\n";
  return valid && maximal ? 0 : 1;
}

Seq random_string(std::uint64_t seed, std::uint64_t size, std::uint64_t trial,
                  int alphabet) {
  std::seed_seq ss{static_cast<unsigned>(seed), static_cast<unsigned>(seed >> 32),
                   static_cast<unsigned>(size), static_cast<unsigned>(trial)};
  std::mt19937_64 rng(ss);
  std::vector<Symbol> sym(size);
  for (auto& c : sym) {
    c = 'a' + static_cast<Symbol>(rng() % static_cast<std::uint64_t>(alphabet));
  }
  return Seq(std::move(sym));
}

int run_bench(const std::vector<std::int64_t>& sizes, int alphabet,
              int trials, std::uint64_t seed,
              const std::vector<std::int64_t>& klist,
              const std::string& csv_path) {
  if (sizes.empty()) throw UsageError("--sizes must not be empty");
  for (auto n : sizes) {
    if (n <= 0) throw UsageError("--sizes entries must be positive");
  }
  if (alphabet < 1 || alphabet > 26) {
    throw UsageError("--alphabet must be in 1..26");
  }
  if (trials < 1) throw UsageError("--trials must be at least 1");
  for (auto k : klist) {
    if (k < 1) throw UsageError("--k entries must be at least 1");
  }
  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw UsageError("cannot write CSV file: " + csv_path);
  csv << "algo,n,k,alphabet,trial,seed,elapsed_ms,output_len,verified\n";

  char buf[64];
  auto emit = [&](const std::string& algo, std::int64_t n, std::int64_t k,
                  int trial, double ms, std::int64_t len, bool verified) {
    std::snprintf(buf, sizeof(buf), "%.3f", ms);
    csv << algo << "," << n << "," << k << "," << alphabet << "," << trial
        << "," << seed << "," << buf << "," << len << ","
        << (verified ? "true" : "false") << "\n";
  };

  for (std::int64_t n : sizes) {
    for (int trial = 0; trial < trials; ++trial) {
      Seq s = random_string(seed, static_cast<std::uint64_t>(n),
                            static_cast<std::uint64_t>(trial), alphabet);
      {
        auto t0 = std::chrono::steady_clock::now();
        KRepResult res = maximal_square_subsequence(s);
        auto t1 = std::chrono::steady_clock::now();
        bool ok = res.verified &&
                  oracle::check_maximal_k_rep(s, res.unit, 2).is_maximal;
        emit("mss", n, 2, trial, ms_between(t0, t1), res.unit.size() * 2, ok);
      }
      for (std::int64_t k : klist) {
        const auto kk = static_cast<std::size_t>(k);
        auto t0 = std::chrono::steady_clock::now();
        KRepResult res = maximal_k_repeating(s, kk);
        auto t1 = std::chrono::steady_clock::now();
        bool ok = res.verified &&
                  oracle::check_maximal_k_rep(s, res.unit, kk).is_maximal;
        emit("krep", n, k, trial, ms_between(t0, t1), res.unit.size(), ok);
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal square / k-repeating subsequence toolkit"};
  app.require_subcommand(1);

  // mss
  auto* mss = app.add_subcommand("mss", "maximal square subsequence");
  InputFlags mss_in;
  bool mss_verify = false, mss_json = false;
  add_input_flags(mss, &mss_in);
  mss->add_flag("--verify", mss_verify, "run the maximality oracle");
  mss->add_flag("--json", mss_json, "emit a JSON run report");

  // krep
  auto* krep = app.add_subcommand("krep", "maximal k-repeating subsequence");
  InputFlags krep_in;
  std::int64_t krep_k = 0;
  std::string krep_constraint, krep_sigma;
  bool krep_verify = false, krep_json = false;
  add_input_flags(krep, &krep_in);
  krep->add_option("-k,--repeats", krep_k, "number of repetitions")
      ->required();
  krep->add_option("--constraint", krep_constraint,
                   "k-repeating seed the result must contain");
  krep->add_option("--sigma", krep_sigma,
                   "pivot symbol (default: most frequent in the constraint)");
  krep->add_flag("--verify", krep_verify, "run the maximality oracle");
  krep->add_flag("--json", krep_json, "emit a JSON run report");

  // enum-starts
  auto* enums = app.add_subcommand(
      "enum-starts", "stream block-start tuples for sigma^r");
  InputFlags enum_in;
  std::int64_t enum_k = 0, enum_r = 0;
  std::string enum_sigma;
  bool count_only = false;
  add_input_flags(enums, &enum_in);
  enums->add_option("-k,--repeats", enum_k, "number of blocks")->required();
  enums->add_option("-r,--run", enum_r, "sigma run length per block")
      ->required();
  enums->add_option("--sigma", enum_sigma, "block symbol")->required();
  enums->add_flag("--count-only", count_only,
                  "print the streamed count next to the binomial");

  // verify
  auto* verify = app.add_subcommand("verify", "oracle verdicts");
  verify->require_subcommand(1);

  auto* vkrep = verify->add_subcommand(
      "krep", "check a candidate given in repeated form (e.g. the square)");
  InputFlags vkrep_in;
  std::int64_t vkrep_k = 0;
  std::string vkrep_candidate;
  add_input_flags(vkrep, &vkrep_in);
  vkrep->add_option("-k,--repeats", vkrep_k, "number of repetitions")
      ->required();
  vkrep->add_option("--candidate", vkrep_candidate, "candidate, repeated form")
      ->required();

  auto* vmcs = verify->add_subcommand("mcs", "check a constrained MCS output");
  std::vector<std::string> vmcs_hosts;
  std::string vmcs_constraint, vmcs_candidate;
  bool vmcs_bytes = false;
  vmcs->add_option("--hosts", vmcs_hosts, "comma-separated host strings")
      ->required()
      ->delimiter(',');
  vmcs->add_option("--constraint", vmcs_constraint, "required subsequence");
  vmcs->add_option("--candidate", vmcs_candidate, "candidate output")
      ->required();
  vmcs->add_flag("--bytes", vmcs_bytes, "treat strings as raw bytes");

  auto* vreport = verify->add_subcommand("report", "re-verify a JSON run report");
  InputFlags vreport_in;
  std::string vreport_file;
  add_input_flags(vreport, &vreport_in);
  vreport->add_option("--file", vreport_file, "report JSON path")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "seeded random-corpus benchmark");
  std::vector<std::int64_t> bench_sizes;
  std::vector<std::int64_t> bench_k{2, 3};
  int bench_alphabet = 4;
  int bench_trials = 1;
  std::uint64_t bench_seed = 0;
  std::string bench_csv;
  bench->add_option("--sizes", bench_sizes, "input lengths")
      ->required()
      ->delimiter(',');
  bench->add_option("--alphabet", bench_alphabet, "alphabet size (1..26)");
  bench->add_option("--trials", bench_trials, "strings per size");
  bench->add_option("--seed", bench_seed, "corpus seed")->required();
  bench->add_option("--k", bench_k, "k values for krep rows")->delimiter(',');
  bench->add_option("--csv", bench_csv, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mss->parsed()) return run_mss(mss, mss_in, mss_verify, mss_json);
    if (krep->parsed()) {
      return run_krep(krep, krep_in, krep_k, krep_constraint,
                      krep->count("--constraint") > 0, krep_sigma,
                      krep->count("--sigma") > 0, krep_verify, krep_json);
    }
    if (enums->parsed()) {
      return run_enum_starts(enums, enum_in, enum_k, enum_r, enum_sigma,
                             count_only);
    }
    if (verify->parsed()) {
      if (vkrep->parsed()) {
        return run_verify_krep(vkrep, vkrep_in, vkrep_k, vkrep_candidate);
      }
      if (vmcs->parsed()) {
        return run_verify_mcs(vmcs_hosts, vmcs_constraint, vmcs_candidate,
                              vmcs_bytes);
      }
      if (vreport->parsed()) {
        return run_verify_report(vreport, vreport_in, vreport_file);
      }
    }
    if (bench->parsed()) {
      return run_bench(bench_sizes, bench_alphabet, bench_trials, bench_seed,
                       bench_k, bench_csv);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
