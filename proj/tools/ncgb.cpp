#include "ncgb/modular.hpp"
#include "ncgb/testkit.hpp"
#include "ncgb/text_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace ncgb;

namespace {

enum Exit { Ok = 0, InputError = 1, VerificationFailed = 2, RoundsExceeded = 3 };

struct BoundFlags {
  std::int64_t sig_deg = -1;
  std::string sig_bound;
};

struct ModularFlags {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
  unsigned prime_bits = 31;
  std::string verify = "exact";
  unsigned max_rounds = 10;
  std::vector<std::uint32_t> primes;
};

void add_bound_flags(CLI::App* app, BoundFlags& b) {
  auto* d = app->add_option("--sig-deg", b.sig_deg, "Signature degree bound D (admits degree < D)");
  auto* s = app->add_option("--sig-bound", b.sig_bound, "Explicit bound signature, e.g. 1*e1*yx");
  d->excludes(s);
}

void add_modular_flags(CLI::App* app, ModularFlags& m) {
  app->add_option("--threads", m.threads, "Worker threads")->check(CLI::PositiveNumber);
  app->add_option("--seed", m.seed, "Prime generator seed");
  app->add_option("--prime-bits", m.prime_bits, "Prime width in bits")->check(CLI::Range(3, 31));
  app->add_option("--verify", m.verify, "exact or probabilistic")->check(CLI::IsMember({"exact", "probabilistic"}));
  app->add_option("--max-rounds", m.max_rounds, "Round limit")->check(CLI::PositiveNumber);
  app->add_option("--primes", m.primes, "Forced initial primes")->delimiter(',');
}

SigBound resolve_bound(const BoundFlags& b, const Problem& p) {
  if (b.sig_deg >= 0) return SigBound::sig_degree(b.sig_deg);
  if (!b.sig_bound.empty()) return SigBound::below(parse_signature(b.sig_bound, p.alphabet, p.gens.size()));
  if (p.bound) return *p.bound;
  throw std::invalid_argument("no signature bound: give --sig-deg, --sig-bound or a 'bound' line");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

ModularConfig to_config(const ModularFlags& m, bool strong) {
  ModularConfig c;
  c.threads = m.threads;
  c.seed = m.seed;
  c.prime_bits = m.prime_bits;
  c.max_rounds = m.max_rounds;
  c.verify = m.verify == "exact" ? VerifyMode::Exact : VerifyMode::Probabilistic;
  c.strong = strong;
  c.forced_primes = m.primes;
  return c;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + '\n';
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signature Gröbner bases of two-sided ideals in free algebras over Q"};
  app.require_subcommand(1);

  BoundFlags gb_bound, verify_bound, bench_bound;
  ModularFlags gb_mod, verify_mod, bench_mod;
  std::string gb_problem, gb_out, gb_transcript;
  bool gb_modular = false, gb_strong = false;
  auto* gb = app.add_subcommand("gb", "Compute a reduced signature basis");
  gb->add_option("problem", gb_problem, "Problem file")->required();
  add_bound_flags(gb, gb_bound);
  gb->add_flag("--modular", gb_modular, "Use the multi-modular algorithm");
  gb->add_flag("--strong", gb_strong, "Track full labels");
  gb->add_option("-o,--output", gb_out, "Basis file (default stdout)");
  gb->add_option("--transcript", gb_transcript, "Transcript file for --modular (default <output>.transcript, or stderr)");
  add_modular_flags(gb, gb_mod);

  std::string v_basis, v_problem;
  bool v_strong = false;
  auto* verify = app.add_subcommand("verify", "Check a candidate basis file");
  verify->add_option("basis", v_basis, "Basis file")->required();
  verify->add_option("problem", v_problem, "Problem file")->required();
  add_bound_flags(verify, verify_bound);
  verify->add_flag("--strong", v_strong, "Check labels instead of reductions");
  add_modular_flags(verify, verify_mod);

  unsigned fib_n = 50, rec_n = 20, spoly_n = 6;
  auto* selftest = app.add_subcommand("selftest", "Run the Fibonacci oracles");
  selftest->add_option("--identities", fib_n, "Largest index for the identities")->check(CLI::Range(2u, 100000u));
  selftest->add_option("--recursion", rec_n, "Largest index for the recursion")->check(CLI::Range(1u, 100000u));
  selftest->add_option("--spoly", spoly_n, "Largest index for the S-polynomial chain")->check(CLI::Range(1u, 100000u));

  std::string b_problem;
  bool b_strong = false;
  auto* bench = app.add_subcommand("bench", "Compare direct and modular computation");
  bench->add_option("problem", b_problem, "Problem file")->required();
  add_bound_flags(bench, bench_bound);
  bench->add_flag("--strong", b_strong, "Track full labels");
  add_modular_flags(bench, bench_mod);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : InputError;
  }

  try {
    if (*gb) {
      auto problem = load_problem(gb_problem);
      auto bound = resolve_bound(gb_bound, problem);
      auto mord = problem.module_order();
      SigBasis<Rational> basis;
      if (gb_modular) {
        std::vector<std::string> transcript;
        int code = Ok;
        try {
          auto res = modular_sig_gb(problem.gens, bound, mord, to_config(gb_mod, gb_strong));
          basis = std::move(res.basis);
          transcript = std::move(res.transcript);
        } catch (const MaxRoundsExceeded& e) {
          transcript = e.transcript;
          code = RoundsExceeded;
          std::cerr << "ncgb: " << e.what() << "\n";
        }
        std::string tpath = gb_transcript;
        if (tpath.empty() && !gb_out.empty() && gb_out != "-") tpath = gb_out + ".transcript";
        if (tpath.empty())
          std::cerr << join_lines(transcript);
        else
          write_output(tpath, join_lines(transcript));
        if (code != Ok) return code;
      } else {
        EngineOptions opts;
        opts.strong = gb_strong;
        basis = compute_sig_basis(problem.gens, bound, mord, opts);
      }
      write_output(gb_out, format_basis(basis, problem.alphabet));
      return Ok;
    }

    if (*verify) {
      auto problem = load_problem(v_problem);
      auto bound = resolve_bound(verify_bound, problem);
      auto mord = problem.module_order();
      auto candidate = parse_basis(read_file(v_basis), problem);
      candidate.bound = bound;
      VerifyMode mode;
      if (verify_mod.verify == "probabilistic") {
        PrimeSet ps(verify_mod.seed, verify_mod.prime_bits);
        mode = VerifyMode::probabilistic(ps.draw(problem.gens));
      }
      if (v_strong && !candidate.strong) throw std::invalid_argument("--strong needs a labeled basis file");
      auto rep = v_strong ? verification_test(candidate, problem.gens, bound, mord, mode, {}, verify_mod.threads)
                          : sig_verification_test(candidate, problem.gens, bound, mord, mode, {}, verify_mod.threads);
      for (const auto& m : rep.messages) std::cerr << m << "\n";
      std::cout << (rep.ok ? "pass" : "fail") << (rep.probabilistic ? " (probabilistic)" : "");
      if (!rep.ok) std::cout << " step=" << rep.failed_step;
      std::cout << "\n";
      return rep.ok ? Ok : VerificationFailed;
    }

    if (*selftest) {
      struct Check {
        const char* name;
        bool ok;
        OracleFailure why;
      };
      OracleFailure f1, f2, f3;
      bool ok1 = check_fib_identities(fib_n, &f1);
      bool ok2 = check_recursion(rec_n, &f2);
      bool ok3 = check_spoly_reduction(spoly_n, &f3);
      Check checks[] = {{"fib_identities", ok1, f1}, {"recursion", ok2, f2}, {"spoly_reduction", ok3, f3}};
      bool all = true;
      for (const auto& c : checks) {
        std::cout << c.name << " " << (c.ok ? "pass" : "fail");
        if (!c.ok) std::cout << " (" << c.why.what << ")";
        std::cout << "\n";
        all = all && c.ok;
      }
      return all ? Ok : VerificationFailed;
    }

    if (*bench) {
      auto problem = load_problem(b_problem);
      auto bound = resolve_bound(bench_bound, problem);
      auto mord = problem.module_order();
      using clock = std::chrono::steady_clock;
      auto t0 = clock::now();
      EngineOptions opts;
      opts.strong = b_strong;
      auto direct = compute_sig_basis(problem.gens, bound, mord, opts);
      auto t1 = clock::now();
      ModularResult res;
      try {
        res = modular_sig_gb(problem.gens, bound, mord, to_config(bench_mod, b_strong));
      } catch (const MaxRoundsExceeded& e) {
        std::cerr << "ncgb: " << e.what() << "\n";
        return RoundsExceeded;
      }
      auto t2 = clock::now();
      const bool equal = format_basis(direct, problem.alphabet) == format_basis(res.basis, problem.alphabet);
      std::cout << "elements=" << direct.elements.size() << " syzygies=" << direct.syzygies.size()
                << " equal=" << (equal ? "yes" : "no") << " rounds=" << res.rounds
                << " primes=" << res.primes.size() << " threads=" << bench_mod.threads << "\n";
      std::cout << "direct_seconds=" << std::chrono::duration<double>(t1 - t0).count()
                << " modular_seconds=" << std::chrono::duration<double>(t2 - t1).count() << "\n";
      return equal ? Ok : VerificationFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "ncgb: parse error: " << e.what() << "\n";
    return InputError;
  } catch (const std::exception& e) {
    std::cerr << "ncgb: " << e.what() << "\n";
    return InputError;
  }
  return Ok;
}
