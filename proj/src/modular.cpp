#include "ncgb/modular.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <sstream>
#include <thread>

namespace ncgb {

bool is_admissible(std::uint32_t p, const std::vector<Polynomial<Rational>>& gens) {
  const Integer P(p);
  for (const auto& g : gens) {
    for (const auto& t : g.terms())
      if (mpz_divisible_p(t.coeff.get_den_mpz_t(), P.get_mpz_t())) return false;
    if (!g.is_zero() && mpz_divisible_p(g.leading_coeff().get_num_mpz_t(), P.get_mpz_t())) return false;
  }
  return true;
}

PrimeSet::PrimeSet(std::uint64_t seed, unsigned prime_bits) : rng_(seed), bits_(prime_bits) {
  if (prime_bits < 3 || prime_bits > 31) throw std::invalid_argument("prime width must be in [3, 31] bits");
}

std::vector<std::uint32_t> PrimeSet::primes() const {
  std::vector<std::uint32_t> out;
  for (const auto& m : members_) out.push_back(m.prime);
  return out;
}

bool PrimeSet::contains(std::uint32_t p) const {
  return std::any_of(members_.begin(), members_.end(), [&](const Member& m) { return m.prime == p; });
}

std::uint32_t PrimeSet::draw(const std::vector<Polynomial<Rational>>& gens) {
  const std::uint64_t lo = std::uint64_t{1} << (bits_ - 1);
  const std::uint64_t hi = (std::uint64_t{1} << bits_) - 1;
  std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    auto p = static_cast<std::uint32_t>(dist(rng_));
    if (!is_prime(p) || used(p)) continue;
    if (!is_admissible(p, gens)) {
      excluded_.insert(p);
      continue;
    }
    return p;
  }
  throw std::runtime_error("no unused admissible prime of " + std::to_string(bits_) + " bits left");
}

Rational PrimeSet::total_weight() const {
  Rational w = 0;
  for (const auto& m : members_) w += m.weight;
  return w;
}

Rational PrimeSet::weight(std::uint32_t p) const {
  for (const auto& m : members_)
    if (m.prime == p) return m.weight;
  return 0;
}

void PrimeSet::add_batch(const std::vector<std::uint32_t>& batch) {
  if (batch.empty()) return;
  Rational each = members_.empty() ? Rational(1) : Rational((total_weight() + 1) / Rational(batch.size()));
  for (auto p : batch) {
    if (used(p)) throw std::invalid_argument("prime " + std::to_string(p) + " used twice");
    members_.push_back({p, each});
  }
}

void PrimeSet::remove(std::uint32_t p) {
  members_.erase(std::remove_if(members_.begin(), members_.end(), [&](const Member& m) { return m.prime == p; }),
                 members_.end());
  excluded_.insert(p);
}

SigBasis<Zp> compute_mod_p_basis(const std::vector<Polynomial<Rational>>& gens, std::uint32_t p,
                                 const SigBound& bound, const ModuleOrder& mord,
                                 const EngineOptions& options) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (!is_admissible(p, gens))
    throw std::invalid_argument("prime " + std::to_string(p) + " is not admissible for the generators");
  std::vector<Polynomial<Zp>> gp;
  gp.reserve(gens.size());
  for (const auto& g : gens) gp.push_back(reduce_mod(g, p));
  return compute_sig_basis(gp, bound, mord, options);
}

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_same_v<T, std::string>)
      out += xs[i];
    else
      out += std::to_string(xs[i]);
  }
  return out.empty() ? "-" : out;
}

/// Precomputed idempotents e_k = M_k·(M_k^{-1} mod p_k) for CRT.
class CrtBasis {
 public:
  explicit CrtBasis(const std::vector<std::uint32_t>& primes) : N_(1) {
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j)
        if (primes[i] == primes[j]) throw std::domain_error("repeated modulus in CRT");
    for (auto p : primes) {
      if (p < 2) throw std::domain_error("CRT modulus below 2");
      N_ *= p;
    }
    for (auto p : primes) {
      Integer M = N_ / p;
      Integer inv;
      Integer P(p);
      Integer Mp = M % P;
      if (mpz_invert(inv.get_mpz_t(), Mp.get_mpz_t(), P.get_mpz_t()) == 0)
        throw std::domain_error("CRT moduli are not coprime");
      e_.push_back(M * inv % N_);
    }
  }
  const Integer& modulus() const { return N_; }
  Integer combine(const std::vector<std::uint32_t>& residues) const {
    if (residues.size() != e_.size()) throw std::domain_error("CRT length mismatch");
    Integer x = 0;
    for (std::size_t i = 0; i < residues.size(); ++i) {
      Integer t = e_[i];
      t *= residues[i];
      x += t;
    }
    x %= N_;
    return x;
  }

 private:
  Integer N_;
  std::vector<Integer> e_;
};

}  // namespace

Integer crt_combine(const std::vector<std::uint32_t>& residues, const std::vector<std::uint32_t>& primes) {
  if (residues.size() != primes.size()) throw std::domain_error("CRT length mismatch");
  if (primes.empty()) throw std::domain_error("CRT without moduli");
  return CrtBasis(primes).combine(residues);
}

std::optional<Rational> farey_reconstruct(const Integer& c, const Integer& N) {
  if (N < 2) throw std::domain_error("Farey modulus below 2");
  if (c < 0 || c >= N) throw std::domain_error("Farey residue out of range");
  Integer half = N / 2;
  Integer B;
  mpz_sqrt(B.get_mpz_t(), half.get_mpz_t());
  Integer r0 = N, r1 = c, t0 = 0, t1 = 1, q, tmp;
  while (r1 > B) {
    q = r0 / r1;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (abs(t1) > B) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (r1 != 0 && g != 1) return std::nullopt;
  mpz_gcd(g.get_mpz_t(), t1.get_mpz_t(), N.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

VoteResult majority_vote(const ModularRound& round) {
  if (round.bases.empty()) throw std::domain_error("vote without bases");
  if (round.bases.size() != round.primes.size() || round.weights.size() != round.primes.size())
    throw std::domain_error("vote input length mismatch");
  std::vector<std::size_t> order(round.primes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return round.primes[a] < round.primes[b]; });
  VoteResult res;
  std::vector<LeadingData> reps;
  for (auto i : order) {
    auto ld = round.bases[i]->leading_data();
    std::size_t k = 0;
    while (k < reps.size() && !(reps[k] == ld)) ++k;
    if (k == reps.size()) {
      res.classes.push_back({ld.fingerprint(), {}, 0});
      reps.push_back(std::move(ld));
    }
    res.classes[k].primes.push_back(round.primes[i]);
    res.classes[k].weight += round.weights[i];
  }
  for (std::size_t k = 1; k < res.classes.size(); ++k)
    if (res.classes[k].weight > res.classes[res.winner].weight) res.winner = k;
  return res;
}

namespace {

struct Group {
  std::vector<std::size_t> members;
  Rational weight;
};

/// Index of the heaviest group, ties to the smallest prime (groups are
/// created in ascending prime order).
std::size_t heaviest(const std::vector<Group>& groups) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < groups.size(); ++k)
    if (groups[k].weight > groups[best].weight) best = k;
  return best;
}

template <class Support, class GetSupport>
void support_vote(const ModularRound& round, const std::vector<std::size_t>& idx, GetSupport get,
                  std::set<std::uint32_t>& demoted) {
  std::vector<Group> groups;
  std::vector<Support> reps;
  for (auto i : idx) {
    Support s = get(i);
    std::size_t k = 0;
    while (k < reps.size() && !(reps[k] == s)) ++k;
    if (k == reps.size()) {
      reps.push_back(std::move(s));
      groups.push_back({});
    }
    groups[k].members.push_back(i);
    groups[k].weight += round.weights[i];
  }
  if (groups.size() <= 1) return;
  const auto best = heaviest(groups);
  for (std::size_t k = 0; k < groups.size(); ++k)
    if (k != best)
      for (auto i : groups[k].members) demoted.insert(round.primes[i]);
}

/// Lifts coefficient vectors aligned across primes.
class Lifter {
 public:
  explicit Lifter(const std::vector<std::uint32_t>& primes) : crt_(primes) {}
  std::optional<Rational> lift(const std::vector<std::uint32_t>& residues) const {
    return farey_reconstruct(crt_.combine(residues), crt_.modulus());
  }

 private:
  CrtBasis crt_;
};

/// Lifts module elements over the union of supports, missing terms read as
/// zero.
std::optional<ModuleElement<Rational>> lift_label(const std::vector<const ModuleElement<Zp>*>& labels,
                                                  const Lifter& lifter, const ModuleOrder& mord) {
  std::vector<ModuleMonomial> monos;
  for (const auto* l : labels)
    for (const auto& t : l->terms()) monos.push_back(t.mono);
  std::sort(monos.begin(), monos.end(), [&](const ModuleMonomial& a, const ModuleMonomial& b) { return mord.less(b, a); });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::vector<std::size_t> pos(labels.size(), 0);
  std::vector<ModuleTerm<Rational>> out;
  std::vector<std::uint32_t> residues(labels.size());
  for (const auto& m : monos) {
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const auto& ts = labels[k]->terms();
      if (pos[k] < ts.size() && ts[pos[k]].mono == m) {
        residues[k] = ts[pos[k]].coeff.value();
        ++pos[k];
      } else {
        residues[k] = 0;
      }
    }
    auto c = lifter.lift(residues);
    if (!c) return std::nullopt;
    if (!ncgb::is_zero(*c)) out.push_back({m, *c});
  }
  return ModuleElement<Rational>::from_sorted(std::move(out));
}

}  // namespace

LiftResult lift_and_match(const ModularRound& round) {
  LiftResult res;
  const std::size_t np = round.bases.size();
  if (np == 0) throw std::logic_error("lift without bases");
  const auto& first = *round.bases.front();
  const auto ld0 = first.leading_data();
  for (std::size_t k = 1; k < np; ++k) {
    if (!(round.bases[k]->leading_data() == ld0) || round.bases[k]->strong != first.strong)
      throw std::logic_error("lift: retained bases disagree on leading data");
  }
  std::vector<std::size_t> idx(np);
  for (std::size_t k = 0; k < np; ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return round.primes[a] < round.primes[b]; });

  std::set<std::uint32_t> demoted;
  for (std::size_t e = 0; e < first.elements.size(); ++e) {
    support_vote<std::vector<Word>>(round, idx, [&](std::size_t k) {
      std::vector<Word> s;
      for (const auto& t : round.bases[k]->elements[e].poly.terms()) s.push_back(t.word);
      return s;
    }, demoted);
  }
  if (!demoted.empty()) {
    res.demoted.assign(demoted.begin(), demoted.end());
    return res;
  }

  std::vector<std::uint32_t> primes;
  for (auto k : idx) primes.push_back(round.primes[k]);
  const Lifter lifter(primes);

  SigBasis<Rational> out;
  out.strong = first.strong;
  out.bound = first.bound;
  out.syzygies = first.syzygies;
  std::vector<std::uint32_t> residues(np);
  for (std::size_t e = 0; e < first.elements.size(); ++e) {
    const auto& terms0 = first.elements[e].poly.terms();
    std::vector<Term<Rational>> terms;
    for (std::size_t t = 0; t < terms0.size(); ++t) {
      for (std::size_t j = 0; j < np; ++j) residues[j] = round.bases[idx[j]]->elements[e].poly.terms()[t].coeff.value();
      auto c = lifter.lift(residues);
      if (!c) {
        res.failure = "element " + std::to_string(e);
        return res;
      }
      terms.push_back({terms0[t].word, *c});
    }
    out.elements.push_back({Polynomial<Rational>::from_sorted(std::move(terms)), first.elements[e].sig});
  }
  if (out.strong) {
    if (!round.mord) throw std::logic_error("lift of labels needs the module order");
    auto lift_all = [&](auto member, std::size_t n, std::vector<ModuleElement<Rational>>& dst,
                        const char* what) {
      for (std::size_t e = 0; e < n; ++e) {
        std::vector<const ModuleElement<Zp>*> labels;
        for (auto k : idx) labels.push_back(&(round.bases[k]->*member)[e]);
        auto l = lift_label(labels, lifter, *round.mord);
        if (!l) {
          res.failure = std::string(what) + " " + std::to_string(e);
          return false;
        }
        dst.push_back(std::move(*l));
      }
      return true;
    };
    if (!lift_all(&SigBasis<Zp>::labels, first.elements.size(), out.labels, "label") ||
        !lift_all(&SigBasis<Zp>::syzygy_labels, first.syzygies.size(), out.syzygy_labels, "syzygy label"))
      return res;
  }
  res.basis = std::move(out);
  return res;
}

}  // namespace ncgb

namespace ncgb {

namespace {

/// Computes the missing bases on up to `threads` workers.
void compute_missing(const std::vector<std::uint32_t>& primes, std::map<std::uint32_t, SigBasis<Zp>>& cache,
                     const std::vector<Polynomial<Rational>>& gens, const SigBound& bound,
                     const ModuleOrder& mord, const EngineOptions& opts, unsigned threads) {
  std::vector<std::uint32_t> todo;
  for (auto p : primes)
    if (!cache.count(p)) todo.push_back(p);
  std::vector<SigBasis<Zp>> out(todo.size());
  std::vector<std::exception_ptr> errors(todo.size());
  auto work = [&](std::size_t i) {
    try {
      out[i] = compute_mod_p_basis(gens, todo[i], bound, mord, opts);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (threads <= 1 || todo.size() <= 1) {
    for (std::size_t i = 0; i < todo.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, todo.size()); ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < todo.size(); i = next++) work(i);
      });
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < todo.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    cache.emplace(todo[i], std::move(out[i]));
  }
}

std::string weight_str(const Rational& w) { return w.get_str(); }

}  // namespace

ModularResult modular_sig_gb(const std::vector<Polynomial<Rational>>& gens, const SigBound& bound,
                             const ModuleOrder& mord, const ModularConfig& config) {
  if (gens.empty()) throw std::domain_error("no generators");
  if (gens.size() != mord.rank()) throw std::domain_error("module order rank differs from the number of generators");
  for (const auto& g : gens)
    if (g.is_zero()) throw std::domain_error("zero generator");
  if (config.max_rounds == 0) throw std::invalid_argument("max rounds must be positive");
  const unsigned batch_size = std::max(1u, config.threads);

  ModularResult result;
  auto& tr = result.transcript;
  tr.push_back("config seed=" + std::to_string(config.seed) + " threads=" + std::to_string(config.threads) +
               " prime_bits=" + std::to_string(config.prime_bits) + " max_rounds=" +
               std::to_string(config.max_rounds) + " verify=" +
               (config.verify == VerifyMode::Exact ? "exact" : "probabilistic") +
               " strong=" + (config.strong ? "1" : "0"));

  PrimeSet ps(config.seed, config.prime_bits);
  std::vector<std::uint32_t> batch;
  for (auto p : config.forced_primes) {
    if (!is_prime(p)) throw std::invalid_argument("forced prime " + std::to_string(p) + " is not prime");
    if (ps.used(p) || std::find(batch.begin(), batch.end(), p) != batch.end()) continue;
    if (!is_admissible(p, gens)) {
      ps.exclude(p);
      tr.push_back("prime=" + std::to_string(p) + " status=inadmissible");
      continue;
    }
    batch.push_back(p);
  }
  while (batch.size() < batch_size) {
    auto p = ps.draw(gens);
    if (std::find(batch.begin(), batch.end(), p) == batch.end()) batch.push_back(p);
  }

  EngineOptions opts;
  opts.strong = config.strong;
  std::map<std::uint32_t, SigBasis<Zp>> cache;
  std::vector<std::uint32_t> ever_used;

  for (unsigned round = 1; round <= config.max_rounds; ++round) {
    const std::string R = "round=" + std::to_string(round);
    ps.add_batch(batch);
    std::sort(batch.begin(), batch.end());
    tr.push_back(R + " event=enlarge added=" + join(batch) + " weight_each=" + weight_str(ps.weight(batch.front())));
    ever_used.insert(ever_used.end(), batch.begin(), batch.end());

    auto primes = ps.primes();
    std::sort(primes.begin(), primes.end());
    compute_missing(primes, cache, gens, bound, mord, opts, config.threads);

    auto make_round = [&]() {
      ModularRound mr;
      mr.mord = &mord;
      auto ps_primes = ps.primes();
      std::sort(ps_primes.begin(), ps_primes.end());
      for (auto p : ps_primes) {
        mr.primes.push_back(p);
        mr.weights.push_back(ps.weight(p));
        mr.bases.push_back(&cache.at(p));
      }
      return mr;
    };
    auto mr = make_round();
    for (std::size_t k = 0; k < mr.primes.size(); ++k) {
      const auto& b = *mr.bases[k];
      tr.push_back(R + " event=basis prime=" + std::to_string(mr.primes[k]) + " fingerprint=" +
                   hex(b.leading_data().fingerprint()) + " elements=" + std::to_string(b.elements.size()) +
                   " syzygies=" + std::to_string(b.syzygies.size()));
    }

    auto vote = majority_vote(mr);
    for (std::size_t c = 0; c < vote.classes.size(); ++c) {
      const auto& cl = vote.classes[c];
      tr.push_back(R + " event=vote class=" + std::to_string(c) + " fingerprint=" + hex(cl.fingerprint) +
                   " weight=" + weight_str(cl.weight) + " primes=" + join(cl.primes) +
                   " retained=" + (c == vote.winner ? "1" : "0"));
      if (c != vote.winner)
        for (auto p : cl.primes) {
          ps.remove(p);
          cache.erase(p);
        }
    }

    LiftResult lift;
    while (!ps.members().empty()) {
      mr = make_round();
      lift = lift_and_match(mr);
      if (lift.demoted.empty()) break;
      tr.push_back(R + " event=demote primes=" + join(lift.demoted));
      for (auto p : lift.demoted) {
        ps.remove(p);
        cache.erase(p);
      }
    }

    if (lift.basis) {
      tr.push_back(R + " event=lift status=ok primes=" + join(mr.primes));
      auto& cand = *lift.basis;
      cand.bound = bound;
      VerifyMode mode = VerifyMode::exact();
      if (config.verify == VerifyMode::Probabilistic) {
        auto q = ps.draw(gens);
        ps.exclude(q);
        mode = VerifyMode::probabilistic(q);
        result.check_prime = q;
      }
      auto rep = config.strong ? verification_test(cand, gens, bound, mord, mode, ever_used, config.threads)
                               : sig_verification_test(cand, gens, bound, mord, mode, ever_used, config.threads);
      tr.push_back(R + " event=verify status=" + (rep.ok ? "pass" : "fail") + " mode=" +
                   (mode.kind == VerifyMode::Exact ? "exact" : "probabilistic") +
                   (mode.kind == VerifyMode::Exact ? "" : " check_prime=" + std::to_string(mode.prime)) +
                   (rep.ok ? "" : " failed_step=" + std::to_string(rep.failed_step)));
      if (rep.ok) {
        result.basis = std::move(cand);
        result.rounds = round;
        result.primes = mr.primes;
        result.verified_probabilistically = rep.probabilistic;
        tr.push_back("result rounds=" + std::to_string(round) + " primes=" + join(result.primes) +
                     " elements=" + std::to_string(result.basis.elements.size()) +
                     " syzygies=" + std::to_string(result.basis.syzygies.size()) +
                     " verified=" + (rep.probabilistic ? "probabilistic" : "exact"));
        return result;
      }
    } else {
      tr.push_back(R + " event=lift status=fail" + (lift.failure.empty() ? "" : " at=\"" + lift.failure + "\""));
    }

    batch.clear();
    if (round < config.max_rounds)
      while (batch.size() < batch_size) {
        auto p = ps.draw(gens);
        if (std::find(batch.begin(), batch.end(), p) == batch.end()) batch.push_back(p);
      }
  }
  std::vector<std::uint32_t> excl(ps.excluded().begin(), ps.excluded().end());
  tr.push_back("result status=max_rounds_exceeded rounds=" + std::to_string(config.max_rounds));
  throw MaxRoundsExceeded("no verified basis after " + std::to_string(config.max_rounds) + " rounds", tr,
                          ps.primes(), excl);
}

}  // namespace ncgb
