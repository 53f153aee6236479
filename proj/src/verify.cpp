#include "ncgb/engine.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <stdexcept>
#include <thread>

namespace ncgb {

namespace {

/// Runs body(i) for i in [0, n) on up to `threads` workers.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

std::string element_name(std::size_t i) { return "element " + std::to_string(i); }
std::string syzygy_name(std::size_t i) { return "syzygy " + std::to_string(i); }

bool step_precondition(const SigBasis<Rational>& h, const SigBound& bound, const ModuleOrder& mord,
                       std::vector<std::string>& msgs) {
  bool ok = true;
  const auto& ord = mord.monomial_order();
  struct Item {
    ModuleMonomial sig;
    const Polynomial<Rational>* poly;
    std::string name;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < h.elements.size(); ++i) {
    const auto& e = h.elements[i];
    if (e.sig.component >= mord.rank()) {
      msgs.push_back(element_name(i) + ": component out of range");
      return false;
    }
    if (e.poly.is_zero() || !is_one(e.poly.leading_coeff())) {
      msgs.push_back(element_name(i) + ": polynomial is not monic");
      ok = false;
    }
    if (!bound.admits(e.sig, mord)) {
      msgs.push_back(element_name(i) + ": signature not below the bound");
      ok = false;
    }
    if (i > 0 && !mord.less(h.elements[i - 1].sig, e.sig)) {
      msgs.push_back(element_name(i) + ": signatures not strictly ascending");
      ok = false;
    }
    items.push_back({e.sig, &e.poly, element_name(i)});
  }
  for (std::size_t i = 0; i < h.syzygies.size(); ++i) {
    const auto& s = h.syzygies[i];
    if (s.component >= mord.rank()) {
      msgs.push_back(syzygy_name(i) + ": component out of range");
      return false;
    }
    if (!bound.admits(s, mord)) {
      msgs.push_back(syzygy_name(i) + ": signature not below the bound");
      ok = false;
    }
    items.push_back({s, nullptr, syzygy_name(i)});
  }
  Word a, b;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (i == j || !items[i].sig.divisible_by(items[j].sig, &a, &b)) continue;
      const auto* g = items[i].poly;
      const auto* hp = items[j].poly;
      bool clash = false;
      if (a.empty() && b.empty()) {
        clash = true;
      } else if (!g && !hp) {
        clash = true;
      } else if (g && hp && ord.compare_concat(a * hp->leading_word(), b, g->leading_word(), Word{}) == 0) {
        clash = true;
      }
      if (clash) {
        msgs.push_back(items[i].name + ": leading data is a multiple of " + items[j].name);
        ok = false;
      }
    }
  }
  return ok;
}

template <class K>
bool step_reduction(const std::vector<SigPolynomial<K>>& elements,
                    const std::vector<ModuleMonomial>& syzygies, const std::vector<Polynomial<K>>& gens,
                    const ModuleOrder& mord, unsigned threads, std::vector<std::string>& msgs) {
  Reducer<K> red(mord);
  for (const auto& e : elements) red.add(e.poly, e.sig);
  const std::size_t n = elements.size() + syzygies.size();
  std::vector<char> good(n, 0);
  parallel_for(n, threads, [&](std::size_t i) {
    const bool is_syz = i >= elements.size();
    const ModuleMonomial& mu = is_syz ? syzygies[i - elements.size()] : elements[i].sig;
    auto r = red.reduce(evaluate_monomial(mu, gens), mu);
    if (is_syz)
      good[i] = r.is_zero();
    else
      good[i] = !r.is_zero() && make_monic(r).first == elements[i].poly;
  });
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (good[i]) continue;
    ok = false;
    msgs.push_back(i < elements.size()
                       ? element_name(i) + ": reduction is not a multiple of the polynomial"
                       : syzygy_name(i - elements.size()) + ": reduction is not zero");
  }
  return ok;
}

void check_probabilistic_prime(const VerifyMode& mode, const std::vector<std::uint32_t>& used) {
  if (mode.kind != VerifyMode::Probabilistic) return;
  if (!is_prime(mode.prime)) throw std::invalid_argument("check modulus is not prime");
  if (std::find(used.begin(), used.end(), mode.prime) != used.end())
    throw std::invalid_argument("check prime " + std::to_string(mode.prime) +
                                " was already used in the computation");
}

std::vector<Polynomial<Zp>> gens_mod(const std::vector<Polynomial<Rational>>& gens, std::uint32_t q) {
  std::vector<Polynomial<Zp>> out;
  try {
    for (const auto& g : gens) out.push_back(reduce_mod(g, q));
  } catch (const ReductionUndefined&) {
    throw std::invalid_argument("check prime divides a denominator");
  }
  return out;
}

}  // namespace

VerificationReport sig_verification_test(const SigBasis<Rational>& candidate,
                                         const std::vector<Polynomial<Rational>>& gens,
                                         const SigBound& bound, const ModuleOrder& mord,
                                         const VerifyMode& mode,
                                         const std::vector<std::uint32_t>& used_primes,
                                         unsigned threads) {
  check_probabilistic_prime(mode, used_primes);
  VerificationReport rep;
  rep.probabilistic = mode.kind == VerifyMode::Probabilistic;
  if (!step_precondition(candidate, bound, mord, rep.messages)) {
    rep.ok = false;
    rep.failed_step = 1;
    return rep;
  }
  auto cover = std::async(threads > 1 ? std::launch::async : std::launch::deferred, [&] {
    return check_cover_criterion(candidate.leading_data(), mord.rank(), bound, mord);
  });
  bool reduced_ok;
  if (mode.kind == VerifyMode::Exact) {
    reduced_ok = step_reduction(candidate.elements, candidate.syzygies, gens, mord, threads, rep.messages);
  } else {
    auto gq = gens_mod(gens, mode.prime);
    std::vector<SigPolynomial<Zp>> eq;
    try {
      for (const auto& e : candidate.elements) eq.push_back({reduce_mod(e.poly, mode.prime), e.sig});
    } catch (const ReductionUndefined&) {
      throw std::invalid_argument("check prime divides a denominator of the candidate");
    }
    reduced_ok = step_reduction(eq, candidate.syzygies, gq, mord, threads, rep.messages);
  }
  rep.cover = cover.get();
  if (!reduced_ok) {
    rep.ok = false;
    rep.failed_step = 2;
  } else if (!rep.cover.ok) {
    rep.ok = false;
    rep.failed_step = 3;
    rep.messages.push_back("cover criterion fails (" + std::to_string(rep.cover.failures.size()) +
                           " reported)");
  }
  return rep;
}

namespace {

template <class K>
bool step_labels(const std::vector<SigPolynomial<K>>& elements, const std::vector<ModuleElement<K>>& labels,
                 const std::vector<ModuleMonomial>& syzygies,
                 const std::vector<ModuleElement<K>>& syz_labels, const std::vector<Polynomial<K>>& gens,
                 const ModuleOrder& mord, unsigned threads, std::vector<std::string>& msgs) {
  const std::size_t n = elements.size() + syzygies.size();
  std::vector<char> good(n, 0);
  parallel_for(n, threads, [&](std::size_t i) {
    if (i < elements.size()) {
      const auto& lab = labels[i];
      good[i] = !lab.is_zero() && signature_of(lab) == elements[i].sig &&
                evaluate_label(lab, gens, mord.monomial_order()) == elements[i].poly;
    } else {
      const auto& lab = syz_labels[i - elements.size()];
      good[i] = !lab.is_zero() && signature_of(lab) == syzygies[i - elements.size()] &&
                is_one(lab.leading_coeff()) &&
                evaluate_label(lab, gens, mord.monomial_order()).is_zero();
    }
  });
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (good[i]) continue;
    ok = false;
    msgs.push_back((i < elements.size() ? element_name(i) : syzygy_name(i - elements.size())) +
                   ": label does not evaluate to the polynomial");
  }
  return ok;
}

}  // namespace

VerificationReport verification_test(const SigBasis<Rational>& candidate,
                                     const std::vector<Polynomial<Rational>>& gens,
                                     const SigBound& bound, const ModuleOrder& mord,
                                     const VerifyMode& mode,
                                     const std::vector<std::uint32_t>& used_primes,
                                     unsigned threads) {
  check_probabilistic_prime(mode, used_primes);
  VerificationReport rep;
  rep.probabilistic = mode.kind == VerifyMode::Probabilistic;
  if (!candidate.strong || candidate.labels.size() != candidate.elements.size() ||
      candidate.syzygy_labels.size() != candidate.syzygies.size()) {
    rep.ok = false;
    rep.failed_step = 1;
    rep.messages.push_back("candidate does not carry labels");
    return rep;
  }
  for (const auto& s : candidate.syzygies)
    if (s.component >= mord.rank()) {
      rep.ok = false;
      rep.failed_step = 1;
      rep.messages.push_back("syzygy component out of range");
      return rep;
    }
  auto cover = std::async(threads > 1 ? std::launch::async : std::launch::deferred, [&] {
    return check_cover_criterion(candidate.leading_data(), mord.rank(), bound, mord);
  });
  bool labels_ok;
  if (mode.kind == VerifyMode::Exact) {
    labels_ok = step_labels(candidate.elements, candidate.labels, candidate.syzygies,
                            candidate.syzygy_labels, gens, mord, threads, rep.messages);
  } else {
    auto gq = gens_mod(gens, mode.prime);
    std::vector<SigPolynomial<Zp>> eq;
    std::vector<ModuleElement<Zp>> lq, sq;
    try {
      for (const auto& e : candidate.elements) eq.push_back({reduce_mod(e.poly, mode.prime), e.sig});
      for (const auto& l : candidate.labels) lq.push_back(reduce_mod(l, mode.prime));
      for (const auto& l : candidate.syzygy_labels) sq.push_back(reduce_mod(l, mode.prime));
    } catch (const ReductionUndefined&) {
      throw std::invalid_argument("check prime divides a denominator of the candidate");
    }
    labels_ok = step_labels(eq, lq, candidate.syzygies, sq, gq, mord, threads, rep.messages);
  }
  rep.cover = cover.get();
  if (!labels_ok) {
    rep.ok = false;
    rep.failed_step = 2;
  } else if (!rep.cover.ok) {
    rep.ok = false;
    rep.failed_step = 3;
    rep.messages.push_back("cover criterion fails");
  }
  return rep;
}

}  // namespace ncgb
