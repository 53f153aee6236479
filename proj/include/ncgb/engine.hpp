#ifndef NCGB_ENGINE_HPP
#define NCGB_ENGINE_HPP

#include "ncgb/module_order.hpp"
#include "ncgb/polynomial.hpp"
#include "ncgb/sigma.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncgb {

/// (LM, signature) pairs of a signature basis. Syzygies have LM 0 and are
/// kept apart.
struct LeadingData {
  struct Entry {
    ModuleMonomial sig;
    Word lm;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> elements;
  std::vector<ModuleMonomial> syzygies;

  friend bool operator==(const LeadingData&, const LeadingData&) = default;
  /// FNV-1a over a canonical byte encoding.
  std::uint64_t fingerprint() const;
};

/// Minimal set of syzygy signatures under two-sided divisibility.
class SyzygySet {
 public:
  explicit SyzygySet(std::size_t rank = 0) : buckets_(rank) {}

  /// Whether some member divides m.
  bool divides(const ModuleMonomial& m) const;
  /// Adds s unless a member divides it; drops members that s divides.
  /// Returns whether s was added.
  bool insert(const ModuleMonomial& s);
  std::size_t size() const;
  /// Members, ascending.
  std::vector<ModuleMonomial> sorted(const ModuleOrder& mord) const;

 private:
  std::vector<std::vector<ModuleMonomial>> buckets_;
};

/// An alignment a·P·b = c·Q·d of two leading monomials.
struct WordAmbiguity {
  Word a, b, c, d;
  friend bool operator==(const WordAmbiguity&, const WordAmbiguity&) = default;
};

/// Overlaps (a proper nonempty suffix of one word equals a proper nonempty
/// prefix of the other, both directions) and inclusions (one word a proper
/// factor of the other). Equal words give the identity alignment only when
/// they belong to distinct elements.
std::vector<WordAmbiguity> word_ambiguities(const Word& P, const Word& Q, bool same_element);

struct Ambiguity {
  std::size_t p = 0, q = 0;
  Word a, b, c, d;
  Word lma;
  /// a·sig(p)·b and c·sig(q)·d.
  ModuleMonomial sig_p, sig_q;
  ModuleMonomial siga;
  bool regular = false;
};

std::vector<Ambiguity> enumerate_ambiguities(std::size_t ip, const Word& lm_p,
                                             const ModuleMonomial& sig_p, std::size_t iq,
                                             const Word& lm_q, const ModuleMonomial& sig_q,
                                             const ModuleOrder& mord);

/// Throws std::domain_error if either polynomial part is zero.
template <class K>
std::vector<Ambiguity> enumerate_ambiguities(const SigPolynomial<K>& p, std::size_t ip,
                                             const SigPolynomial<K>& q, std::size_t iq,
                                             const ModuleOrder& mord) {
  if (p.poly.is_zero() || q.poly.is_zero())
    throw std::domain_error("ambiguities need nonzero polynomial parts");
  return enumerate_ambiguities(ip, p.poly.leading_word(), p.sig, iq, q.poly.leading_word(), q.sig,
                               mord);
}

/// Whether some element h (a syzygy, or a nonzero element with
/// lm(a·h·b) < lma) has a·sig(h)·b = siga.
bool is_covered(const Ambiguity& amb, const LeadingData& ld, const SyzygySet& syz,
                const ModuleOrder& mord);
bool is_covered(const Ambiguity& amb, const LeadingData& ld, const ModuleOrder& mord);

/// Visits the signature of every trivial syzygy alpha·w·g - f·w·beta that
/// the bound admits, where sig(alpha) = sig_f, LM(f) = lm_f and likewise for
/// g. Only syzygies whose two leading module terms differ are visited; the
/// signature is then the larger of the two. Subtrees of w are skipped once
/// `divisible` reports that every further signature on that side is a
/// multiple of a known syzygy signature.
template <class Divisible, class Visit>
void for_each_trivial_syzygy(const ModuleMonomial& sig_f, const Word& lm_f,
                             const ModuleMonomial& sig_g, const Word& lm_g, const SigBound& bound,
                             const ModuleOrder& mord, Divisible&& divisible, Visit&& visit) {
  const auto& ord = mord.monomial_order();
  const std::int64_t cap = bound.degree_cap(mord);
  const std::int64_t base = std::max(mord.degree(sig_f) + ord.degree(lm_g),
                                     ord.degree(lm_f) + mord.degree(sig_g));
  if (base > cap) return;
  for (int side = 0; side < 2; ++side) {
    std::vector<std::pair<Word, std::int64_t>> stack{{Word{}, 0}};
    while (!stack.empty()) {
      auto [w, dw] = std::move(stack.back());
      stack.pop_back();
      ModuleMonomial A{sig_f.left, sig_f.component, concat(sig_f.right, w, lm_g)};
      ModuleMonomial B{concat(lm_f, w, sig_g.left), sig_g.component, sig_g.right};
      if (side == 0) {
        if (mord.less(B, A) && bound.admits(A, mord)) visit(A, w);
        if (divisible(ModuleMonomial{sig_f.left, sig_f.component, sig_f.right * w})) continue;
      } else {
        if (mord.less(A, B) && bound.admits(B, mord)) visit(B, w);
        if (divisible(ModuleMonomial{w * sig_g.left, sig_g.component, sig_g.right})) continue;
      }
      for (Letter l = 0; l < ord.num_vars(); ++l) {
        std::int64_t d = dw + ord.weight(l);
        if (base + d > cap) continue;
        Word next;
        if (side == 0) {
          next = w;
          next.push_back(l);
        } else {
          next = Word{l} * w;
        }
        stack.emplace_back(std::move(next), d);
      }
    }
  }
}

struct CoverFailure {
  /// 1: generator signature missing; 2: trivial syzygy not top
  /// syz-reducible; 3: regular ambiguity not covered.
  int condition = 0;
  ModuleMonomial sig;
  std::size_t first = 0, second = 0;
  Word a, b, c, d;
};

struct CoverReport {
  bool ok = true;
  std::vector<CoverFailure> failures;
  std::uint64_t trivial_syzygies_checked = 0;
  std::uint64_t ambiguities_checked = 0;
};

/// The cover criterion up to the bound for `rank` generators. Works on
/// leading data only.
CoverReport check_cover_criterion(const LeadingData& ld, std::size_t rank, const SigBound& bound,
                                  const ModuleOrder& mord, std::size_t max_failures = 32);

enum class QueuePolicy {
  /// Ties on siga broken by lma ascending, then source indices ascending.
  Standard,
  /// Ties broken by lma descending, then source indices descending.
  Alternative,
};

struct EngineOptions {
  QueuePolicy policy = QueuePolicy::Standard;
  /// Track full labels (strong Gröbner basis).
  bool strong = false;
  /// Reduce every pending pair, also ones at an already processed signature,
  /// and check that equal-signature results are proportional.
  bool check_rigidity = false;
};

struct EngineStats {
  std::uint64_t pairs_queued = 0;
  std::uint64_t reductions = 0;
  std::uint64_t pruned_syzygy = 0;
  std::uint64_t pruned_covered = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t singular_drops = 0;
  std::uint64_t trivial_syzygies = 0;
  std::uint64_t rigidity_checks = 0;
  std::uint64_t rigidity_violations = 0;
};

/// A signature basis: nonzero monic elements ascending by signature and the
/// minimal syzygy signatures. In strong mode both carry labels.
template <class K>
struct SigBasis {
  std::vector<SigPolynomial<K>> elements;
  std::vector<ModuleMonomial> syzygies;
  bool strong = false;
  std::vector<ModuleElement<K>> labels;
  std::vector<ModuleElement<K>> syzygy_labels;
  SigBound bound;
  EngineStats stats;

  LeadingData leading_data() const {
    LeadingData ld;
    ld.elements.reserve(elements.size());
    for (const auto& e : elements) ld.elements.push_back({e.sig, e.poly.leading_word()});
    ld.syzygies = syzygies;
    return ld;
  }

  /// Same elements, syzygies and (in strong mode) labels.
  bool same_basis(const SigBasis& o) const {
    return elements == o.elements && syzygies == o.syzygies && strong == o.strong &&
           labels == o.labels && syzygy_labels == o.syzygy_labels;
  }
};

/// Nonzero monic reducers with signatures, indexed by a trie over their
/// leading monomials.
template <class K>
class Reducer {
 public:
  explicit Reducer(const ModuleOrder& mord);

  std::size_t add(Polynomial<K> poly, ModuleMonomial sig, ModuleElement<K> label = {});
  std::size_t size() const { return entries_.size(); }
  const Polynomial<K>& poly(std::size_t i) const { return entries_[i].poly; }
  const ModuleMonomial& sig(std::size_t i) const { return entries_[i].sig; }
  const ModuleElement<K>& label(std::size_t i) const { return entries_[i].label; }

  struct Choice {
    std::size_t index;
    Word a, b;
    ModuleMonomial shifted;
  };
  /// The reducer for word t with shifted signature strictly below mu:
  /// smallest shifted signature, then smallest LM, then smallest index.
  std::optional<Choice> find(const Word& t, const ModuleMonomial& mu) const;
  /// Whether some entry h has a·sig(h)·b = mu and a·LM(h)·b = t.
  bool singular_top_reducible(const Word& t, const ModuleMonomial& mu) const;

  /// Full regular sig-reduction of f at signature mu. When `label` is given
  /// it is updated alongside.
  Polynomial<K> reduce(const Polynomial<K>& f, const ModuleMonomial& mu,
                       ModuleElement<K>* label = nullptr) const;

 private:
  struct Entry {
    Polynomial<K> poly;
    ModuleMonomial sig;
    ModuleElement<K> label;
    std::int64_t lm_degree;
    std::int64_t sig_degree;
  };
  struct Node {
    std::vector<std::pair<Letter, std::uint32_t>> next;
    std::vector<std::uint32_t> ends;
  };
  template <class F>
  void for_each_occurrence(const Word& t, F&& f) const;

  const ModuleOrder* mord_;
  std::vector<Entry> entries_;
  std::vector<Node> trie_;
};

/// Regular sig-reduction of f by the nonzero elements of basis.
template <class K>
SigPolynomial<K> regular_sig_reduce(const SigPolynomial<K>& f, const SigBasis<K>& basis,
                                    const ModuleOrder& mord);

/// The reduced signature Gröbner basis up to the bound. Throws
/// std::domain_error for a zero generator, a field mismatch or a rank
/// mismatch with the module order.
template <class K>
SigBasis<K> compute_sig_basis(const std::vector<Polynomial<K>>& gens, const SigBound& bound,
                              const ModuleOrder& mord, const EngineOptions& options = {});

/// Brings a signature basis into reduced form: monic, regular sig-reduced,
/// no singular top reductions, minimal syzygy signatures. Labels are
/// dropped.
template <class K>
SigBasis<K> interreduce(std::vector<SigPolynomial<K>> raw, std::vector<ModuleMonomial> syzygies,
                        const SigBound& bound, const ModuleOrder& mord);

struct VerifyMode {
  enum Kind { Exact, Probabilistic };
  Kind kind = Exact;
  /// The check prime for probabilistic mode.
  std::uint32_t prime = 0;

  static VerifyMode exact() { return {}; }
  static VerifyMode probabilistic(std::uint32_t q) { return {Probabilistic, q}; }
};

struct VerificationReport {
  bool ok = true;
  /// 0 when passing, otherwise the first failing step (1, 2 or 3).
  int failed_step = 0;
  bool probabilistic = false;
  std::vector<std::string> messages;
  CoverReport cover;
};

/// The test for candidate signature bases over Q: (i) leading-data
/// precondition, (ii) every (g, mu) has (bar mu, mu) regular sig-reducing to
/// a nonzero multiple of g (zero for syzygies), (iii) the cover criterion.
/// Throws std::invalid_argument if the probabilistic prime was used before
/// or cannot reduce the inputs.
VerificationReport sig_verification_test(const SigBasis<Rational>& candidate,
                                         const std::vector<Polynomial<Rational>>& gens,
                                         const SigBound& bound, const ModuleOrder& mord,
                                         const VerifyMode& mode = {},
                                         const std::vector<std::uint32_t>& used_primes = {},
                                         unsigned threads = 1);

/// The test for labeled candidates: every label evaluates to its
/// polynomial and has the recorded signature, then the cover criterion.
VerificationReport verification_test(const SigBasis<Rational>& candidate,
                                     const std::vector<Polynomial<Rational>>& gens,
                                     const SigBound& bound, const ModuleOrder& mord,
                                     const VerifyMode& mode = {},
                                     const std::vector<std::uint32_t>& used_primes = {},
                                     unsigned threads = 1);

}  // namespace ncgb

#endif
