#include "ncgb/engine.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ncgb {

std::uint64_t LeadingData::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto byte = [&](unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  };
  auto word = [&](const Word& w) {
    for (char c : w.raw()) byte(static_cast<unsigned char>(c));
    byte(0xff);
  };
  auto mono = [&](const ModuleMonomial& m) {
    word(m.left);
    for (int k = 0; k < 4; ++k) byte(static_cast<unsigned char>(m.component >> (8 * k)));
    word(m.right);
  };
  for (const auto& e : elements) {
    mono(e.sig);
    word(e.lm);
  }
  byte(0xfe);
  for (const auto& s : syzygies) mono(s);
  return h;
}

bool SyzygySet::divides(const ModuleMonomial& m) const {
  if (m.component >= buckets_.size()) return false;
  for (const auto& s : buckets_[m.component])
    if (m.divisible_by(s)) return true;
  return false;
}

bool SyzygySet::insert(const ModuleMonomial& s) {
  if (s.component >= buckets_.size()) buckets_.resize(s.component + 1);
  if (divides(s)) return false;
  auto& b = buckets_[s.component];
  b.erase(std::remove_if(b.begin(), b.end(), [&](const ModuleMonomial& t) { return t.divisible_by(s); }),
          b.end());
  b.push_back(s);
  return true;
}

std::size_t SyzygySet::size() const {
  std::size_t n = 0;
  for (const auto& b : buckets_) n += b.size();
  return n;
}

std::vector<ModuleMonomial> SyzygySet::sorted(const ModuleOrder& mord) const {
  std::vector<ModuleMonomial> out;
  for (const auto& b : buckets_) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end(),
            [&](const ModuleMonomial& x, const ModuleMonomial& y) { return mord.less(x, y); });
  return out;
}

std::vector<WordAmbiguity> word_ambiguities(const Word& P, const Word& Q, bool same_element) {
  std::vector<WordAmbiguity> out;
  const std::size_t np = P.size(), nq = Q.size();
  const std::size_t kmax = std::min(np, nq);
  for (std::size_t k = 1; k < kmax; ++k)
    if (P.suffix(k) == Q.prefix(k)) out.push_back({Word{}, Q.drop_front(k), P.drop_back(k), Word{}});
  for (std::size_t k = 1; k < kmax; ++k)
    if (Q.suffix(k) == P.prefix(k)) out.push_back({Q.drop_back(k), Word{}, Word{}, P.drop_front(k)});
  if (nq < np)
    for (auto pos : P.occurrences(Q))
      out.push_back({Word{}, Word{}, P.prefix(pos), P.drop_front(pos + nq)});
  if (np < nq)
    for (auto pos : Q.occurrences(P))
      out.push_back({Q.prefix(pos), Q.drop_front(pos + np), Word{}, Word{}});
  if (P == Q && !same_element) out.push_back({});
  return out;
}

std::vector<Ambiguity> enumerate_ambiguities(std::size_t ip, const Word& lm_p,
                                             const ModuleMonomial& sig_p, std::size_t iq,
                                             const Word& lm_q, const ModuleMonomial& sig_q,
                                             const ModuleOrder& mord) {
  std::vector<Ambiguity> out;
  for (auto& wa : word_ambiguities(lm_p, lm_q, ip == iq)) {
    Ambiguity amb;
    amb.p = ip;
    amb.q = iq;
    amb.lma = concat(wa.a, lm_p, wa.b);
    amb.sig_p = mul_module_monomial(wa.a, sig_p, wa.b);
    amb.sig_q = mul_module_monomial(wa.c, sig_q, wa.d);
    amb.regular = !(amb.sig_p == amb.sig_q);
    amb.siga = mord.less(amb.sig_p, amb.sig_q) ? amb.sig_q : amb.sig_p;
    amb.a = std::move(wa.a);
    amb.b = std::move(wa.b);
    amb.c = std::move(wa.c);
    amb.d = std::move(wa.d);
    out.push_back(std::move(amb));
  }
  return out;
}

bool is_covered(const Ambiguity& amb, const LeadingData& ld, const SyzygySet& syz,
                const ModuleOrder& mord) {
  if (syz.divides(amb.siga)) return true;
  const auto& ord = mord.monomial_order();
  Word a, b;
  for (const auto& e : ld.elements) {
    if (!amb.siga.divisible_by(e.sig, &a, &b)) continue;
    if (ord.compare_concat(a * e.lm, b, amb.lma, Word{}) < 0) return true;
  }
  return false;
}

bool is_covered(const Ambiguity& amb, const LeadingData& ld, const ModuleOrder& mord) {
  SyzygySet syz(mord.rank());
  for (const auto& s : ld.syzygies) syz.insert(s);
  return is_covered(amb, ld, syz, mord);
}

CoverReport check_cover_criterion(const LeadingData& ld, std::size_t rank, const SigBound& bound,
                                  const ModuleOrder& mord, std::size_t max_failures) {
  CoverReport rep;
  auto fail = [&](CoverFailure f) {
    rep.ok = false;
    if (rep.failures.size() < max_failures) rep.failures.push_back(std::move(f));
  };
  SyzygySet syz(rank);
  for (const auto& s : ld.syzygies) syz.insert(s);

  for (std::uint32_t i = 0; i < rank; ++i) {
    auto e = ModuleMonomial::unit(i);
    if (!bound.admits(e, mord)) continue;
    bool found = std::any_of(ld.elements.begin(), ld.elements.end(),
                             [&](const LeadingData::Entry& x) { return x.sig == e; }) ||
                 std::any_of(ld.syzygies.begin(), ld.syzygies.end(),
                             [&](const ModuleMonomial& s) { return s == e; });
    if (!found) fail({1, e, i, i, {}, {}, {}, {}});
  }

  const auto divisible = [&](const ModuleMonomial& m) { return syz.divides(m); };
  for (std::size_t f = 0; f < ld.elements.size(); ++f) {
    for (std::size_t g = 0; g < ld.elements.size(); ++g) {
      const auto& ef = ld.elements[f];
      const auto& eg = ld.elements[g];
      for_each_trivial_syzygy(ef.sig, ef.lm, eg.sig, eg.lm, bound, mord, divisible,
                              [&](const ModuleMonomial& t, const Word& w) {
                                ++rep.trivial_syzygies_checked;
                                if (!syz.divides(t)) fail({2, t, f, g, w, {}, {}, {}});
                              });
    }
  }

  for (std::size_t p = 0; p < ld.elements.size(); ++p) {
    for (std::size_t q = p; q < ld.elements.size(); ++q) {
      const auto& ep = ld.elements[p];
      const auto& eq = ld.elements[q];
      for (const auto& amb : enumerate_ambiguities(p, ep.lm, ep.sig, q, eq.lm, eq.sig, mord)) {
        if (!amb.regular || !bound.admits(amb.siga, mord)) continue;
        ++rep.ambiguities_checked;
        if (!is_covered(amb, ld, syz, mord)) fail({3, amb.siga, p, q, amb.a, amb.b, amb.c, amb.d});
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Reducer

template <class K>
Reducer<K>::Reducer(const ModuleOrder& mord) : mord_(&mord), trie_(1) {}

template <class K>
std::size_t Reducer<K>::add(Polynomial<K> poly, ModuleMonomial sig, ModuleElement<K> label) {
  if (poly.is_zero()) throw std::domain_error("reducer must be nonzero");
  const auto& ord = mord_->monomial_order();
  std::uint32_t node = 0;
  for (char ch : poly.leading_word().raw()) {
    Letter l = static_cast<Letter>(ch);
    std::uint32_t child = 0;
    for (auto& [x, c] : trie_[node].next)
      if (x == l) child = c;
    if (child == 0) {
      child = static_cast<std::uint32_t>(trie_.size());
      trie_[node].next.emplace_back(l, child);
      trie_.emplace_back();
    }
    node = child;
  }
  const std::size_t idx = entries_.size();
  trie_[node].ends.push_back(static_cast<std::uint32_t>(idx));
  std::int64_t lm_deg = ord.degree(poly.leading_word());
  std::int64_t sig_deg = mord_->degree(sig);
  entries_.push_back({std::move(poly), std::move(sig), std::move(label), lm_deg, sig_deg});
  return idx;
}

template <class K>
template <class F>
void Reducer<K>::for_each_occurrence(const Word& t, F&& f) const {
  const auto raw = t.raw();
  for (std::size_t pos = 0; pos <= raw.size(); ++pos) {
    for (auto idx : trie_[0].ends) f(idx, pos);
    std::uint32_t node = 0;
    for (std::size_t j = pos; j < raw.size(); ++j) {
      Letter l = static_cast<Letter>(raw[j]);
      std::uint32_t child = 0;
      for (const auto& [x, c] : trie_[node].next)
        if (x == l) {
          child = c;
          break;
        }
      if (child == 0) break;
      node = child;
      for (auto idx : trie_[node].ends) f(idx, pos);
    }
  }
}

template <class K>
std::optional<typename Reducer<K>::Choice> Reducer<K>::find(const Word& t,
                                                            const ModuleMonomial& mu) const {
  std::optional<Choice> best;
  if (entries_.empty()) return best;
  const auto& ord = mord_->monomial_order();
  const std::int64_t deg_t = ord.degree(t);
  const std::int64_t deg_mu = mord_->degree(mu);
  for_each_occurrence(t, [&](std::uint32_t idx, std::size_t pos) {
    const auto& e = entries_[idx];
    if (deg_t - e.lm_degree + e.sig_degree > deg_mu) return;
    Word a = t.prefix(pos);
    Word b = t.drop_front(pos + e.poly.leading_word().size());
    ModuleMonomial shifted = mul_module_monomial(a, e.sig, b);
    if (!mord_->less(shifted, mu)) return;
    if (best) {
      auto c = mord_->compare(shifted, best->shifted);
      if (c > 0) return;
      if (c == 0) {
        auto l = ord.compare(e.poly.leading_word(), entries_[best->index].poly.leading_word());
        if (l > 0 || (l == 0 && idx > best->index)) return;
      }
    }
    best = Choice{idx, std::move(a), std::move(b), std::move(shifted)};
  });
  return best;
}

template <class K>
bool Reducer<K>::singular_top_reducible(const Word& t, const ModuleMonomial& mu) const {
  bool found = false;
  for_each_occurrence(t, [&](std::uint32_t idx, std::size_t pos) {
    if (found) return;
    const auto& e = entries_[idx];
    if (e.sig.component != mu.component) return;
    Word a = t.prefix(pos);
    Word b = t.drop_front(pos + e.poly.leading_word().size());
    if (mul_module_monomial(a, e.sig, b) == mu) found = true;
  });
  return found;
}

namespace {

struct DescendingModule {
  const ModuleOrder* mord;
  bool operator()(const ModuleMonomial& x, const ModuleMonomial& y) const {
    return mord->less(y, x);
  }
};

template <class K, class Map, class Key>
void accumulate(Map& acc, Key key, const K& delta) {
  auto [it, inserted] = acc.try_emplace(std::move(key), delta);
  if (!inserted) {
    it->second += delta;
    if (is_zero(it->second)) acc.erase(it);
  }
}

}  // namespace

template <class K>
Polynomial<K> Reducer<K>::reduce(const Polynomial<K>& f, const ModuleMonomial& mu,
                                 ModuleElement<K>* label) const {
  if (entries_.empty() || f.is_zero()) return f;
  const auto& ord = mord_->monomial_order();
  std::map<Word, K, DescendingWords> acc(DescendingWords{&ord});
  for (const auto& t : f.terms()) acc.emplace_hint(acc.end(), t.word, t.coeff);
  std::map<ModuleMonomial, K, DescendingModule> lab(DescendingModule{mord_});
  if (label)
    for (const auto& t : label->terms()) lab.emplace_hint(lab.end(), t.mono, t.coeff);

  auto it = acc.begin();
  while (it != acc.end()) {
    auto ch = find(it->first, mu);
    if (!ch) {
      ++it;
      continue;
    }
    const K c = it->second;
    const Word t = it->first;
    const auto& e = entries_[ch->index];
    ++arithmetic_ops();
    for (const auto& s : e.poly.terms()) accumulate<K>(acc, concat(ch->a, s.word, ch->b), K(-(c * s.coeff)));
    if (label)
      for (const auto& s : e.label.terms())
        accumulate<K>(lab, mul_module_monomial(ch->a, s.mono, ch->b), K(-(c * s.coeff)));
    it = acc.lower_bound(t);
  }

  std::vector<Term<K>> out;
  out.reserve(acc.size());
  for (auto& [w, c] : acc) out.push_back({w, c});
  if (label) {
    std::vector<ModuleTerm<K>> lt;
    lt.reserve(lab.size());
    for (auto& [m, c] : lab) lt.push_back({m, c});
    *label = ModuleElement<K>::from_sorted(std::move(lt));
  }
  return Polynomial<K>::from_sorted(std::move(out));
}

template <class K>
SigPolynomial<K> regular_sig_reduce(const SigPolynomial<K>& f, const SigBasis<K>& basis,
                                    const ModuleOrder& mord) {
  Reducer<K> red(mord);
  for (const auto& e : basis.elements) red.add(e.poly, e.sig);
  return {red.reduce(f.poly, f.sig), f.sig};
}

// ---------------------------------------------------------------------------
// Main loop

namespace {

struct Pending {
  ModuleMonomial sig;
  Word lma;
  std::size_t p = 0, q = 0;
  bool generator = false;
  Ambiguity amb;
  std::uint64_t seq = 0;
};

template <class K>
struct SyzOrigin {
  bool trivial = false;
  std::size_t f = 0, g = 0;
  Word w;
  ModuleElement<K> label;
};

/// Subtracts syzygy multiples from every non-leading term of lab that a
/// known syzygy signature divides.
template <class K>
ModuleElement<K> syz_reduce_tail(const ModuleElement<K>& lab, const std::vector<ModuleMonomial>& syz,
                                 const std::vector<ModuleElement<K>>& syz_labels,
                                 const ModuleOrder& mord) {
  if (lab.size() <= 1 || syz_labels.empty()) return lab;
  std::map<ModuleMonomial, K, DescendingModule> acc(DescendingModule{&mord});
  for (const auto& t : lab.terms()) acc.emplace_hint(acc.end(), t.mono, t.coeff);
  auto it = std::next(acc.begin());
  Word a, b;
  while (it != acc.end()) {
    std::size_t j = 0;
    for (; j < syz_labels.size(); ++j)
      if (it->first.divisible_by(syz[j], &a, &b)) break;
    if (j == syz_labels.size()) {
      ++it;
      continue;
    }
    const K c = it->second;
    const ModuleMonomial m = it->first;
    ++arithmetic_ops();
    for (const auto& s : syz_labels[j].terms())
      accumulate<K>(acc, mul_module_monomial(a, s.mono, b), K(-(c * s.coeff)));
    it = acc.lower_bound(m);
  }
  std::vector<ModuleTerm<K>> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back({m, c});
  return ModuleElement<K>::from_sorted(std::move(out));
}

template <class K>
bool proportional(const Polynomial<K>& x, const Polynomial<K>& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  return make_monic(x).first == make_monic(y).first;
}

}  // namespace

template <class K>
SigBasis<K> compute_sig_basis(const std::vector<Polynomial<K>>& gens, const SigBound& bound,
                              const ModuleOrder& mord, const EngineOptions& options) {
  if (gens.empty()) throw std::domain_error("no generators");
  if (gens.size() != mord.rank()) throw std::domain_error("module order rank differs from generator count");
  for (const auto& f : gens) {
    if (f.is_zero()) throw std::domain_error("zero generator");
    require_same_field(f, gens.front());
  }
  const auto& ord = mord.monomial_order();
  const bool strong = options.strong;

  SigBasis<K> out;
  out.bound = bound;
  out.strong = strong;
  auto& st = out.stats;

  Reducer<K> red(mord);
  SyzygySet syz(mord.rank());
  LeadingData ld;
  std::unordered_map<ModuleMonomial, SyzOrigin<K>> origins;
  std::unordered_set<ModuleMonomial> done;
  std::unordered_map<ModuleMonomial, Polynomial<K>> results;

  auto before = [&](const Pending& x, const Pending& y) {
    auto c = mord.compare(x.sig, y.sig);
    if (c != 0) return c < 0;
    auto l = ord.compare(x.lma, y.lma);
    if (options.policy == QueuePolicy::Standard) {
      if (l != 0) return l < 0;
      if (x.p != y.p) return x.p < y.p;
      if (x.q != y.q) return x.q < y.q;
      return x.seq < y.seq;
    }
    if (l != 0) return l > 0;
    if (x.p != y.p) return x.p > y.p;
    if (x.q != y.q) return x.q > y.q;
    return x.seq > y.seq;
  };
  auto later = [&](const Pending& x, const Pending& y) { return before(y, x); };
  std::priority_queue<Pending, std::vector<Pending>, decltype(later)> queue(later);
  std::uint64_t seq = 0;

  for (std::uint32_t i = 0; i < gens.size(); ++i) {
    Pending p;
    p.sig = ModuleMonomial::unit(i);
    if (!bound.admits(p.sig, mord)) continue;
    p.lma = gens[i].leading_word();
    p.p = p.q = i;
    p.generator = true;
    p.seq = seq++;
    queue.push(std::move(p));
  }

  auto record_trivial = [&](std::size_t f, std::size_t g) {
    for_each_trivial_syzygy(
        red.sig(f), red.poly(f).leading_word(), red.sig(g), red.poly(g).leading_word(), bound, mord,
        [&](const ModuleMonomial& m) { return syz.divides(m); },
        [&](const ModuleMonomial& t, const Word& w) {
          if (!syz.insert(t)) return;
          ++st.trivial_syzygies;
          if (strong) origins[t] = SyzOrigin<K>{true, f, g, w, {}};
        });
  };

  while (!queue.empty()) {
    Pending cur = queue.top();
    queue.pop();
    const ModuleMonomial& mu = cur.sig;
    if (!bound.admits(mu, mord)) break;

    bool skip = false;
    if (done.count(mu)) {
      skip = true;
      ++st.pruned_covered;
    } else if (syz.divides(mu)) {
      skip = true;
      ++st.pruned_syzygy;
    } else if (!cur.generator && is_covered(cur.amb, ld, syz, mord)) {
      skip = true;
      ++st.pruned_covered;
    }
    if (skip && !options.check_rigidity) continue;

    Polynomial<K> f;
    ModuleElement<K> lab;
    if (cur.generator) {
      f = gens[cur.p];
      if (strong) lab = ModuleElement<K>::monomial(one_like(f.leading_coeff()), mu);
    } else {
      const bool p_side = cur.amb.sig_p == cur.amb.siga;
      const std::size_t e = p_side ? cur.amb.p : cur.amb.q;
      const Word& a = p_side ? cur.amb.a : cur.amb.c;
      const Word& b = p_side ? cur.amb.b : cur.amb.d;
      f = shift(a, red.poly(e), b);
      if (strong && !skip) lab = module_shift(a, red.label(e), b);
    }
    Polynomial<K> r = red.reduce(f, mu, strong && !skip ? &lab : nullptr);
    if (!skip) ++st.reductions;

    if (options.check_rigidity) {
      auto found = results.find(mu);
      if (found == results.end()) {
        results.emplace(mu, r);
      } else {
        ++st.rigidity_checks;
        if (!proportional(found->second, r)) ++st.rigidity_violations;
      }
    }
    if (skip) continue;
    done.insert(mu);

    if (r.is_zero()) {
      ++st.zero_reductions;
      syz.insert(mu);
      if (strong) origins[mu] = SyzOrigin<K>{false, 0, 0, {}, std::move(lab)};
      continue;
    }
    auto [m, c] = make_monic(r);
    if (red.singular_top_reducible(m.leading_word(), mu)) {
      ++st.singular_drops;
      continue;
    }
    if (strong) lab = module_scale(lab, inverse(c));
    const Word lm = m.leading_word();
    out.elements.push_back({m, mu});
    const std::size_t idx = red.add(std::move(m), mu, std::move(lab));
    ld.elements.push_back({mu, lm});

    for (std::size_t h = 0; h <= idx; ++h) {
      for (auto& amb : enumerate_ambiguities(h, red.poly(h).leading_word(), red.sig(h), idx, lm, mu,
                                             mord)) {
        if (!amb.regular || !bound.admits(amb.siga, mord) || syz.divides(amb.siga)) continue;
        Pending p;
        p.sig = amb.siga;
        p.lma = amb.lma;
        p.p = amb.p;
        p.q = amb.q;
        p.amb = std::move(amb);
        p.seq = seq++;
        queue.push(std::move(p));
        ++st.pairs_queued;
      }
    }
    for (std::size_t h = 0; h <= idx; ++h) {
      record_trivial(idx, h);
      if (h != idx) record_trivial(h, idx);
    }
  }

  out.syzygies = syz.sorted(mord);

  if (strong) {
    for (const auto& s : out.syzygies) {
      const auto& o = origins.at(s);
      ModuleElement<K> lab;
      if (o.trivial) {
        auto left = module_times_right(red.label(o.f), o.w, red.poly(o.g), mord);
        auto right = module_times_left(red.poly(o.f), o.w, red.label(o.g), mord);
        lab = module_combine(left, K(-one_like(red.poly(o.f).leading_coeff())), Word{}, right, Word{},
                             mord);
      } else {
        lab = o.label;
      }
      if (lab.is_zero() || !(signature_of(lab) == s))
        throw std::logic_error("syzygy label does not carry its signature");
      lab = module_scale(lab, inverse(lab.leading_coeff()));
      lab = syz_reduce_tail(lab, out.syzygies, out.syzygy_labels, mord);
      out.syzygy_labels.push_back(std::move(lab));
    }
    for (std::size_t i = 0; i < red.size(); ++i)
      out.labels.push_back(syz_reduce_tail(red.label(i), out.syzygies, out.syzygy_labels, mord));
  }
  return out;
}

template <class K>
SigBasis<K> interreduce(std::vector<SigPolynomial<K>> raw, std::vector<ModuleMonomial> syzygies,
                        const SigBound& bound, const ModuleOrder& mord) {
  std::stable_sort(raw.begin(), raw.end(), [&](const SigPolynomial<K>& x, const SigPolynomial<K>& y) {
    return mord.less(x.sig, y.sig);
  });
  SyzygySet syz(mord.rank());
  for (const auto& s : syzygies)
    if (bound.admits(s, mord)) syz.insert(s);
  Reducer<K> red(mord);
  SigBasis<K> out;
  out.bound = bound;
  std::unordered_set<ModuleMonomial> seen;
  for (auto& e : raw) {
    if (!bound.admits(e.sig, mord) || syz.divides(e.sig) || seen.count(e.sig)) continue;
    if (e.poly.is_zero()) {
      syz.insert(e.sig);
      continue;
    }
    auto r = red.reduce(e.poly, e.sig);
    if (r.is_zero()) {
      syz.insert(e.sig);
      continue;
    }
    auto m = make_monic(r).first;
    if (red.singular_top_reducible(m.leading_word(), e.sig)) continue;
    seen.insert(e.sig);
    out.elements.push_back({m, e.sig});
    red.add(std::move(m), e.sig);
  }
  out.syzygies = syz.sorted(mord);
  return out;
}

template class Reducer<Rational>;
template class Reducer<Zp>;
template SigPolynomial<Rational> regular_sig_reduce(const SigPolynomial<Rational>&,
                                                    const SigBasis<Rational>&, const ModuleOrder&);
template SigPolynomial<Zp> regular_sig_reduce(const SigPolynomial<Zp>&, const SigBasis<Zp>&,
                                              const ModuleOrder&);
template SigBasis<Rational> compute_sig_basis(const std::vector<Polynomial<Rational>>&,
                                              const SigBound&, const ModuleOrder&,
                                              const EngineOptions&);
template SigBasis<Zp> compute_sig_basis(const std::vector<Polynomial<Zp>>&, const SigBound&,
                                        const ModuleOrder&, const EngineOptions&);
template SigBasis<Rational> interreduce(std::vector<SigPolynomial<Rational>>,
                                        std::vector<ModuleMonomial>, const SigBound&,
                                        const ModuleOrder&);
template SigBasis<Zp> interreduce(std::vector<SigPolynomial<Zp>>, std::vector<ModuleMonomial>,
                                  const SigBound&, const ModuleOrder&);

}  // namespace ncgb
