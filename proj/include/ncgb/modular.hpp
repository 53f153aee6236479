#ifndef NCGB_MODULAR_HPP
#define NCGB_MODULAR_HPP

#include "ncgb/engine.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncgb {

/// Whether p divides no denominator and no leading coefficient of gens.
bool is_admissible(std::uint32_t p, const std::vector<Polynomial<Rational>>& gens);

/// Primes in use with their vote weight, plus primes that may not be drawn
/// again.
class PrimeSet {
 public:
  PrimeSet(std::uint64_t seed, unsigned prime_bits);

  struct Member {
    std::uint32_t prime;
    Rational weight;
  };
  const std::vector<Member>& members() const { return members_; }
  const std::set<std::uint32_t>& excluded() const { return excluded_; }
  std::vector<std::uint32_t> primes() const;
  bool contains(std::uint32_t p) const;
  bool used(std::uint32_t p) const { return contains(p) || excluded_.count(p) > 0; }

  /// Draws the next unused admissible prime of the configured width.
  std::uint32_t draw(const std::vector<Polynomial<Rational>>& gens);
  /// Adds a batch whose collective weight is the present total plus one,
  /// split evenly.
  void add_batch(const std::vector<std::uint32_t>& batch);
  /// Removes p from the set and excludes it.
  void remove(std::uint32_t p);
  void exclude(std::uint32_t p) { excluded_.insert(p); }
  Rational total_weight() const;
  Rational weight(std::uint32_t p) const;

 private:
  std::mt19937_64 rng_;
  unsigned bits_;
  std::vector<Member> members_;
  std::set<std::uint32_t> excluded_;
};

/// Reduces gens mod p and runs the engine over Z_p. Throws
/// std::invalid_argument if p is not prime or not admissible.
SigBasis<Zp> compute_mod_p_basis(const std::vector<Polynomial<Rational>>& gens, std::uint32_t p,
                                 const SigBound& bound, const ModuleOrder& mord,
                                 const EngineOptions& options = {});

/// The per-prime bases of one round.
struct ModularRound {
  std::vector<std::uint32_t> primes;
  std::vector<Rational> weights;
  std::vector<const SigBasis<Zp>*> bases;
  /// Needed to order lifted labels.
  const ModuleOrder* mord = nullptr;
};

struct VoteClass {
  std::uint64_t fingerprint;
  std::vector<std::uint32_t> primes;
  Rational weight;
};

struct VoteResult {
  /// Classes by equal leading data, ordered by their smallest prime.
  std::vector<VoteClass> classes;
  /// Index into classes of the retained one.
  std::size_t winner = 0;
};

/// Partitions by leading data and retains a class of largest total weight,
/// ties going to the class with the smallest prime.
VoteResult majority_vote(const ModularRound& round);

/// The representative in [0, prod primes) of the residues. Throws
/// std::domain_error on a length mismatch or repeated primes.
Integer crt_combine(const std::vector<std::uint32_t>& residues, const std::vector<std::uint32_t>& primes);

/// The a/b, |a|, |b| <= floor(sqrt(N/2)), gcd(b, N) = 1, congruent to c, if
/// any.
std::optional<Rational> farey_reconstruct(const Integer& c, const Integer& N);

struct LiftResult {
  std::optional<SigBasis<Rational>> basis;
  /// Primes whose polynomial supports disagree with the weighted majority.
  std::vector<std::uint32_t> demoted;
  /// First element whose reconstruction failed, if any.
  std::string failure;
};

/// Matches elements by signature and lifts their coefficients. Vote must
/// have been applied: throws std::logic_error if leading data differ.
LiftResult lift_and_match(const ModularRound& round);

struct ModularConfig {
  unsigned threads = 1;
  std::uint64_t seed = 1;
  unsigned prime_bits = 31;
  unsigned max_rounds = 10;
  VerifyMode::Kind verify = VerifyMode::Exact;
  bool strong = false;
  /// Initial primes, drawn primes fill up to `threads`.
  std::vector<std::uint32_t> forced_primes;
};

class MaxRoundsExceeded : public std::runtime_error {
 public:
  MaxRoundsExceeded(const std::string& msg, std::vector<std::string> transcript,
                    std::vector<std::uint32_t> primes, std::vector<std::uint32_t> excluded)
      : std::runtime_error(msg),
        transcript(std::move(transcript)),
        primes(std::move(primes)),
        excluded(std::move(excluded)) {}
  std::vector<std::string> transcript;
  std::vector<std::uint32_t> primes;
  std::vector<std::uint32_t> excluded;
};

struct ModularResult {
  SigBasis<Rational> basis;
  unsigned rounds = 0;
  std::vector<std::uint32_t> primes;
  bool verified_probabilistically = false;
  std::uint32_t check_prime = 0;
  /// key=value lines, no timings.
  std::vector<std::string> transcript;
};

/// Per-prime bases, vote, lift and verification, enlarging the prime set
/// until the lifted candidate passes. Throws MaxRoundsExceeded.
ModularResult modular_sig_gb(const std::vector<Polynomial<Rational>>& gens, const SigBound& bound,
                             const ModuleOrder& mord, const ModularConfig& config = {});

}  // namespace ncgb

#endif
