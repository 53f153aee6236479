#ifndef NCGB_WORD_HPP
#define NCGB_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace ncgb {

/// Index of a variable in the declared alphabet.
using Letter = std::uint8_t;

inline constexpr std::size_t kMaxAlphabetSize = 255;

/// A monomial of the free monoid: a finite sequence of letters. The empty
/// word is the monomial 1.
///
/// Letters are kept in a std::string so that factor search, hashing and
/// small-buffer storage come for free.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) {
    data_.reserve(letters.size());
    for (Letter l : letters) data_.push_back(static_cast<char>(l));
  }
  explicit Word(const std::vector<Letter>& letters) {
    data_.reserve(letters.size());
    for (Letter l : letters) data_.push_back(static_cast<char>(l));
  }

  static Word power(Letter l, std::size_t k) {
    Word w;
    w.data_.assign(k, static_cast<char>(l));
    return w;
  }

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  bool is_one() const { return data_.empty(); }

  Letter operator[](std::size_t i) const {
    return static_cast<Letter>(data_[i]);
  }

  void push_back(Letter l) { data_.push_back(static_cast<char>(l)); }
  void append(const Word& w) { data_.append(w.data_); }

  /// The factor of length `len` starting at `pos`.
  Word factor(std::size_t pos, std::size_t len) const {
    Word w;
    w.data_ = data_.substr(pos, len);
    return w;
  }
  Word prefix(std::size_t len) const { return factor(0, len); }
  Word suffix(std::size_t len) const { return factor(size() - len, len); }
  /// Everything after the first `len` letters.
  Word drop_front(std::size_t len) const { return factor(len, size() - len); }
  /// Everything before the last `len` letters.
  Word drop_back(std::size_t len) const { return factor(0, size() - len); }

  bool has_prefix(const Word& p) const {
    return std::string_view(data_).substr(0, p.size()) == p.data_;
  }
  bool has_suffix(const Word& s) const {
    return s.size() <= size() &&
           std::string_view(data_).substr(size() - s.size()) == s.data_;
  }
  /// True iff `w` occurs in this word starting at position `pos`.
  bool occurs_at(const Word& w, std::size_t pos) const {
    return pos + w.size() <= size() &&
           std::string_view(data_).substr(pos, w.size()) == w.data_;
  }

  /// All starting positions of occurrences of `w` (possibly overlapping).
  std::vector<std::size_t> occurrences(const Word& w) const;

  std::string_view raw() const { return data_; }

  friend Word operator*(const Word& u, const Word& v) {
    Word w;
    w.data_.reserve(u.size() + v.size());
    w.data_ = u.data_;
    w.data_ += v.data_;
    return w;
  }
  friend Word concat(const Word& u, const Word& v, const Word& t) {
    Word w;
    w.data_.reserve(u.size() + v.size() + t.size());
    w.data_ = u.data_;
    w.data_ += v.data_;
    w.data_ += t.data_;
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;

  std::size_t hash() const { return std::hash<std::string>{}(data_); }

 private:
  std::string data_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

/// A finite alphabet of named variables. Letter i is named names()[i].
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Letter l) const { return names_.at(l); }
  /// Index of the variable called `name`, or -1.
  int find(std::string_view name) const;
  /// Whether every name is a single character, in which case monomials are
  /// printed juxtaposed.
  bool single_char() const { return single_char_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  bool single_char_ = true;
};

}  // namespace ncgb

template <>
struct std::hash<ncgb::Word> {
  std::size_t operator()(const ncgb::Word& w) const noexcept { return w.hash(); }
};

#endif
