#include "ncgb/word.hpp"

#include <stdexcept>

namespace ncgb {

std::vector<std::size_t> Word::occurrences(const Word& w) const {
  std::vector<std::size_t> out;
  if (w.size() > size()) return out;
  if (w.empty()) {
    for (std::size_t i = 0; i <= size(); ++i) out.push_back(i);
    return out;
  }
  std::size_t pos = data_.find(w.data_);
  while (pos != std::string::npos) {
    out.push_back(pos);
    pos = data_.find(w.data_, pos + 1);
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet must not be empty");
  if (names_.size() > kMaxAlphabetSize) throw std::invalid_argument("alphabet too large");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (n.size() != 1) single_char_ = false;
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw std::invalid_argument("duplicate variable '" + n + "'");
  }
}

int Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

}  // namespace ncgb
