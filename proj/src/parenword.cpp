#include "catnum/parenword.hpp"

#include "catnum/error.hpp"

namespace catnum {

ParenWord ParenWord::pair(const ParenWord& x, const ParenWord& y) {
  if (y.word_.empty() || y.word_.front() != '(') {
    throw Error(ErrorKind::MalformedWord, "second operand must start with L");
  }
  std::string out;
  out.reserve(x.word_.size() + y.word_.size());
  out.push_back('(');
  out += x.word_;
  out.append(y.word_, 1, std::string::npos);
  return ParenWord(Trusted{}, std::move(out));
}

std::pair<ParenWord, ParenWord> ParenWord::unpair() const {
  if (is_empty()) throw Error(ErrorKind::EmptyDeconstruction, "unpair of ()");
  // Scan the body after the leading L; the first component ends where the
  // running depth returns from 1 to 0.
  long depth = 0;
  for (std::size_t i = 1; i < word_.size(); ++i) {
    if (word_[i] == '(') {
      ++depth;
    } else if (depth == 1) {
      std::string head = word_.substr(1, i);
      std::string tail = "(" + word_.substr(i + 1);
      return {ParenWord(Trusted{}, std::move(head)), ParenWord(Trusted{}, std::move(tail))};
    } else {
      --depth;
    }
  }
  throw Error(ErrorKind::MalformedWord, "unbalanced word: " + word_);
}

bool ParenWord::is_valid(std::string_view text) noexcept {
  if (text.size() < 2) return false;
  long depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    } else {
      return false;
    }
    // The outer pair must enclose everything.
    if (depth <= 0 && i + 1 != text.size()) return false;
  }
  return depth == 0;
}

ParenWord ParenWord::parse(std::string_view text) {
  if (!is_valid(text)) {
    throw Error(ErrorKind::MalformedWord, "not a balanced parenthesis word: '" +
                                              std::string(text.substr(0, 64)) + "'");
  }
  return ParenWord(Trusted{}, std::string(text));
}

}  // namespace catnum
