#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace catnum {

/// Balanced-parenthesis word `L w R` where w is a Dyck word over {L, R},
/// stored as ASCII with '(' for L and ')' for R. The code is self-delimiting
/// from either end.
///
/// pair and unpair are linear scans; this instance is a codec, not a
/// computation backend.
class ParenWord {
 public:
  /// "()"
  ParenWord() : word_("()") {}

  static ParenWord empty() { return ParenWord(); }
  /// pair(P xs, P (L:ys)) = P (L : xs ++ ys)
  static ParenWord pair(const ParenWord& x, const ParenWord& y);
  /// Splits after the first balanced prefix of the body.
  /// Throws Error(EmptyDeconstruction) on "()".
  std::pair<ParenWord, ParenWord> unpair() const;

  bool is_empty() const noexcept { return word_.size() == 2; }

  const std::string& str() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }

  /// Validates the grammar. Throws Error(MalformedWord) on empty,
  /// unbalanced, or non-enclosed input and on any other character.
  static ParenWord parse(std::string_view text);
  /// True iff `text` is a well-formed word.
  static bool is_valid(std::string_view text) noexcept;

  friend bool operator==(const ParenWord&, const ParenWord&) = default;

 private:
  struct Trusted {};
  ParenWord(Trusted, std::string word) : word_(std::move(word)) {}

  std::string word_;
};

}  // namespace catnum
