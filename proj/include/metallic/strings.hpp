#pragma once

// Words over {0, ..., a} in which the letter a only occurs in the block "0a".
// Lexicographic order of letter sequences is the canonical vertex order used
// by every other module.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace metallic {

using Letter = std::uint8_t;

inline constexpr unsigned kMaxAlphabet = 255;
inline constexpr std::uint64_t kDefaultVertexCap = 5'000'000;

/// Throws InvalidAlphabet unless 1 <= a <= kMaxAlphabet.
void check_alphabet(unsigned a);

/// True iff every occurrence of letter a is immediately preceded by 0.
/// Throws InvalidAlphabet for a bad alphabet and LetterOutOfRange for a
/// letter above a.
bool is_valid(std::span<const Letter> letters, unsigned a);

/// Number of valid words of length n, saturating at UINT64_MAX.
std::uint64_t word_count(unsigned a, unsigned n);

/// Textual form: digits for a <= 9, dot-separated decimals otherwise, "-" for
/// the empty word.
std::string to_text(std::span<const Letter> letters, unsigned a);
std::vector<Letter> parse_letters(std::string_view text, unsigned a);

class MetallicString {
 public:
  MetallicString(std::vector<Letter> letters, unsigned a);

  static MetallicString parse(std::string_view text, unsigned a);

  unsigned alphabet() const noexcept { return a_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::string to_text() const { return metallic::to_text(letters_, a_); }

  friend bool operator==(const MetallicString&, const MetallicString&) = default;
  friend std::strong_ordering operator<=>(const MetallicString& x,
                                          const MetallicString& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.letters_ <=> y.letters_;
  }

 private:
  std::vector<Letter> letters_;
  unsigned a_;
};

/// All valid words of one length, stored contiguously in lexicographic order.
class WordList {
 public:
  WordList(unsigned a, unsigned n) : a_(a), n_(n) {}

  unsigned alphabet() const noexcept { return a_; }
  unsigned length() const noexcept { return n_; }
  std::size_t size() const noexcept { return count_; }

  std::span<const Letter> operator[](std::size_t i) const {
    return {letters_.data() + i * n_, n_};
  }
  MetallicString at(std::size_t i) const;

  void push_back(std::span<const Letter> w);
  void reserve(std::size_t words) { letters_.reserve(words * n_); }

 private:
  unsigned a_;
  unsigned n_;
  std::size_t count_ = 0;
  std::vector<Letter> letters_;
};

/// Every valid word of length n in strict lexicographic order.
/// Throws CapExceeded when the count would exceed `cap`.
WordList enumerate(unsigned a, unsigned n,
                   std::uint64_t cap = kDefaultVertexCap);

/// Index of a word in the lexicographic enumeration of its length.
std::uint64_t rank(const MetallicString& w);
std::uint64_t rank(std::span<const Letter> letters, unsigned a);

/// Inverse of rank. Throws DomainError when i >= word_count(a, n).
MetallicString unrank(unsigned a, unsigned n, std::uint64_t i);

struct PrimitiveBlock {
  // zero_a blocks are the two letters (0, a); otherwise `letter` < a.
  bool zero_a = false;
  Letter letter = 0;

  std::size_t length() const noexcept { return zero_a ? 2 : 1; }
  friend bool operator==(const PrimitiveBlock&, const PrimitiveBlock&) = default;
};

struct PrimitiveBlockSeq {
  unsigned a = 1;
  std::vector<PrimitiveBlock> blocks;

  std::vector<Letter> concat() const;
};

/// Unique split of a valid word into single letters 0..a-1 and blocks 0a.
PrimitiveBlockSeq primitive_blocks(const MetallicString& w);
PrimitiveBlockSeq primitive_blocks(std::span<const Letter> letters, unsigned a);

}  // namespace metallic
