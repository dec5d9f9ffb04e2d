#include "metallic/strings.hpp"

#include <charconv>
#include <limits>

#include "metallic/error.hpp"

namespace metallic {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t x, std::uint64_t y) {
  return x > kSaturated - y ? kSaturated : x + y;
}

std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
  if (x != 0 && y > kSaturated / x) return kSaturated;
  return x * y;
}

// counts[m] = s^a_m for m = 0..n.
std::vector<std::uint64_t> count_table(unsigned a, unsigned n) {
  std::vector<std::uint64_t> s(n + 1);
  s[0] = 1;
  if (n >= 1) s[1] = a;
  for (unsigned m = 2; m <= n; ++m) s[m] = sat_add(sat_mul(a, s[m - 1]), s[m - 2]);
  return s;
}

// Words of length m that may start with the letter a (the previous letter
// was 0).
std::uint64_t after_zero(const std::vector<std::uint64_t>& s, unsigned m) {
  return m == 0 ? 1 : sat_add(s[m], s[m - 1]);
}

}  // namespace

void check_alphabet(unsigned a) {
  if (a == 0 || a > kMaxAlphabet) {
    throw InvalidAlphabet("alphabet parameter must be in 1.." +
                          std::to_string(kMaxAlphabet) + ", got " +
                          std::to_string(a));
  }
}

bool is_valid(std::span<const Letter> letters, unsigned a) {
  check_alphabet(a);
  bool ok = true;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] > a) {
      throw LetterOutOfRange("letter " + std::to_string(letters[i]) +
                             " exceeds alphabet parameter " + std::to_string(a));
    }
    if (letters[i] == a && (i == 0 || letters[i - 1] != 0)) ok = false;
  }
  return ok;
}

std::uint64_t word_count(unsigned a, unsigned n) {
  check_alphabet(a);
  return count_table(a, n)[n];
}

std::string to_text(std::span<const Letter> letters, unsigned a) {
  if (letters.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (a <= 9) {
      out.push_back(static_cast<char>('0' + letters[i]));
    } else {
      if (i) out.push_back('.');
      out += std::to_string(letters[i]);
    }
  }
  return out;
}

std::vector<Letter> parse_letters(std::string_view text, unsigned a) {
  check_alphabet(a);
  std::vector<Letter> out;
  if (text == "-") return out;
  if (text.empty()) throw DomainError("empty word text (use \"-\" for the empty word)");
  auto push = [&](unsigned value) {
    if (value > a) {
      throw LetterOutOfRange("letter " + std::to_string(value) +
                             " exceeds alphabet parameter " + std::to_string(a));
    }
    out.push_back(static_cast<Letter>(value));
  };
  if (a <= 9) {
    for (char c : text) {
      if (c < '0' || c > '9') throw DomainError("bad letter in word text: " + std::string(text));
      push(static_cast<unsigned>(c - '0'));
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto dot = text.find('.', pos);
    auto piece = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    unsigned value = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || end != piece.data() + piece.size()) {
      throw DomainError("bad letter in word text: " + std::string(text));
    }
    push(value);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return out;
}

MetallicString::MetallicString(std::vector<Letter> letters, unsigned a)
    : letters_(std::move(letters)), a_(a) {
  if (!is_valid(letters_, a_)) {
    throw InvalidWord("letter " + std::to_string(a_) +
                      " must follow 0 in " + metallic::to_text(letters_, a_));
  }
}

MetallicString MetallicString::parse(std::string_view text, unsigned a) {
  return MetallicString(parse_letters(text, a), a);
}

MetallicString WordList::at(std::size_t i) const {
  auto w = (*this)[i];
  return MetallicString(std::vector<Letter>(w.begin(), w.end()), a_);
}

void WordList::push_back(std::span<const Letter> w) {
  letters_.insert(letters_.end(), w.begin(), w.end());
  ++count_;
}

WordList enumerate(unsigned a, unsigned n, std::uint64_t cap) {
  check_alphabet(a);
  const std::uint64_t total = word_count(a, n);
  if (total > cap) {
    throw CapExceeded("s^" + std::to_string(a) + "_" + std::to_string(n) +
                      " exceeds the vertex cap of " + std::to_string(cap));
  }
  WordList out(a, n);
  out.reserve(total);
  std::vector<Letter> w(n, 0);
  while (true) {
    out.push_back(w);
    // Lexicographic successor: bump the rightmost position that still has a
    // larger admissible letter, then reset the suffix to zeros.
    std::size_t i = n;
    while (i > 0) {
      --i;
      const Letter x = w[i];
      const bool can_reach_a = i > 0 && w[i - 1] == 0;
      if (x + 1u < a || (x + 1u == a && can_reach_a)) {
        w[i] = static_cast<Letter>(x + 1);
        std::fill(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), Letter{0});
        goto next;
      }
    }
    break;
  next:;
  }
  return out;
}

std::uint64_t rank(std::span<const Letter> letters, unsigned a) {
  if (!is_valid(letters, a)) throw InvalidWord("cannot rank an invalid word");
  const auto n = static_cast<unsigned>(letters.size());
  const auto s = count_table(a, n);
  if (s[n] == kSaturated) throw CapExceeded("rank overflows 64 bits");
  std::uint64_t r = 0;
  for (unsigned i = 0; i < n; ++i) {
    const unsigned rem = n - i - 1;
    const Letter x = letters[i];
    if (x > 0) r += after_zero(s, rem) + (x - 1u) * s[rem];
  }
  return r;
}

std::uint64_t rank(const MetallicString& w) { return rank(w.letters(), w.alphabet()); }

MetallicString unrank(unsigned a, unsigned n, std::uint64_t i) {
  check_alphabet(a);
  const auto s = count_table(a, n);
  if (i >= s[n]) {
    throw DomainError("index " + std::to_string(i) + " out of range for s^" +
                      std::to_string(a) + "_" + std::to_string(n) + " = " +
                      std::to_string(s[n]));
  }
  std::vector<Letter> w(n);
  for (unsigned pos = 0; pos < n; ++pos) {
    const unsigned rem = n - pos - 1;
    const std::uint64_t zero_block = after_zero(s, rem);
    if (i < zero_block) {
      w[pos] = 0;
      continue;
    }
    i -= zero_block;
    // Remaining letters 1..a-1, plus a when the previous letter is 0; each
    // leaves s[rem] completions.
    const std::uint64_t x = 1 + i / s[rem];
    i %= s[rem];
    w[pos] = static_cast<Letter>(x);
  }
  return MetallicString(std::move(w), a);
}

std::vector<Letter> PrimitiveBlockSeq::concat() const {
  std::vector<Letter> out;
  for (const auto& b : blocks) {
    if (b.zero_a) {
      out.push_back(0);
      out.push_back(static_cast<Letter>(a));
    } else {
      out.push_back(b.letter);
    }
  }
  return out;
}

PrimitiveBlockSeq primitive_blocks(std::span<const Letter> letters, unsigned a) {
  if (!is_valid(letters, a)) throw InvalidWord("cannot split an invalid word");
  PrimitiveBlockSeq seq{a, {}};
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] == 0 && i + 1 < letters.size() && letters[i + 1] == a) {
      seq.blocks.push_back({true, 0});
      ++i;
    } else {
      seq.blocks.push_back({false, letters[i]});
    }
  }
  return seq;
}

PrimitiveBlockSeq primitive_blocks(const MetallicString& w) {
  return primitive_blocks(w.letters(), w.alphabet());
}

}  // namespace metallic
