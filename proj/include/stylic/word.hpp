#ifndef STYLIC_WORD_HPP
#define STYLIC_WORD_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace stylic {

using Letter = int;

/// Letters are the integers 1..rank; complement(a) = rank + 1 - a.
struct Alphabet {
  int rank;

  explicit Alphabet(int r);

  bool contains(Letter a) const { return 1 <= a && a <= rank; }
  Letter complement(Letter a) const { return rank + 1 - a; }
};

/// A finite word over Alphabet(rank). Immutable value type; letters validated
/// on construction.
class Word {
 public:
  Word(std::vector<Letter> letters, int rank);
  explicit Word(int rank) : rank_(rank) {}

  /// Accepts a digit string for rank <= 9 ("4213"), a comma-separated list
  /// otherwise ("12,3,10"), and "" or "e" for the empty word.
  static Word parse(std::string_view text, int rank);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  Word prefix(std::size_t len) const;
  Word appended(Letter a) const;
  Word concat(const Word& other) const;

  /// Inverse of parse: digits for rank <= 9, comma-separated otherwise,
  /// "e" for the empty word.
  std::string str() const;

  bool operator==(const Word& other) const { return letters_ == other.letters_; }
  bool operator!=(const Word& other) const { return !(*this == other); }
  bool operator<(const Word& other) const { return letters_ < other.letters_; }

 private:
  std::vector<Letter> letters_;
  int rank_;
};

/// Set of letters occurring in w, ascending.
std::vector<Letter> support(const Word& w);

/// True iff u embeds into w as a (not necessarily contiguous) subsequence.
bool is_subsequence(const Word& u, const Word& w);

/// Reverse of the letterwise complement; an involutive anti-automorphism.
Word complement_reverse(const Word& w);

/// Length of the longest strictly decreasing subsequence of w that uses only
/// letters in [lo, hi]; nullopt when no letter of w lies in the band.
std::optional<int> longest_decreasing_in_band(const Word& w, Letter lo, Letter hi);

/// All subsequences of w of length <= k, as raw letter vectors (the empty
/// word included). Guarded: |w| <= max_len (the set is exponential in |w|).
std::set<std::vector<Letter>> k_spectrum(const Word& w, int k, std::size_t max_len = 12);

}  // namespace stylic

#endif
