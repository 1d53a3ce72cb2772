#ifndef STYLIC_TABLEAU_HPP
#define STYLIC_TABLEAU_HPP

#include <optional>
#include <vector>

#include "stylic/word.hpp"

namespace stylic {

/// Tableau of letter-sets: rows are strictly increasing, stored bottom-up
/// (rows()[0] is the bottom row). Each row is a subset of the row below it
/// and dominates it columnwise: the j-th letter strictly grows going up.
/// Always valid by construction.
class NTableau {
 public:
  explicit NTableau(int rank);  // empty tableau
  NTableau(std::vector<std::vector<Letter>> rows, int rank);

  int rank() const { return rank_; }
  const std::vector<std::vector<Letter>>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  std::size_t num_rows() const { return rows_.size(); }

  /// Row comparison only; the rank is context, not content (inserting the
  /// same word over a larger alphabet yields the same rows).
  bool operator==(const NTableau& other) const { return rows_ == other.rows_; }
  bool operator!=(const NTableau& other) const { return !(*this == other); }
  bool operator<(const NTableau& other) const { return rows_ < other.rows_; }

 private:
  std::vector<std::vector<Letter>> rows_;
  int rank_;
};

/// Insert a into the bottom row as a set-union; the least letter of the old
/// row strictly above a (if any) is re-inserted into the next row up, and so
/// on, opening a new top row when the final carry has nowhere to go.
NTableau insert_letter(const NTableau& t, Letter a);

/// Tableau of w: left-to-right insertion of its letters into the empty tableau.
NTableau n_tableau(const Word& w);

/// One derivation step: position i of w contributes the least letter of
/// supp(w[1..i-1]) strictly above w[i], or nothing when there is none.
Word delta(const Word& w);

/// k-fold lift of position i (1-based): starting from w[i], repeatedly take
/// the least strictly-larger letter in the support of the next derivative of
/// the prefix w[1..i]. nullopt once a lift does not exist.
std::optional<Letter> up_arrow(const Word& w, int k, std::size_t i);

/// Words are equal in the monoid iff their tableaux coincide.
bool stylic_equal(const Word& u, const Word& v);

/// Section of n_tableau: rows read top row first, each left to right.
/// n_tableau(canonical_word(t)) == t.
Word canonical_word(const NTableau& t);

/// Product in the monoid: inserts t's canonical word into s.
NTableau multiply(const NTableau& s, const NTableau& t);

/// The absorbing element: row k holds {k, ..., rank}.
NTableau absorbing_element(int rank);

/// True iff the tableau has a row (1-based, bottom-up) containing the letter.
bool has_letter_in_row(const NTableau& t, Letter a, std::size_t row);

/// Semistandard Young tableau: rows weakly increasing, stored bottom-up,
/// columns strictly increasing going up.
class YoungTableau {
 public:
  explicit YoungTableau(int rank);
  YoungTableau(std::vector<std::vector<Letter>> rows, int rank);

  int rank() const { return rank_; }
  const std::vector<std::vector<Letter>>& rows() const { return rows_; }

  bool operator==(const YoungTableau& other) const { return rows_ == other.rows_; }
  bool operator!=(const YoungTableau& other) const { return !(*this == other); }

 private:
  std::vector<std::vector<Letter>> rows_;
  int rank_;
};

/// Classic row-insertion tableau of w; equal tableaux characterize the
/// plactic congruence, which refines stylic equality.
YoungTableau schensted(const Word& w);

}  // namespace stylic

#endif
