#ifndef STYLIC_MONOID_HPP
#define STYLIC_MONOID_HPP

#include <map>
#include <vector>

#include "stylic/tableau.hpp"
#include "stylic/word.hpp"

namespace stylic {

/// The full finite monoid at a given rank: elements in discovery order
/// (index 0 is the identity), the complete product table, and the
/// complement-reverse involution.
struct MonoidTable {
  int rank = 0;
  std::vector<NTableau> elements;
  std::vector<Word> canonical;               // canonical word per element
  std::vector<std::vector<int>> gen_action;  // gen_action[e][a-1] = e * a
  std::vector<std::vector<int>> product;     // product[i][j] = i * j
  std::vector<int> involution;               // involutive anti-automorphism
  int identity_index = 0;
  int zero_index = -1;

  int size() const { return static_cast<int>(elements.size()); }

  /// Index of a tableau in this table, -1 if absent.
  int index_of(const NTableau& t) const;

  std::map<std::vector<std::vector<Letter>>, int> index;
};

/// Breadth-first closure of the empty tableau under letter insertion, with
/// the product table filled by one-letter extensions along discovery parents.
/// Guarded: rank <= max_rank (the monoid grows like the Bell numbers).
MonoidTable enumerate_monoid(int rank, int max_rank = 6);

/// True iff distinct elements generate distinct two-sided principal ideals.
bool is_j_trivial(const MonoidTable& m);

}  // namespace stylic

#endif
