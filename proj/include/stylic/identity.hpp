#ifndef STYLIC_IDENTITY_HPP
#define STYLIC_IDENTITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylic/monoid.hpp"
#include "stylic/tableau.hpp"
#include "stylic/tropical.hpp"
#include "stylic/word.hpp"

namespace stylic {

/// One variable occurrence: a name like "x" or "y1", optionally starred.
struct VarSym {
  std::string name;
  bool starred = false;

  bool operator==(const VarSym& o) const { return name == o.name && starred == o.starred; }
  bool operator!=(const VarSym& o) const { return !(*this == o); }
  bool operator<(const VarSym& o) const {
    return name != o.name ? name < o.name : starred < o.starred;
  }
  std::string str() const { return starred ? name + "*" : name; }
};

using VarWord = std::vector<VarSym>;

/// Parses a juxtaposition of variables: a variable is one lowercase letter,
/// optional digits, optional trailing '*' ("xyx", "y1 z*"). Whitespace is
/// allowed between variables. "e" alone denotes the empty side.
VarWord parse_varword(std::string_view text);
std::string varword_str(const VarWord& w);

/// A candidate law "u = v". involution is set iff either side uses '*'.
struct Identity {
  VarWord lhs;
  VarWord rhs;
  bool involution = false;

  static Identity parse(std::string_view text);
  std::string str() const { return varword_str(lhs) + " = " + varword_str(rhs); }

  /// Distinct variable names, in order of first appearance (lhs then rhs).
  std::vector<std::string> variables() const;
};

enum class Side { lhs, rhs };
inline const char* side_name(Side s) { return s == Side::lhs ? "lhs" : "rhs"; }

/// True iff u and v have the same subsequences of length <= k. Implemented by
/// breadth-first search over pairs of subsequence-automaton states with a
/// depth budget; no spectrum is materialized, so words of length 10^5 are fine.
bool simon_equivalent(const Word& u, const Word& v, int k);
bool simon_equivalent(const VarWord& u, const VarWord& v, int k);

/// Shortest word that embeds into exactly one of u, v (ties broken by
/// smallest letter), together with the side that contains it; word is absent
/// when u and v are equivalent at depth k.
struct WordDistinguisher {
  std::optional<Word> word;
  Side side = Side::lhs;
};
WordDistinguisher distinguishing_word(const Word& u, const Word& v, int k);

struct VarDistinguisher {
  std::optional<VarWord> word;
  Side side = Side::lhs;
};
VarDistinguisher distinguishing_word(const VarWord& u, const VarWord& v, int k);

/// Decision for a plain identity at a given rank: the identity holds iff the
/// sides agree on all subsequences of length <= rank. Starred identities are
/// rejected here; route them to brute_force_check.
struct StylicVerdict {
  bool holds = false;
  std::optional<VarWord> witness;  // separating subsequence when the law fails
  Side witness_side = Side::lhs;
};
StylicVerdict check_identity_styl(const Identity& id, int rank);

/// Explicit falsifying substitution built from the separating subsequence d
/// of a failing identity: with k = |d|, each variable maps to the increasing
/// word of positions i (1-based) where d's (k+1-i)-th symbol is that
/// variable. The substituted side containing d gets letter k in row k of its
/// tableau; the other side does not. Throws when the identity holds.
struct WitnessEvaluation {
  VarWord distinguisher;
  Side side = Side::lhs;  // side whose tableau exhibits the target letter
  int target = 0;         // letter and row both equal |distinguisher|
  std::map<std::string, Word> assignment;
  Word lhs_word;
  Word rhs_word;
  NTableau lhs_tableau;
  NTableau rhs_tableau;

  WitnessEvaluation() : lhs_word(1), rhs_word(1), lhs_tableau(1), rhs_tableau(1) {}
};
WitnessEvaluation witness_evaluation(const Identity& id, int rank);

/// Exhaustive check over an enumerated monoid; stars evaluate through the
/// table's involution. Guarded: |m|^variables <= budget.
struct Evaluation {
  std::map<std::string, int> assignment;  // variable -> element index
  int lhs_value = 0;
  int rhs_value = 0;
};
struct BruteVerdict {
  bool holds = false;
  std::optional<Evaluation> counterexample;
  long long evaluations = 0;
};
BruteVerdict brute_force_check(const Identity& id, const MonoidTable& m,
                               long long budget = 1000000);

/// Finite equational bases for the congruence levels 1..3; level 4 and up
/// have none, so anything else throws.
std::vector<Identity> basis(int k);

/// Two-variable law whose context word runs over all binary patterns of
/// order k-1: w xy w = w yx w with w the standard binary de Bruijn word
/// (factor form) under 0 -> xy, 1 -> yx. k = 2 gives the classic
/// xyyx xy xyyx = xyyx yx xyyx. Accepted range: 2 <= k <= 5.
Identity debruijn_identity(int k);

/// Built-in identity families (param is the family's size parameter):
///   a: x y1 y1* ... yk yk* x* z z*  =  z z* x y1 y1* ... yk yk* x*
///   b: x1..xk x1*..xk* x1..xk  =  xk*..x1* xk..x1 xk*..x1*
///   c: x* x^(param-1)  =  x* x^param
///   r: (xy)^(param+1)  =  (xy)^param yx
enum class Family { a, b, c, r };
Identity family_identity(Family f, int param);

/// Substitute matrices for variables and multiply out one side; starred
/// occurrences go through skew_transpose.
TropMatrix evaluate_side(const VarWord& side, const std::map<std::string, TropMatrix>& assignment);

/// Randomized search for a falsifying substitution by upper unitriangular
/// (rank+1)-matrices with entries in {-inf} u [-entry_bound, entry_bound].
/// Deterministic for a fixed seed; reports the sampling effort either way.
struct TropSearchResult {
  bool found = false;
  std::map<std::string, TropMatrix> assignment;
  long long samples_tried = 0;
  int entry_bound = 0;
  long long budget = 0;
  std::uint64_t seed = 0;
};
TropSearchResult tropical_counterexample_search(const Identity& id, int rank, int entry_bound = 3,
                                                long long budget = 100000,
                                                std::uint64_t seed = 12345);

}  // namespace stylic

#endif
