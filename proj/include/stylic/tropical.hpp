#ifndef STYLIC_TROPICAL_HPP
#define STYLIC_TROPICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stylic/tableau.hpp"
#include "stylic/word.hpp"

namespace stylic {

/// An integer extended with -inf (the additive identity of max-plus).
class TropValue {
 public:
  static TropValue bottom() { return TropValue(); }
  TropValue(std::int64_t v) : v_(v), finite_(true) {}

  bool is_bottom() const { return !finite_; }
  std::int64_t value() const;  // finite values only

  bool operator==(const TropValue& o) const {
    return finite_ == o.finite_ && (!finite_ || v_ == o.v_);
  }
  bool operator!=(const TropValue& o) const { return !(*this == o); }
  /// bottom < every finite value
  bool operator<(const TropValue& o) const {
    if (!finite_) return o.finite_;
    return o.finite_ && v_ < o.v_;
  }

  std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

 private:
  TropValue() : v_(0), finite_(false) {}
  std::int64_t v_;
  bool finite_;
};

/// The coefficient semirings matrices live over: max-plus on the integers
/// with -inf, its natural-number subsemiring, the truncation where products
/// cap at a fixed level, and the two-element max/min semiring.
struct Semiring {
  enum class Kind { tropical, nat_max, truncated, boolean };

  Kind kind = Kind::tropical;
  int cap = 0;  // truncation level, used by Kind::truncated only

  static Semiring tropical() { return {Kind::tropical, 0}; }
  static Semiring nat_max() { return {Kind::nat_max, 0}; }
  static Semiring truncated(int cap) { return {Kind::truncated, cap}; }
  static Semiring boolean() { return {Kind::boolean, 0}; }

  TropValue zero() const;  // additive identity
  TropValue one() const;   // multiplicative identity
  TropValue add(const TropValue& a, const TropValue& b) const;
  TropValue mul(const TropValue& a, const TropValue& b) const;

  bool operator==(const Semiring& o) const {
    return kind == o.kind && (kind != Kind::truncated || cap == o.cap);
  }
  bool operator!=(const Semiring& o) const { return !(*this == o); }
  std::string name() const;
};

/// Square matrix over a Semiring; indices are 0-based.
class TropMatrix {
 public:
  TropMatrix(int dim, Semiring sr);  // filled with the semiring's zero
  static TropMatrix identity_matrix(int dim, Semiring sr);

  int dim() const { return dim_; }
  const Semiring& semiring() const { return sr_; }
  TropValue& at(int i, int j) { return entries_[index(i, j)]; }
  const TropValue& at(int i, int j) const { return entries_[index(i, j)]; }

  bool operator==(const TropMatrix& o) const {
    return dim_ == o.dim_ && sr_ == o.sr_ && entries_ == o.entries_;
  }
  bool operator!=(const TropMatrix& o) const { return !(*this == o); }
  /// Entry order for use as a map key; semiring must match.
  bool operator<(const TropMatrix& o) const;

 private:
  std::size_t index(int i, int j) const;
  int dim_;
  Semiring sr_;
  std::vector<TropValue> entries_;
};

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);

/// Image of one letter: (rank+1) x (rank+1), zeros on the diagonal and ones
/// in rows 1..c, columns c+1..rank+1 (1-based) where c = rank + 1 - x.
TropMatrix rho_letter(Letter x, int rank);

/// Multiplicative extension of rho_letter, left to right; the empty word
/// maps to the identity matrix. Faithful: rho(u) = rho(v) iff u, v are
/// stylic-equal.
TropMatrix rho(const Word& w, int rank);

/// Entrywise min with cap; result lives over Semiring::truncated(cap).
TropMatrix truncate(const TropMatrix& m, int cap);

/// Collapse to the two-element semiring: -inf goes to 0, finite to 1.
TropMatrix to_boolean(const TropMatrix& m);

/// Reflection along the antidiagonal: out(i, j) = in(d-1-j, d-1-i).
/// Anti-multiplicative involution; intertwines rho with complement_reverse.
TropMatrix skew_transpose(const TropMatrix& m);

/// Reads the tableau of w back from rho(w): letter a sits in row k iff some
/// column past a's band has entry k with entry k-1 directly below. Only
/// defined on images of rho; other matrices are outside the contract.
NTableau decode_tableau(const TropMatrix& m, int rank);

}  // namespace stylic

#endif
