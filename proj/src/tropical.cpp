#include "stylic/tropical.hpp"

#include <algorithm>
#include <stdexcept>

namespace stylic {

std::int64_t TropValue::value() const {
  if (!finite_) throw std::logic_error("value() on -inf");
  return v_;
}

TropValue Semiring::zero() const { return kind == Kind::boolean ? TropValue(0) : TropValue::bottom(); }

TropValue Semiring::one() const { return kind == Kind::boolean ? TropValue(1) : TropValue(0); }

TropValue Semiring::add(const TropValue& a, const TropValue& b) const {
  return std::max(a, b);  // bottom is the least element, so max works uniformly
}

TropValue Semiring::mul(const TropValue& a, const TropValue& b) const {
  switch (kind) {
    case Kind::boolean:
      return std::min(a, b);
    case Kind::truncated:
      if (a.is_bottom() || b.is_bottom()) return TropValue::bottom();
      return TropValue(std::min<std::int64_t>(a.value() + b.value(), cap));
    default:
      if (a.is_bottom() || b.is_bottom()) return TropValue::bottom();
      return TropValue(a.value() + b.value());
  }
}

std::string Semiring::name() const {
  switch (kind) {
    case Kind::tropical: return "trop";
    case Kind::nat_max: return "nat";
    case Kind::truncated: return "trunc" + std::to_string(cap);
    case Kind::boolean: return "bool";
  }
  return "";
}

TropMatrix::TropMatrix(int dim, Semiring sr)
    : dim_(dim), sr_(sr), entries_(static_cast<std::size_t>(dim) * dim, sr.zero()) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

TropMatrix TropMatrix::identity_matrix(int dim, Semiring sr) {
  TropMatrix m(dim, sr);
  for (int i = 0; i < dim; ++i) m.at(i, i) = sr.one();
  return m;
}

std::size_t TropMatrix::index(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_) {
    throw std::out_of_range("matrix index (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside dimension " + std::to_string(dim_));
  }
  return static_cast<std::size_t>(i) * dim_ + j;
}

bool TropMatrix::operator<(const TropMatrix& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  return std::lexicographical_compare(entries_.begin(), entries_.end(), o.entries_.begin(),
                                      o.entries_.end());
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
  if (a.semiring() != b.semiring()) throw std::invalid_argument("matrix semirings differ");
  const Semiring& sr = a.semiring();
  TropMatrix out(a.dim(), sr);
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      TropValue acc = sr.zero();
      for (int k = 0; k < a.dim(); ++k) {
        acc = sr.add(acc, sr.mul(a.at(i, k), b.at(k, j)));
      }
      out.at(i, j) = acc;
    }
  }
  return out;
}

TropMatrix rho_letter(Letter x, int rank) {
  Alphabet a(rank);
  if (!a.contains(x)) {
    throw std::invalid_argument("letter " + std::to_string(x) + " outside alphabet of rank " +
                                std::to_string(rank));
  }
  const int c = a.complement(x);
  TropMatrix m = TropMatrix::identity_matrix(rank + 1, Semiring::tropical());
  for (int i = 1; i <= c; ++i) {
    for (int j = c + 1; j <= rank + 1; ++j) m.at(i - 1, j - 1) = TropValue(1);
  }
  return m;
}

TropMatrix rho(const Word& w, int rank) {
  Alphabet check(rank);
  TropMatrix m = TropMatrix::identity_matrix(rank + 1, Semiring::tropical());
  for (std::size_t i = 0; i < w.size(); ++i) m = mat_mul(m, rho_letter(w[i], rank));
  return m;
}

TropMatrix truncate(const TropMatrix& m, int cap) {
  TropMatrix out(m.dim(), Semiring::truncated(cap));
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      const TropValue& v = m.at(i, j);
      out.at(i, j) = v.is_bottom() ? TropValue::bottom()
                                   : TropValue(std::min<std::int64_t>(v.value(), cap));
    }
  }
  return out;
}

TropMatrix to_boolean(const TropMatrix& m) {
  TropMatrix out(m.dim(), Semiring::boolean());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) out.at(i, j) = TropValue(m.at(i, j).is_bottom() ? 0 : 1);
  }
  return out;
}

TropMatrix skew_transpose(const TropMatrix& m) {
  TropMatrix out(m.dim(), m.semiring());
  const int d = m.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) out.at(i, j) = m.at(d - 1 - j, d - 1 - i);
  }
  return out;
}

NTableau decode_tableau(const TropMatrix& m, int rank) {
  Alphabet alpha(rank);
  if (m.dim() != rank + 1) {
    throw std::invalid_argument("matrix dimension " + std::to_string(m.dim()) +
                                " does not match rank " + std::to_string(rank));
  }
  std::vector<std::vector<Letter>> rows;
  for (int k = 1; k <= rank; ++k) {
    std::vector<Letter> row;
    for (Letter a = 1; a <= rank; ++a) {
      const int c = alpha.complement(a);  // 1-based row of a's band
      for (int j = c + 1; j <= rank + 1; ++j) {
        if (m.at(c - 1, j - 1) == TropValue(k) && m.at(c, j - 1) == TropValue(k - 1)) {
          row.push_back(a);
          break;
        }
      }
    }
    if (row.empty()) break;
    rows.push_back(std::move(row));
  }
  return NTableau(std::move(rows), rank);
}

}  // namespace stylic
