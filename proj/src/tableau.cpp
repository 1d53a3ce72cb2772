#include "stylic/tableau.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stylic {

NTableau::NTableau(int rank) : rank_(rank) { Alphabet check(rank); }

NTableau::NTableau(std::vector<std::vector<Letter>> rows, int rank)
    : rows_(std::move(rows)), rank_(rank) {
  Alphabet a(rank);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto& row = rows_[k];
    if (row.empty()) throw std::invalid_argument("tableau row " + std::to_string(k + 1) + " is empty");
    for (Letter x : row) {
      if (!a.contains(x)) {
        throw std::invalid_argument("tableau letter " + std::to_string(x) +
                                    " outside alphabet of rank " + std::to_string(rank));
      }
    }
    if (!std::is_sorted(row.begin(), row.end()) ||
        std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw std::invalid_argument("tableau row " + std::to_string(k + 1) +
                                  " is not strictly increasing");
    }
    if (k > 0) {
      const auto& below = rows_[k - 1];
      if (!std::includes(below.begin(), below.end(), row.begin(), row.end())) {
        throw std::invalid_argument("tableau row " + std::to_string(k + 1) +
                                    " is not contained in the row below");
      }
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] <= below[j]) {
          throw std::invalid_argument("tableau column " + std::to_string(j + 1) +
                                      " is not strictly increasing upward");
        }
      }
    }
  }
}

NTableau insert_letter(const NTableau& t, Letter a) {
  if (!Alphabet(t.rank()).contains(a)) {
    throw std::invalid_argument("cannot insert letter " + std::to_string(a) +
                                " into tableau of rank " + std::to_string(t.rank()));
  }
  auto rows = t.rows();
  Letter carry = a;
  for (auto& row : rows) {
    auto bump = std::upper_bound(row.begin(), row.end(), carry);
    bool have_bump = bump != row.end();
    Letter next = have_bump ? *bump : 0;
    auto pos = std::lower_bound(row.begin(), row.end(), carry);
    if (pos == row.end() || *pos != carry) row.insert(pos, carry);
    if (!have_bump) return NTableau(std::move(rows), t.rank());
    carry = next;
  }
  rows.push_back({carry});
  return NTableau(std::move(rows), t.rank());
}

NTableau n_tableau(const Word& w) {
  NTableau t(w.rank());
  for (std::size_t i = 0; i < w.size(); ++i) t = insert_letter(t, w[i]);
  return t;
}

Word delta(const Word& w) {
  std::vector<bool> seen(w.rank() + 1, false);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (Letter c = w[i] + 1; c <= w.rank(); ++c) {
      if (seen[c]) {
        out.push_back(c);
        break;
      }
    }
    seen[w[i]] = true;
  }
  return Word(std::move(out), w.rank());
}

std::optional<Letter> up_arrow(const Word& w, int k, std::size_t i) {
  if (k < 1) throw std::invalid_argument("lift order must be >= 1");
  if (i < 1 || i > w.size()) {
    throw std::invalid_argument("position " + std::to_string(i) + " outside word of length " +
                                std::to_string(w.size()));
  }
  Word d = w.prefix(i);
  Letter cur = w[i - 1];
  for (int l = 1; l <= k; ++l) {
    auto sup = support(d);
    auto it = std::upper_bound(sup.begin(), sup.end(), cur);
    if (it == sup.end()) return std::nullopt;
    cur = *it;
    d = delta(d);
  }
  return cur;
}

bool stylic_equal(const Word& u, const Word& v) { return n_tableau(u) == n_tableau(v); }

Word canonical_word(const NTableau& t) {
  std::vector<Letter> out;
  const auto& rows = t.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    out.insert(out.end(), it->begin(), it->end());
  }
  return Word(std::move(out), t.rank());
}

NTableau multiply(const NTableau& s, const NTableau& t) {
  NTableau out = s;
  Word w = canonical_word(t);
  for (std::size_t i = 0; i < w.size(); ++i) out = insert_letter(out, w[i]);
  return out;
}

NTableau absorbing_element(int rank) {
  std::vector<std::vector<Letter>> rows;
  for (Letter k = 1; k <= rank; ++k) {
    std::vector<Letter> row;
    for (Letter x = k; x <= rank; ++x) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return NTableau(std::move(rows), rank);
}

bool has_letter_in_row(const NTableau& t, Letter a, std::size_t row) {
  if (row < 1 || row > t.num_rows()) return false;
  const auto& r = t.rows()[row - 1];
  return std::binary_search(r.begin(), r.end(), a);
}

YoungTableau::YoungTableau(int rank) : rank_(rank) { Alphabet check(rank); }

YoungTableau::YoungTableau(std::vector<std::vector<Letter>> rows, int rank)
    : rows_(std::move(rows)), rank_(rank) {
  Alphabet a(rank);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto& row = rows_[k];
    if (row.empty()) throw std::invalid_argument("tableau row " + std::to_string(k + 1) + " is empty");
    for (Letter x : row) {
      if (!a.contains(x)) {
        throw std::invalid_argument("tableau letter " + std::to_string(x) +
                                    " outside alphabet of rank " + std::to_string(rank));
      }
    }
    if (!std::is_sorted(row.begin(), row.end())) {
      throw std::invalid_argument("tableau row " + std::to_string(k + 1) +
                                  " is not weakly increasing");
    }
    if (k > 0) {
      const auto& below = rows_[k - 1];
      if (row.size() > below.size()) {
        throw std::invalid_argument("tableau row " + std::to_string(k + 1) +
                                    " is longer than the row below");
      }
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] <= below[j]) {
          throw std::invalid_argument("tableau column " + std::to_string(j + 1) +
                                      " is not strictly increasing upward");
        }
      }
    }
  }
}

YoungTableau schensted(const Word& w) {
  std::vector<std::vector<Letter>> rows;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter carry = w[i];
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), carry);
      if (it == row.end()) {
        row.push_back(carry);
        carry = 0;
        break;
      }
      std::swap(carry, *it);
    }
    if (carry != 0) rows.push_back({carry});
  }
  return YoungTableau(std::move(rows), w.rank());
}

}  // namespace stylic
