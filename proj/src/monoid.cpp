#include "stylic/monoid.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace stylic {

int MonoidTable::index_of(const NTableau& t) const {
  auto it = index.find(t.rows());
  return it == index.end() ? -1 : it->second;
}

MonoidTable enumerate_monoid(int rank, int max_rank) {
  Alphabet check(rank);
  if (rank > max_rank) {
    throw std::runtime_error("enumeration guard: rank " + std::to_string(rank) +
                             " exceeds limit " + std::to_string(max_rank));
  }

  MonoidTable m;
  m.rank = rank;
  m.elements.push_back(NTableau(rank));
  m.index[m.elements[0].rows()] = 0;

  std::vector<int> parent{-1};
  std::vector<Letter> via{0};

  for (int e = 0; e < m.size(); ++e) {
    m.gen_action.emplace_back(rank, -1);
    for (Letter a = 1; a <= rank; ++a) {
      NTableau t = insert_letter(m.elements[e], a);
      auto [it, fresh] = m.index.try_emplace(t.rows(), m.size());
      if (fresh) {
        m.elements.push_back(t);
        parent.push_back(e);
        via.push_back(a);
      }
      m.gen_action[e][a - 1] = it->second;
    }
  }

  const int n_elems = m.size();
  m.product.assign(n_elems, std::vector<int>(n_elems, -1));
  for (int j = 0; j < n_elems; ++j) {
    for (int i = 0; i < n_elems; ++i) {
      // j was discovered as parent(j) * via(j), so i*j extends i*parent(j).
      m.product[i][j] = (j == 0) ? i : m.gen_action[m.product[i][parent[j]]][via[j] - 1];
    }
  }

  m.canonical.reserve(n_elems);
  m.involution.assign(n_elems, -1);
  for (int e = 0; e < n_elems; ++e) {
    m.canonical.push_back(canonical_word(m.elements[e]));
    int img = m.index_of(n_tableau(complement_reverse(m.canonical[e])));
    if (img < 0) throw std::logic_error("involution image escaped the closure");
    m.involution[e] = img;
  }

  m.identity_index = 0;
  m.zero_index = m.index_of(absorbing_element(rank));
  return m;
}

bool is_j_trivial(const MonoidTable& m) {
  const int n = m.size();
  const std::size_t blocks = (static_cast<std::size_t>(n) + 63) / 64;
  std::set<std::vector<std::uint64_t>> ideals;
  std::vector<char> left(n);
  for (int x = 0; x < n; ++x) {
    std::fill(left.begin(), left.end(), 0);
    for (int a = 0; a < n; ++a) left[m.product[a][x]] = 1;
    std::vector<std::uint64_t> ideal(blocks, 0);
    for (int l = 0; l < n; ++l) {
      if (!left[l]) continue;
      for (int b = 0; b < n; ++b) {
        int y = m.product[l][b];
        ideal[y / 64] |= std::uint64_t(1) << (y % 64);
      }
    }
    if (!ideals.insert(std::move(ideal)).second) return false;
  }
  return true;
}

}  // namespace stylic
