#include "stylic/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "stylic/identity.hpp"
#include "stylic/tableau.hpp"
#include "stylic/tropical.hpp"
#include "stylic/word.hpp"

namespace stylic {

bool VerifyReport::ok() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.failures == 0; });
}

namespace {

Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(1, rank);
  std::vector<Letter> letters(len_dist(rng));
  for (auto& x : letters) x = letter_dist(rng);
  return Word(std::move(letters), rank);
}

// Defining relation instances at a rank: doubled letters collapse, and the
// two three-letter exchange patterns.
std::vector<std::pair<Word, Word>> relation_instances(int rank) {
  std::vector<std::pair<Word, Word>> out;
  for (Letter a = 1; a <= rank; ++a) {
    out.emplace_back(Word({a, a}, rank), Word({a}, rank));
  }
  for (Letter a = 1; a <= rank; ++a) {
    for (Letter b = a; b <= rank; ++b) {
      for (Letter c = b + 1; c <= rank; ++c) {
        out.emplace_back(Word({a, c, b}, rank), Word({c, a, b}, rank));  // a <= b < c
      }
    }
  }
  for (Letter a = 1; a <= rank; ++a) {
    for (Letter b = a + 1; b <= rank; ++b) {
      for (Letter c = b; c <= rank; ++c) {
        out.emplace_back(Word({b, a, c}, rank), Word({b, c, a}, rank));  // a < b <= c
      }
    }
  }
  return out;
}

// One random rewrite step preserving the monoid class: collapse or double a
// letter, or apply one of the exchange patterns in either direction.
Word random_rewrite_step(std::mt19937_64& rng, const Word& w) {
  struct Move {
    std::size_t pos;
    int kind;  // 0 collapse aa, 1 double a, 2 swap first two of triple, 3 swap last two
  };
  std::vector<Move> moves;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    moves.push_back({i, 1});
    if (i + 1 < ls.size() && ls[i] == ls[i + 1]) moves.push_back({i, 0});
    if (i + 2 < ls.size()) {
      Letter p = ls[i], q = ls[i + 1], r = ls[i + 2];
      if ((p <= r && r < q) || (q <= r && r < p)) moves.push_back({i, 2});
      if ((q < p && p <= r) || (r < p && p <= q)) moves.push_back({i, 3});
    }
  }
  if (moves.empty()) return w;
  Move m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
  std::vector<Letter> out = ls;
  switch (m.kind) {
    case 0: out.erase(out.begin() + m.pos); break;
    case 1: out.insert(out.begin() + m.pos, out[m.pos]); break;
    case 2: std::swap(out[m.pos], out[m.pos + 1]); break;
    case 3: std::swap(out[m.pos + 1], out[m.pos + 2]); break;
  }
  return Word(std::move(out), w.rank());
}

Word random_rewrite(std::mt19937_64& rng, const Word& w, int steps) {
  Word out = w;
  for (int s = 0; s < steps; ++s) out = random_rewrite_step(rng, out);
  return out;
}

void all_words_up_to(int rank, int max_len, const std::function<void(const Word&)>& fn) {
  std::vector<Letter> cur;
  std::function<void()> rec = [&]() {
    fn(Word(cur, rank));
    if (static_cast<int>(cur.size()) == max_len) return;
    for (Letter a = 1; a <= rank; ++a) {
      cur.push_back(a);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

struct SuiteRunner {
  SuiteResult result;

  explicit SuiteRunner(std::string name) { result.name = std::move(name); }

  void check(bool ok, const std::string& locus) {
    ++result.checked;
    if (!ok) {
      ++result.failures;
      if (result.first_failure.empty()) result.first_failure = locus;
    }
  }
};

}  // namespace

VerifyReport run_verification(int rank, std::uint64_t seed, long long samples) {
  Alphabet check(rank);
  VerifyReport report;
  report.rank = rank;
  report.seed = seed;
  report.samples = samples;

  {
    // every matrix entry equals the longest strictly decreasing subsequence
    // count in the corresponding letter band, and neighbouring entries differ
    // by at most one along rows and columns
    SuiteRunner s("band-counts");
    std::mt19937_64 rng(seed);
    for (long long t = 0; t < samples; ++t) {
      Word w = random_word(rng, rank, 20);
      TropMatrix m = rho(w, rank);
      bool all_ok = true;
      for (int i = 1; i <= rank + 1 && all_ok; ++i) {
        for (int j = i; j <= rank + 1 && all_ok; ++j) {
          TropValue expect =
              i == j ? TropValue(0) : TropValue::bottom();
          if (i < j) {
            // band of letters whose image can move column j to row i
            Letter lo = rank + 2 - j;  // complement of j - 1
            Letter hi = rank + 1 - i;  // complement of i
            auto len = longest_decreasing_in_band(w, lo, hi);
            if (len) expect = TropValue(*len);
          }
          if (m.at(i - 1, j - 1) != expect) all_ok = false;
        }
      }
      s.check(all_ok, "entry mismatch for word " + w.str());

      bool bounds_ok = true;
      for (int i = 0; i <= rank; ++i) {
        for (int j = i + 1; j + 1 <= rank; ++j) {
          const TropValue &a = m.at(i, j), &b = m.at(i, j + 1);  // row step
          if (!a.is_bottom() && !b.is_bottom() && (b.value() < a.value() || b.value() > a.value() + 1))
            bounds_ok = false;
          if (!a.is_bottom() && b.is_bottom()) bounds_ok = false;  // finite cannot die rightward
        }
      }
      for (int j = 1; j <= rank; ++j) {
        for (int i = 0; i + 1 < j; ++i) {  // keep both entries strictly above the diagonal
          const TropValue &a = m.at(i, j), &b = m.at(i + 1, j);  // column step down
          if (!a.is_bottom() && !b.is_bottom() && (a.value() < b.value() || a.value() > b.value() + 1))
            bounds_ok = false;
          if (a.is_bottom() && !b.is_bottom()) bounds_ok = false;  // finite cannot die upward
        }
      }
      s.check(bounds_ok, "adjacency bound broken for word " + w.str());
    }
    report.suites.push_back(s.result);
  }

  {
    // equal matrices exactly for equal tableaux, on rewrites and random pairs
    SuiteRunner s("faithfulness");
    std::mt19937_64 rng(seed + 1);
    for (long long t = 0; t < samples; ++t) {
      Word u = random_word(rng, rank, 12);
      Word v = (t % 2 == 0) ? random_rewrite(rng, u, 6) : random_word(rng, rank, 12);
      const bool same_matrix = rho(u, rank) == rho(v, rank);
      const bool same_tableau = stylic_equal(u, v);
      s.check(same_matrix == same_tableau, "pair " + u.str() + " / " + v.str());
    }
    report.suites.push_back(s.result);
  }

  {
    SuiteRunner s("decode-roundtrip");
    std::mt19937_64 rng(seed + 2);
    for (long long t = 0; t < samples; ++t) {
      Word w = random_word(rng, rank, 14);
      s.check(decode_tableau(rho(w, rank), rank) == n_tableau(w), "word " + w.str());
    }
    report.suites.push_back(s.result);
  }

  {
    // each defining relation, wrapped in random contexts, fixes both the
    // tableau and the matrix
    SuiteRunner s("relation-invariance");
    std::mt19937_64 rng(seed + 3);
    const auto rels = relation_instances(rank);
    const long long contexts = std::max<long long>(1, samples / 10);
    for (const auto& [l, r] : rels) {
      for (long long t = 0; t < contexts; ++t) {
        Word p = random_word(rng, rank, 6);
        Word q = random_word(rng, rank, 6);
        Word lw = p.concat(l).concat(q);
        Word rw = p.concat(r).concat(q);
        s.check(stylic_equal(lw, rw) && rho(lw, rank) == rho(rw, rank),
                "context " + p.str() + "|" + l.str() + "~" + r.str() + "|" + q.str());
      }
    }
    report.suites.push_back(s.result);
  }

  {
    // classic row insertion distinguishes at least as much as ours
    SuiteRunner s("plactic-refinement");
    std::mt19937_64 rng(seed + 4);
    for (long long t = 0; t < samples; ++t) {
      Word u = random_word(rng, rank, 10);
      Word v = random_rewrite(rng, u, 5);
      if (schensted(u) == schensted(v)) {
        s.check(stylic_equal(u, v), "pair " + u.str() + " / " + v.str());
      } else {
        s.check(true, "");
      }
    }
    report.suites.push_back(s.result);
  }

  {
    // the antidiagonal reflection realizes complement_reverse
    SuiteRunner s("involution-compat");
    std::mt19937_64 rng(seed + 5);
    for (Letter a = 1; a <= rank; ++a) {
      s.check(rho_letter(check.complement(a), rank) == skew_transpose(rho_letter(a, rank)),
              "letter " + std::to_string(a));
    }
    for (long long t = 0; t < samples; ++t) {
      Word w = random_word(rng, rank, 12);
      s.check(rho(complement_reverse(w), rank) == skew_transpose(rho(w, rank)), "word " + w.str());
      Word u = random_word(rng, rank, 8);
      s.check(complement_reverse(u.concat(w)) ==
                  complement_reverse(w).concat(complement_reverse(u)),
              "concat " + u.str() + "|" + w.str());
    }
    report.suites.push_back(s.result);
  }

  {
    // capping entries at rank commutes with the capped product and stays
    // faithful on rewrite pairs
    SuiteRunner s("truncation");
    std::mt19937_64 rng(seed + 6);
    for (long long t = 0; t < samples; ++t) {
      Word u = random_word(rng, rank, 10);
      Word v = random_word(rng, rank, 10);
      TropMatrix a = rho(u, rank), b = rho(v, rank);
      s.check(truncate(mat_mul(a, b), rank) == mat_mul(truncate(a, rank), truncate(b, rank)),
              "morphism on " + u.str() + " / " + v.str());
      Word r = (t % 2 == 0) ? random_rewrite(rng, u, 6) : v;
      s.check((truncate(rho(r, rank), rank) == truncate(a, rank)) == stylic_equal(u, r),
              "separation on " + u.str() + " / " + r.str());
    }
    report.suites.push_back(s.result);
  }

  {
    // the pair search agrees with materialized bounded spectra
    SuiteRunner s("checker-vs-spectra");
    std::mt19937_64 rng(seed + 7);
    const int small_rank = std::min(rank, 3);
    for (long long t = 0; t < samples; ++t) {
      Word u = random_word(rng, small_rank, 12);
      Word v = (t % 2 == 0) ? random_rewrite(rng, u, 4) : random_word(rng, small_rank, 12);
      for (int k = 1; k <= std::min(rank, 4); ++k) {
        // rewrites may lengthen v past the default spectrum guard, so widen it
        s.check(simon_equivalent(u, v, k) == (k_spectrum(u, k, 16) == k_spectrum(v, k, 16)),
                "pair " + u.str() + " / " + v.str() + " at depth " + std::to_string(k));
      }
    }
    report.suites.push_back(s.result);
  }

  {
    // reading a tableau back off as a word reproduces the tableau
    SuiteRunner s("canonical-section");
    std::mt19937_64 rng(seed + 8);
    for (long long t = 0; t < samples; ++t) {
      Word w = random_word(rng, rank, 12);
      NTableau tab = n_tableau(w);
      Word canon = canonical_word(tab);
      s.check(n_tableau(canon) == tab && stylic_equal(canon, w), "word " + w.str());
    }
    report.suites.push_back(s.result);
  }

  if (rank <= 3) {
    // small ranks afford the exhaustive faithfulness sweep
    SuiteRunner s("faithfulness-exhaustive");
    std::vector<Word> corpus;
    all_words_up_to(rank, 6, [&](const Word& w) { corpus.push_back(w); });
    std::map<std::vector<std::vector<Letter>>, TropMatrix> by_tableau;
    std::map<TropMatrix, std::vector<std::vector<Letter>>> by_matrix;
    for (const Word& w : corpus) {
      NTableau tab = n_tableau(w);
      TropMatrix m = rho(w, rank);
      auto [it, fresh] = by_tableau.try_emplace(tab.rows(), m);
      s.check(it->second == m, "tableau class split for " + w.str());
      auto [jt, fresh2] = by_matrix.try_emplace(m, tab.rows());
      s.check(jt->second == tab.rows(), "matrix class merged for " + w.str());
    }
    report.suites.push_back(s.result);
  }

  return report;
}

}  // namespace stylic
