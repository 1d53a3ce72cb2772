#include "stylic/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace stylic {

Alphabet::Alphabet(int r) : rank(r) {
  if (r < 1) {
    throw std::invalid_argument("alphabet rank must be >= 1, got " + std::to_string(r));
  }
}

Word::Word(std::vector<Letter> letters, int rank) : letters_(std::move(letters)), rank_(rank) {
  Alphabet a(rank);
  for (Letter x : letters_) {
    if (!a.contains(x)) {
      throw std::invalid_argument("letter " + std::to_string(x) + " outside alphabet of rank " +
                                  std::to_string(rank));
    }
  }
}

namespace {

Letter parse_number(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("cannot parse letter '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Word Word::parse(std::string_view text, int rank) {
  if (text.empty() || text == "e") {
    return Word(rank);
  }
  std::vector<Letter> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      std::size_t end = (comma == std::string_view::npos) ? text.size() : comma;
      letters.push_back(parse_number(text.substr(start, end - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else if (rank <= 9) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument(std::string("cannot parse word '") + std::string(text) + "'");
      }
      letters.push_back(c - '0');
    }
  } else {
    letters.push_back(parse_number(text));
  }
  return Word(std::move(letters), rank);
}

Word Word::prefix(std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + std::min(len, size())), rank_);
}

Word Word::appended(Letter a) const {
  std::vector<Letter> out = letters_;
  out.push_back(a);
  return Word(std::move(out), rank_);
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out), std::max(rank_, other.rank_));
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (rank_ > 9 && i > 0) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::vector<Letter> support(const Word& w) {
  std::set<Letter> seen(w.letters().begin(), w.letters().end());
  return std::vector<Letter>(seen.begin(), seen.end());
}

bool is_subsequence(const Word& u, const Word& w) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < w.size() && i < u.size(); ++j) {
    if (w[j] == u[i]) ++i;
  }
  return i == u.size();
}

Word complement_reverse(const Word& w) {
  Alphabet a(w.rank());
  std::vector<Letter> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[w.size() - 1 - i] = a.complement(w[i]);
  }
  return Word(std::move(out), w.rank());
}

std::optional<int> longest_decreasing_in_band(const Word& w, Letter lo, Letter hi) {
  // best[a] = longest strictly decreasing subsequence within the band whose
  // last (smallest) letter is a; a new letter c extends any run ending above c.
  std::vector<int> best(w.rank() + 2, 0);
  int overall = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    Letter c = w[j];
    if (c < lo || c > hi) continue;
    int extend = 0;
    for (Letter b = c + 1; b <= hi; ++b) extend = std::max(extend, best[b]);
    best[c] = std::max(best[c], extend + 1);
    overall = std::max(overall, best[c]);
  }
  if (overall == 0) return std::nullopt;
  return overall;
}

std::set<std::vector<Letter>> k_spectrum(const Word& w, int k, std::size_t max_len) {
  if (w.size() > max_len) {
    throw std::runtime_error("k_spectrum guard: word of length " + std::to_string(w.size()) +
                             " exceeds limit " + std::to_string(max_len));
  }
  std::set<std::vector<Letter>> out;
  out.insert(std::vector<Letter>{});
  for (std::size_t j = 0; j < w.size(); ++j) {
    std::vector<std::vector<Letter>> grown;
    for (const auto& s : out) {
      if (static_cast<int>(s.size()) < k) {
        std::vector<Letter> t = s;
        t.push_back(w[j]);
        grown.push_back(std::move(t));
      }
    }
    out.insert(grown.begin(), grown.end());
  }
  return out;
}

}  // namespace stylic
