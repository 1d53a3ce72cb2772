#include "stylic/identity.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace stylic {

VarWord parse_varword(std::string_view text) {
  VarWord out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    char c = text[i];
    if (c < 'a' || c > 'z') {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in variable word");
    }
    VarSym s;
    s.name = c;
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      s.name += text[i];
      ++i;
    }
    if (i < text.size() && text[i] == '*') {
      s.starred = true;
      ++i;
    }
    out.push_back(std::move(s));
    skip_space();
  }
  // a side that is exactly "e" denotes the empty word
  if (out.size() == 1 && !out[0].starred && out[0].name == "e") out.clear();
  return out;
}

std::string varword_str(const VarWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& s : w) out += s.str();
  return out;
}

Identity Identity::parse(std::string_view text) {
  std::size_t eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
    throw std::invalid_argument("an identity needs exactly one '=': " + std::string(text));
  }
  Identity id;
  id.lhs = parse_varword(text.substr(0, eq));
  id.rhs = parse_varword(text.substr(eq + 1));
  auto starred = [](const VarWord& w) {
    return std::any_of(w.begin(), w.end(), [](const VarSym& s) { return s.starred; });
  };
  id.involution = starred(id.lhs) || starred(id.rhs);
  return id;
}

std::vector<std::string> Identity::variables() const {
  std::vector<std::string> out;
  auto collect = [&](const VarWord& w) {
    for (const auto& s : w) {
      if (std::find(out.begin(), out.end(), s.name) == out.end()) out.push_back(s.name);
    }
  };
  collect(lhs);
  collect(rhs);
  return out;
}

namespace {

// next[p * m + c] = least position >= p carrying symbol c, or -1; the states
// of the subsequence automaton are the positions 0..len.
std::vector<std::int32_t> next_table(const std::vector<int>& w, int m) {
  const std::size_t len = w.size();
  std::vector<std::int32_t> next((len + 1) * static_cast<std::size_t>(m), -1);
  for (std::size_t p = len; p-- > 0;) {
    for (int c = 0; c < m; ++c) next[p * m + c] = next[(p + 1) * m + c];
    next[p * m + w[p]] = static_cast<std::int32_t>(p);
  }
  return next;
}

struct PairNode {
  std::int32_t pu;
  std::int32_t pv;
  std::int32_t parent;
  std::int16_t letter;
  std::int16_t depth;
};

// Shortest encoded word embedding into exactly one input, lexicographically
// least among the shortest; nullopt when none of length <= k exists.
//
// Breadth-first over reachable state pairs with symbols tried in ascending
// order, so hits arrive shortest-first and in lex order within a length.
// Deduplicating pairs is sound under the depth budget: the first visit is at
// minimal depth, which leaves maximal remaining budget, and any admissible
// mismatch below a later visit is admissible below the first one.
std::optional<std::vector<int>> separating_word(const std::vector<int>& u,
                                                const std::vector<int>& v, int m, int k,
                                                Side* side_out) {
  const auto nu = next_table(u, m);
  const auto nv = next_table(v, m);
  const std::int64_t stride = static_cast<std::int64_t>(v.size()) + 2;
  std::vector<PairNode> nodes{{0, 0, -1, -1, 0}};
  std::unordered_set<std::int64_t> visited{0};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const PairNode cur = nodes[head];  // nodes may grow while expanding
    if (cur.depth >= k) break;
    for (int c = 0; c < m; ++c) {
      const std::int32_t qu = nu[static_cast<std::size_t>(cur.pu) * m + c];
      const std::int32_t qv = nv[static_cast<std::size_t>(cur.pv) * m + c];
      if ((qu >= 0) != (qv >= 0)) {
        if (side_out) *side_out = qu >= 0 ? Side::lhs : Side::rhs;
        std::vector<int> word{c};
        for (std::size_t cur_idx = head; nodes[cur_idx].parent >= 0;
             cur_idx = nodes[cur_idx].parent) {
          word.push_back(nodes[cur_idx].letter);
        }
        std::reverse(word.begin(), word.end());
        return word;
      }
      if (qu < 0) continue;                // the symbol extends neither side
      if (cur.depth + 1 >= k) continue;    // child could only yield words longer than k
      const std::int64_t key = (qu + std::int64_t(1)) * stride + (qv + 1);
      if (visited.insert(key).second) {
        nodes.push_back({qu + 1, qv + 1, static_cast<std::int32_t>(head),
                         static_cast<std::int16_t>(c), static_cast<std::int16_t>(cur.depth + 1)});
      }
    }
  }
  return std::nullopt;
}

std::vector<int> encode_letters(const Word& w) {
  std::vector<int> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] - 1;
  return out;
}

struct VarEncoding {
  std::vector<VarSym> symbols;  // ascending by (name, star); index = code
  std::vector<int> u;
  std::vector<int> v;
};

VarEncoding encode_varwords(const VarWord& u, const VarWord& v) {
  std::set<VarSym> universe(u.begin(), u.end());
  universe.insert(v.begin(), v.end());
  VarEncoding enc;
  enc.symbols.assign(universe.begin(), universe.end());
  auto code_of = [&](const VarSym& s) {
    return static_cast<int>(std::lower_bound(enc.symbols.begin(), enc.symbols.end(), s) -
                            enc.symbols.begin());
  };
  for (const auto& s : u) enc.u.push_back(code_of(s));
  for (const auto& s : v) enc.v.push_back(code_of(s));
  return enc;
}

}  // namespace

bool simon_equivalent(const Word& u, const Word& v, int k) {
  const int m = std::max(u.rank(), v.rank());
  return !separating_word(encode_letters(u), encode_letters(v), m, k, nullptr).has_value();
}

bool simon_equivalent(const VarWord& u, const VarWord& v, int k) {
  VarEncoding enc = encode_varwords(u, v);
  return !separating_word(enc.u, enc.v, static_cast<int>(enc.symbols.size()), k, nullptr)
              .has_value();
}

WordDistinguisher distinguishing_word(const Word& u, const Word& v, int k) {
  const int m = std::max(u.rank(), v.rank());
  WordDistinguisher out;
  auto enc = separating_word(encode_letters(u), encode_letters(v), m, k, &out.side);
  if (enc) {
    std::vector<Letter> letters;
    for (int c : *enc) letters.push_back(c + 1);
    out.word = Word(std::move(letters), m);
  }
  return out;
}

VarDistinguisher distinguishing_word(const VarWord& u, const VarWord& v, int k) {
  VarEncoding enc = encode_varwords(u, v);
  VarDistinguisher out;
  auto word = separating_word(enc.u, enc.v, static_cast<int>(enc.symbols.size()), k, &out.side);
  if (word) {
    VarWord w;
    for (int c : *word) w.push_back(enc.symbols[c]);
    out.word = std::move(w);
  }
  return out;
}

StylicVerdict check_identity_styl(const Identity& id, int rank) {
  Alphabet check(rank);
  if (id.involution) {
    throw std::invalid_argument("starred identity: route it to brute_force_check");
  }
  auto d = distinguishing_word(id.lhs, id.rhs, rank);
  StylicVerdict out;
  out.holds = !d.word.has_value();
  if (d.word) {
    out.witness = std::move(d.word);
    out.witness_side = d.side;
  }
  return out;
}

WitnessEvaluation witness_evaluation(const Identity& id, int rank) {
  StylicVerdict verdict = check_identity_styl(id, rank);
  if (verdict.holds) {
    throw std::runtime_error("identity holds at rank " + std::to_string(rank) +
                             "; there is no separating witness");
  }
  const VarWord& d = *verdict.witness;
  const int k = static_cast<int>(d.size());

  WitnessEvaluation out;
  out.distinguisher = d;
  out.side = verdict.witness_side;
  out.target = k;

  // Position i (1-based) of the substituted image realizes d's (k+1-i)-th
  // symbol, so each variable collects an increasing word of positions.
  std::map<std::string, std::vector<Letter>> positions;
  for (const auto& name : id.variables()) positions[name];
  for (int i = 1; i <= k; ++i) positions[d[k - i].name].push_back(i);
  for (auto& [name, letters] : positions) out.assignment.emplace(name, Word(letters, k));

  auto apply = [&](const VarWord& side) {
    Word w(k);
    for (const auto& s : side) w = w.concat(out.assignment.at(s.name));
    return w;
  };
  out.lhs_word = apply(id.lhs);
  out.rhs_word = apply(id.rhs);
  out.lhs_tableau = n_tableau(out.lhs_word);
  out.rhs_tableau = n_tableau(out.rhs_word);
  return out;
}

BruteVerdict brute_force_check(const Identity& id, const MonoidTable& m, long long budget) {
  const auto vars = id.variables();
  const int nv = static_cast<int>(vars.size());
  long long total = 1;
  for (int i = 0; i < nv; ++i) {
    if (total > budget / m.size()) {
      throw std::runtime_error("brute-force guard: " + std::to_string(m.size()) + "^" +
                               std::to_string(nv) + " evaluations exceed budget " +
                               std::to_string(budget));
    }
    total *= m.size();
  }

  std::map<std::string, int> var_pos;
  for (int i = 0; i < nv; ++i) var_pos[vars[i]] = i;
  struct CompiledSym {
    int var;
    bool starred;
  };
  auto compile = [&](const VarWord& side) {
    std::vector<CompiledSym> out;
    for (const auto& s : side) out.push_back({var_pos[s.name], s.starred});
    return out;
  };
  const auto lhs = compile(id.lhs);
  const auto rhs = compile(id.rhs);
  auto eval = [&](const std::vector<CompiledSym>& side, const std::vector<int>& asg) {
    int acc = m.identity_index;
    for (const auto& s : side) {
      int e = asg[s.var];
      if (s.starred) e = m.involution[e];
      acc = m.product[acc][e];
    }
    return acc;
  };

  BruteVerdict out;
  out.holds = true;
  std::vector<int> asg(nv, 0);
  while (true) {
    ++out.evaluations;
    const int lv = eval(lhs, asg);
    const int rv = eval(rhs, asg);
    if (lv != rv) {
      out.holds = false;
      Evaluation ev;
      for (int i = 0; i < nv; ++i) ev.assignment[vars[i]] = asg[i];
      ev.lhs_value = lv;
      ev.rhs_value = rv;
      out.counterexample = std::move(ev);
      return out;
    }
    int i = 0;
    while (i < nv) {
      if (++asg[i] < m.size()) break;
      asg[i] = 0;
      ++i;
    }
    if (i == nv) break;
  }
  return out;
}

std::vector<Identity> basis(int k) {
  switch (k) {
    case 1:
      return {Identity::parse("xx = x"), Identity::parse("xy = yx")};
    case 2:
      return {Identity::parse("xyxzx = xyzx"), Identity::parse("xyxy = yxyx")};
    case 3:
      return {Identity::parse("xyxxzx = xyxzx"), Identity::parse("xyzxxtz = xyxzxxtz"),
              Identity::parse("zyxxztx = zyxxzxtx"), Identity::parse("xyxyxy = yxyxyx")};
    default:
      if (k >= 4) {
        throw std::invalid_argument("no finite basis exists at congruence level " +
                                    std::to_string(k));
      }
      throw std::invalid_argument("congruence level must be >= 1");
  }
}

Identity debruijn_identity(int k) {
  if (k < 2 || k > 5) {
    throw std::invalid_argument("context order " + std::to_string(k) + " outside 2..5");
  }
  const int m = k - 1;

  // Lyndon-word concatenation gives the lexicographically least binary de
  // Bruijn cycle of order m; appending the first m-1 bits unrolls it so every
  // length-m pattern occurs as a factor.
  std::vector<int> seq;
  std::vector<int> t(static_cast<std::size_t>(m) + 1, 0);
  std::function<void(int, int)> gen = [&](int pos, int p) {
    if (pos > m) {
      if (m % p == 0) seq.insert(seq.end(), t.begin() + 1, t.begin() + p + 1);
      return;
    }
    t[pos] = t[pos - p];
    gen(pos + 1, p);
    for (int b = t[pos - p] + 1; b <= 1; ++b) {
      t[pos] = b;
      gen(pos + 1, pos);
    }
  };
  gen(1, 1);
  for (int i = 0; i + 1 < m; ++i) seq.push_back(seq[i]);

  const VarSym x{"x", false};
  const VarSym y{"y", false};
  VarWord w;
  for (int bit : seq) {
    w.push_back(bit == 0 ? x : y);
    w.push_back(bit == 0 ? y : x);
  }
  Identity id;
  id.lhs = w;
  id.lhs.push_back(x);
  id.lhs.push_back(y);
  id.lhs.insert(id.lhs.end(), w.begin(), w.end());
  id.rhs = w;
  id.rhs.push_back(y);
  id.rhs.push_back(x);
  id.rhs.insert(id.rhs.end(), w.begin(), w.end());
  return id;
}

Identity family_identity(Family f, int param) {
  auto v = [](std::string name, bool star = false) {
    return VarSym{std::move(name), star};
  };
  auto append = [](VarWord& a, const VarWord& b) { a.insert(a.end(), b.begin(), b.end()); };
  Identity id;
  switch (f) {
    case Family::a: {
      if (param < 0) throw std::invalid_argument("family a needs param >= 0");
      VarWord core{v("x")};
      for (int i = 1; i <= param; ++i) {
        core.push_back(v("y" + std::to_string(i)));
        core.push_back(v("y" + std::to_string(i), true));
      }
      core.push_back(v("x", true));
      const VarWord zz{v("z"), v("z", true)};
      id.lhs = core;
      append(id.lhs, zz);
      id.rhs = zz;
      append(id.rhs, core);
      id.involution = true;
      return id;
    }
    case Family::b: {
      if (param < 1) throw std::invalid_argument("family b needs param >= 1");
      auto run = [&](bool star, bool reversed) {
        VarWord w;
        for (int i = 1; i <= param; ++i) {
          const int j = reversed ? param + 1 - i : i;
          w.push_back(v("x" + std::to_string(j), star));
        }
        return w;
      };
      id.lhs = run(false, false);
      append(id.lhs, run(true, false));
      append(id.lhs, run(false, false));
      id.rhs = run(true, true);
      append(id.rhs, run(false, true));
      append(id.rhs, run(true, true));
      id.involution = true;
      return id;
    }
    case Family::c: {
      if (param < 1) throw std::invalid_argument("family c needs param >= 1");
      id.lhs = {v("x", true)};
      for (int i = 0; i < param - 1; ++i) id.lhs.push_back(v("x"));
      id.rhs = {v("x", true)};
      for (int i = 0; i < param; ++i) id.rhs.push_back(v("x"));
      id.involution = true;
      return id;
    }
    case Family::r: {
      if (param < 1) throw std::invalid_argument("family r needs param >= 1");
      for (int i = 0; i <= param; ++i) {
        id.lhs.push_back(v("x"));
        id.lhs.push_back(v("y"));
      }
      for (int i = 0; i < param; ++i) {
        id.rhs.push_back(v("x"));
        id.rhs.push_back(v("y"));
      }
      id.rhs.push_back(v("y"));
      id.rhs.push_back(v("x"));
      return id;
    }
  }
  throw std::logic_error("unknown family");
}

TropMatrix evaluate_side(const VarWord& side, const std::map<std::string, TropMatrix>& assignment) {
  if (assignment.empty()) throw std::invalid_argument("empty matrix assignment");
  const int dim = assignment.begin()->second.dim();
  const Semiring sr = assignment.begin()->second.semiring();
  TropMatrix acc = TropMatrix::identity_matrix(dim, sr);
  for (const auto& s : side) {
    auto it = assignment.find(s.name);
    if (it == assignment.end()) {
      throw std::invalid_argument("no matrix assigned to variable " + s.name);
    }
    acc = mat_mul(acc, s.starred ? skew_transpose(it->second) : it->second);
  }
  return acc;
}

TropSearchResult tropical_counterexample_search(const Identity& id, int rank, int entry_bound,
                                                long long budget, std::uint64_t seed) {
  Alphabet check(rank);
  if (entry_bound < 0) throw std::invalid_argument("entry bound must be >= 0");
  TropSearchResult res;
  res.entry_bound = entry_bound;
  res.budget = budget;
  res.seed = seed;
  const auto vars = id.variables();
  if (vars.empty()) return res;

  std::mt19937_64 rng(seed);
  const int dim = rank + 1;
  // one extra outcome for -inf, the rest spread over [-bound, bound]
  std::uniform_int_distribution<int> pick(0, 2 * entry_bound + 1);
  for (long long s = 0; s < budget; ++s) {
    std::map<std::string, TropMatrix> asg;
    for (const auto& name : vars) {
      TropMatrix m = TropMatrix::identity_matrix(dim, Semiring::tropical());
      for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
          const int r = pick(rng);
          m.at(i, j) = r == 0 ? TropValue::bottom() : TropValue(r - 1 - entry_bound);
        }
      }
      asg.emplace(name, std::move(m));
    }
    ++res.samples_tried;
    if (evaluate_side(id.lhs, asg) != evaluate_side(id.rhs, asg)) {
      res.found = true;
      res.assignment = std::move(asg);
      return res;
    }
  }
  return res;
}

}  // namespace stylic
