#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stylic/identity.hpp"
#include "stylic/monoid.hpp"
#include "stylic/tableau.hpp"
#include "stylic/tropical.hpp"
#include "stylic/verify.hpp"
#include "stylic/word.hpp"

using nlohmann::json;
using namespace stylic;

namespace {

// Rank ceiling for full enumeration; the environment can raise or lower it.
int enumeration_cap() {
  if (const char* env = std::getenv("STYLIC_MAX_RANK")) return std::atoi(env);
  return 6;
}

std::string tableau_text(const NTableau& t) {
  if (t.empty()) return "(empty)\n";
  std::string out;
  const auto& rows = t.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {  // top row first, bottom last
    for (std::size_t j = 0; j < it->size(); ++j) {
      if (j) out += ' ';
      out += std::to_string((*it)[j]);
    }
    out += '\n';
  }
  return out;
}

json tableau_json(const NTableau& t) {
  json rows = json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return rows;
}

std::string matrix_text(const TropMatrix& m) {
  std::size_t width = 0;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) width = std::max(width, m.at(i, j).str().size());
  }
  std::string out;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      std::string cell = m.at(i, j).str();
      if (j) out += ' ';
      out += std::string(width - cell.size(), ' ') + cell;
    }
    out += '\n';
  }
  return out;
}

json matrix_json(const TropMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) {
      const TropValue& v = m.at(i, j);
      if (v.is_bottom()) {
        row.push_back(nullptr);
      } else {
        row.push_back(v.value());
      }
    }
    rows.push_back(row);
  }
  return rows;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_tableau(const std::string& word_text, int rank, bool as_json) {
  Word w = Word::parse(word_text, rank);
  NTableau t = n_tableau(w);
  if (as_json) {
    json doc{{"word", w.str()}, {"rank", rank}, {"rows", tableau_json(t)},
             {"canonical", canonical_word(t).str()}};
    emit(doc);
  } else {
    std::cout << tableau_text(t);
    std::cout << "canonical: " << canonical_word(t).str() << "\n";
  }
  return 0;
}

int cmd_matrix(const std::string& word_text, int rank, const std::string& semiring, bool as_json) {
  Word w = Word::parse(word_text, rank);
  TropMatrix m = rho(w, rank);
  if (semiring == "trunc") {
    m = truncate(m, rank);
  } else if (semiring == "bool") {
    m = to_boolean(m);
  } else if (semiring != "trop") {
    throw std::invalid_argument("unknown semiring '" + semiring + "'");
  }
  if (as_json) {
    json doc{{"word", w.str()}, {"rank", rank}, {"semiring", semiring},
             {"entries", matrix_json(m)}};
    emit(doc);
  } else {
    std::cout << matrix_text(m);
  }
  return 0;
}

int cmd_check(const std::string& identity_text, int rank, bool force_involution, bool as_json) {
  Identity id = Identity::parse(identity_text);
  const bool involution = id.involution || force_involution;
  json doc{{"identity", id.str()}, {"rank", rank}};
  int code = 0;
  if (!involution) {
    StylicVerdict v = check_identity_styl(id, rank);
    doc["mode"] = "congruence";
    doc["holds"] = v.holds;
    if (v.holds) {
      if (!as_json) std::cout << "holds at rank " << rank << "\n";
      doc["witness"] = nullptr;
    } else {
      code = 1;
      json w{{"word", varword_str(*v.witness)}, {"side", side_name(v.witness_side)}};
      doc["witness"] = w;
      if (!as_json) {
        std::cout << "fails at rank " << rank << ": subsequence " << varword_str(*v.witness)
                  << " occurs on the " << side_name(v.witness_side) << " only\n";
      }
    }
  } else {
    MonoidTable m = enumerate_monoid(rank, enumeration_cap());
    BruteVerdict v = brute_force_check(id, m);
    doc["mode"] = "exhaustive";
    doc["holds"] = v.holds;
    doc["evaluations"] = v.evaluations;
    if (v.holds) {
      if (!as_json) {
        std::cout << "holds at rank " << rank << " (" << v.evaluations << " evaluations)\n";
      }
      doc["counterexample"] = nullptr;
    } else {
      code = 1;
      json asg = json::object();
      for (const auto& [name, e] : v.counterexample->assignment) {
        asg[name] = m.canonical[e].str();
      }
      doc["counterexample"] = json{{"assignment", asg},
                                   {"lhs", m.canonical[v.counterexample->lhs_value].str()},
                                   {"rhs", m.canonical[v.counterexample->rhs_value].str()}};
      if (!as_json) {
        std::cout << "fails at rank " << rank << ": under";
        for (const auto& [name, e] : v.counterexample->assignment) {
          std::cout << " " << name << "=" << m.canonical[e].str();
        }
        std::cout << " the sides evaluate to " << m.canonical[v.counterexample->lhs_value].str()
                  << " and " << m.canonical[v.counterexample->rhs_value].str() << "\n";
      }
    }
  }
  if (as_json) emit(doc);
  return code;
}

int cmd_witness(const std::string& identity_text, int rank, bool as_json) {
  Identity id = Identity::parse(identity_text);
  if (id.involution) throw std::invalid_argument("witness construction needs a star-free identity");
  WitnessEvaluation ev;
  try {
    ev = witness_evaluation(id, rank);
  } catch (const std::runtime_error& e) {
    if (!as_json) std::cout << e.what() << "\n";
    else emit(json{{"identity", id.str()}, {"rank", rank}, {"holds", true}});
    return 1;
  }
  json asg = json::object();
  for (const auto& [name, w] : ev.assignment) asg[name] = w.str();
  if (as_json) {
    json doc{{"identity", id.str()},
             {"rank", rank},
             {"holds", false},
             {"distinguisher", json{{"word", varword_str(ev.distinguisher)},
                                    {"side", side_name(ev.side)}}},
             {"target", ev.target},
             {"assignment", asg},
             {"lhs_word", ev.lhs_word.str()},
             {"rhs_word", ev.rhs_word.str()},
             {"lhs_rows", tableau_json(ev.lhs_tableau)},
             {"rhs_rows", tableau_json(ev.rhs_tableau)}};
    emit(doc);
  } else {
    std::cout << "distinguisher: " << varword_str(ev.distinguisher) << " (in "
              << side_name(ev.side) << " only)\n";
    std::cout << "target: letter " << ev.target << " in row " << ev.target << "\n";
    std::cout << "assignment:\n";
    for (const auto& [name, w] : ev.assignment) std::cout << "  " << name << " -> " << w.str() << "\n";
    std::cout << "lhs image " << ev.lhs_word.str() << ":\n" << tableau_text(ev.lhs_tableau);
    std::cout << "rhs image " << ev.rhs_word.str() << ":\n" << tableau_text(ev.rhs_tableau);
  }
  return 0;
}

int cmd_enumerate(int rank, bool with_table, bool with_jtrivial, bool as_json) {
  MonoidTable m = enumerate_monoid(rank, enumeration_cap());
  json doc{{"rank", rank},
           {"size", m.size()},
           {"identity", m.identity_index},
           {"zero", m.zero_index}};
  if (!as_json) {
    std::cout << "rank " << rank << ": " << m.size() << " elements (identity " << m.identity_index
              << ", zero " << m.zero_index << ")\n";
  }
  if (with_jtrivial) {
    bool jt = is_j_trivial(m);
    doc["j_trivial"] = jt;
    if (!as_json) std::cout << "principal two-sided ideals distinct: " << (jt ? "yes" : "no") << "\n";
  }
  if (with_table) {
    json elems = json::array();
    for (const auto& w : m.canonical) elems.push_back(w.str());
    doc["elements"] = elems;
    doc["involution"] = m.involution;
    doc["table"] = m.product;
    if (!as_json) {
      for (int e = 0; e < m.size(); ++e) {
        std::cout << e << ": " << m.canonical[e].str() << " (conjugate " << m.involution[e] << ")\n";
      }
      for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) std::cout << (j ? " " : "") << m.product[i][j];
        std::cout << "\n";
      }
    }
  }
  if (as_json) emit(doc);
  return 0;
}

int cmd_verify(int rank, std::uint64_t seed, long long samples, bool as_json) {
  VerifyReport report = run_verification(rank, seed, samples);
  json suites = json::array();
  for (const auto& s : report.suites) {
    json row{{"name", s.name}, {"checked", s.checked}, {"failures", s.failures}};
    if (s.failures > 0) row["first_failure"] = s.first_failure;
    suites.push_back(row);
    if (!as_json) {
      std::cout << (s.failures == 0 ? "ok   " : "FAIL ") << s.name << "  checked=" << s.checked
                << " failures=" << s.failures;
      if (s.failures > 0) std::cout << "  first: " << s.first_failure;
      std::cout << "\n";
    }
  }
  if (as_json) {
    emit(json{{"rank", report.rank}, {"seed", report.seed}, {"samples", report.samples},
              {"suites", suites}, {"ok", report.ok()}});
  } else {
    std::cout << (report.ok() ? "all suites passed" : "SUITE FAILURES") << " (rank " << report.rank
              << ", seed " << report.seed << ", samples " << report.samples << ")\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_search(const std::string& identity_text, int rank, int bound, long long budget,
               std::uint64_t seed, bool as_json) {
  Identity id = Identity::parse(identity_text);
  TropSearchResult res = tropical_counterexample_search(id, rank, bound, budget, seed);
  json doc{{"identity", id.str()}, {"rank", rank},        {"entry_bound", res.entry_bound},
           {"budget", res.budget}, {"seed", res.seed},    {"samples_tried", res.samples_tried},
           {"found", res.found}};
  if (res.found) {
    json asg = json::object();
    for (const auto& [name, mat] : res.assignment) asg[name] = matrix_json(mat);
    doc["assignment"] = asg;
    doc["lhs"] = matrix_json(evaluate_side(id.lhs, res.assignment));
    doc["rhs"] = matrix_json(evaluate_side(id.rhs, res.assignment));
    if (!as_json) {
      std::cout << "counterexample after " << res.samples_tried << " samples (seed " << res.seed
                << ", bound " << res.entry_bound << ")\n";
      for (const auto& [name, mat] : res.assignment) {
        std::cout << name << " =\n" << matrix_text(mat);
      }
      std::cout << "lhs value:\n" << matrix_text(evaluate_side(id.lhs, res.assignment));
      std::cout << "rhs value:\n" << matrix_text(evaluate_side(id.rhs, res.assignment));
    }
  } else {
    doc["assignment"] = nullptr;
    if (!as_json) {
      std::cout << "no counterexample in " << res.samples_tried << " samples (seed " << res.seed
                << ", bound " << res.entry_bound << ")\n";
    }
  }
  if (as_json) emit(doc);
  return res.found ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stylic: tableaux, tropical matrices and identity checking for a finite monoid"};
  app.require_subcommand(1);

  std::string word_text, identity_text, semiring = "trop";
  int rank = 0, bound = 3;
  long long budget = 100000, samples = 2000;
  std::uint64_t verify_seed = 0;
  std::uint64_t search_seed = 0;
  bool as_json = false, involution = false, with_table = false, with_jtrivial = false;

  auto* t = app.add_subcommand("tableau", "insertion tableau of a word");
  t->add_option("word", word_text, "input word")->required();
  t->add_option("--rank", rank, "alphabet rank")->required();
  t->add_flag("--json", as_json, "emit a JSON document");

  auto* x = app.add_subcommand("matrix", "tropical matrix of a word");
  x->add_option("word", word_text, "input word")->required();
  x->add_option("--rank", rank, "alphabet rank")->required();
  x->add_option("--semiring", semiring, "coefficient semiring: trop, trunc or bool");
  x->add_flag("--json", as_json, "emit a JSON document");

  auto* c = app.add_subcommand("check", "decide an identity at a rank");
  c->add_option("identity", identity_text, "identity, e.g. \"xyx = xxy\"")->required();
  c->add_option("--rank", rank, "alphabet rank")->required();
  c->add_flag("--involution", involution, "evaluate exhaustively with the star involution");
  c->add_flag("--json", as_json, "emit a JSON document");

  auto* w = app.add_subcommand("witness", "falsifying substitution for a failing identity");
  w->add_option("identity", identity_text, "identity, e.g. \"xxyx = xyxx\"")->required();
  w->add_option("--rank", rank, "alphabet rank")->required();
  w->add_flag("--json", as_json, "emit a JSON document");

  auto* n = app.add_subcommand("enumerate", "list the finite monoid at a rank");
  n->add_option("--rank", rank, "alphabet rank")->required();
  n->add_flag("--table", with_table, "include elements and the product table");
  n->add_flag("--jtrivial", with_jtrivial, "check that principal two-sided ideals are distinct");
  n->add_flag("--json", as_json, "emit a JSON document");

  auto* v = app.add_subcommand("verify", "run randomized cross-checks at a rank");
  v->add_option("--rank", rank, "alphabet rank")->required();
  v->add_option("--seed", verify_seed, "random seed")->default_val(20260822);
  v->add_option("--samples", samples, "samples per suite")->default_val(2000);
  v->add_flag("--json", as_json, "emit a JSON document");

  auto* s = app.add_subcommand("search", "randomized matrix counterexample search");
  s->add_option("identity", identity_text, "identity, may use '*'")->required();
  s->add_option("--rank", rank, "alphabet rank")->required();
  s->add_option("--bound", bound, "absolute entry bound")->default_val(3);
  s->add_option("--budget", budget, "maximum samples")->default_val(100000);
  s->add_option("--seed", search_seed, "random seed")->default_val(12345);
  s->add_flag("--json", as_json, "emit a JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(t)) return cmd_tableau(word_text, rank, as_json);
    if (app.got_subcommand(x)) return cmd_matrix(word_text, rank, semiring, as_json);
    if (app.got_subcommand(c)) return cmd_check(identity_text, rank, involution, as_json);
    if (app.got_subcommand(w)) return cmd_witness(identity_text, rank, as_json);
    if (app.got_subcommand(n)) return cmd_enumerate(rank, with_table, with_jtrivial, as_json);
    if (app.got_subcommand(v)) return cmd_verify(rank, verify_seed, samples, as_json);
    if (app.got_subcommand(s)) return cmd_search(identity_text, rank, bound, budget, search_seed, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
