#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "stylic/identity.hpp"
#include "stylic/monoid.hpp"
#include "stylic/tableau.hpp"
#include "stylic/tropical.hpp"
#include "stylic/word.hpp"

namespace py = pybind11;
using namespace stylic;

namespace {

Word parse(const std::string& text, int rank) { return Word::parse(text, rank); }

using Entries = std::vector<std::vector<std::optional<long long>>>;

Entries matrix_entries(const TropMatrix& m) {
  Entries out(m.dim(), std::vector<std::optional<long long>>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (!m.at(i, j).is_bottom()) out[i][j] = m.at(i, j).value();
    }
  }
  return out;
}

py::object check_identity(const std::string& text, int rank, bool involution) {
  Identity id = Identity::parse(text);
  py::dict out;
  out["identity"] = id.str();
  out["rank"] = rank;
  if (!(id.involution || involution)) {
    StylicVerdict v = check_identity_styl(id, rank);
    out["mode"] = "congruence";
    out["holds"] = v.holds;
    if (v.witness) {
      py::dict w;
      w["word"] = varword_str(*v.witness);
      w["side"] = side_name(v.witness_side);
      out["witness"] = w;
    } else {
      out["witness"] = py::none();
    }
  } else {
    MonoidTable m = enumerate_monoid(rank);
    BruteVerdict v = brute_force_check(id, m);
    out["mode"] = "exhaustive";
    out["holds"] = v.holds;
    out["evaluations"] = v.evaluations;
    if (v.counterexample) {
      py::dict asg;
      for (const auto& [name, e] : v.counterexample->assignment) {
        asg[py::str(name)] = m.canonical[e].str();
      }
      py::dict ce;
      ce["assignment"] = asg;
      ce["lhs"] = m.canonical[v.counterexample->lhs_value].str();
      ce["rhs"] = m.canonical[v.counterexample->rhs_value].str();
      out["counterexample"] = ce;
    } else {
      out["counterexample"] = py::none();
    }
  }
  return out;
}

py::object witness(const std::string& text, int rank) {
  WitnessEvaluation ev = witness_evaluation(Identity::parse(text), rank);
  py::dict out;
  out["distinguisher"] = varword_str(ev.distinguisher);
  out["side"] = side_name(ev.side);
  out["target"] = ev.target;
  py::dict asg;
  for (const auto& [name, w] : ev.assignment) asg[py::str(name)] = w.str();
  out["assignment"] = asg;
  out["lhs_word"] = ev.lhs_word.str();
  out["rhs_word"] = ev.rhs_word.str();
  out["lhs_rows"] = ev.lhs_tableau.rows();
  out["rhs_rows"] = ev.rhs_tableau.rows();
  return out;
}

Family family_of(const std::string& name) {
  if (name == "a") return Family::a;
  if (name == "b") return Family::b;
  if (name == "c") return Family::c;
  if (name == "r") return Family::r;
  throw std::invalid_argument("unknown family '" + name + "'; expected a, b, c or r");
}

}  // namespace

PYBIND11_MODULE(_stylic, m) {
  m.doc() = "tableaux, tropical matrices and identity checking for a finite monoid";

  m.def(
      "n_tableau", [](const std::string& w, int rank) { return n_tableau(parse(w, rank)).rows(); },
      py::arg("word"), py::arg("rank"), "insertion tableau rows, bottom row first");
  m.def(
      "canonical_word",
      [](const std::string& w, int rank) { return canonical_word(n_tableau(parse(w, rank))).str(); },
      py::arg("word"), py::arg("rank"), "canonical representative of the word's class");
  m.def(
      "delta", [](const std::string& w, int rank) { return delta(parse(w, rank)).str(); },
      py::arg("word"), py::arg("rank"), "derived word of lifted letters");
  m.def(
      "stylic_equal",
      [](const std::string& u, const std::string& v, int rank) {
        return stylic_equal(parse(u, rank), parse(v, rank));
      },
      py::arg("u"), py::arg("v"), py::arg("rank"), "whether two words share one tableau");
  m.def(
      "schensted", [](const std::string& w, int rank) { return schensted(parse(w, rank)).rows(); },
      py::arg("word"), py::arg("rank"), "classic row-insertion tableau rows");
  m.def(
      "support", [](const std::string& w, int rank) { return support(parse(w, rank)); },
      py::arg("word"), py::arg("rank"));
  m.def(
      "complement_reverse",
      [](const std::string& w, int rank) { return complement_reverse(parse(w, rank)).str(); },
      py::arg("word"), py::arg("rank"), "reverse the word and complement every letter");
  m.def(
      "k_spectrum",
      [](const std::string& w, int rank, int k) {
        std::vector<std::string> out;
        for (const auto& s : k_spectrum(parse(w, rank), k)) out.push_back(Word(s, rank).str());
        return out;
      },
      py::arg("word"), py::arg("rank"), py::arg("k"),
      "all subsequences of length <= k, shortest first within sorted order");

  m.def(
      "rho", [](const std::string& w, int rank) { return matrix_entries(rho(parse(w, rank), rank)); },
      py::arg("word"), py::arg("rank"),
      "tropical matrix of the word; None encodes the absent entry");
  m.def(
      "decode_tableau",
      [](const Entries& entries, int rank) {
        TropMatrix m(static_cast<int>(entries.size()), Semiring::tropical());
        for (std::size_t i = 0; i < entries.size(); ++i) {
          if (entries[i].size() != entries.size()) {
            throw std::invalid_argument("matrix rows must be square");
          }
          for (std::size_t j = 0; j < entries[i].size(); ++j) {
            if (entries[i][j]) m.at(static_cast<int>(i), static_cast<int>(j)) = TropValue(*entries[i][j]);
          }
        }
        return decode_tableau(m, rank).rows();
      },
      py::arg("entries"), py::arg("rank"), "tableau rows encoded by a representation matrix");

  m.def(
      "simon_equivalent",
      [](const std::string& u, const std::string& v, int rank, int k) {
        return simon_equivalent(parse(u, rank), parse(v, rank), k);
      },
      py::arg("u"), py::arg("v"), py::arg("rank"), py::arg("k"),
      "whether two words share all subsequences of length <= k");
  m.def(
      "distinguishing_word",
      [](const std::string& u, const std::string& v, int rank, int k) -> py::object {
        auto d = distinguishing_word(parse(u, rank), parse(v, rank), k);
        if (!d.word) return py::none();
        py::dict out;
        out["word"] = d.word->str();
        out["side"] = side_name(d.side);
        return out;
      },
      py::arg("u"), py::arg("v"), py::arg("rank"), py::arg("k"),
      "shortest subsequence on one side only, or None");

  m.def("check_identity", &check_identity, py::arg("identity"), py::arg("rank"),
        py::arg("involution") = false,
        "decide an identity at a rank; stars force exhaustive table evaluation");
  m.def("witness_evaluation", &witness, py::arg("identity"), py::arg("rank"),
        "falsifying substitution for a failing identity");

  m.def(
      "monoid_size", [](int rank) { return enumerate_monoid(rank).size(); }, py::arg("rank"));
  m.def(
      "is_j_trivial", [](int rank) { return is_j_trivial(enumerate_monoid(rank)); },
      py::arg("rank"), "whether distinct elements generate distinct two-sided ideals");
  m.def(
      "basis",
      [](int k) {
        std::vector<std::string> out;
        for (const auto& id : basis(k)) out.push_back(id.str());
        return out;
      },
      py::arg("k"), "finite equational basis at depth k (k <= 3)");
  m.def(
      "debruijn_identity", [](int k) { return debruijn_identity(k).str(); }, py::arg("k"),
      "two-variable law whose context runs over all binary patterns of order k-1");
  m.def(
      "family_identity",
      [](const std::string& family, int param) { return family_identity(family_of(family), param).str(); },
      py::arg("family"), py::arg("param"), "built-in identity family: a, b, c or r");
}
