// Command-line front end: classify an equation, inspect one blow-up
// chart, or run the verification corpus.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "corpus.hpp"
#include "ctc/blowup.hpp"
#include "ctc/classify.hpp"
#include "ctc/error.hpp"
#include "ctc/parse.hpp"
#include "json.hpp"
#include "report_json.hpp"

namespace {

using namespace ctc;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

WeightVector parse_weights(const std::string& text) {
  WeightVector w;
  for (const auto& part : split_names(text)) {
    try {
      w.entries.push_back(std::stol(part));
    } catch (const std::exception&) {
      throw DomainError("weights must be a comma-separated integer list");
    }
  }
  return w;
}

// Reorders f (and the action) so the curve roles sit on (y, z, u) of the
// canonical roster, leaving the section on x.
struct ClassifyInput {
  Polynomial f;
  GroupAction group;
};

ClassifyInput prepare_classify(const std::string& f_text,
                               const std::string& curve_text,
                               const std::string& group_text) {
  static const std::vector<std::string> kNames{"x", "y", "z", "u"};
  const RosterPtr roster = make_roster(kNames);
  const Polynomial f = parse_polynomial(f_text, roster);

  const std::vector<std::string> curve = split_names(curve_text);
  if (curve.size() != 3)
    throw DomainError("the curve spec needs three of x, y, z, u");
  std::vector<std::size_t> role_of;  // canonical slot -> source index
  std::vector<bool> used(4, false);
  for (const auto& name : curve) {
    const auto it = std::find(kNames.begin(), kNames.end(), name);
    if (it == kNames.end())
      throw DomainError("unknown curve variable: " + name);
    const std::size_t idx = static_cast<std::size_t>(it - kNames.begin());
    if (used[idx]) throw DomainError("repeated curve variable: " + name);
    used[idx] = true;
    role_of.push_back(idx);
  }
  std::size_t section = 4;
  for (std::size_t i = 0; i < 4; ++i)
    if (!used[i]) section = i;
  role_of.insert(role_of.begin(), section);

  ClassifyInput in{f, GroupAction{}};
  if (!group_text.empty()) in.group = parse_group_action(group_text);

  const bool identity = role_of == std::vector<std::size_t>{0, 1, 2, 3};
  if (!identity) {
    // role_of[slot] = old index; reindex wants old index -> new slot.
    std::vector<std::size_t> perm(4);
    for (std::size_t slot = 0; slot < 4; ++slot) perm[role_of[slot]] = slot;
    in.f = reindex(f, roster, perm);
    if (!in.group.is_trivial()) {
      std::vector<long> b(4);
      for (std::size_t slot = 0; slot < 4; ++slot)
        b[slot] = in.group.b[role_of[slot]];
      in.group = GroupAction(in.group.r, b);
    }
  }
  return in;
}

int run_classify(const std::string& f_text, const std::string& curve_text,
                 const std::string& group_text, int truncation,
                 const std::string& format) {
  const ClassifyInput in =
      prepare_classify(f_text, curve_text, group_text);
  const ClassificationReport rep = classify(in.f, in.group, truncation);
  if (format == "json")
    std::cout << report_json::print(rep) << "\n";
  else
    std::cout << format_report(rep);
  if (!rep.row.empty() || !rep.admissible) return kExitOk;
  return kExitUnknown;
}

int run_blowup(const std::string& f_text, const std::string& w_text,
               const std::string& chart, const std::string& group_text,
               const std::string& format) {
  const WeightVector w = parse_weights(w_text);
  const std::size_t n = w.entries.size();
  static const std::vector<std::string> kNames{"x", "y", "z", "u", "t"};
  if (n < 2 || n > kNames.size())
    throw DomainError("weights must list between two and five variables");
  const RosterPtr roster = make_roster(
      std::vector<std::string>(kNames.begin(), kNames.begin() + n));
  const Polynomial f = parse_polynomial(f_text, roster);

  std::size_t index = n;
  for (std::size_t i = 0; i < n; ++i)
    if (roster->name(i) == chart) index = i;
  if (index == n) throw DomainError("unknown chart variable: " + chart);

  std::optional<LatticeData> lattice;
  if (!group_text.empty())
    lattice = LatticeData::from_action(parse_group_action(group_text));

  const ChartMap cm = chart_map(w, index, lattice);
  const LiftResult lr = lift(f, w, index);
  const ExceptionalIdeal ex = exceptional_ideal({f}, w);

  if (format == "json") {
    nlohmann::json j;
    j["schema"] = "ctf-chart/1";
    j["chart"] = chart;
    j["weights"] = w.entries;
    nlohmann::json map = nlohmann::json::object();
    for (const auto& [name, image] : cm.images(roster))
      map[name] = to_string(image);
    j["map"] = map;
    j["ambient"] = to_string(cm.ambient);
    j["lifted"] = to_string(lr.lifted);
    j["multiplicity"] = lr.m;
    j["truncated"] = lr.truncated;
    nlohmann::json exc = nlohmann::json::array();
    for (const auto& g : ex.lowest_parts) exc.push_back(to_string(g));
    j["exceptional"] = exc;
    j["irreducible"] = to_string(ex.verdict);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "chart: " << chart << "\n";
  const auto images = cm.images(roster);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = roster->name(i);
    std::cout << "  " << name << " -> " << to_string(images.at(name))
              << "\n";
  }
  std::cout << "ambient: " << to_string(cm.ambient) << "\n";
  std::cout << "lifted equation: " << to_string(lr.lifted) << "\n";
  std::cout << "extracted exponent: " << lr.m << "\n";
  std::cout << "exceptional ideal:";
  for (const auto& g : ex.lowest_parts) std::cout << " " << to_string(g);
  std::cout << "\n";
  std::cout << "irreducible over the closure: " << to_string(ex.verdict)
            << "\n";
  return kExitOk;
}

int run_verify(const std::string& corpus_path, const std::string& rows,
               int truncation) {
  const auto all = corpus::load(corpus_path);
  const auto picked = corpus::filter(all, rows);
  const RosterPtr roster = make_roster({"x", "y", "z", "u"});
  std::size_t passed = 0;
  for (const auto& inst : picked) {
    GroupAction g;
    if (!inst.group.empty()) g = parse_group_action(inst.group);
    std::vector<std::string> faults;
    ClassificationReport rep;
    try {
      rep = classify(parse_polynomial(inst.equation, roster), g,
                     truncation);
    } catch (const std::exception& e) {
      faults.push_back(std::string("exception: ") + e.what());
    }
    auto expect = [&faults](const std::string& field,
                            const std::string& want,
                            const std::string& got) {
      if (want != got)
        faults.push_back(field + ": expected " + want + ", got " + got);
    };
    if (faults.empty()) {
      expect("row", inst.row, rep.row);
      expect("case", inst.case_label, rep.case_label);
      std::ostringstream want_w, got_w;
      for (std::size_t i = 0; i < inst.weights.size(); ++i)
        want_w << (i ? "," : "") << inst.weights[i];
      for (std::size_t i = 0; i < rep.weights.entries.size(); ++i)
        got_w << (i ? "," : "") << rep.weights.entries[i];
      expect("weights", want_w.str(), got_w.str());
      expect("embedding dimension", std::to_string(inst.weights.size()),
             std::to_string(rep.embedding_dim));
      std::string want_c, got_c;
      for (const auto& v : inst.curve_ideal)
        want_c += (want_c.empty() ? "" : ",") + v;
      for (const auto& v : rep.curve_ideal)
        got_c += (got_c.empty() ? "" : ",") + v;
      expect("curve ideal", want_c, got_c);
      expect("singularities", inst.singularities,
             singularity_column(rep.singularities));
      expect("elephant", inst.elephant, rep.elephant);
      if (!rep.admissible)
        faults.push_back("group: expected admissible, got rejection (" +
                         rep.group_note + ")");
    }
    if (faults.empty()) {
      ++passed;
      std::cout << "row " << inst.id << ": pass";
      for (const auto& d : rep.diagnostics)
        if (d.find("bound") != std::string::npos ||
            d.find("truncation") != std::string::npos)
          std::cout << " [" << d << "]";
      std::cout << "\n";
    } else {
      std::cout << "row " << inst.id << ": FAIL\n";
      for (const auto& f : faults) std::cout << "  " << f << "\n";
    }
  }
  std::cout << passed << "/" << picked.size() << " rows passed\n";
  return passed == picked.size() ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisorial contractions to smooth curves"};
  app.require_subcommand(1);

  int truncation = kDefaultTruncationOrder;
  std::string format = "text";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--truncation", truncation,
                    "series truncation order (>= 6)")
        ->check(CLI::Range(kMinTruncationOrder, 10000));
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  std::string f_text, curve_text = "y,z,u", group_text, w_text, chart;
  std::string rows, corpus_path = CTC_DEFAULT_CORPUS;

  CLI::App* c_classify =
      app.add_subcommand("classify", "classify a contraction germ");
  c_classify->add_option("--f", f_text, "equation of the germ")
      ->required();
  c_classify->add_option("--curve", curve_text,
                         "curve ideal generators, default y,z,u");
  c_classify->add_option("--group", group_text,
                         "cyclic action, e.g. r=2;1,1,1,0");
  add_common(c_classify);

  CLI::App* c_blowup =
      app.add_subcommand("blowup", "inspect one weighted blow-up chart");
  c_blowup->add_option("--f", f_text, "equation to lift")->required();
  c_blowup->add_option("--w", w_text, "blow-up weights")->required();
  c_blowup->add_option("--chart", chart, "chart variable")->required();
  c_blowup->add_option("--group", group_text,
                       "ambient cyclic action, e.g. r=2;1,1,1,0");
  add_common(c_blowup);

  CLI::App* c_verify =
      app.add_subcommand("verify-tables", "run the verification corpus");
  c_verify->add_option("--rows", rows, "row selection, e.g. 1-7 or 3,Q1");
  c_verify->add_option("--corpus", corpus_path, "corpus data file");
  add_common(c_verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_classify->parsed())
      return run_classify(f_text, curve_text, group_text, truncation,
                          format);
    if (c_blowup->parsed())
      return run_blowup(f_text, w_text, chart, group_text, format);
    return run_verify(corpus_path, rows, truncation);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
