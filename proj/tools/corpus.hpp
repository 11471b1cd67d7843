#pragma once

#include <string>
#include <vector>

namespace ctc::corpus {

// One verification instance: the input equation with its group, plus the
// expected report fields it must reproduce.
struct Instance {
  std::string id;
  std::string equation;
  std::string group;  // empty for the trivial group
  std::string row;
  std::string case_label;
  std::vector<long> weights;
  std::vector<std::string> curve_ideal;
  std::string singularities;
  std::string elephant;
};

// Parses the pipe-separated corpus file. Lines starting with '#' and blank
// lines are skipped. Throws std::runtime_error on malformed records.
std::vector<Instance> load(const std::string& path);

// Subset selection by id list / ranges, e.g. "1-7", "1,3,Q1", "8-12,Q2".
// An empty selector keeps everything.
std::vector<Instance> filter(const std::vector<Instance>& all,
                             const std::string& selector);

}  // namespace ctc::corpus
