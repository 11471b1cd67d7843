#include "corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ctc::corpus {
namespace {

std::string trim(const std::string& s) {
  const auto lo = s.find_first_not_of(" \t\r\n");
  if (lo == std::string::npos) return "";
  const auto hi = s.find_last_not_of(" \t\r\n");
  return s.substr(lo, hi - lo + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(trim(field));
  return out;
}

std::vector<long> parse_weights(const std::string& text) {
  std::vector<long> out;
  for (const auto& p : split(text, ',')) out.push_back(std::stol(p));
  return out;
}

}  // namespace

std::vector<Instance> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::vector<Instance> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    const auto fields = split(body, '|');
    if (fields.size() != 9)
      throw std::runtime_error("corpus line " + std::to_string(lineno) +
                               ": expected 9 fields, got " +
                               std::to_string(fields.size()));
    Instance inst;
    inst.id = fields[0];
    inst.equation = fields[1];
    inst.group = fields[2] == "-" ? "" : fields[2];
    inst.row = fields[3];
    inst.case_label = fields[4];
    inst.weights = parse_weights(fields[5]);
    inst.curve_ideal = split(fields[6], ',');
    inst.singularities = fields[7];
    inst.elephant = fields[8];
    out.push_back(std::move(inst));
  }
  return out;
}

namespace {

// Expands one selector atom: a bare id or a numeric range lo-hi.
void expand(const std::string& atom, const std::vector<Instance>& all,
            std::vector<bool>& keep) {
  const auto dash = atom.find('-');
  if (dash != std::string::npos && dash > 0) {
    const long lo = std::stol(atom.substr(0, dash));
    const long hi = std::stol(atom.substr(dash + 1));
    for (std::size_t i = 0; i < all.size(); ++i) {
      try {
        const long v = std::stol(all[i].id);
        if (v >= lo && v <= hi) keep[i] = true;
      } catch (const std::exception&) {
      }
    }
    return;
  }
  bool found = false;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].id == atom) {
      keep[i] = true;
      found = true;
    }
  if (!found) throw std::runtime_error("unknown corpus id: " + atom);
}

}  // namespace

std::vector<Instance> filter(const std::vector<Instance>& all,
                             const std::string& selector) {
  const std::string body = trim(selector);
  if (body.empty()) return all;
  std::vector<bool> keep(all.size(), false);
  for (const auto& atom : split(body, ',')) expand(atom, all, keep);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (keep[i]) out.push_back(all[i]);
  return out;
}

}  // namespace ctc::corpus
