#pragma once

#include <string>
#include <utility>
#include <vector>

namespace symq {

// Results of a verification campaign. Facts are stable key/value pairs;
// violations carry enough detail to replay the failing case.
struct Report {
  std::string name;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool pass() const { return violations.empty(); }
  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
};

}  // namespace symq
