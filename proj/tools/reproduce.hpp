#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dsbent::repro {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool match = false;
};

/// Canned verification cases; every check compares a computed value against
/// its published target. Case names: ex61, ex62, thm52, lemma51.
std::vector<Check> run_case(const std::string& name);

bool all_match(const std::vector<Check>& checks);

}  // namespace dsbent::repro
