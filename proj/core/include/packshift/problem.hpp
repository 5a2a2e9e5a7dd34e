#pragma once

#include <string>

#include "packshift/item.hpp"
#include "packshift/solution.hpp"

namespace packshift {

// The seven supported settings. Strip problems minimize packing height over a
// unit cross-section; bin problems minimize the number of unit bins.
enum class Problem {
  strip2d,
  strip_d,
  strip_hypercube,
  bin2d,
  bin_d,
  bin_hypercube,
  vector_pack,
};

const char* problem_name(Problem p);
Problem parse_problem(const std::string& name);

inline bool is_strip(Problem p) {
  return p == Problem::strip2d || p == Problem::strip_d || p == Problem::strip_hypercube;
}
inline bool is_geometric(Problem p) { return p != Problem::vector_pack; }

inline CostDomain cost_domain(Problem p) {
  return is_strip(p) ? CostDomain::strip : CostDomain::bins;
}

// Item kind each problem packs ("rect2d", "hyperrect", "hypercube", "vector").
const char* expected_kind(Problem p);

// Throws InputError if the item does not belong to this problem instance.
void check_item_for_problem(const ItemSpec& item, Problem p, int d);

}  // namespace packshift
