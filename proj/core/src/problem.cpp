#include "packshift/problem.hpp"

#include <cstring>

namespace packshift {

const char* problem_name(Problem p) {
  switch (p) {
    case Problem::strip2d: return "strip2d";
    case Problem::strip_d: return "strip-d";
    case Problem::strip_hypercube: return "strip-hypercube";
    case Problem::bin2d: return "bin2d";
    case Problem::bin_d: return "bin-d";
    case Problem::bin_hypercube: return "bin-hypercube";
    case Problem::vector_pack: return "vector";
  }
  return "?";
}

Problem parse_problem(const std::string& name) {
  for (Problem p : {Problem::strip2d, Problem::strip_d, Problem::strip_hypercube,
                    Problem::bin2d, Problem::bin_d, Problem::bin_hypercube,
                    Problem::vector_pack}) {
    if (name == problem_name(p)) return p;
  }
  throw InputError("unknown problem '" + name + "'");
}

const char* expected_kind(Problem p) {
  switch (p) {
    case Problem::strip2d:
    case Problem::bin2d: return "rect2d";
    case Problem::strip_d:
    case Problem::bin_d: return "hyperrect";
    case Problem::strip_hypercube:
    case Problem::bin_hypercube: return "hypercube";
    case Problem::vector_pack: return "vector";
  }
  return "?";
}

void check_item_for_problem(const ItemSpec& item, Problem p, int d) {
  validate_item(item);
  if (std::strcmp(item_kind_name(item), expected_kind(p)) != 0) {
    throw InputError("item '" + item.id + "' has kind " + item_kind_name(item) +
                     ", problem " + problem_name(p) + " expects " + expected_kind(p));
  }
  if (item_dimension(item) != d) {
    throw InputError("item '" + item.id + "' has dimension " +
                     std::to_string(item_dimension(item)) + ", expected " +
                     std::to_string(d));
  }
}

}  // namespace packshift
