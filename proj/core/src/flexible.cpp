#include "packshift/flexible.hpp"

#include "packshift/binpack.hpp"
#include "packshift/shelf.hpp"

namespace packshift {

std::unique_ptr<FlexibleAlgorithm> make_online(Problem problem, int d) {
  switch (problem) {
    case Problem::strip2d:
      if (d != 2) throw InputError("strip2d requires d == 2");
      return std::make_unique<ShelfStripPacker>();
    case Problem::strip_d:
      return std::make_unique<HyperrectStripPacker>(d);
    case Problem::strip_hypercube:
      return std::make_unique<HypercubeStripPacker>(d);
    case Problem::bin2d:
      if (d != 2) throw InputError("bin2d requires d == 2");
      return std::make_unique<HyperrectBinPacker>(2);
    case Problem::bin_d:
      return std::make_unique<HyperrectBinPacker>(d);
    case Problem::bin_hypercube:
      return std::make_unique<HypercubeBinPacker>(d);
    case Problem::vector_pack:
      return std::make_unique<VectorPacker>(d);
  }
  throw InputError("unknown problem");
}

std::unique_ptr<FlexibleAlgorithm> make_online(Problem problem, int d,
                                               const std::string& selector) {
  if (selector.empty() || selector == "default") return make_online(problem, d);
  auto made = make_online(problem, d);
  if (made->name() != selector) {
    throw InputError("algorithm '" + selector + "' does not handle problem '" +
                     std::string(problem_name(problem)) + "' (expected '" +
                     made->name() + "')");
  }
  return made;
}

}  // namespace packshift
