#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "packshift/rational.hpp"

namespace packshift {

// Malformed traces, configs, or solutions. The CLI maps this to exit code 3.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct Rect2D {
  Rational w;
  Rational h;
};

struct Hyperrect {
  std::vector<Rational> sides;
};

struct Hypercube {
  int dim = 0;
  Rational side;
};

// Load vector for vector packing; no spatial extent.
struct VectorLoad {
  std::vector<Rational> components;
};

using ItemShape = std::variant<Rect2D, Hyperrect, Hypercube, VectorLoad>;

struct ItemSpec {
  std::string id;
  ItemShape shape;
};

// Throws InputError unless every side is in (0,1] (components in [0,1] for
// vector loads) and the dimension is positive.
void validate_item(const ItemSpec& item);

int item_dimension(const ItemSpec& item);
const char* item_kind_name(const ItemSpec& item);

// Scale-free size: product of sides for boxes, s^d for cubes, and the
// component average for load vectors. Always in [0,1] for valid items.
Rational item_size(const ItemSpec& item);

Rational total_volume(const std::vector<ItemSpec>& items);

// Spatial extent per axis; nullopt for vector loads.
std::optional<std::vector<Rational>> item_box_sides(const ItemSpec& item);

}  // namespace packshift
