#include "packshift/item.hpp"

namespace packshift {

namespace {

void check_side(const ItemSpec& item, const Rational& s) {
  if (s <= Rational(0) || s > Rational(1)) {
    throw InputError("item '" + item.id + "': side " + s.str() + " outside (0,1]");
  }
}

}  // namespace

void validate_item(const ItemSpec& item) {
  if (item.id.empty()) throw InputError("item with empty id");
  std::visit(
      [&](const auto& shape) {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Rect2D>) {
          check_side(item, shape.w);
          check_side(item, shape.h);
        } else if constexpr (std::is_same_v<T, Hyperrect>) {
          if (shape.sides.empty()) throw InputError("item '" + item.id + "': no sides");
          for (const auto& s : shape.sides) check_side(item, s);
        } else if constexpr (std::is_same_v<T, Hypercube>) {
          if (shape.dim < 1) throw InputError("item '" + item.id + "': dimension < 1");
          check_side(item, shape.side);
        } else {
          if (shape.components.empty()) {
            throw InputError("item '" + item.id + "': no components");
          }
          for (const auto& c : shape.components) {
            if (c < Rational(0) || c > Rational(1)) {
              throw InputError("item '" + item.id + "': component " + c.str() +
                               " outside [0,1]");
            }
          }
        }
      },
      item.shape);
}

int item_dimension(const ItemSpec& item) {
  return std::visit(
      [](const auto& shape) -> int {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Rect2D>) {
          return 2;
        } else if constexpr (std::is_same_v<T, Hyperrect>) {
          return static_cast<int>(shape.sides.size());
        } else if constexpr (std::is_same_v<T, Hypercube>) {
          return shape.dim;
        } else {
          return static_cast<int>(shape.components.size());
        }
      },
      item.shape);
}

const char* item_kind_name(const ItemSpec& item) {
  return std::visit(
      [](const auto& shape) -> const char* {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Rect2D>) {
          return "rect2d";
        } else if constexpr (std::is_same_v<T, Hyperrect>) {
          return "hyperrect";
        } else if constexpr (std::is_same_v<T, Hypercube>) {
          return "hypercube";
        } else {
          return "vector";
        }
      },
      item.shape);
}

Rational item_size(const ItemSpec& item) {
  return std::visit(
      [](const auto& shape) -> Rational {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Rect2D>) {
          return shape.w * shape.h;
        } else if constexpr (std::is_same_v<T, Hyperrect>) {
          Rational v(1);
          for (const auto& s : shape.sides) v *= s;
          return v;
        } else if constexpr (std::is_same_v<T, Hypercube>) {
          Rational v(1);
          for (int i = 0; i < shape.dim; ++i) v *= shape.side;
          return v;
        } else {
          Rational sum(0);
          for (const auto& c : shape.components) sum += c;
          return sum / Rational(static_cast<std::int64_t>(shape.components.size()));
        }
      },
      item.shape);
}

Rational total_volume(const std::vector<ItemSpec>& items) {
  Rational v(0);
  for (const auto& it : items) v += item_size(it);
  return v;
}

std::optional<std::vector<Rational>> item_box_sides(const ItemSpec& item) {
  return std::visit(
      [](const auto& shape) -> std::optional<std::vector<Rational>> {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Rect2D>) {
          return std::vector<Rational>{shape.w, shape.h};
        } else if constexpr (std::is_same_v<T, Hyperrect>) {
          return shape.sides;
        } else if constexpr (std::is_same_v<T, Hypercube>) {
          return std::vector<Rational>(shape.dim, shape.side);
        } else {
          return std::nullopt;
        }
      },
      item.shape);
}

}  // namespace packshift
