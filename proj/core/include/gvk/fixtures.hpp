#pragma once

#include <span>
#include <string_view>

namespace gvk {

/// A built-in problem file. Sources are in canonical printed form.
struct Fixture {
  std::string_view name;
  std::string_view description;
  std::string_view source;
};

std::span<const Fixture> fixtures();

/// nullptr when no fixture has that name.
const Fixture* find_fixture(std::string_view name);

}  // namespace gvk
