#pragma once

#include <string>
#include <vector>

namespace hochglue {

//! An algebra file shipped with the library together with the arrows it is glued along.
struct BuiltinExample {
  std::string name;
  std::string description;
  std::string alpha;
  std::string beta;
  std::string text;
};

const std::vector<BuiltinExample>& builtin_examples();
//! Throws Error for an unknown name.
const BuiltinExample& builtin_example(const std::string& name);

}  // namespace hochglue
