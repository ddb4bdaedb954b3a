#include "posetlogic/subset.hpp"

namespace posetlogic {

std::string to_string(SubsetMask s, const std::vector<std::string>* labels) {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ',';
    first = false;
    if (labels != nullptr && x < static_cast<int>(labels->size())) {
      out += (*labels)[x];
    } else {
      out += std::to_string(x);
    }
  }
  out += '}';
  return out;
}

}  // namespace posetlogic
