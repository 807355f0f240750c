#include "toricchi/index_set.hpp"

#include <algorithm>

namespace toricchi {

bool support_less(IndexSet a, IndexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::string to_one_based_string(IndexSet s, const char* separator) {
  std::string out;
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += separator;
    out += std::to_string(e + 1);
    first = false;
  }
  return out;
}

}  // namespace toricchi
