#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricchi/fan.hpp"

namespace toricchi {

/// A named example fan shipped with the library. `file` is the basename of
/// its copy under data/fans/.
struct BundledFan {
  std::string name;
  std::string file;
  std::string description;
  Fan fan;
};

/// ℙ², ℙ¹×ℙ¹, the Hirzebruch surfaces ℋ₁, ℋ₂, ℋ₃, the weighted plane
/// ℙ(1,1,2), the fake projective plane ℙ²/(ℤ/3), and ℙ³.
const std::vector<BundledFan>& bundled_fans();

/// Looks up by name ("hirzebruch2") or file basename ("hirzebruch2.fan").
std::optional<BundledFan> find_bundled_fan(const std::string& key);

/// Throws std::out_of_range for unknown names.
const Fan& bundled_fan(const std::string& name);

}  // namespace toricchi
