#pragma once

#include <string>
#include <vector>

#include "spincalc/pic/classes.hpp"

namespace spincalc::pic {

struct ZgSolution {
  DivisorClass cls;
  std::size_t rank = 0;
  std::size_t unknowns = 0;
  /// The test-curve system left some coefficients free; cls is then the
  /// closed form.
  bool degenerate = false;
  std::vector<std::string> undetermined;
  bool matches_closed_form = false;
  std::vector<std::string> notes;
};

/// Reconstructs the Z_g class from the test-curve pairings F_i, G_i, F0,
/// G0, H0, the Porteous lambda coefficient and the alpha_1 coefficient.
ZgSolution solve_zg(int g);

}  // namespace spincalc::pic
