#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spincalc/pic/classes.hpp"

namespace spincalc::pic {

enum class Auxiliary { BN, D12 };

const char* auxiliary_name(Auxiliary aux);

/// Outcome of checking K - mu*lambda - (x Z_g + y pi^*D) >= 0 on every
/// boundary generator.
struct CertificateReport {
  int g = 0;
  Auxiliary aux = Auxiliary::BN;
  Scalar x;   // weight on Z_g
  Scalar y;   // weight on the pulled-back auxiliary divisor
  Scalar mu;
  DivisorClass combination;
  std::vector<std::pair<std::string, Scalar>> slacks;
  std::vector<std::string> assumed_zero_pairings;
  std::vector<std::string> assumptions;
  bool pass = false;
};

/// BN: fixed weights 2/(g-2) and 3(3g-10)/((g-2)(g+1)), g >= 13.
/// D12: weights solved from the alpha_0, beta_0 coefficients, g = 12 only.
CertificateReport certificate(int g, Auxiliary aux);

}  // namespace spincalc::pic
