#pragma once

#include <functional>
#include <string>
#include <vector>

#include "meancert/bigfloat.hpp"
#include "meancert/interval.hpp"
#include "meancert/quadext.hpp"

namespace meancert {

// A sharp constant together with its defining closed form.  Values are
// always recomputed from the closed form at the requested precision; the
// decimal strings in tests are expectations, never the source of truth.
struct SharpConstant {
  std::string name;
  std::string closed_form;
  std::string source;
  BigFloat value;
};

// L = ln(1 + sqrt(2)) = arcsinh(1).
BigFloat log1p_sqrt2(long precision_bits);
CertInterval log1p_sqrt2_enclosure(long precision_bits);

// Sharp lower weight: (1/2)*(1 + sqrt(1/L^2 - 1)).
BigFloat lambda_sharp(long precision_bits);
CertInterval lambda_enclosure(long precision_bits);

// Sharp upper weight: (3 + sqrt(3))/6, the root of 6p^2 - 6p + 1 in (1/2, 1).
BigFloat mu_sharp(long precision_bits);
CertInterval mu_enclosure(long precision_bits);
QuadExt3 mu_exact();

// The six sharp constants of the three quoted prior double inequalities,
// evaluated at the requested precision.
std::vector<SharpConstant> prior_constants(long precision_bits);

}  // namespace meancert
