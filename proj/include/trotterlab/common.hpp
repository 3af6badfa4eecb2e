#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace trotterlab {

using cplx = std::complex<double>;
using dvec = std::vector<double>;
using cvec = std::vector<cplx>;

// Raised when an iterative numeric procedure fails to converge or a
// positivity/conditioning assumption is violated. Carries enough context
// (sector, size) to identify the offending operator.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

inline double sq(double x) { return x * x; }

}  // namespace trotterlab
