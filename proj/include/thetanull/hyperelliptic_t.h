#ifndef THETANULL_HYPERELLIPTIC_T_H_
#define THETANULL_HYPERELLIPTIC_T_H_

#include <vector>

#include "thetanull/characteristics.h"
#include "thetanull/hyperelliptic.h"
#include "thetanull/multiprecision.h"

namespace thetanull {

// Thetanulls at the calibrated tau without rounding to double; explicitly
// instantiated for double and Float113.
template <typename Real>
std::vector<ComplexT<Real>> CurveThetanullsT(
    const HyperellipticCurve& curve, const std::vector<Characteristic>& chars,
    double quad_tol, double theta_tol);

}  // namespace thetanull

#endif  // THETANULL_HYPERELLIPTIC_T_H_
