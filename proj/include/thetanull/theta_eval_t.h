#ifndef THETANULL_THETA_EVAL_T_H_
#define THETANULL_THETA_EVAL_T_H_

#include "thetanull/characteristics.h"
#include "thetanull/multiprecision.h"

namespace thetanull {

// Precision-generic theta with characteristic; explicitly instantiated for
// double and Float113.
template <typename Real>
ComplexT<Real> ThetaCharT(const Characteristic& c, const CVectorT<Real>& z,
                          const CMatrixT<Real>& tau, double tol);

// Same series with unreduced numerators a = top / level, b = bottom / level,
// so that integer shifts of the bottom row contribute their phase.
template <typename Real>
ComplexT<Real> ThetaRationalT(const std::vector<long long>& top,
                              const std::vector<long long>& bottom, int level,
                              const CVectorT<Real>& z, const CMatrixT<Real>& tau,
                              double tol);

template <typename Real>
std::vector<ComplexT<Real>> ThetanullsT(const std::vector<Characteristic>& chars,
                                        const CMatrixT<Real>& tau, double tol);

// Smallest eigenvalue of Im(tau), evaluated in double.
template <typename Real>
double MinEigenImagT(const CMatrixT<Real>& tau);

}  // namespace thetanull

#endif  // THETANULL_THETA_EVAL_T_H_
