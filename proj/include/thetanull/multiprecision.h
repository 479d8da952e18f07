#ifndef THETANULL_MULTIPRECISION_H_
#define THETANULL_MULTIPRECISION_H_

#include <complex>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "thetanull/numerics.h"

namespace thetanull {

using Float113 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<
        113, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;
using Complex113 = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::cpp_bin_float<
            113, boost::multiprecision::digit_base_2>>,
    boost::multiprecision::et_off>;

template <typename Real>
struct ComplexOf;
template <>
struct ComplexOf<double> {
  using type = std::complex<double>;
};
template <>
struct ComplexOf<Float113> {
  using type = Complex113;
};

template <typename Real>
using ComplexT = typename ComplexOf<Real>::type;
template <typename Real>
using CMatrixT = Eigen::Matrix<ComplexT<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVectorT = Eigen::Matrix<ComplexT<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RMatrixT = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
inline Real Pi() {
  if constexpr (std::is_same_v<Real, double>) {
    return 3.14159265358979323846264338327950288;
  } else {
    return boost::math::constants::pi<Real>();
  }
}

template <typename Real>
inline ComplexT<Real> MakeComplex(const Real& re, const Real& im) {
  return ComplexT<Real>(re, im);
}

template <typename Real>
inline ComplexT<Real> FromDouble(const Complex& z) {
  return ComplexT<Real>(Real(z.real()), Real(z.imag()));
}

template <typename Real>
inline Complex ToDouble(const ComplexT<Real>& z) {
  return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

template <typename Real>
inline double AbsD(const ComplexT<Real>& z) {
  return static_cast<double>(abs(z));
}

template <typename Real>
CMatrixT<Real> MatrixFromDouble(const CMatrix& m) {
  CMatrixT<Real> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = FromDouble<Real>(m(i, j));
  }
  return r;
}

template <typename Real>
CMatrix MatrixToDouble(const CMatrixT<Real>& m) {
  CMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = ToDouble<Real>(m(i, j));
  }
  return r;
}

}  // namespace thetanull

#endif  // THETANULL_MULTIPRECISION_H_
