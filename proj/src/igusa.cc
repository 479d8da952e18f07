#include "thetanull/igusa.h"

#include <algorithm>
#include <cmath>

namespace thetanull {
namespace {

// Binary form of degree n as coefficients of x^{n-i} y^i, i = 0..n.
template <typename F>
using Form = std::vector<F>;

template <typename F>
Form<F> DerivX(const Form<F>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 0) return {F(0)};
  Form<F> r(n);
  for (int i = 0; i < n; ++i) r[i] = f[i] * F(n - i);
  return r;
}

template <typename F>
Form<F> DerivY(const Form<F>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 0) return {F(0)};
  Form<F> r(n);
  for (int i = 0; i < n; ++i) r[i] = f[i + 1] * F(i + 1);
  return r;
}

template <typename F>
Form<F> Multiply(const Form<F>& f, const Form<F>& g) {
  Form<F> r(f.size() + g.size() - 1, F(0));
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
  }
  return r;
}

long long Factorial(int n) {
  long long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

long long Binomial(int n, int k) { return Factorial(n) / (Factorial(k) * Factorial(n - k)); }

// k-th transvectant (f, g)_k with the classical normalization.
template <typename F>
Form<F> Transvectant(const Form<F>& f, const Form<F>& g, int k) {
  const int m = static_cast<int>(f.size()) - 1;
  const int n = static_cast<int>(g.size()) - 1;
  Form<F> res(m + n - 2 * k + 1, F(0));
  for (int i = 0; i <= k; ++i) {
    Form<F> df = f, dg = g;
    for (int s = 0; s < k - i; ++s) df = DerivX(df);
    for (int s = 0; s < i; ++s) df = DerivY(df);
    for (int s = 0; s < i; ++s) dg = DerivX(dg);
    for (int s = 0; s < k - i; ++s) dg = DerivY(dg);
    const Form<F> prod = Multiply(df, dg);
    const F c = F((i % 2 ? -1 : 1) * Binomial(k, i));
    for (size_t t = 0; t < res.size(); ++t) res[t] += c * prod[t];
  }
  const F scale = F(Factorial(m - k) * Factorial(n - k)) / F(Factorial(m) * Factorial(n));
  for (auto& x : res) x *= scale;
  return res;
}

template <typename F>
F Power(const F& x, int e) {
  F r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

template <typename F>
IgusaInvariantsT<F> IgusaFromSextic(const std::vector<F>& coeffs) {
  THETANULL_CHECK(coeffs.size() == 7, "sextic needs seven coefficients");
  THETANULL_CHECK(coeffs[0] != F(0) || coeffs[1] != F(0),
                  "polynomial must have degree 5 or 6");
  const Form<F> f = coeffs;
  const Form<F> i = Transvectant(f, f, 4);
  const Form<F> delta = Transvectant(i, i, 2);
  const Form<F> y1 = Transvectant(f, i, 4);
  const Form<F> y2 = Transvectant(i, y1, 2);
  const Form<F> y3 = Transvectant(i, y2, 2);
  const F a = Transvectant(f, f, 6)[0];
  const F b = Transvectant(i, i, 4)[0];
  const F c = Transvectant(i, delta, 4)[0];
  const F d = Transvectant(y3, y1, 2)[0];
  IgusaInvariantsT<F> j;
  j.j2 = F(-120) * a;
  j.j4 = F(-720) * a * a + F(6750) * b;
  j.j6 = F(8640) * Power(a, 3) - F(108000) * a * b + F(202500) * c;
  j.j10 = F(-62208) * Power(a, 5) + F(972000) * Power(a, 3) * b +
          F(1620000) * a * a * c - F(3037500) * a * b * b -
          F(6075000) * b * c - F(4556250) * d;
  return j;
}

template <typename F>
std::vector<F> RosenhainSextic(const F& a1, const F& a2, const F& a3) {
  std::vector<F> poly = {F(1), F(0)};  // x
  for (const F& r : {F(1), a1, a2, a3}) {
    std::vector<F> next(poly.size() + 1, F(0));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= r * poly[i];
    }
    poly = next;
  }
  poly.insert(poly.begin(), F(0));
  return poly;
}

const std::vector<IgusaMonomial>& L2Locus() {
  // The J2 J4^2 J10^2 coefficient is +507384000; the exact factorization
  // through the fifteen cross-ratio factors pins the sign.
  static const std::vector<IgusaMonomial> kPoly = {
      {8748, 4, 0, 2, 1},        {507384000, 1, 2, 0, 2},
      {-19245600, 3, 1, 0, 2},   {-592272, 2, 4, 0, 1},
      {77436, 4, 3, 0, 1},       {-81, 3, 0, 4, 0},
      {-3499200, 1, 0, 3, 1},    {4743360, 1, 3, 1, 1},
      {-870912, 3, 2, 1, 1},     {3090960, 2, 1, 2, 1},
      {-78, 5, 5, 0, 0},         {-125971200000, 0, 0, 0, 3},
      {384, 0, 6, 1, 0},         {41472, 0, 5, 0, 1},
      {159, 3, 6, 0, 0},         {-236196, 5, 0, 0, 2},
      {-80, 1, 7, 0, 0},         {-47952, 1, 1, 4, 0},
      {104976000, 2, 0, 1, 2},   {-1728, 2, 5, 1, 0},
      {6048, 1, 4, 2, 0},        {-9331200, 0, 2, 2, 1},
      {12, 6, 3, 1, 0},          {29376, 2, 2, 3, 0},
      {-8910, 3, 3, 2, 0},       {-2099520000, 0, 1, 1, 2},
      {31104, 0, 0, 5, 0},       {-6912, 0, 3, 3, 0},
      {-1, 7, 4, 0, 0},          {-5832, 5, 1, 1, 1},
      {-54, 5, 2, 2, 0},         {108, 4, 1, 3, 0},
      {972, 6, 2, 0, 1},         {1332, 4, 4, 1, 0}};
  return kPoly;
}

const std::vector<IgusaMonomial>& D8Locus() {
  static const std::vector<IgusaMonomial> kPoly = {
      {1706, 2, 2, 0, 0}, {2560, 0, 3, 0, 0},   {27, 4, 1, 0, 0},
      {-81, 3, 0, 1, 0},  {-14880, 1, 1, 1, 0}, {28800, 0, 0, 2, 0}};
  return kPoly;
}

const std::vector<IgusaMonomial>& D12LocusFirst() {
  static const std::vector<IgusaMonomial> kPoly = {
      {-1, 4, 1, 0, 0}, {12, 3, 0, 1, 0},   {-52, 2, 2, 0, 0},
      {80, 0, 3, 0, 0}, {960, 1, 1, 1, 0},  {-3600, 0, 0, 2, 0}};
  return kPoly;
}

const std::vector<IgusaMonomial>& D12LocusSecond() {
  static const std::vector<IgusaMonomial> kPoly = {
      {864, 5, 0, 0, 1},     {3456000, 1, 2, 0, 1},
      {-43200, 3, 1, 0, 1},  {-2332800000, 0, 0, 0, 2},
      {-1, 6, 2, 0, 0},      {-768, 2, 4, 0, 0},
      {48, 4, 3, 0, 0},      {4096, 0, 5, 0, 0}};
  return kPoly;
}

template <typename F>
F EvaluateLocus(const std::vector<IgusaMonomial>& poly,
                const IgusaInvariantsT<F>& j) {
  F sum(0);
  for (const auto& m : poly) {
    sum += F(m.coefficient) * Power(j.j2, m.a) * Power(j.j4, m.b) *
           Power(j.j6, m.c) * Power(j.j10, m.d);
  }
  return sum;
}

double NormalizedLocusResidual(const std::vector<IgusaMonomial>& poly,
                               const IgusaInvariantsC& j) {
  double largest = 0;
  for (const auto& m : poly) {
    largest = std::max(largest, std::abs(static_cast<double>(m.coefficient)) *
                                    std::pow(std::abs(j.j2), m.a) *
                                    std::pow(std::abs(j.j4), m.b) *
                                    std::pow(std::abs(j.j6), m.c) *
                                    std::pow(std::abs(j.j10), m.d));
  }
  if (largest == 0) return 0;
  return std::abs(EvaluateLocus(poly, j)) / largest;
}

template <typename F>
std::array<F, 15> CrossRatioFactors(const F& a1, const F& a2, const F& a3) {
  return {a1 * a2 + a1 - a3 * a1 - a2,      a1 * a2 - a1 + a3 * a1 - a3 * a2,
          a1 * a2 - a1 - a3 * a1 + a3,      a1 * a2 - a2 - a3 * a2 + a3,
          a1 * a2 - a1 + a2 - a3 * a2,      a1 * a2 - a3 * a1 - a2 + a3 * a2,
          a1 * a2 - a3 * a1 - a3 * a2 + a3, a3 * a1 - a1 - a3 * a2 + a3,
          a3 * a1 + a2 - a3 - a3 * a2,      -a1 + a3 * a1 + a2 - a3,
          a1 * a2 - a1 - a2 + a3,           a1 - a2 + a3 * a2 - a3,
          a1 * a2 - a3,                     a1 - a3 * a2,
          a3 * a1 - a2};
}

IgusaInvariantsC ToComplex(const IgusaInvariants& j) {
  auto c = [](const Rational& q) { return Complex(static_cast<double>(q), 0.0); };
  return {c(j.j2), c(j.j4), c(j.j6), c(j.j10)};
}

std::string ToString(const Rational& q) { return q.str(); }

#define THETANULL_INSTANTIATE(F)                                              \
  template IgusaInvariantsT<F> IgusaFromSextic<F>(const std::vector<F>&);     \
  template std::vector<F> RosenhainSextic<F>(const F&, const F&, const F&);   \
  template F EvaluateLocus<F>(const std::vector<IgusaMonomial>&,              \
                              const IgusaInvariantsT<F>&);                    \
  template std::array<F, 15> CrossRatioFactors<F>(const F&, const F&, const F&);

THETANULL_INSTANTIATE(Rational)
THETANULL_INSTANTIATE(Complex)

}  // namespace thetanull
