#include "thetanull/symplectic.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace thetanull {
namespace {

long long Form(const IVector& u, const IMatrix& e, const IVector& v) {
  return u.dot(e * v);
}

std::vector<IVector> AllNonzero(int n, long long p) {
  std::vector<IVector> out;
  IVector v = IVector::Zero(n);
  while (true) {
    int k = n - 1;
    while (k >= 0 && v(k) == p - 1) {
      v(k) = 0;
      --k;
    }
    if (k < 0) break;
    ++v(k);
    out.push_back(v);
  }
  return out;
}

long long FormJ(const IVector& x, const IVector& y) {
  const int g = static_cast<int>(x.size() / 2);
  long long s = 0;
  for (int i = 0; i < g; ++i) s += x(i) * y(g + i) - x(g + i) * y(i);
  return s;
}

IVector ApplyTransvection(const IVector& x, const IVector& v, long long k,
                          long long p) {
  return ModVector(x + k * FormJ(x, v) * v, p);
}

}  // namespace

IMatrix ModMatrix(const IMatrix& m, long long p) {
  return m.unaryExpr([p](long long x) { return PosMod(x, p); });
}

IVector ModVector(const IVector& v, long long p) {
  return v.unaryExpr([p](long long x) { return PosMod(x, p); });
}

IMatrix SymplecticReduce(const IMatrix& form) {
  const int n = static_cast<int>(form.rows());
  THETANULL_CHECK(n == form.cols() && n % 2 == 0,
                  "symplectic reduction needs an even square form");
  std::vector<IVector> vecs;
  for (int i = 0; i < n; ++i) vecs.push_back(IVector::Unit(n, i));
  std::vector<IVector> a_rows, b_rows;
  while (!vecs.empty()) {
    IVector v = vecs.front();
    std::vector<IVector> rest(vecs.begin() + 1, vecs.end());
    std::vector<int> nz;
    while (true) {
      nz.clear();
      for (int k = 0; k < static_cast<int>(rest.size()); ++k) {
        if (Form(v, form, rest[k]) != 0) nz.push_back(k);
      }
      if (nz.size() <= 1) break;
      std::stable_sort(nz.begin(), nz.end(), [&](int x, int y) {
        return std::llabs(Form(v, form, rest[x])) <
               std::llabs(Form(v, form, rest[y]));
      });
      const long long p0 = Form(v, form, rest[nz[0]]);
      for (size_t t = 1; t < nz.size(); ++t) {
        const long long q = Form(v, form, rest[nz[t]]);
        // Floor division keeps the remainder in [0, |p0|).
        long long d = q / p0;
        if ((q % p0 != 0) && ((q < 0) != (p0 < 0))) --d;
        rest[nz[t]] -= d * rest[nz[0]];
      }
    }
    if (nz.size() != 1) throw NumericalError("intersection form is degenerate");
    IVector w = rest[nz[0]];
    const long long p = Form(v, form, w);
    if (std::llabs(p) != 1) {
      throw NumericalError("intersection form is not unimodular");
    }
    if (p == -1) w = -w;
    a_rows.push_back(v);
    b_rows.push_back(w);
    std::vector<IVector> next;
    for (int k = 0; k < static_cast<int>(rest.size()); ++k) {
      if (k == nz[0]) continue;
      const IVector& u = rest[k];
      next.push_back(u - Form(u, form, w) * v + Form(u, form, v) * w);
    }
    vecs = std::move(next);
  }
  const int g = n / 2;
  IMatrix out(n, n);
  for (int i = 0; i < g; ++i) {
    out.row(i) = a_rows[i].transpose();
    out.row(g + i) = b_rows[i].transpose();
  }
  return out;
}

bool IsSymplectic(const IMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  const IMatrix j = StandardSymplecticForm(static_cast<int>(m.rows() / 2));
  return m.transpose() * j * m == j;
}

IMatrix Transvection(const IVector& v, long long k) {
  const int n = static_cast<int>(v.size());
  IMatrix t(n, n);
  for (int c = 0; c < n; ++c) {
    const IVector e = IVector::Unit(n, c);
    t.col(c) = e + k * FormJ(e, v) * v;
  }
  return t;
}

IMatrix SymplecticInverse(const IMatrix& u) {
  const IMatrix j = StandardSymplecticForm(static_cast<int>(u.rows() / 2));
  return -(j * u.transpose() * j);
}

IMatrix SolveMapMod2(const IMatrix& x, const IMatrix& y) {
  const int n = static_cast<int>(x.rows());
  IMatrix aug(n, 2 * n);
  aug << ModMatrix(x, 2), IMatrix::Identity(n, n);
  int r = 0;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i) {
      if (aug(i, c) % 2) {
        piv = i;
        break;
      }
    }
    if (piv < 0) throw NumericalError("matrix is singular mod 2");
    aug.row(r).swap(aug.row(piv));
    for (int i = 0; i < n; ++i) {
      if (i != r && aug(i, c) % 2) aug.row(i) = ModVector((aug.row(i) + aug.row(r)).transpose(), 2).transpose();
    }
    ++r;
  }
  const IMatrix xinv = aug.rightCols(n);
  return ModMatrix(y * xinv, 2);
}

std::vector<IVector> DecomposeMod2(const IMatrix& l) {
  const int n = static_cast<int>(l.rows());
  const int g = n / 2;
  const std::vector<IVector> all = AllNonzero(n, 2);
  IMatrix cur = ModMatrix(l, 2);
  std::vector<IVector> seq;
  std::vector<IVector> fixed;
  auto ok = [&](const IVector& v, const std::vector<IVector>& fix) {
    for (const auto& f : fix) {
      if (PosMod(FormJ(f, v), 2) != 0) return false;
    }
    return true;
  };
  auto route = [&](const IVector& x, const IVector& target,
                   const std::vector<IVector>& fix) {
    std::vector<IVector> path;
    if (ModVector(x, 2) == ModVector(target, 2)) return path;
    for (const auto& v : all) {
      if (ok(v, fix) && ApplyTransvection(x, v, 1, 2) == target) {
        path.push_back(v);
        return path;
      }
    }
    for (const auto& v1 : all) {
      if (!ok(v1, fix)) continue;
      const IVector x1 = ApplyTransvection(x, v1, 1, 2);
      for (const auto& v2 : all) {
        if (ok(v2, fix) && ApplyTransvection(x1, v2, 1, 2) == target) {
          path.push_back(v1);
          path.push_back(v2);
          return path;
        }
      }
    }
    throw NumericalError("no transvection route mod 2");
  };
  auto apply = [&](const IVector& v) {
    cur = ModMatrix(Transvection(v, 1) * cur, 2);
    seq.push_back(v);
  };
  for (int i = 0; i < g; ++i) {
    const IVector e = IVector::Unit(n, i);
    const IVector f = IVector::Unit(n, g + i);
    for (const auto& v : route(cur.col(i), e, fixed)) apply(v);
    std::vector<IVector> fix2 = fixed;
    fix2.push_back(e);
    for (const auto& v : route(cur.col(g + i), f, fix2)) apply(v);
    fixed.push_back(e);
    fixed.push_back(f);
  }
  if (cur != IMatrix::Identity(n, n)) {
    throw NumericalError("mod-2 symplectic decomposition failed");
  }
  return seq;
}

std::vector<F3Step> RouteMod3(const IVector& x, const IVector& y,
                              const std::vector<IVector>& fixed) {
  const int n = static_cast<int>(x.size());
  const std::vector<IVector> all = AllNonzero(n, 3);
  const IVector xm = ModVector(x, 3), ym = ModVector(y, 3);
  std::vector<F3Step> path;
  if (xm == ym) return path;
  auto ok = [&](const IVector& v) {
    for (const auto& f : fixed) {
      if (PosMod(FormJ(f, v), 3) != 0) return false;
    }
    return true;
  };
  for (const auto& v : all) {
    if (!ok(v)) continue;
    for (int l = 1; l <= 2; ++l) {
      if (ApplyTransvection(xm, v, l, 3) == ym) return {{v, l}};
    }
  }
  for (const auto& v : all) {
    if (!ok(v)) continue;
    for (int l = 1; l <= 2; ++l) {
      const IVector x1 = ApplyTransvection(xm, v, l, 3);
      for (const auto& v2 : all) {
        if (!ok(v2)) continue;
        for (int l2 = 1; l2 <= 2; ++l2) {
          if (ApplyTransvection(x1, v2, l2, 3) == ym) return {{v, l}, {v2, l2}};
        }
      }
    }
  }
  throw NumericalError("no transvection route mod 3");
}

}  // namespace thetanull
