#include "thetanull/genus3_hyper.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "thetanull/theta_eval.h"

namespace thetanull {
namespace {

// Each token is top bits then bottom bits.
constexpr const char* kGenus3Chars =
    "000000 101111 111000 000100 100010 110001 011100 001010 000001 100000 110110 111101 000110 010000 011011 010101 000011 001000 110111 010001 000010 011000 111110 101101 100001 000111 010100 001110 101000 111011 101010 001100 011111 000101 100011 110000 100100 110010 111001 010110 011101 001011 111100 011010 001001 010011 110101 100110 101110 100101 110011 001111 011001 010010 101001 111111 110100 111010 101100 100111 101011 001101 011110 010111";

Complex Label(int k, const std::array<Complex, 5>& a) {
  if (k <= 5) return a[k - 1];
  return k == 6 ? Complex(0.0) : Complex(1.0);
}

}  // namespace

const std::vector<Characteristic>& Genus3CharTable() {
  static const std::vector<Characteristic> kTable = [] {
    std::vector<Characteristic> out;
    std::istringstream in(kGenus3Chars);
    std::string token;
    while (in >> token) {
      std::vector<int> top, bottom;
      for (int i = 0; i < 3; ++i) {
        top.push_back(token[i] - '0');
        bottom.push_back(token[3 + i] - '0');
      }
      out.emplace_back(2, top, bottom);
    }
    return out;
  }();
  return kTable;
}

const std::vector<Thomae36Entry>& Thomae36Table() {
  static const std::vector<Thomae36Entry> kTable = {
      {1, {{1, 6}, {3, 6}, {5, 6}, {1, 3}, {1, 5}, {3, 5}, {2, 4}, {2, 7}, {4, 7}}},
      {2, {{3, 6}, {5, 6}, {3, 5}, {1, 2}, {1, 4}, {2, 4}, {3, 7}, {5, 7}}},
      {3, {{3, 6}, {4, 6}, {3, 4}, {1, 2}, {1, 5}, {2, 5}, {1, 7}, {2, 7}, {5, 7}}},
      {4, {{2, 6}, {3, 6}, {5, 6}, {2, 3}, {2, 5}, {3, 5}, {1, 4}, {1, 7}, {4, 7}}},
      {5, {{4, 6}, {5, 6}, {4, 5}, {1, 2}, {1, 3}, {2, 3}, {1, 7}, {2, 7}, {3, 7}}},
      {6, {{1, 6}, {2, 6}, {3, 4}, {3, 5}, {4, 5}, {1, 2}, {1, 7}, {2, 7}}},
      {7, {{2, 6}, {3, 6}, {4, 6}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {1, 7}, {5, 7}}},
      {8, {{2, 6}, {3, 6}, {2, 3}, {1, 4}, {1, 5}, {4, 5}, {1, 7}, {4, 7}, {5, 7}}},
      {9, {{1, 6}, {3, 6}, {1, 3}, {2, 4}, {2, 5}, {4, 5}, {1, 7}, {3, 7}}},
      {10, {{3, 6}, {5, 6}, {3, 5}, {1, 2}, {1, 4}, {2, 4}, {1, 7}, {2, 7}, {4, 7}}},
      {11, {{3, 6}, {4, 6}, {5, 6}, {3, 4}, {3, 5}, {4, 5}, {1, 2}, {1, 7}, {2, 7}}},
      {13, {{2, 6}, {4, 6}, {5, 6}, {1, 3}, {2, 4}, {2, 5}, {4, 5}, {1, 7}, {3, 7}}},
      {14, {{2, 6}, {5, 6}, {2, 5}, {1, 3}, {1, 4}, {3, 4}, {1, 7}, {3, 7}, {4, 7}}},
      {15, {{1, 6}, {5, 6}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {1, 7}, {5, 7}}},
      {16, {{1, 6}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {1, 7}}},
      {17, {{1, 6}, {4, 6}, {2, 3}, {2, 5}, {3, 5}, {1, 4}, {1, 7}, {4, 7}}},
      {18, {{2, 6}, {4, 6}, {1, 3}, {1, 5}, {3, 5}, {2, 4}, {1, 7}, {3, 7}, {5, 7}}},
      {19, {{3, 6}, {4, 6}, {1, 2}, {1, 5}, {2, 5}, {3, 4}, {3, 7}, {4, 7}}},
      {20, {{2, 6}, {1, 3}, {1, 4}, {1, 5}, {3, 4}, {3, 5}, {4, 5}, {2, 7}}},
      {21, {{1, 6}, {4, 6}, {5, 6}, {1, 4}, {1, 5}, {4, 5}, {2, 3}, {2, 7}, {3, 7}}},
      {22, {{1, 6}, {3, 6}, {4, 6}, {1, 3}, {1, 4}, {3, 4}, {2, 5}, {2, 7}, {5, 7}}},
      {23, {{1, 6}, {2, 6}, {3, 4}, {3, 5}, {4, 5}, {1, 2}, {3, 7}, {4, 7}, {5, 7}}},
      {24, {{4, 6}, {5, 6}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 7}, {5, 7}}},
      {25, {{3, 6}, {1, 2}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {4, 5}, {3, 7}}},
      {26, {{2, 6}, {4, 6}, {1, 3}, {1, 5}, {3, 5}, {2, 4}, {2, 7}, {4, 7}}},
      {27, {{1, 6}, {5, 6}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {2, 7}, {3, 7}, {4, 7}}},
      {28, {{1, 6}, {3, 6}, {1, 3}, {2, 4}, {2, 5}, {4, 5}, {2, 7}, {4, 7}, {5, 7}}},
      {29, {{1, 6}, {2, 6}, {4, 6}, {3, 5}, {1, 2}, {1, 4}, {2, 4}, {3, 7}, {5, 7}}},
      {30, {{5, 6}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {5, 7}}},
      {31, {{1, 6}, {2, 6}, {3, 6}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 7}, {5, 7}}},
      {32, {{1, 6}, {4, 6}, {2, 3}, {2, 5}, {3, 5}, {1, 4}, {2, 7}, {3, 7}, {5, 7}}},
      {33, {{2, 6}, {5, 6}, {1, 3}, {1, 4}, {3, 4}, {2, 5}, {2, 7}, {5, 7}}},
      {34, {{2, 6}, {3, 6}, {1, 4}, {1, 5}, {4, 5}, {2, 3}, {2, 7}, {3, 7}}},
      {35, {{4, 6}, {1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 5}, {4, 7}}},
      {36, {{1, 6}, {2, 6}, {5, 6}, {1, 2}, {1, 5}, {2, 5}, {3, 4}, {3, 7}, {4, 7}}},
  };
  return kTable;
}

std::vector<int> Thomae36Partition(const Thomae36Entry& entry) {
  // Points 1..7 joined by a factor lie in the same part. The part with
  // infinity has three finite points, the other four.
  std::vector<int> parent(8);
  for (int i = 0; i < 8; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, j] : entry.factors) parent[find(i)] = find(j);
  // The factor (6, 7) = -1 may be omitted; merge leftover points.
  std::vector<std::vector<int>> groups(8);
  for (int k = 1; k <= 7; ++k) groups[find(k)].push_back(k);
  std::vector<std::vector<int>> parts;
  for (auto& g : groups) {
    if (!g.empty()) parts.push_back(g);
  }
  if (parts.size() == 3) {
    std::sort(parts.begin(), parts.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });
    parts[0].insert(parts[0].end(), parts[1].begin(), parts[1].end());
    parts.erase(parts.begin() + 1);
  }
  THETANULL_CHECK(parts.size() == 2, "table entry is not a partition");
  for (auto& p : parts) {
    if (p.size() == 4) {
      std::sort(p.begin(), p.end());
      return p;
    }
  }
  throw ValidationError("table entry has no part of size four");
}

Complex Thomae36Product(const Thomae36Entry& entry, const std::array<Complex, 5>& a) {
  Complex prod = 1.0;
  for (const auto& [i, j] : entry.factors) prod *= Label(i, a) - Label(j, a);
  return prod;
}

Genus3Thetas Genus3Thetas::FromTau(const CMatrix& tau, double tol) {
  THETANULL_CHECK(tau.rows() == 3 && tau.cols() == 3, "tau must be 3x3");
  const auto& table = Genus3CharTable();
  const std::vector<Characteristic> even(table.begin(), table.begin() + 36);
  const std::vector<Complex> v = Thetanulls(even, tau, tol);
  Genus3Thetas t;
  std::copy(v.begin(), v.end(), t.values.begin());
  return t;
}

std::vector<double> Thomae36RatioResiduals(const HyperellipticCurve& curve,
                                           const Genus3Thetas& t) {
  THETANULL_CHECK(curve.genus == 3 && curve.ordering == BranchOrdering::kRosenhainGenus3,
                  "expected a genus-3 curve in the Rosenhain ordering");
  std::array<Complex, 5> a;
  std::copy(curve.branch_points.begin(), curve.branch_points.begin() + 5, a.begin());
  const auto& table = Thomae36Table();
  const Complex ref_theta = t(table[0].theta);
  if (std::abs(ref_theta) < 1e-12) throw NumericalError("reference thetanull vanishes");
  const Complex ref_prod = Thomae36Product(table[0], a);
  std::vector<double> out;
  for (const auto& entry : table) {
    const Complex lhs = std::pow(t(entry.theta) / ref_theta, 8);
    const Complex q = Thomae36Product(entry, a) / ref_prod;
    const Complex rhs = q * q;
    out.push_back(std::abs(lhs - rhs) / std::abs(rhs));
  }
  return out;
}

std::array<Complex, 5> BranchFromThetasG3(const Genus3Thetas& t) {
  auto s = [&](int i) { return t(i) * t(i); };
  for (int i : {34, 24, 9, 6, 15, 26}) {
    if (std::abs(t(i)) < 1e-12) throw NumericalError("vanishing denominator thetanull");
  }
  return {s(31) * s(21) / (s(34) * s(24)), s(31) * s(13) / (s(9) * s(24)),
          s(11) * s(31) / (s(24) * s(6)), s(21) * s(7) / (s(15) * s(34)),
          s(13) * s(1) / (s(26) * s(9))};
}

std::array<std::array<Complex, 3>, 5> PossibleRatios(const Genus3Thetas& t) {
  auto r = [&](int a, int b, int c, int d) {
    const Complex v = t(a) * t(a) * t(b) * t(b) / (t(c) * t(c) * t(d) * t(d));
    return v * v;
  };
  return {{{r(36, 22, 33, 19), r(31, 21, 34, 24), r(29, 1, 26, 2)},
           {r(4, 29, 2, 17), r(36, 7, 15, 19), r(31, 13, 9, 24)},
           {r(4, 22, 33, 17), r(11, 31, 24, 6), r(7, 1, 26, 15)},
           {r(11, 29, 2, 6), r(21, 7, 15, 34), r(22, 13, 9, 33)},
           {r(4, 21, 34, 17), r(11, 36, 19, 6), r(13, 1, 26, 9)}}};
}

double PossibleRatiosSpread(const Genus3Thetas& t) {
  double worst = 0;
  for (const auto& row : PossibleRatios(t)) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        worst = std::max(worst, std::abs(row[i] - row[j]) /
                                    std::max(std::abs(row[i]), std::abs(row[j])));
      }
    }
  }
  return worst;
}

std::vector<int> RecoveryThetaIndices() {
  return {1, 6, 7, 9, 11, 13, 15, 21, 24, 26, 31, 34};
}

std::vector<int> RemarkGoepelIndices() { return {1, 6, 7, 11, 15, 24, 31}; }

bool ShareGoepelGroup(const std::vector<int>& indices, GoepelGroup* group) {
  std::set<std::uint32_t> wanted;
  for (int i : indices) wanted.insert(Genus3CharTable().at(i - 1).Mask());
  for (const GoepelGroup& g : EnumerateGoepelGroups(3, 3)) {
    std::set<std::uint32_t> have;
    for (const auto& e : g.elements) have.insert(e.Mask());
    if (std::includes(have.begin(), have.end(), wanted.begin(), wanted.end())) {
      if (group) *group = g;
      return true;
    }
  }
  return false;
}

}  // namespace thetanull
