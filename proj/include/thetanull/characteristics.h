#ifndef THETANULL_CHARACTERISTICS_H_
#define THETANULL_CHARACTERISTICS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace thetanull {

// Rational theta characteristic [a; b] with a = top / level and
// b = bottom / level, numerators reduced into [0, level).
struct Characteristic {
  int genus = 0;
  int level = 2;
  std::vector<int> top;
  std::vector<int> bottom;

  Characteristic() = default;
  Characteristic(int level, std::vector<int> top, std::vector<int> bottom);

  static Characteristic Zero(int genus, int level = 2);
  // Half characteristic from a bitmask: bit i (i < g) is top[i], bit g + i is
  // bottom[i].
  static Characteristic FromMask(int genus, std::uint32_t mask);

  bool IsHalf() const { return level == 2; }
  std::uint32_t Mask() const;
  double TopValue(int i) const { return static_cast<double>(top[i]) / level; }
  double BottomValue(int i) const {
    return static_cast<double>(bottom[i]) / level;
  }
  std::string ToString() const;

  bool operator==(const Characteristic& other) const;
  bool operator!=(const Characteristic& other) const {
    return !(*this == other);
  }
};

enum class Parity { kEven, kOdd };

Parity ParityOf(const Characteristic& c);
inline bool IsEven(const Characteristic& c) {
  return ParityOf(c) == Parity::kEven;
}
// e_*(c) = (-1)^{4 a.b} as +1 or -1.
int ParitySign(const Characteristic& c);

// Exhaustive count of even and odd half characteristics of genus g.
std::pair<long long, long long> CountByParity(int g);
std::pair<long long, long long> ParityCountFormula(int g);

Characteristic Compose(const Characteristic& m, const Characteristic& a);
int Pairing(const Characteristic& m, const Characteristic& a);
int TriplePairing(const Characteristic& m, const Characteristic& a,
                  const Characteristic& b);
// Exponent k mod 4 with (m choose a) = i^k.
int BinomialExponent(const Characteristic& m, const Characteristic& a);

// All 2^{2g} half characteristics ordered by mask.
std::vector<Characteristic> AllHalfCharacteristics(int g);

struct GoepelGroup {
  int genus = 0;
  int rank = 0;
  std::vector<Characteristic> elements;  // sorted by mask
  std::vector<Characteristic> basis;
};

bool IsGoepelGroup(const std::vector<Characteristic>& set);
std::vector<GoepelGroup> EnumerateGoepelGroups(int g, int r);
long long GoepelGroupCountFormula(int g, int r);

enum class SystemLabel { kAllEven, kAllOdd, kMixed };
std::string SystemLabelName(SystemLabel label);

struct GoepelSystem {
  std::vector<Characteristic> elements;
  SystemLabel label;
};

std::vector<GoepelSystem> GoepelSystems(const GoepelGroup& group);

struct SystemCounts {
  long long all_even = 0;
  long long all_odd = 0;
  long long mixed = 0;
};
SystemCounts CountSystems(const std::vector<GoepelSystem>& systems);
SystemCounts GoepelSystemCountFormula(int g, int r);

}  // namespace thetanull

#endif  // THETANULL_CHARACTERISTICS_H_
