#include "thetanull/characteristics.h"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "thetanull/numerics.h"

namespace thetanull {
namespace {

void CheckHalf(const Characteristic& c) {
  THETANULL_CHECK(c.level == 2, "operation requires a half characteristic");
}

void CheckSameGenus(const Characteristic& a, const Characteristic& b) {
  THETANULL_CHECK(a.genus == b.genus, "characteristic genus mismatch");
}

std::uint32_t LowMask(int g) { return (std::uint32_t{1} << g) - 1; }

int MaskParity(std::uint32_t x, int g) {
  return std::popcount((x & LowMask(g)) & (x >> g)) & 1;
}

int MaskPairing(std::uint32_t x, std::uint32_t y, int g) {
  const std::uint32_t lo = LowMask(g);
  return (std::popcount((x & lo) & (y >> g)) +
          std::popcount((x >> g) & (y & lo))) &
         1;
}

long long Pow2(int k) { return 1LL << k; }

}  // namespace

Characteristic::Characteristic(int level_in, std::vector<int> top_in,
                               std::vector<int> bottom_in)
    : genus(static_cast<int>(top_in.size())),
      level(level_in),
      top(std::move(top_in)),
      bottom(std::move(bottom_in)) {
  THETANULL_CHECK(level >= 1, "characteristic level must be positive");
  THETANULL_CHECK(top.size() == bottom.size(),
                  "characteristic rows must have equal length");
  THETANULL_CHECK(genus >= 1, "characteristic genus must be positive");
  for (int& v : top) v = static_cast<int>(PosMod(v, level));
  for (int& v : bottom) v = static_cast<int>(PosMod(v, level));
}

Characteristic Characteristic::Zero(int genus, int level) {
  return Characteristic(level, std::vector<int>(genus, 0),
                        std::vector<int>(genus, 0));
}

Characteristic Characteristic::FromMask(int genus, std::uint32_t mask) {
  std::vector<int> t(genus), b(genus);
  for (int i = 0; i < genus; ++i) {
    t[i] = (mask >> i) & 1;
    b[i] = (mask >> (genus + i)) & 1;
  }
  return Characteristic(2, t, b);
}

std::uint32_t Characteristic::Mask() const {
  CheckHalf(*this);
  std::uint32_t m = 0;
  for (int i = 0; i < genus; ++i) {
    m |= static_cast<std::uint32_t>(top[i]) << i;
    m |= static_cast<std::uint32_t>(bottom[i]) << (genus + i);
  }
  return m;
}

std::string Characteristic::ToString() const {
  std::ostringstream os;
  auto row = [&](const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) os << ",";
      if (v[i] == 0) {
        os << "0";
      } else {
        os << v[i] << "/" << level;
      }
    }
  };
  os << "[";
  row(top);
  os << ";";
  row(bottom);
  os << "]";
  return os.str();
}

bool Characteristic::operator==(const Characteristic& other) const {
  return genus == other.genus && level == other.level && top == other.top &&
         bottom == other.bottom;
}

Parity ParityOf(const Characteristic& c) {
  CheckHalf(c);
  int s = 0;
  for (int i = 0; i < c.genus; ++i) s += c.top[i] * c.bottom[i];
  return (s % 2 == 0) ? Parity::kEven : Parity::kOdd;
}

int ParitySign(const Characteristic& c) { return IsEven(c) ? 1 : -1; }

std::pair<long long, long long> CountByParity(int g) {
  THETANULL_CHECK(g >= 1 && g <= 12, "genus out of range for enumeration");
  long long even = 0, odd = 0;
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << (2 * g)); ++x) {
    (MaskParity(x, g) == 0 ? even : odd) += 1;
  }
  return {even, odd};
}

std::pair<long long, long long> ParityCountFormula(int g) {
  return {Pow2(g - 1) * (Pow2(g) + 1), Pow2(g - 1) * (Pow2(g) - 1)};
}

Characteristic Compose(const Characteristic& m, const Characteristic& a) {
  CheckHalf(m);
  CheckHalf(a);
  CheckSameGenus(m, a);
  std::vector<int> t(m.genus), b(m.genus);
  for (int i = 0; i < m.genus; ++i) {
    t[i] = (m.top[i] + a.top[i]) % 2;
    b[i] = (m.bottom[i] + a.bottom[i]) % 2;
  }
  return Characteristic(2, t, b);
}

int Pairing(const Characteristic& m, const Characteristic& a) {
  CheckHalf(m);
  CheckHalf(a);
  CheckSameGenus(m, a);
  return MaskPairing(m.Mask(), a.Mask(), m.genus);
}

int TriplePairing(const Characteristic& m, const Characteristic& a,
                  const Characteristic& b) {
  return (Pairing(a, b) + Pairing(b, m) + Pairing(m, a)) % 2;
}

int BinomialExponent(const Characteristic& m, const Characteristic& a) {
  CheckHalf(m);
  CheckHalf(a);
  CheckSameGenus(m, a);
  int s = 0;
  for (int i = 0; i < m.genus; ++i) s += m.top[i] * a.bottom[i];
  return static_cast<int>(PosMod(2 * s, 4));
}

std::vector<Characteristic> AllHalfCharacteristics(int g) {
  THETANULL_CHECK(g >= 1 && g <= 8, "genus out of range for enumeration");
  std::vector<Characteristic> out;
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << (2 * g)); ++x) {
    out.push_back(Characteristic::FromMask(g, x));
  }
  return out;
}

bool IsGoepelGroup(const std::vector<Characteristic>& set) {
  if (set.empty()) return false;
  const int g = set.front().genus;
  std::set<std::uint32_t> masks;
  for (const auto& c : set) {
    if (c.genus != g || !c.IsHalf()) return false;
    masks.insert(c.Mask());
  }
  if (!masks.count(0)) return false;
  for (std::uint32_t x : masks) {
    for (std::uint32_t y : masks) {
      if (!masks.count(x ^ y)) return false;
      if (MaskPairing(x, y, g) != 0) return false;
    }
  }
  const size_t n = masks.size();
  return (n & (n - 1)) == 0;
}

std::vector<GoepelGroup> EnumerateGoepelGroups(int g, int r) {
  THETANULL_CHECK(g >= 1 && g <= 3,
                  "Goepel group enumeration is limited to genus <= 3");
  THETANULL_CHECK(r >= 0 && r <= g, "Goepel rank must satisfy 0 <= r <= g");
  const std::uint32_t n = std::uint32_t{1} << (2 * g);
  struct Partial {
    std::vector<std::uint32_t> elements;  // sorted
    std::vector<std::uint32_t> basis;
  };
  std::vector<Partial> level{{{0}, {}}};
  for (int k = 0; k < r; ++k) {
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Partial> next;
    for (const Partial& p : level) {
      for (std::uint32_t x = 1; x < n; ++x) {
        if (std::binary_search(p.elements.begin(), p.elements.end(), x)) {
          continue;
        }
        bool syzygetic = true;
        for (std::uint32_t b : p.basis) {
          if (MaskPairing(x, b, g) != 0) {
            syzygetic = false;
            break;
          }
        }
        // Pairing with x is additive, so checking the basis suffices.
        if (!syzygetic) continue;
        std::vector<std::uint32_t> el = p.elements;
        for (std::uint32_t y : p.elements) el.push_back(y ^ x);
        std::sort(el.begin(), el.end());
        if (!seen.insert(el).second) continue;
        std::vector<std::uint32_t> basis = p.basis;
        basis.push_back(x);
        next.push_back({std::move(el), std::move(basis)});
      }
    }
    level = std::move(next);
  }
  std::vector<GoepelGroup> out;
  out.reserve(level.size());
  for (const Partial& p : level) {
    GoepelGroup grp;
    grp.genus = g;
    grp.rank = r;
    for (std::uint32_t x : p.elements) {
      grp.elements.push_back(Characteristic::FromMask(g, x));
    }
    for (std::uint32_t x : p.basis) {
      grp.basis.push_back(Characteristic::FromMask(g, x));
    }
    out.push_back(std::move(grp));
  }
  return out;
}

long long GoepelGroupCountFormula(int g, int r) {
  long long num = 1, den = 1;
  for (int i = 0; i < r; ++i) num *= Pow2(2 * g - 2 * i) - 1;
  for (int i = 1; i <= r; ++i) den *= Pow2(i) - 1;
  return num / den;
}

std::string SystemLabelName(SystemLabel label) {
  switch (label) {
    case SystemLabel::kAllEven:
      return "allEven";
    case SystemLabel::kAllOdd:
      return "allOdd";
    case SystemLabel::kMixed:
      return "mixed";
  }
  return "mixed";
}

std::vector<GoepelSystem> GoepelSystems(const GoepelGroup& group) {
  THETANULL_CHECK(IsGoepelGroup(group.elements), "input is not a Goepel group");
  const int g = group.genus;
  const std::uint32_t n = std::uint32_t{1} << (2 * g);
  std::vector<bool> seen(n, false);
  std::vector<GoepelSystem> out;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    GoepelSystem sys;
    int even = 0;
    for (const auto& e : group.elements) {
      const std::uint32_t y = x ^ e.Mask();
      seen[y] = true;
      sys.elements.push_back(Characteristic::FromMask(g, y));
      if (MaskParity(y, g) == 0) ++even;
    }
    const int size = static_cast<int>(group.elements.size());
    sys.label = even == size ? SystemLabel::kAllEven
                : even == 0  ? SystemLabel::kAllOdd
                             : SystemLabel::kMixed;
    out.push_back(std::move(sys));
  }
  return out;
}

SystemCounts CountSystems(const std::vector<GoepelSystem>& systems) {
  SystemCounts c;
  for (const auto& s : systems) {
    switch (s.label) {
      case SystemLabel::kAllEven:
        ++c.all_even;
        break;
      case SystemLabel::kAllOdd:
        ++c.all_odd;
        break;
      case SystemLabel::kMixed:
        ++c.mixed;
        break;
    }
  }
  return c;
}

SystemCounts GoepelSystemCountFormula(int g, int r) {
  const int s = g - r;
  SystemCounts c;
  if (s == 0) {
    c.all_even = 1;
    c.all_odd = 0;
  } else {
    c.all_even = Pow2(s - 1) * (Pow2(s) + 1);
    c.all_odd = Pow2(s - 1) * (Pow2(s) - 1);
  }
  c.mixed = Pow2(2 * s) * (Pow2(r) - 1);
  return c;
}

}  // namespace thetanull
