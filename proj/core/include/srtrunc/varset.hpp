#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace srtrunc {

/// Largest ambient variable count supported by the bitset representation.
inline constexpr unsigned kMaxVariables = 64;

/// Set of variable indices. Bit v stands for the variable x_{v+1}.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint64_t bits) : bits_(bits) {}

  static VarSet full(unsigned n) {
    return VarSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static VarSet of(std::initializer_list<unsigned> zero_based) {
    VarSet s;
    for (unsigned v : zero_based) s = s.with(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool contains(unsigned v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VarSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VarSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr VarSet with(unsigned v) const { return VarSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VarSet without(unsigned v) const { return VarSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
  constexpr VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }
  constexpr VarSet operator-(VarSet o) const { return VarSet(bits_ & ~o.bits_); }

  /// Lowest member; undefined on the empty set.
  unsigned front() const { return static_cast<unsigned>(std::countr_zero(bits_)); }

  /// Zero-based members in increasing order.
  std::vector<unsigned> members() const {
    std::vector<unsigned> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)));
    return out;
  }

  friend constexpr bool operator==(VarSet, VarSet) = default;

  /// Cardinality first, then lexicographic on the sorted members.
  friend bool operator<(VarSet a, VarSet b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    // Smaller first element wins: {1,2} before {1,3} before {2,3}.
    std::uint64_t x = a.bits_ ^ b.bits_;
    if (x == 0) return false;
    unsigned low = static_cast<unsigned>(std::countr_zero(x));
    return a.contains(low);
  }

 private:
  std::uint64_t bits_ = 0;
};

/// "{1,3,4}" with one-based labels.
std::string to_string(VarSet s);

struct VarSetHash {
  std::size_t operator()(VarSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace srtrunc
