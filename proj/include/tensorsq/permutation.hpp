#pragma once
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tensorsq {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i32 = std::int32_t;
using i64 = std::int64_t;

struct group_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// raised when an enumeration or construction hits a configured resource cap
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Permutation of {0,...,n-1}. Products read left to right: (a*b) means apply
// a, then b, so (a*b)[x] == b[a[x]].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<u32> images);
  static Permutation identity(u32 degree);
  // cycles use 0-based points; non-disjoint cycles compose left to right
  static Permutation from_cycles(u32 degree, const std::vector<std::vector<u32>>& cycles);

  u32 degree() const { return static_cast<u32>(img_.size()); }
  u32 operator[](u32 p) const { return img_[p]; }
  const std::vector<u32>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& q) const;
  u64 order() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string cycle_string() const;  // 1-based, e.g. "(1 2 3)(4 5)", identity is "()"

 private:
  std::vector<u32> img_;
};

inline Permutation conjugate(const Permutation& g, const Permutation& x) {
  // left conjugation g x g^-1
  return g * x * g.inverse();
}

inline Permutation commutator(const Permutation& g, const Permutation& h) {
  // [g,h] = g h g^-1 h^-1
  return g * h * g.inverse() * h.inverse();
}

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (u32 v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace tensorsq
