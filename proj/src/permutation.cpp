#include "tensorsq/permutation.hpp"

#include <numeric>

#include "tensorsq/permkernel.hpp"

namespace tensorsq {

Permutation::Permutation(std::vector<u32> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (u32 v : img_) {
    if (v >= img_.size() || seen[v]) throw group_error("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(u32 degree) {
  Permutation p;
  p.img_.resize(degree);
  std::iota(p.img_.begin(), p.img_.end(), 0u);
  return p;
}

Permutation Permutation::from_cycles(u32 degree, const std::vector<std::vector<u32>>& cycles) {
  Permutation p = identity(degree);
  for (const auto& cyc : cycles) {
    if (cyc.size() < 2) continue;
    Permutation c = identity(degree);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      u32 a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (a >= degree || b >= degree) throw group_error("cycle point out of range");
      c.img_[a] = b;
    }
    // validate the cycle wrote a bijection (repeated points would not)
    p = Permutation(p.img_) * Permutation(c.img_);
  }
  return p;
}

bool Permutation::is_identity() const { return pk::is_identity(img_.data(), img_.size()); }

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  pk::invert(r.img_.data(), img_.data(), img_.size());
  return r;
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (degree() != q.degree()) throw group_error("degree mismatch");
  Permutation r;
  r.img_.resize(img_.size());
  pk::gather_map(r.img_.data(), img_.data(), q.img_.data(), img_.size());
  return r;
}

u64 Permutation::order() const {
  std::vector<bool> seen(img_.size(), false);
  u64 ord = 1;
  for (u32 i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    u64 len = 0;
    for (u32 j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (u32 i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (u32 j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace tensorsq
