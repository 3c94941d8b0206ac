#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "tensorsq/permutation.hpp"

namespace tensorsq {

using bigint = boost::multiprecision::cpp_int;

// Invariant factor form d1 | d2 | ... | dm (each >= 2) plus free rank.
struct AbelianInvariants {
  u32 rank = 0;
  std::vector<u64> factors;

  bool operator==(const AbelianInvariants&) const = default;
  bool is_trivial() const { return rank == 0 && factors.empty(); }
  bigint torsion_order() const;
  u32 even_factor_count() const;
  std::string str() const;  // e.g. "Z^2 x Z/2 x Z/4", "[]" for trivial
};

AbelianInvariants direct_sum(const AbelianInvariants& a, const AbelianInvariants& b);
// canonical chain from an arbitrary multiset of cyclic orders (>= 2 kept)
AbelianInvariants invariants_from_orders(std::vector<u64> orders, u32 rank = 0);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bigint& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const bigint& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix&) const = default;
  void append_rows(const IntMatrix& o);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<bigint> a_;
};

struct SmithResult {
  IntMatrix d, u, v, uinv, vinv;  // u*m*v == d, u*uinv == I, v*vinv == I
  std::vector<bigint> diagonal() const;
};

// Pivot: smallest nonzero |entry| in the working submatrix, row-major ties.
// Row then column elimination; divisibility repaired by row merges.
SmithResult smith_normal_form(const IntMatrix& m);

// throws group_error unless all SmithResult postconditions hold for m
void check_smith(const IntMatrix& m, const SmithResult& s);

// invariants of Z^cols / rowspace(m)
AbelianInvariants cokernel_invariants(const IntMatrix& m);

// invariants of (rowspace(gens) + rowspace(sub)) / rowspace(sub), lattices in Z^cols
AbelianInvariants lattice_quotient_invariants(const IntMatrix& gens, const IntMatrix& sub);

// A (x) A for A in invariant factor form, with the e_{ij} basis kept explicit
struct BasedTensorSquare {
  u32 r = 0;                  // free rank of A
  std::vector<u64> torsion;   // invariant factors of A
  u32 n = 0;                  // r + torsion.size(); labels (i,j), i*n+j
  IntMatrix relations;        // relation rows over the n^2 labels
  AbelianInvariants tensor;   // invariants of A (x) A

  u32 label(u32 i, u32 j) const { return i * n + j; }
  IntMatrix nabla_rows() const;  // generator rows of the diagonal subgroup
  IntMatrix delta_rows() const;  // generator rows of the symmetric-swap subgroup
};

BasedTensorSquare abelian_tensor_square(const AbelianInvariants& a);

struct AbelianSubquotients {
  AbelianInvariants tensor;            // A (x) A
  AbelianInvariants nabla;             // <x (x) x>
  AbelianInvariants delta;             // <x(x)y + y(x)x>
  AbelianInvariants nabla_mod_delta;   // (Z/2)^(r+k)
  AbelianInvariants exterior;          // (A (x) A) / nabla
  AbelianInvariants symmetric;         // (A (x) A) / delta
};

AbelianSubquotients abelian_subquotients(const AbelianInvariants& a);

}  // namespace tensorsq
