#include "tensorsq/abelian_structure.hpp"

#include <vector>

namespace tensorsq {

AbelianInvariants abelian_invariants_blackbox(u32 n, u32 identity,
                                              const std::function<u32(u32, u32)>& mul) {
  if (n == 0) throw group_error("empty element set");
  std::vector<bool> in_sub(n, false);
  std::vector<std::vector<i64>> coord(n);
  std::vector<u32> members{identity};
  in_sub[identity] = true;

  std::vector<std::vector<i64>> relation_rows;
  u32 ngens = 0;

  for (u32 cand = 0; cand < n; ++cand) {
    if (in_sub[cand]) continue;
    // relative order: first e >= 1 with cand^e in the current subgroup
    u32 e = 1;
    u32 pw = cand;
    while (!in_sub[pw]) {
      pw = mul(pw, cand);
      ++e;
      if (e > n) throw group_error("mul not closed on the given ids");
    }
    std::vector<i64> row(ngens + 1, 0);
    for (std::size_t i = 0; i < coord[pw].size(); ++i) row[i] = -coord[pw][i];
    row[ngens] = e;
    relation_rows.push_back(std::move(row));

    // extend: old * cand^j for 1 <= j < e
    std::size_t old_count = members.size();
    u32 pj = identity;
    for (u32 j = 1; j < e; ++j) {
      pj = mul(pj, cand);
      for (std::size_t s = 0; s < old_count; ++s) {
        u32 x = mul(members[s], pj);
        if (in_sub[x]) throw group_error("mul not a group operation on the given ids");
        in_sub[x] = true;
        coord[x] = coord[members[s]];
        coord[x].resize(ngens + 1, 0);
        coord[x][ngens] = j;
        members.push_back(x);
      }
    }
    ++ngens;
  }

  IntMatrix rel(relation_rows.size(), ngens);
  for (std::size_t i = 0; i < relation_rows.size(); ++i)
    for (std::size_t j = 0; j < relation_rows[i].size(); ++j) rel.at(i, j) = relation_rows[i][j];
  AbelianInvariants inv = cokernel_invariants(rel);
  if (inv.rank != 0) throw group_error("finite group produced free rank");
  return inv;
}

}  // namespace tensorsq
