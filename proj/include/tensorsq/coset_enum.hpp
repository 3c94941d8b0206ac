#pragma once
#include <memory>
#include <string>
#include <vector>

#include "tensorsq/finite_group.hpp"

namespace tensorsq {

// a word in the free group: letter +(g+1) is generator g, -(g+1) its inverse
using Word = std::vector<i32>;

struct FpGroup {
  u32 ngens = 0;
  std::vector<Word> relators;
};

Word inverse_word(const Word& w);
// cancel adjacent inverse pairs, then conjugating prefixes
Word reduce_word(Word w);

// Complete coset table over a subgroup: row per coset, column 2g for
// generator g and 2g+1 for its inverse. Row 0 is the subgroup itself.
class CosetTable {
 public:
  CosetTable(u32 ngens, std::vector<u32> cells);

  u32 ngens() const { return ngens_; }
  u32 cols() const { return 2 * ngens_; }
  u32 size() const { return ngens_ == 0 ? 1 : static_cast<u32>(cells_.size() / cols()); }
  u32 act_col(u32 c, u32 col) const { return cells_[std::size_t(c) * cols() + col]; }
  u32 act(u32 c, i32 letter) const {
    u32 g = static_cast<u32>(letter > 0 ? letter - 1 : -letter - 1);
    return act_col(c, 2 * g + (letter < 0 ? 1 : 0));
  }
  u32 apply(u32 c, const Word& w) const {
    for (i32 l : w) c = act(c, l);
    return c;
  }

 private:
  u32 ngens_;
  std::vector<u32> cells_;
};

// index of the subgroup generated by the given words; throws cap_exceeded when
// the working table would outgrow max_cells (cells = rows * columns)
CosetTable todd_coxeter(const FpGroup& fp, const std::vector<Word>& subgroup,
                        u64 max_cells = 2'000'000);

// every relator closes at every coset, subgroup words close at row 0, and the
// generator columns are mutually inverse bijections
void verify_table(const CosetTable& t, const FpGroup& fp, const std::vector<Word>& subgroup);

// the group acting on its own elements, from a table over the trivial subgroup
FiniteGroup regular_permutation_rep(const CosetTable& t);

// Group arithmetic directly on the cosets of the trivial subgroup. Each coset
// stands for the element carrying 0 there; products apply the right factor's
// defining word, so nothing beyond the table is ever materialized.
class PointGroup {
 public:
  explicit PointGroup(CosetTable table);

  const CosetTable& table() const { return *table_; }
  u32 size() const { return table_->size(); }
  u32 mul(u32 x, u32 y) const;
  u32 inv(u32 y) const;
  u64 element_order(u32 x) const;
  const std::vector<u32>& word_of(u32 c) const { return words_[c]; }

 private:
  std::shared_ptr<const CosetTable> table_;
  std::vector<std::vector<u32>> words_;  // column path from coset 0, BFS order
};

std::string presentation_text(const FpGroup& fp, const std::vector<std::string>& gen_names = {});
FpGroup parse_presentation(const std::string& text);

}  // namespace tensorsq
