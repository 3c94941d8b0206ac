#include "tensorsq/coset_enum.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace tensorsq {

namespace {

constexpr u32 kUndef = UINT32_MAX;

u32 col_of(i32 letter) {
  u32 g = static_cast<u32>(letter > 0 ? letter - 1 : -letter - 1);
  return 2 * g + (letter < 0 ? 1 : 0);
}

Word free_reduce(const Word& w) {
  Word out;
  for (i32 l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

struct Enumerator {
  const u32 ncols;
  const u64 max_cells;
  std::vector<u32> cells;
  std::vector<u32> parent;
  std::deque<u32> merge_queue;
  u64 dead = 0;

  Enumerator(u32 ngens, u64 mc) : ncols(2 * ngens), max_cells(mc) {
    cells.assign(ncols, kUndef);
    parent.push_back(0);
  }

  u32 nrows() const { return static_cast<u32>(parent.size()); }
  bool alive(u32 c) const { return parent[c] == c; }

  u32 rep(u32 c) {
    u32 r = c;
    while (parent[r] != r) r = parent[r];
    while (parent[c] != r) {
      u32 nxt = parent[c];
      parent[c] = r;
      c = nxt;
    }
    return r;
  }

  u32& cell(u32 c, u32 col) { return cells[std::size_t(c) * ncols + col]; }

  u32 get(u32 c, u32 col) {
    u32 v = cell(c, col);
    return v == kUndef ? kUndef : rep(v);
  }

  u32 define(u32 c, u32 col) {
    if ((u64(nrows()) + 1) * ncols > max_cells)
      throw cap_exceeded("coset table grew past the cell limit");
    u32 n = nrows();
    parent.push_back(n);
    cells.resize(cells.size() + ncols, kUndef);
    cell(c, col) = n;
    cell(n, col ^ 1u) = c;
    return n;
  }

  void merge(u32 a, u32 b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    ++dead;
    merge_queue.push_back(b);
  }

  void coincidence(u32 a, u32 b) {
    merge(a, b);
    while (!merge_queue.empty()) {
      u32 y = merge_queue.front();
      merge_queue.pop_front();
      for (u32 col = 0; col < ncols; ++col) {
        u32 d = cell(y, col);
        if (d == kUndef) continue;
        if (cell(d, col ^ 1u) == y) cell(d, col ^ 1u) = kUndef;
        u32 mu = rep(y), nu = rep(d);
        u32 e = get(mu, col);
        if (e != kUndef) {
          merge(nu, e);
        } else {
          u32 back = get(nu, col ^ 1u);
          if (back != kUndef) {
            merge(mu, back);
          } else {
            cell(mu, col) = nu;
            cell(nu, col ^ 1u) = mu;
          }
        }
      }
    }
  }


  // trace w from c both ways; define cosets over the gap and close it
  void scan_and_fill(u32 c, const Word& w) {
    std::size_t fi = 0, bi = w.size();
    u32 f = c, b = c;
    for (;;) {
      while (fi < bi) {
        u32 d = get(f, col_of(w[fi]));
        if (d == kUndef) break;
        f = d;
        ++fi;
      }
      if (fi == bi) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (bi > fi) {
        u32 d = get(b, col_of(-w[bi - 1]));
        if (d == kUndef) break;
        b = d;
        --bi;
      }
      if (fi == bi) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (bi == fi + 1) {
        cell(f, col_of(w[fi])) = b;
        cell(b, col_of(-w[fi])) = f;
        return;
      }
      define(f, col_of(w[fi]));
    }
  }

  // renumber live cosets in order; cursor moves to its new position
  void compact(u32& cursor) {
    const u32 n = nrows();
    std::vector<u32> newidx(n, kUndef);
    u32 live = 0;
    for (u32 c = 0; c < n; ++c)
      if (alive(c)) newidx[c] = live++;
    std::vector<u32> nc(std::size_t(live) * ncols, kUndef);
    for (u32 c = 0; c < n; ++c) {
      if (!alive(c)) continue;
      for (u32 col = 0; col < ncols; ++col) {
        u32 v = cell(c, col);
        if (v != kUndef) v = newidx[rep(v)];
        nc[std::size_t(newidx[c]) * ncols + col] = v;
      }
    }
    cells.swap(nc);
    parent.resize(live);
    for (u32 c = 0; c < live; ++c) parent[c] = c;
    dead = 0;
    u32 done = 0;
    for (u32 c = 0; c <= cursor && c < n; ++c)
      if (newidx[c] != kUndef) ++done;
    cursor = done == 0 ? 0 : done - 1;
  }
};

}  // namespace

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word reduce_word(Word w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

CosetTable::CosetTable(u32 ngens, std::vector<u32> cells) : ngens_(ngens), cells_(std::move(cells)) {
  if (ngens_ > 0 && cells_.size() % cols() != 0) throw group_error("ragged coset table");
}

CosetTable todd_coxeter(const FpGroup& fp, const std::vector<Word>& subgroup, u64 max_cells) {
  if (fp.ngens == 0) return CosetTable(0, {});

  std::vector<Word> rels;
  {
    std::unordered_set<std::string> seen;
    for (const Word& w : fp.relators) {
      Word r = reduce_word(w);
      if (r.empty()) continue;
      std::string key(reinterpret_cast<const char*>(r.data()), r.size() * sizeof(i32));
      if (seen.insert(std::move(key)).second) rels.push_back(std::move(r));
    }
  }
  std::vector<Word> subs;
  for (const Word& w : subgroup) {
    Word r = free_reduce(w);
    if (!r.empty()) subs.push_back(std::move(r));
  }

  Enumerator e(fp.ngens, max_cells);
  for (const Word& w : subs) e.scan_and_fill(0, w);
  for (u32 i = 0; i < e.nrows(); ++i) {
    if (!e.alive(i)) continue;
    for (const Word& w : rels) {
      e.scan_and_fill(i, w);
      if (!e.alive(i)) break;
    }
    if (e.alive(i))
      for (u32 col = 0; col < e.ncols; ++col)
        if (e.get(i, col) == kUndef) e.define(i, col);
    if (e.dead > std::max<u64>(1024, e.nrows() - e.dead)) e.compact(i);
  }
  u32 cursor = e.nrows();
  e.compact(cursor);

  CosetTable t(fp.ngens, std::move(e.cells));
  verify_table(t, fp, subgroup);
  return t;
}

void verify_table(const CosetTable& t, const FpGroup& fp, const std::vector<Word>& subgroup) {
  if (t.ngens() != fp.ngens) throw group_error("generator count mismatch");
  const u32 n = t.size();
  for (u32 c = 0; c < n; ++c)
    for (u32 col = 0; col < t.cols(); ++col) {
      u32 d = t.act_col(c, col);
      if (d >= n) throw group_error("coset table has an undefined entry");
      if (t.act_col(d, col ^ 1u) != c) throw group_error("table columns are not mutually inverse");
    }
  for (const Word& w : fp.relators)
    for (u32 c = 0; c < n; ++c)
      if (t.apply(c, w) != c) throw group_error("relator does not close on the table");
  for (const Word& w : subgroup)
    if (t.apply(0, w) != 0) throw group_error("subgroup generator moves the subgroup coset");
}

FiniteGroup regular_permutation_rep(const CosetTable& t) {
  const u32 n = std::max<u32>(t.size(), 1);
  std::vector<Permutation> gens;
  for (u32 g = 0; g < t.ngens(); ++g) {
    std::vector<u32> img(n);
    for (u32 c = 0; c < n; ++c) img[c] = t.act_col(c, 2 * g);
    gens.emplace_back(std::move(img));
  }
  return FiniteGroup(n, std::move(gens));
}

PointGroup::PointGroup(CosetTable table)
    : table_(std::make_shared<const CosetTable>(std::move(table))) {
  const u32 n = table_->size();
  words_.resize(n);
  std::vector<bool> have(n, false);
  have[0] = true;
  std::deque<u32> queue{0};
  while (!queue.empty()) {
    u32 c = queue.front();
    queue.pop_front();
    for (u32 col = 0; col < table_->cols(); ++col) {
      u32 d = table_->act_col(c, col);
      if (have[d]) continue;
      words_[d] = words_[c];
      words_[d].push_back(col);
      have[d] = true;
      queue.push_back(d);
    }
  }
  for (u32 c = 0; c < n; ++c)
    if (!have[c]) throw group_error("coset table is not transitive");
}

u32 PointGroup::mul(u32 x, u32 y) const {
  for (u32 col : words_[y]) x = table_->act_col(x, col);
  return x;
}

u32 PointGroup::inv(u32 y) const {
  u32 c = 0;
  const auto& w = words_[y];
  for (auto it = w.rbegin(); it != w.rend(); ++it) c = table_->act_col(c, *it ^ 1u);
  return c;
}

u64 PointGroup::element_order(u32 x) const {
  u64 k = 1;
  u32 c = x;
  while (c != 0) {
    c = mul(c, x);
    ++k;
  }
  return k;
}

std::string presentation_text(const FpGroup& fp, const std::vector<std::string>& gen_names) {
  std::vector<std::string> names = gen_names;
  if (names.size() != fp.ngens) {
    names.clear();
    for (u32 g = 0; g < fp.ngens; ++g) names.push_back("x" + std::to_string(g));
  }
  std::ostringstream out;
  out << "generators:";
  for (const auto& n : names) out << ' ' << n;
  out << '\n';
  for (std::size_t ri = 0; ri < fp.relators.size(); ++ri) {
    const Word& w = fp.relators[ri];
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      i64 e = static_cast<i64>(j - i) * (w[i] > 0 ? 1 : -1);
      u32 g = static_cast<u32>(w[i] > 0 ? w[i] - 1 : -w[i] - 1);
      if (!first) out << ' ';
      out << names[g];
      if (e != 1) out << '^' << e;
      first = false;
      i = j;
    }
    if (w.empty()) out << "1";
    out << (ri + 1 < fp.relators.size() ? " /\n" : "\n");
  }
  return out.str();
}

FpGroup parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw group_error("empty presentation");
  const std::string tag = "generators:";
  if (line.rfind(tag, 0) != 0) throw group_error("presentation must start with a generator list");

  FpGroup fp;
  std::unordered_map<std::string, u32> index;
  {
    std::istringstream ls(line.substr(tag.size()));
    std::string name;
    while (ls >> name) {
      if (index.count(name)) throw group_error("duplicate generator name: " + name);
      index.emplace(name, fp.ngens++);
    }
  }

  std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    std::size_t slash = rest.find('/', pos);
    std::string chunk = rest.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
    pos = slash == std::string::npos ? rest.size() + 1 : slash + 1;

    std::istringstream cs(chunk);
    Word w;
    std::string tok;
    bool any = false;
    while (cs >> tok) {
      any = true;
      if (tok == "1") continue;
      std::string name = tok;
      i64 exp = 1;
      if (auto caret = tok.find('^'); caret != std::string::npos) {
        name = tok.substr(0, caret);
        try {
          exp = std::stoll(tok.substr(caret + 1));
        } catch (const std::exception&) {
          throw group_error("bad exponent in: " + tok);
        }
      }
      auto it = index.find(name);
      if (it == index.end()) throw group_error("unknown generator: " + name);
      i32 letter = static_cast<i32>(it->second) + 1;
      if (exp < 0) {
        letter = -letter;
        exp = -exp;
      }
      for (i64 k = 0; k < exp; ++k) w.push_back(letter);
    }
    if (any) fp.relators.push_back(std::move(w));
  }
  return fp;
}

}  // namespace tensorsq
