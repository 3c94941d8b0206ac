#include "tensorsq/named_groups.hpp"

#include "tensorsq/coset_enum.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tensorsq {

namespace {

constexpr u64 kLinearOrderCap = 10000;

u32 parse_u32(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw group_error("bad " + what + " in group spec: '" + s + "'");
  unsigned long v = 0;
  try {
    v = std::stoul(s);
  } catch (const std::exception&) {
    throw group_error("bad " + what + " in group spec: '" + s + "'");
  }
  if (v > 0xffffffffUL) throw group_error(what + " out of range: '" + s + "'");
  return static_cast<u32>(v);
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// split on sep at paren depth zero
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

bool is_prime(u32 p) {
  if (p < 2) return false;
  for (u32 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

u32 primitive_root(u32 p) {
  for (u32 r = 2; r < p; ++r) {
    u64 x = r;
    u32 ord = 1;
    while (x != 1) {
      x = x * r % p;
      ++ord;
    }
    if (ord == p - 1) return r;
  }
  return 1;
}

u64 linear_group_order(u32 n, u32 p, bool special) {
  u64 pn = 1;
  for (u32 i = 0; i < n; ++i) pn *= p;
  u64 order = 1;
  u64 pi = 1;
  for (u32 i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= p;
    if (order > kLinearOrderCap * (p - 1)) break;
  }
  return special ? order / (p - 1) : order;
}

// permutation of the nonzero vectors of F_p^n under an invertible map given
// coordinatewise; vector id = sum v_i p^i, point = id - 1
template <typename F>
Permutation vector_action(u32 n, u32 p, F&& apply) {
  u64 pn = 1;
  for (u32 i = 0; i < n; ++i) pn *= p;
  std::vector<u32> img(pn - 1);
  std::vector<u32> v(n);
  for (u64 id = 1; id < pn; ++id) {
    u64 rest = id;
    for (u32 i = 0; i < n; ++i) {
      v[i] = static_cast<u32>(rest % p);
      rest /= p;
    }
    apply(v);
    u64 out = 0;
    for (u32 i = n; i-- > 0;) out = out * p + v[i];
    img[id - 1] = static_cast<u32>(out - 1);
  }
  return Permutation(std::move(img));
}

FiniteGroup linear_group(u32 n, u32 p, bool special) {
  if (n == 0) throw group_error("linear group dimension must be positive");
  if (!is_prime(p)) throw group_error("linear group field size must be prime");
  if (linear_group_order(n, p, special) > kLinearOrderCap)
    throw cap_exceeded("linear group order exceeds the construction cap");

  if (n == 1) {
    if (special || p == 2) return FiniteGroup();
    u32 r = primitive_root(p);
    return FiniteGroup(p - 1, {vector_action(1, p, [&](std::vector<u32>& v) { v[0] = static_cast<u32>(u64(v[0]) * r % p); })});
  }

  std::vector<Permutation> gens;
  for (u32 i = 0; i < n; ++i)
    for (u32 j = 0; j < n; ++j) {
      if (i == j) continue;
      gens.push_back(vector_action(n, p, [&](std::vector<u32>& v) { v[i] = (v[i] + v[j]) % p; }));
    }
  if (!special && p > 2) {
    u32 r = primitive_root(p);
    gens.push_back(vector_action(n, p, [&](std::vector<u32>& v) { v[0] = static_cast<u32>(u64(v[0]) * r % p); }));
  }
  u64 pn = 1;
  for (u32 i = 0; i < n; ++i) pn *= p;
  return FiniteGroup(static_cast<u32>(pn - 1), std::move(gens));
}

std::vector<std::vector<u32>> parse_cycles(const std::string& s, u32& degree) {
  std::vector<std::vector<u32>> cycles;
  std::size_t i = 0;
  degree = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw group_error("expected '(' in cycle notation: '" + s + "'");
    ++i;
    std::vector<u32> cyc;
    std::string num;
    for (; i < s.size() && s[i] != ')'; ++i) {
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        num.push_back(s[i]);
      } else if (s[i] == ' ' || s[i] == ',') {
        if (!num.empty()) {
          cyc.push_back(parse_u32(num, "cycle point"));
          num.clear();
        }
      } else {
        throw group_error("bad character in cycle notation: '" + s + "'");
      }
    }
    if (i == s.size()) throw group_error("unclosed cycle in '" + s + "'");
    ++i;
    if (!num.empty()) cyc.push_back(parse_u32(num, "cycle point"));
    for (u32 pt : cyc) degree = std::max(degree, pt + 1);
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
  }
  return cycles;
}

FiniteGroup parse_perm_spec(const std::string& body) {
  std::vector<std::vector<std::vector<u32>>> gen_cycles;
  u32 degree = 1;
  for (const std::string& part : split_top(body, ';')) {
    u32 d = 0;
    gen_cycles.push_back(parse_cycles(strip(part), d));
    degree = std::max(degree, d);
  }
  if (degree > 1024) throw cap_exceeded("permutation degree exceeds the construction cap");
  std::vector<Permutation> gens;
  for (auto& cycles : gen_cycles) gens.push_back(Permutation::from_cycles(degree, cycles));
  return FiniteGroup(degree, std::move(gens));
}

ParsedGroupSpec parse_factor(const std::string& raw);

SemidirectPieces parse_sdp(const std::string& args) {
  std::vector<std::string> parts = split_top(args, ',');
  if (parts.size() != 3) throw group_error("sdp takes exactly three arguments");
  SemidirectPieces out;
  out.n = parse_group_spec(strip(parts[0])).group;
  out.h = parse_group_spec(strip(parts[1])).group;
  std::string act = strip(parts[2]);

  const auto& ngens = out.n.generator_indices();
  std::vector<u32> images;
  if (act == "trivial") {
    images.assign(ngens.begin(), ngens.end());
  } else if (act == "inversion") {
    for (u32 gi : ngens) images.push_back(out.n.inv(gi));
  } else if (act == "cycle") {
    for (std::size_t i = 1; i < ngens.size(); ++i) images.push_back(ngens[i]);
    u32 prod = 0;
    for (u32 gi : ngens) prod = out.n.mul(prod, gi);
    images.push_back(prod);
  } else {
    throw group_error("unknown sdp action '" + act + "' (trivial, inversion, cycle)");
  }
  ElementAuto a = automorphism_from_images(out.n, images);
  out.action.assign(out.h.generators().size(), a);
  return out;
}

ParsedGroupSpec parse_factor(const std::string& raw) {
  std::string s = strip(raw);
  if (s.empty()) throw group_error("empty group spec");
  ParsedGroupSpec out;

  if (s.rfind("sdp(", 0) == 0 && s.back() == ')') {
    SemidirectPieces pieces = parse_sdp(s.substr(4, s.size() - 5));
    out.group = semidirect_product(pieces.n, pieces.h, pieces.action).group;
    out.semidirect = std::move(pieces);
    return out;
  }
  if (s.rfind("perm:", 0) == 0) {
    out.group = parse_perm_spec(s.substr(5));
    return out;
  }
  if (s.rfind("GL(", 0) == 0 || s.rfind("SL(", 0) == 0) {
    if (s.back() != ')') throw group_error("unclosed argument list in '" + s + "'");
    std::vector<std::string> parts = split_top(s.substr(3, s.size() - 4), ',');
    if (parts.size() != 2) throw group_error("linear groups take two arguments");
    u32 n = parse_u32(strip(parts[0]), "dimension");
    u32 p = parse_u32(strip(parts[1]), "field size");
    out.group = s[0] == 'G' ? general_linear_group(n, p) : special_linear_group(n, p);
    return out;
  }
  if (s == "Q8") {
    out.group = quaternion_group();
    return out;
  }
  if (s[0] == 'S' || s[0] == 'A' || s[0] == 'D' || s[0] == 'C') {
    u32 v = parse_u32(s.substr(1), "parameter");
    switch (s[0]) {
      case 'S': out.group = symmetric_group(v); return out;
      case 'A': out.group = alternating_group(v); return out;
      case 'D': out.group = dihedral_group(v); return out;
      default: out.group = cyclic_group(v); return out;
    }
  }
  throw group_error("unknown group spec '" + s + "'");
}

}  // namespace

FiniteGroup symmetric_group(u32 n) {
  if (n == 0 || n > 64) throw group_error("symmetric group degree out of range");
  if (n == 1) return FiniteGroup();
  if (n == 2) return FiniteGroup(2, {Permutation::from_cycles(2, {{0, 1}})});
  std::vector<u32> rot(n);
  for (u32 i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return FiniteGroup(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation(std::move(rot))});
}

FiniteGroup alternating_group(u32 n) {
  if (n < 3 || n > 64) throw group_error("alternating group degree out of range");
  if (n == 3) return FiniteGroup(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  std::vector<u32> cyc;
  for (u32 i = n % 2 == 0 ? 1 : 0; i < n; ++i) cyc.push_back(i);
  return FiniteGroup(n, {Permutation::from_cycles(n, {{0, 1, 2}}),
                         Permutation::from_cycles(n, {cyc})});
}

FiniteGroup dihedral_group(u32 order) {
  if (order < 4 || order % 2 != 0 || order > 8192)
    throw group_error("dihedral group order must be even, between 4 and 8192");
  if (order == 4) return direct_product(cyclic_group(2), cyclic_group(2));
  u32 m = order / 2;
  std::vector<u32> rot(m), refl(m);
  for (u32 i = 0; i < m; ++i) {
    rot[i] = (i + 1) % m;
    refl[i] = (m - i) % m;
  }
  return FiniteGroup(m, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

FiniteGroup cyclic_group(u32 n) {
  if (n == 0 || n > 4096) throw group_error("cyclic group order out of range");
  if (n == 1) return FiniteGroup();
  std::vector<u32> img(n);
  for (u32 i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return FiniteGroup(n, {Permutation(std::move(img))});
}

FiniteGroup quaternion_group() {
  FpGroup fp;
  fp.ngens = 2;
  fp.relators = {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}};
  return regular_permutation_rep(todd_coxeter(fp, {}));
}

FiniteGroup general_linear_group(u32 n, u32 p) { return linear_group(n, p, false); }

FiniteGroup special_linear_group(u32 n, u32 p) { return linear_group(n, p, true); }

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  u32 da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) {
    std::vector<u32> img(da + db);
    for (u32 i = 0; i < da; ++i) img[i] = g[i];
    for (u32 i = 0; i < db; ++i) img[da + i] = da + i;
    gens.emplace_back(std::move(img));
  }
  for (const Permutation& g : b.generators()) {
    std::vector<u32> img(da + db);
    for (u32 i = 0; i < da; ++i) img[i] = i;
    for (u32 i = 0; i < db; ++i) img[da + i] = da + g[i];
    gens.emplace_back(std::move(img));
  }
  return FiniteGroup(da + db, std::move(gens));
}

ParsedGroupSpec parse_group_spec(const std::string& spec) {
  std::vector<std::string> factors = split_top(spec, 'x');
  if (factors.size() == 1) return parse_factor(factors[0]);
  ParsedGroupSpec out = parse_factor(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i)
    out.group = direct_product(out.group, parse_factor(factors[i]).group);
  out.semidirect.reset();
  return out;
}

FiniteGroup make_named_group(const std::string& spec) { return parse_group_spec(spec).group; }

}  // namespace tensorsq
