#include "trunclab/boolean/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "trunclab/error.hpp"

namespace trunclab::boolean {

namespace {

void check_table(const Table& t, std::size_t n, const char* name) {
  if (t.size() != n) {
    throw StructuralError(std::string(name) + " table has " + std::to_string(t.size()) + " rows, expected " +
                          std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n) {
      throw StructuralError(std::string(name) + " table row " + std::to_string(i) + " has " +
                            std::to_string(t[i].size()) + " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i][j] >= n) {
        throw StructuralError(std::string(name) + " table entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ") is out of range");
      }
    }
  }
}

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw StructuralError("empty carrier");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw StructuralError("duplicate element label '" + l + "'");
  }
}

std::optional<std::size_t> find_label(const std::vector<std::string>& labels, const std::string& l) {
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

// Records the first failing tuple for a law, if any.
struct LawRecorder {
  ValidationReport& report;
  void fail(const std::string& law, std::vector<std::size_t> w, const std::string& detail) {
    for (const auto& v : report.violations) {
      if (v.law == law) return;
    }
    report.violations.push_back({law, std::move(w), detail});
  }
};

void lattice_laws(const Table& join, const Table& meet, std::size_t bottom, LawRecorder& rec) {
  const std::size_t n = join.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (join[a][a] != a) rec.fail("join idempotent", {a}, "a v a != a");
    if (meet[a][a] != a) rec.fail("meet idempotent", {a}, "a ^ a != a");
    if (join[a][bottom] != a) rec.fail("bottom is join identity", {a}, "a v bottom != a");
    if (meet[a][bottom] != bottom) rec.fail("bottom is least", {a}, "a ^ bottom != bottom");
    for (std::size_t b = 0; b < n; ++b) {
      if (join[a][b] != join[b][a]) rec.fail("join commutative", {a, b}, "a v b != b v a");
      if (meet[a][b] != meet[b][a]) rec.fail("meet commutative", {a, b}, "a ^ b != b ^ a");
      if (join[a][meet[a][b]] != a) rec.fail("absorption", {a, b}, "a v (a ^ b) != a");
      if (meet[a][join[a][b]] != a) rec.fail("absorption", {a, b}, "a ^ (a v b) != a");
      for (std::size_t c = 0; c < n; ++c) {
        if (join[join[a][b]][c] != join[a][join[b][c]]) rec.fail("join associative", {a, b, c}, "");
        if (meet[meet[a][b]][c] != meet[a][meet[b][c]]) rec.fail("meet associative", {a, b, c}, "");
        if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]) {
          rec.fail("distributivity", {a, b, c}, "a ^ (b v c) != (a ^ b) v (a ^ c)");
        }
      }
    }
  }
}

}  // namespace

GeneralizedBooleanAlgebra::GeneralizedBooleanAlgebra(std::vector<std::string> labels, Table join, Table meet,
                                                     std::size_t bottom, Table diff)
    : labels_(std::move(labels)), join_(std::move(join)), meet_(std::move(meet)), diff_(std::move(diff)),
      bottom_(bottom) {
  check_labels(labels_);
  check_table(join_, size(), "join");
  check_table(meet_, size(), "meet");
  check_table(diff_, size(), "diff");
  if (bottom_ >= size()) throw StructuralError("bottom is not in the carrier");
}

GeneralizedBooleanAlgebra GeneralizedBooleanAlgebra::from_family(
    const std::vector<Subset>& family, const std::function<std::string(Subset)>& label) {
  std::vector<Subset> sets = family;
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::map<Subset, std::size_t> index;
  for (std::size_t i = 0; i < sets.size(); ++i) index[sets[i]] = i;
  if (!index.contains(Subset())) throw InvariantError("family does not contain the empty set");
  auto lookup = [&](Subset s, Subset a, Subset b, const char* op) {
    auto it = index.find(s);
    if (it == index.end()) {
      throw InvariantError("family not closed: " + label(a) + " " + op + " " + label(b) + " = " + label(s) +
                           " is missing");
    }
    return it->second;
  };
  const std::size_t n = sets.size();
  Table join(n, std::vector<std::size_t>(n)), meet = join, diff = join;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      join[i][j] = lookup(sets[i] | sets[j], sets[i], sets[j], "union");
      meet[i][j] = lookup(sets[i] & sets[j], sets[i], sets[j], "intersect");
      diff[i][j] = lookup(sets[i] - sets[j], sets[i], sets[j], "minus");
    }
  }
  std::vector<std::string> labels;
  for (auto s : sets) labels.push_back(label(s));
  return {std::move(labels), std::move(join), std::move(meet), index.at(Subset()), std::move(diff)};
}

std::optional<std::size_t> GeneralizedBooleanAlgebra::index_of(const std::string& l) const {
  return find_label(labels_, l);
}

BooleanAlgebra::BooleanAlgebra(std::vector<std::string> labels, Table join, Table meet,
                               std::vector<std::size_t> complement, std::size_t bottom, std::size_t top)
    : labels_(std::move(labels)), join_(std::move(join)), meet_(std::move(meet)),
      complement_(std::move(complement)), bottom_(bottom), top_(top) {
  check_labels(labels_);
  check_table(join_, size(), "join");
  check_table(meet_, size(), "meet");
  if (complement_.size() != size()) throw StructuralError("complement table has the wrong length");
  for (auto c : complement_) {
    if (c >= size()) throw StructuralError("complement table entry out of range");
  }
  if (bottom_ >= size() || top_ >= size()) throw StructuralError("bottom/top not in the carrier");
}

BooleanAlgebra BooleanAlgebra::powerset(std::size_t n, const std::function<std::string(Subset)>& label) {
  if (n > clopen_max_points) {
    throw PreconditionError("powerset of " + std::to_string(n) + " points exceeds the bound of " +
                            std::to_string(clopen_max_points));
  }
  const std::size_t m = std::size_t{1} << n;
  Table join(m, std::vector<std::size_t>(m)), meet = join;
  std::vector<std::size_t> comp(m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = label(Subset(i));
    comp[i] = (m - 1) & ~i;
    for (std::size_t j = 0; j < m; ++j) {
      join[i][j] = i | j;
      meet[i][j] = i & j;
    }
  }
  return {std::move(labels), std::move(join), std::move(meet), std::move(comp), 0, m - 1};
}

std::optional<std::size_t> BooleanAlgebra::index_of(const std::string& l) const { return find_label(labels_, l); }

std::vector<std::size_t> BooleanAlgebra::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (a == bottom_) continue;
    bool minimal = true;
    for (std::size_t b = 0; b < size() && minimal; ++b) {
      if (b != bottom_ && b != a && leq(b, a)) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

ValidationReport gba_validate(const GeneralizedBooleanAlgebra& a) {
  ValidationReport report;
  LawRecorder rec{report};
  lattice_laws(a.join_table(), a.meet_table(), a.bottom(), rec);
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t d = a.diff(x, y);
      if (a.join(d, y) != a.join(x, y)) {
        rec.fail("diff join equation", {x, y},
                 "(" + a.label(x) + " \\ " + a.label(y) + ") v " + a.label(y) + " != " + a.label(x) + " v " +
                     a.label(y));
      }
      if (a.meet(d, y) != a.bottom()) {
        rec.fail("diff meet equation", {x, y},
                 "(" + a.label(x) + " \\ " + a.label(y) + ") ^ " + a.label(y) + " != bottom");
      }
      std::vector<std::size_t> solutions;
      for (std::size_t c = 0; c < n; ++c) {
        if (a.join(c, y) == a.join(x, y) && a.meet(c, y) == a.bottom()) solutions.push_back(c);
      }
      if (solutions.empty()) {
        rec.fail("diff existence", {x, y}, "no c for a=" + a.label(x) + ", b=" + a.label(y));
      } else if (solutions.size() > 1) {
        rec.fail("diff uniqueness", {x, y, solutions[0], solutions[1]},
                 "both " + a.label(solutions[0]) + " and " + a.label(solutions[1]) + " solve a=" + a.label(x) +
                     ", b=" + a.label(y));
      }
    }
  }
  return report;
}

ValidationReport boolean_validate(const BooleanAlgebra& b) {
  ValidationReport report;
  LawRecorder rec{report};
  lattice_laws(b.join_table(), b.meet_table(), b.bottom(), rec);
  for (std::size_t a = 0; a < b.size(); ++a) {
    if (b.join(a, b.top()) != b.top()) rec.fail("top is greatest", {a}, "a v top != top");
    if (b.join(a, b.complement(a)) != b.top()) rec.fail("complement join", {a}, "a v not-a != top");
    if (b.meet(a, b.complement(a)) != b.bottom()) rec.fail("complement meet", {a}, "a ^ not-a != bottom");
  }
  return report;
}

ValidationReport iba_validate(const IdealizedBooleanAlgebra& bi) {
  ValidationReport report = boolean_validate(bi.algebra);
  LawRecorder rec{report};
  const auto& b = bi.algebra;
  if (bi.ideal.size() != b.size()) throw StructuralError("ideal mask has the wrong length");
  if (!bi.in_ideal(b.bottom())) rec.fail("ideal contains bottom", {b.bottom()}, "");
  if (bi.in_ideal(b.top())) rec.fail("ideal is proper", {b.top()}, "top lies in the ideal");
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (bi.in_ideal(x) == bi.in_ideal(b.complement(x))) {
      rec.fail("ideal is maximal", {x},
               "exactly one of " + b.label(x) + " and its complement must lie in the ideal");
    }
    if (!bi.in_ideal(x)) continue;
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (b.leq(y, x) && !bi.in_ideal(y)) rec.fail("ideal is a downset", {x, y}, "");
      if (bi.in_ideal(y) && !bi.in_ideal(b.join(x, y))) rec.fail("ideal closed under joins", {x, y}, "");
    }
  }
  return report;
}

std::size_t gba_diff(const GeneralizedBooleanAlgebra& a, std::size_t x, std::size_t y) {
  if (x >= a.size() || y >= a.size()) throw PreconditionError("element not in the carrier");
  return a.diff(x, y);
}

IdealizedBooleanAlgebra idealize(const GeneralizedBooleanAlgebra& a) {
  const std::size_t n = a.size();
  // Prime tag long enough that no tagged label collides with an original one.
  std::string tag = "'";
  auto collides = [&] {
    return std::any_of(a.labels().begin(), a.labels().end(),
                       [&](const std::string& l) { return a.index_of(l + tag).has_value(); });
  };
  while (collides()) tag += "'";

  std::vector<std::string> labels = a.labels();
  for (std::size_t i = 0; i < n; ++i) labels.push_back(a.label(i) + tag);
  auto primed = [n](std::size_t i) { return i + n; };

  Table join(2 * n, std::vector<std::size_t>(2 * n)), meet = join;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      join[i][j] = a.join(i, j);
      meet[i][j] = a.meet(i, j);
      join[i][primed(j)] = primed(a.diff(j, i));
      join[primed(i)][j] = primed(a.diff(i, j));
      join[primed(i)][primed(j)] = primed(a.meet(i, j));
      meet[i][primed(j)] = a.diff(i, j);
      meet[primed(i)][j] = a.diff(j, i);
      meet[primed(i)][primed(j)] = primed(a.join(i, j));
    }
  }
  std::vector<std::size_t> comp(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    comp[i] = primed(i);
    comp[primed(i)] = i;
  }
  std::vector<bool> ideal(2 * n, false);
  std::fill(ideal.begin(), ideal.begin() + static_cast<std::ptrdiff_t>(n), true);
  return {BooleanAlgebra(std::move(labels), std::move(join), std::move(meet), std::move(comp), a.bottom(),
                         primed(a.bottom())),
          std::move(ideal)};
}

GeneralizedBooleanAlgebra iba_forget(const IdealizedBooleanAlgebra& bi) {
  const auto& b = bi.algebra;
  std::vector<std::size_t> members;
  std::vector<std::size_t> pos(b.size(), 0);
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (bi.in_ideal(x)) {
      pos[x] = members.size();
      members.push_back(x);
    }
  }
  auto restrict = [&](std::size_t r, const std::string& what) {
    if (!bi.in_ideal(r)) throw InvariantError("ideal not closed under " + what + " (" + b.label(r) + ")");
    return pos[r];
  };
  const std::size_t n = members.size();
  Table join(n, std::vector<std::size_t>(n)), meet = join, diff = join;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(b.label(members[i]));
    for (std::size_t j = 0; j < n; ++j) {
      join[i][j] = restrict(b.join(members[i], members[j]), "join");
      meet[i][j] = restrict(b.meet(members[i], members[j]), "meet");
      diff[i][j] = restrict(b.meet(members[i], b.complement(members[j])), "difference");
    }
  }
  if (!bi.in_ideal(b.bottom())) throw InvariantError("ideal does not contain bottom");
  return {std::move(labels), std::move(join), std::move(meet), pos[b.bottom()], std::move(diff)};
}

PointedBooleanSpace stone(const IdealizedBooleanAlgebra& bi) {
  auto report = iba_validate(bi);
  if (!report.valid()) {
    const auto& v = report.violations.front();
    throw InvariantError("not an idealized Boolean algebra: " + v.law + (v.detail.empty() ? "" : " (" + v.detail + ")"));
  }
  const auto& b = bi.algebra;
  std::vector<std::string> points;
  std::optional<std::string> star;
  for (auto a : b.atoms()) {
    points.push_back(b.label(a));
    if (!bi.in_ideal(a)) {
      if (star) throw InvariantError("more than one atom lies outside the ideal");
      star = b.label(a);
    }
  }
  if (!star) throw InvariantError("every atom lies in the ideal; the ideal is not maximal");
  return PointedBooleanSpace(std::move(points), *star);
}

IdealizedBooleanAlgebra clopen(const PointedBooleanSpace& x) {
  auto alg = BooleanAlgebra::powerset(x.size(), [&](Subset s) { return x.format(s); });
  std::vector<bool> ideal(alg.size());
  for (std::size_t i = 0; i < alg.size(); ++i) ideal[i] = !Subset(i).contains(x.star());
  return {std::move(alg), std::move(ideal)};
}

namespace {

MapCheck check_bijection(std::size_t na, std::size_t nb, const std::vector<std::size_t>& map) {
  MapCheck r;
  if (na != nb || map.size() != na) {
    r.detail = "carrier sizes differ (" + std::to_string(na) + " vs " + std::to_string(nb) + ")";
    return r;
  }
  std::vector<bool> hit(nb, false);
  for (std::size_t i = 0; i < na; ++i) {
    if (map[i] >= nb || hit[map[i]]) {
      r.detail = "map is not a bijection at element " + std::to_string(i);
      r.counterexample = std::pair{i, i};
      return r;
    }
    hit[map[i]] = true;
  }
  r.ok = true;
  return r;
}

bool check_binary(const Table& ta, const Table& tb, const std::vector<std::size_t>& map, const char* name,
                  MapCheck& r) {
  for (std::size_t i = 0; i < ta.size(); ++i) {
    for (std::size_t j = 0; j < ta.size(); ++j) {
      if (map[ta[i][j]] != tb[map[i]][map[j]]) {
        r.ok = false;
        r.counterexample = std::pair{i, j};
        r.detail = std::string(name) + " not preserved";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

MapCheck check_gba_isomorphism(const GeneralizedBooleanAlgebra& a, const GeneralizedBooleanAlgebra& b,
                               const std::vector<std::size_t>& map) {
  MapCheck r = check_bijection(a.size(), b.size(), map);
  if (!r.ok) return r;
  if (map[a.bottom()] != b.bottom()) {
    r.ok = false;
    r.counterexample = std::pair{a.bottom(), a.bottom()};
    r.detail = "bottom not preserved";
    return r;
  }
  check_binary(a.join_table(), b.join_table(), map, "join", r) &&
      check_binary(a.meet_table(), b.meet_table(), map, "meet", r) &&
      check_binary(a.diff_table(), b.diff_table(), map, "diff", r);
  return r;
}

MapCheck check_iba_isomorphism(const IdealizedBooleanAlgebra& a, const IdealizedBooleanAlgebra& b,
                               const std::vector<std::size_t>& map) {
  MapCheck r = check_bijection(a.algebra.size(), b.algebra.size(), map);
  if (!r.ok) return r;
  if (!check_binary(a.algebra.join_table(), b.algebra.join_table(), map, "join", r) ||
      !check_binary(a.algebra.meet_table(), b.algebra.meet_table(), map, "meet", r)) {
    return r;
  }
  for (std::size_t i = 0; i < a.algebra.size(); ++i) {
    if (map[a.algebra.complement(i)] != b.algebra.complement(map[i])) {
      r.ok = false;
      r.counterexample = std::pair{i, i};
      r.detail = "complement not preserved";
      return r;
    }
    if (a.in_ideal(i) != b.in_ideal(map[i])) {
      r.ok = false;
      r.counterexample = std::pair{i, i};
      r.detail = "ideal membership not preserved";
      return r;
    }
  }
  return r;
}

namespace {

std::vector<std::size_t> gba_atoms(const GeneralizedBooleanAlgebra& a) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (x == a.bottom()) continue;
    bool minimal = true;
    for (std::size_t y = 0; y < a.size() && minimal; ++y) {
      if (y != a.bottom() && y != x && a.leq(y, x)) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_gba_isomorphism(const GeneralizedBooleanAlgebra& a,
                                                             const GeneralizedBooleanAlgebra& b,
                                                             std::size_t max_atoms, bool* exhausted) {
  if (exhausted) *exhausted = true;
  if (a.size() != b.size()) return std::nullopt;
  auto atoms_a = gba_atoms(a);
  auto atoms_b = gba_atoms(b);
  if (atoms_a.size() != atoms_b.size()) return std::nullopt;
  if (atoms_a.size() > max_atoms) {
    if (exhausted) *exhausted = false;
    return std::nullopt;
  }
  // Each element is identified by the set of atoms below it; this must be a
  // bijection onto subsets for the tables to be those of a powerset.
  auto atom_sets = [](const GeneralizedBooleanAlgebra& g, const std::vector<std::size_t>& atoms) {
    std::vector<std::uint64_t> out(g.size(), 0);
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (g.leq(atoms[k], x)) out[x] |= std::uint64_t{1} << k;
      }
    }
    return out;
  };
  auto sets_a = atom_sets(a, atoms_a);
  auto sets_b = atom_sets(b, atoms_b);
  std::map<std::uint64_t, std::size_t> by_set_b;
  for (std::size_t y = 0; y < b.size(); ++y) by_set_b.emplace(sets_b[y], y);

  std::vector<std::size_t> perm(atoms_a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> map(a.size());
    bool complete = true;
    for (std::size_t x = 0; x < a.size() && complete; ++x) {
      std::uint64_t image = 0;
      for (std::size_t k = 0; k < perm.size(); ++k) {
        if ((sets_a[x] >> k) & 1U) image |= std::uint64_t{1} << perm[k];
      }
      auto it = by_set_b.find(image);
      if (it == by_set_b.end()) {
        complete = false;
      } else {
        map[x] = it->second;
      }
    }
    if (complete && check_gba_isomorphism(a, b, map).ok) return map;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> find_pointed_bijection(const PointedBooleanSpace& a,
                                                               const PointedBooleanSpace& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<std::size_t> map(a.size());
  std::vector<bool> used(b.size(), false);
  map[a.star()] = b.star();
  used[b.star()] = true;
  // Same label where possible, then fill the rest in order.
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == a.star()) continue;
    auto j = b.index_of(a.label(i));
    if (j && !used[*j]) {
      map[i] = *j;
      used[*j] = true;
    } else {
      pending.push_back(i);
    }
  }
  std::size_t next = 0;
  for (auto i : pending) {
    while (used[next]) ++next;
    map[i] = next;
    used[next] = true;
  }
  return map;
}

}  // namespace trunclab::boolean
