#include "trunclab/frame/frame.hpp"

#include <algorithm>
#include <set>

#include "trunclab/error.hpp"

namespace trunclab::frame {

namespace {

using Order = std::vector<std::vector<bool>>;

Order closure(std::size_t n, const std::vector<std::pair<Elem, Elem>>& covers) {
  Order le(n, std::vector<bool>(n, false));
  for (Elem i = 0; i < n; ++i) le[i][i] = true;
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw StructuralError("order pair refers to element " + std::to_string(std::max(a, b)));
    le[a][b] = true;
  }
  for (Elem k = 0; k < n; ++k) {
    for (Elem i = 0; i < n; ++i) {
      if (!le[i][k]) continue;
      for (Elem j = 0; j < n; ++j) {
        if (le[k][j]) le[i][j] = true;
      }
    }
  }
  return le;
}

// Least upper bound of a and b, if any.
std::optional<Elem> lub(const Order& le, Elem a, Elem b) {
  const std::size_t n = le.size();
  std::optional<Elem> best;
  for (Elem c = 0; c < n; ++c) {
    if (!le[a][c] || !le[b][c]) continue;
    if (!best || le[c][*best]) best = c;
  }
  if (!best) return std::nullopt;
  for (Elem c = 0; c < n; ++c) {
    if (le[a][c] && le[b][c] && !le[*best][c]) return std::nullopt;
  }
  return best;
}

std::optional<Elem> glb(const Order& le, Elem a, Elem b) {
  const std::size_t n = le.size();
  std::optional<Elem> best;
  for (Elem c = 0; c < n; ++c) {
    if (!le[c][a] || !le[c][b]) continue;
    if (!best || le[*best][c]) best = c;
  }
  if (!best) return std::nullopt;
  for (Elem c = 0; c < n; ++c) {
    if (le[c][a] && le[c][b] && !le[c][*best]) return std::nullopt;
  }
  return best;
}

struct Built {
  FrameCheck check;
  Order le;
  Table join, meet;
};

Built build(const std::vector<std::string>& labels, const std::vector<std::pair<Elem, Elem>>& covers) {
  Built b;
  const std::size_t n = labels.size();
  if (n == 0) throw StructuralError("empty frame");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw StructuralError("duplicate frame element '" + l + "'");
  }
  b.le = closure(n, covers);
  auto fail = [&](std::string law, std::vector<Elem> w, std::string detail) {
    b.check = {false, std::move(law), std::move(w), std::move(detail)};
    return b;
  };
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = i + 1; j < n; ++j) {
      if (b.le[i][j] && b.le[j][i]) {
        return fail("partial order", {i, j}, labels[i] + " and " + labels[j] + " lie below each other");
      }
    }
  }
  b.join.assign(n, std::vector<Elem>(n));
  b.meet = b.join;
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      auto u = lub(b.le, i, j);
      if (!u) return fail("lattice", {i, j}, "no join of " + labels[i] + " and " + labels[j]);
      auto d = glb(b.le, i, j);
      if (!d) return fail("lattice", {i, j}, "no meet of " + labels[i] + " and " + labels[j]);
      b.join[i][j] = *u;
      b.meet[i][j] = *d;
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (b.meet[x][b.join[y][z]] != b.join[b.meet[x][y]][b.meet[x][z]]) {
          return fail("distributivity", {x, y, z},
                      labels[x] + " ^ (" + labels[y] + " v " + labels[z] + ") != (" + labels[x] + " ^ " + labels[y] +
                          ") v (" + labels[x] + " ^ " + labels[z] + ")");
        }
      }
    }
  }
  return b;
}

std::vector<std::pair<Elem, Elem>> resolve(const std::vector<std::string>& labels,
                                           const std::vector<std::pair<std::string, std::string>>& covers) {
  auto find = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw StructuralError("unknown frame element '" + l + "'");
    return static_cast<Elem>(it - labels.begin());
  };
  std::vector<std::pair<Elem, Elem>> out;
  for (const auto& [a, b] : covers) out.emplace_back(find(a), find(b));
  return out;
}

}  // namespace

FrameCheck FiniteFrame::check(const std::vector<std::string>& labels,
                              const std::vector<std::pair<Elem, Elem>>& covers) {
  return build(labels, covers).check;
}

FiniteFrame::FiniteFrame(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& covers)
    : FiniteFrame(labels, resolve(labels, covers)) {}

FiniteFrame::FiniteFrame(std::vector<std::string> labels, const std::vector<std::pair<Elem, Elem>>& covers)
    : labels_(std::move(labels)) {
  auto b = build(labels_, covers);
  if (!b.check.ok) throw InvariantError("not a frame: " + b.check.law + " (" + b.check.detail + ")");
  leq_ = std::move(b.le);
  join_ = std::move(b.join);
  meet_ = std::move(b.meet);
  const std::size_t n = size();
  for (Elem i = 0; i < n; ++i) {
    top_ = join_[top_][i];
    bottom_ = meet_[bottom_][i];
  }
  implies_.assign(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem c = 0; c < n; ++c) {
      Elem r = bottom_;
      for (Elem z = 0; z < n; ++z) {
        if (leq_[meet_[z][a]][c]) r = join_[r][z];
      }
      implies_[a][c] = r;
    }
  }
}

std::optional<Elem> FiniteFrame::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Elem>(it - labels_.begin());
}

std::vector<Elem> FiniteFrame::complemented_elements() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < size(); ++x) {
    if (complemented(x)) out.push_back(x);
  }
  return out;
}

std::vector<Elem> FiniteFrame::join_irreducibles() const {
  std::vector<Elem> out;
  for (Elem p = 0; p < size(); ++p) {
    if (p == bottom_) continue;
    // Join of everything strictly below p.
    Elem below = bottom_;
    for (Elem x = 0; x < size(); ++x) {
      if (x != p && leq_[x][p]) below = join_[below][x];
    }
    if (below != p) out.push_back(p);
  }
  return out;
}

Elem FiniteFrame::join_all(const std::vector<Elem>& xs) const {
  Elem r = bottom_;
  for (auto x : xs) r = join_[r][x];
  return r;
}

Elem FiniteFrame::meet_all(const std::vector<Elem>& xs) const {
  Elem r = top_;
  for (auto x : xs) r = meet_[r][x];
  return r;
}

std::vector<std::pair<Elem, Elem>> FiniteFrame::hasse() const {
  std::vector<std::pair<Elem, Elem>> out;
  const std::size_t n = size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (a == b || !leq_[a][b]) continue;
      bool cover = true;
      for (Elem c = 0; c < n && cover; ++c) {
        if (c != a && c != b && leq_[a][c] && leq_[c][b]) cover = false;
      }
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

FramePtr chain(std::vector<std::string> labels) {
  std::vector<std::pair<Elem, Elem>> covers;
  for (Elem i = 0; i + 1 < labels.size(); ++i) covers.emplace_back(i, i + 1);
  return std::make_shared<const FiniteFrame>(std::move(labels), covers);
}

FramePtr boolean_frame(const std::vector<std::string>& atoms) {
  const std::size_t k = atoms.size();
  if (k > 4) throw PreconditionError("boolean frames are limited to 4 atoms");
  std::vector<std::string> labels;
  for (std::size_t m = 0; m < (std::size_t{1} << k); ++m) {
    std::string l = "{";
    for (std::size_t i = 0; i < k; ++i) {
      if (m >> i & 1) l += (l.size() > 1 ? "," : "") + atoms[i];
    }
    labels.push_back(l + "}");
  }
  std::vector<std::pair<Elem, Elem>> covers;
  for (std::size_t m = 0; m < labels.size(); ++m) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!(m >> i & 1)) covers.emplace_back(m, m | (std::size_t{1} << i));
    }
  }
  return std::make_shared<const FiniteFrame>(std::move(labels), covers);
}

FramePtr product(const FiniteFrame& a, const FiniteFrame& b) {
  const std::size_t nb = b.size();
  std::vector<std::string> labels;
  for (Elem i = 0; i < a.size(); ++i) {
    for (Elem j = 0; j < nb; ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  }
  std::vector<std::pair<Elem, Elem>> covers;
  for (auto [x, y] : a.hasse()) {
    for (Elem j = 0; j < nb; ++j) covers.emplace_back(x * nb + j, y * nb + j);
  }
  for (auto [x, y] : b.hasse()) {
    for (Elem i = 0; i < a.size(); ++i) covers.emplace_back(i * nb + x, i * nb + y);
  }
  return std::make_shared<const FiniteFrame>(std::move(labels), covers);
}

FramePtr downsets(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& order,
                  std::size_t max_size) {
  if (n > 6) throw PreconditionError("downset frames take at most 6 points");
  auto le = closure(n, order);
  std::vector<std::size_t> sets;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    bool down = true;
    for (std::size_t j = 0; j < n && down; ++j) {
      if (!(m >> j & 1)) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (le[i][j] && !(m >> i & 1)) down = false;
      }
    }
    if (down) sets.push_back(m);
  }
  if (sets.size() > max_size) {
    throw PreconditionError("poset has " + std::to_string(sets.size()) + " downsets, more than " +
                            std::to_string(max_size));
  }
  std::vector<std::string> labels;
  for (auto m : sets) {
    std::string l = "{";
    for (std::size_t i = 0; i < n; ++i) {
      if (m >> i & 1) l += (l.size() > 1 ? "," : "") + std::to_string(i);
    }
    labels.push_back(l + "}");
  }
  std::vector<std::pair<Elem, Elem>> covers;
  for (Elem a = 0; a < sets.size(); ++a) {
    for (Elem b = 0; b < sets.size(); ++b) {
      if (a != b && (sets[a] & ~sets[b]) == 0) covers.emplace_back(a, b);
    }
  }
  return std::make_shared<const FiniteFrame>(std::move(labels), covers);
}

PointedFiniteFrame::PointedFiniteFrame(FramePtr frame, std::vector<bool> point)
    : frame_(std::move(frame)), point_(std::move(point)) {
  const auto& f = *frame_;
  if (point_.size() != f.size()) throw StructuralError("point mask has the wrong length");
  if (!point_[f.top()]) throw InvariantError("point sends top to bottom");
  if (point_[f.bottom()]) throw InvariantError("point sends bottom to top");
  for (Elem a = 0; a < f.size(); ++a) {
    for (Elem b = 0; b < f.size(); ++b) {
      if (point_[f.meet(a, b)] != (point_[a] && point_[b])) {
        throw InvariantError("point does not preserve the meet of " + f.label(a) + " and " + f.label(b));
      }
      if (point_[f.join(a, b)] != (point_[a] || point_[b])) {
        throw InvariantError("point does not preserve the join of " + f.label(a) + " and " + f.label(b));
      }
    }
  }
}

PointedFiniteFrame PointedFiniteFrame::at(FramePtr frame, Elem p) {
  std::vector<bool> mask(frame->size());
  for (Elem x = 0; x < frame->size(); ++x) mask[x] = frame->leq(p, x);
  return {std::move(frame), std::move(mask)};
}

Elem PointedFiniteFrame::point_generator() const {
  Elem g = frame_->top();
  for (Elem x = 0; x < frame_->size(); ++x) {
    if (point_[x]) g = frame_->meet(g, x);
  }
  return g;
}

}  // namespace trunclab::frame
