#include "trunclab/props/generators.hpp"

#include <algorithm>
#include <set>

#include "trunclab/error.hpp"

namespace trunclab::props {

boolean::SpacePtr random_space(Sampler& rng, std::size_t min_points, std::size_t max_points) {
  const auto k = static_cast<std::size_t>(
      rng.uniform(static_cast<std::int64_t>(min_points), static_cast<std::int64_t>(max_points)));
  std::vector<std::string> pts = {"*"};
  for (std::size_t i = 1; i < k; ++i) pts.push_back(std::to_string(i));
  return boolean::make_space(pts, "*");
}

trunc::SimpleElement random_simple(const boolean::SpacePtr& x, Sampler& rng, bool nonnegative) {
  std::vector<Rational> v;
  for (std::size_t i = 1; i < x->size(); ++i) {
    v.push_back(rng.coin(1, 5) ? Rational(0) : nonnegative ? rng.nonnegative(8, 4) : rng.rational(8, 4));
  }
  return trunc::SimpleElement::from_tuple(x, v);
}

trunc::SimpleElement random_unit_simple(const boolean::SpacePtr& x, Sampler& rng) {
  std::vector<Rational> v;
  for (std::size_t i = 1; i < x->size(); ++i) v.push_back(rng.coin(1, 5) ? Rational(0) : rng.unit(4));
  return trunc::SimpleElement::from_tuple(x, v);
}

std::vector<Subset> random_components(const boolean::SpacePtr& x, Sampler& rng) {
  // A random block per non-star point, then all unions of blocks.
  const std::size_t n = x->size();
  std::vector<Subset> blocks(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == x->star()) continue;
    auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    blocks[b] = blocks[b].with(i);
  }
  std::vector<Subset> nonempty;
  for (auto b : blocks) {
    if (!b.empty()) nonempty.push_back(b);
  }
  std::vector<Subset> family;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << nonempty.size()); ++m) {
    Subset u;
    for (std::size_t j = 0; j < nonempty.size(); ++j) {
      if (m >> j & 1) u = u | nonempty[j];
    }
    family.push_back(u);
  }
  return family;
}

std::vector<Subset> random_closed_family(Sampler& rng, std::size_t max_points, std::size_t max_size) {
  while (true) {
    const auto pts = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_points)));
    std::set<Subset> fam = {Subset()};
    const auto gens = rng.uniform(1, 4);
    for (std::int64_t g = 0; g < gens; ++g) fam.insert(Subset(rng.next() & Subset::first_n(pts).bits()));
    bool grew = true;
    while (grew && fam.size() <= max_size) {
      grew = false;
      std::vector<Subset> cur(fam.begin(), fam.end());
      for (auto a : cur) {
        for (auto b : cur) {
          for (auto c : {a | b, a & b, a - b}) grew |= fam.insert(c).second;
        }
      }
    }
    if (fam.size() <= max_size) return {fam.begin(), fam.end()};
  }
}

boolean::GeneralizedBooleanAlgebra random_gba(Sampler& rng, std::size_t max_size) {
  auto fam = random_closed_family(rng, 6, max_size);
  return boolean::GeneralizedBooleanAlgebra::from_family(fam, [](Subset s) {
    std::string l = "{";
    for (auto i : s.indices()) l += (l.size() > 1 ? "," : "") + std::to_string(i);
    return l + "}";
  });
}

namespace {

frame::FramePtr random_chain(Sampler& rng, std::int64_t max_len) {
  std::vector<std::string> labels;
  const auto len = rng.uniform(2, max_len);
  for (std::int64_t i = 0; i < len; ++i) labels.push_back("c" + std::to_string(i));
  return frame::chain(labels);
}

}  // namespace

frame::FramePtr random_frame(Sampler& rng, std::size_t max_size) {
  while (true) {
    frame::FramePtr f;
    switch (rng.uniform(0, 4)) {
      case 0: f = random_chain(rng, 5); break;
      case 1:
      case 2: {
        auto a = random_chain(rng, 4);
        auto b = random_chain(rng, 5);
        f = frame::product(*a, *b);
        if (rng.coin(1, 3)) f = frame::product(*f, *random_chain(rng, 2));
        break;
      }
      case 3: {
        static const std::vector<std::string> names = {"a", "b", "c", "d"};
        f = frame::boolean_frame({names.begin(), names.begin() + rng.uniform(1, 4)});
        break;
      }
      default: {
        const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
        std::vector<std::pair<std::size_t, std::size_t>> order;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.coin(1, 3)) order.emplace_back(i, j);
          }
        }
        try {
          f = frame::downsets(n, order, max_size);
        } catch (const PreconditionError&) {
          continue;
        }
      }
    }
    if (f->size() <= max_size) return f;
  }
}

frame::PointedPtr random_pointed(const frame::FramePtr& f, Sampler& rng) {
  auto ji = f->join_irreducibles();
  return frame::pointed_at(f, ji[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ji.size()) - 1))]);
}

std::vector<frame::Elem> central_atoms(const frame::FiniteFrame& f) {
  auto comp = f.complemented_elements();
  std::vector<frame::Elem> atoms;
  for (auto x : comp) {
    if (x == f.bottom()) continue;
    bool minimal = std::none_of(comp.begin(), comp.end(),
                                [&](frame::Elem y) { return y != f.bottom() && y != x && f.leq(y, x); });
    if (minimal) atoms.push_back(x);
  }
  return atoms;
}

frame::FrameReal random_frame_real(const frame::PointedPtr& p, Sampler& rng, bool nonnegative, std::size_t max_values) {
  std::vector<Rational> pool;
  for (std::size_t i = 0; i < max_values; ++i) pool.push_back(nonnegative ? rng.nonnegative(8, 3) : rng.rational(8, 3));
  std::vector<frame::Cell> cells;
  for (auto a : central_atoms(p->frame())) {
    Rational v = p->point(a) || rng.coin(1, 4)
                     ? Rational(0)
                     : pool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))];
    cells.push_back({v, a});
  }
  return {p, cells};
}

frame::FrameReal random_extended_real(const frame::PointedPtr& p, Sampler& rng) {
  std::vector<frame::Cell> cells;
  for (auto a : central_atoms(p->frame())) {
    ExtRational v;
    switch (rng.uniform(0, 5)) {
      case 0: v = ExtRational::neg_infinity(); break;
      case 1: v = ExtRational::pos_infinity(); break;
      default: v = rng.rational(8, 3);
    }
    cells.push_back({v, a});
  }
  return {p, cells, frame::FrameReal::Kind::extended};
}

namespace {

frame::FrameQuotient simple_quotient(const frame::FramePtr& f, Sampler& rng) {
  const auto a = static_cast<frame::Elem>(rng.uniform(0, static_cast<std::int64_t>(f->size()) - 1));
  switch (rng.uniform(0, 3)) {
    case 0: return frame::identity_quotient(f);
    case 1: return frame::open_quotient(f, a);
    case 2: return frame::closed_quotient(f, a);
    default: return frame::booleanization(f);
  }
}

}  // namespace

frame::FrameQuotient random_quotient(Sampler& rng, std::size_t max_size) {
  while (true) {
    if (rng.coin(1, 3) && max_size >= 4) {
      auto a = simple_quotient(random_frame(rng, 5), rng);
      auto b = simple_quotient(random_frame(rng, 5), rng);
      if (a.source->size() * b.source->size() > max_size) continue;
      return frame::product_quotient(a, b);
    }
    auto q = simple_quotient(random_frame(rng, max_size), rng);
    // A one-element target has no point.
    if (q.target->size() > 1) return q;
  }
}

frame::FrameSurjection random_surjection(Sampler& rng, std::size_t max_size) {
  while (true) {
    auto q = random_quotient(rng, max_size);
    if (q.target->size() < 2) continue;
    auto ji = q.target->join_irreducibles();
    return frame::FrameSurjection::pointed(
        q, ji[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ji.size()) - 1))]);
  }
}

}  // namespace trunclab::props
