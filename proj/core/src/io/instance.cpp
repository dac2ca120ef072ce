#include "trunclab/io/instance.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <fstream>
#include <sstream>

#include "trunclab/error.hpp"

namespace trunclab::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool same_trunc(const trunc::SimpleTrunc& a, const trunc::SimpleTrunc& b) {
  auto fa = a.family(), fb = b.family();
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  return *a.space() == *b.space() && fa == fb;
}

bool same_kernel(const kernel::KernelSpec& a, const kernel::KernelSpec& b) {
  if (a.index() != b.index()) return false;
  if (auto* x = std::get_if<kernel::SimpleKernel>(&a)) {
    const auto& y = std::get<kernel::SimpleKernel>(b);
    return same_trunc(x->model(), y.model()) && *x == y;
  }
  const auto& x = std::get<kernel::SeqKernel>(a);
  const auto& y = std::get<kernel::SeqKernel>(b);
  return x.model() == y.model() && x == y;
}

// Equal as labelled algebras; element order may differ.
bool same_algebra(const boolean::GeneralizedBooleanAlgebra& a, const boolean::GeneralizedBooleanAlgebra& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> to_b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto j = b.index_of(a.label(i));
    if (!j) return false;
    to_b[i] = *j;
  }
  if (to_b[a.bottom()] != b.bottom()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (to_b[a.join(i, j)] != b.join(to_b[i], to_b[j]) || to_b[a.meet(i, j)] != b.meet(to_b[i], to_b[j]) ||
          to_b[a.diff(i, j)] != b.diff(to_b[i], to_b[j])) {
        return false;
      }
    }
  }
  return true;
}

bool same(const Object& a, const Object& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [&](const boolean::SpacePtr& x) { return *x == *std::get<boolean::SpacePtr>(b); },
          [&](const trunc::SimpleElement& x) { return x == std::get<trunc::SimpleElement>(b); },
          [&](const Family& x) {
            const auto& y = std::get<Family>(b);
            return x.space == y.space && x.sets == y.sets;
          },
          [&](const trunc::SimpleTrunc& x) { return same_trunc(x, std::get<trunc::SimpleTrunc>(b)); },
          [&](const Sequence& x) {
            const auto& y = std::get<Sequence>(b);
            return x.kind == y.kind && x.stable == y.stable && x.term_names == y.term_names;
          },
          [&](const Gba& x) { return same_algebra(x.algebra, std::get<Gba>(b).algebra); },
          [&](const frame::FramePtr& x) { return *x == *std::get<frame::FramePtr>(b); },
          [&](const frame::PointedPtr& x) { return *x == *std::get<frame::PointedPtr>(b); },
          [&](const frame::FrameReal& x) {
            const auto& y = std::get<frame::FrameReal>(b);
            return x == y && x.kind() == y.kind();
          },
          [&](const frame::FrameSurjection& x) {
            const auto& y = std::get<frame::FrameSurjection>(b);
            return *x.source() == *y.source() && *x.target() == *y.target() && x.map() == y.map();
          },
          [&](const seq::SeqTrunc& x) { return x == std::get<seq::SeqTrunc>(b); },
          [&](const seq::TailElement& x) { return x == std::get<seq::TailElement>(b); },
          [&](const Kernel& x) {
            const auto& y = std::get<Kernel>(b);
            return x.model == y.model && same_kernel(x.spec, y.spec);
          },
      },
      a);
}

// Whitespace-separated tokens; a token opened by '{' or '[' runs to its
// matching bracket, spaces included.
std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    int depth = 0;
    while (j < line.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(line[j])))) {
      if (line[j] == '{' || line[j] == '[') ++depth;
      if (line[j] == '}' || line[j] == ']') --depth;
      ++j;
    }
    if (depth > 0) throw StructuralError("unbalanced bracket in '" + std::string(line.substr(i)) + "'");
    out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::pair<std::string, std::string> pair_at(const std::string& tok, char sep) {
  auto pos = tok.find(sep);
  if (pos == std::string::npos || pos == 0 || pos + 1 == tok.size()) {
    throw StructuralError("expected a" + std::string(1, sep) + "b, got '" + tok + "'");
  }
  return {tok.substr(0, pos), tok.substr(pos + 1)};
}

// "{a,b}" -> labels.
std::vector<std::string> set_labels(const std::string& tok) {
  if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}') throw StructuralError("expected a set, got '" + tok + "'");
  auto inner = tok.substr(1, tok.size() - 2);
  if (trim(inner).empty()) return {};
  std::vector<std::string> out;
  for (auto& p : split(inner, ',')) out.push_back(trim(p));
  return out;
}

void check_label(const std::string& l) {
  if (l.empty() || l.find_first_of(" \t:<") != std::string::npos) {
    throw StructuralError("bad label '" + l + "'");
  }
}

class Cursor {
public:
  Cursor(std::vector<std::string> toks) : toks_(std::move(toks)) {}
  bool done() const { return i_ >= toks_.size(); }
  const std::string& peek() const {
    if (done()) throw StructuralError("unexpected end of statement");
    return toks_[i_];
  }
  std::string next() {
    const auto& t = peek();
    ++i_;
    return t;
  }
  bool accept(const std::string& word) {
    if (!done() && toks_[i_] == word) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(const std::string& word) {
    if (!accept(word)) throw StructuralError("expected '" + word + "'" + (done() ? "" : ", got '" + peek() + "'"));
  }
  // Tokens up to (not including) one of the stop words.
  std::vector<std::string> until(std::initializer_list<const char*> stops) {
    std::vector<std::string> out;
    while (!done() && std::none_of(stops.begin(), stops.end(), [&](const char* s) { return toks_[i_] == s; })) {
      out.push_back(toks_[i_++]);
    }
    return out;
  }
  std::vector<std::string> rest() { return until({}); }
  void finish() const {
    if (!done()) throw StructuralError("unexpected '" + toks_[i_] + "'");
  }

private:
  std::vector<std::string> toks_;
  std::size_t i_ = 0;
};

class Parser {
public:
  Instance inst;

  void statement(Cursor& c, std::string& name) {
    const auto kw = c.next();
    name = c.next();
    check_label(name);
    if (kw == "space") return space(c, name);
    if (kw == "element") return element(c, name);
    if (kw == "family") return family(c, name);
    if (kw == "trunc") return trunc_(c, name);
    if (kw == "sequence") return sequence(c, name);
    if (kw == "gba") return gba(c, name);
    if (kw == "frame") return frame_(c, name);
    if (kw == "pointed") return pointed(c, name);
    if (kw == "real") return real(c, name);
    if (kw == "surjection") return surjection(c, name);
    if (kw == "seqtrunc") return seqtrunc(c, name);
    if (kw == "tail") return tail(c, name);
    if (kw == "kernel") return kernel_(c, name);
    throw StructuralError("unknown statement '" + kw + "'");
  }

private:
  template <class T>
  const T& ref(const std::string& name, const char* what) {
    if (!inst.has(name)) throw StructuralError("unresolved reference '" + name + "'");
    auto* p = inst.find<T>(name);
    if (!p) throw StructuralError("'" + name + "' is not a " + what);
    return *p;
  }

  void space(Cursor& c, const std::string& name) {
    c.expect("points");
    auto pts = c.until({"star"});
    c.expect("star");
    auto star = c.next();
    c.finish();
    for (const auto& p : pts) check_label(p);
    inst.add(name, boolean::make_space(pts, star));
  }

  void element(Cursor& c, const std::string& name) {
    c.expect("on");
    const auto& sp = ref<boolean::SpacePtr>(c.next(), "space");
    c.expect("=");
    std::map<std::string, Rational> vals;
    for (const auto& t : c.rest()) {
      auto [p, v] = pair_at(t, ':');
      if (!vals.emplace(p, parse_rational(v)).second) throw StructuralError("point '" + p + "' given twice");
    }
    inst.add(name, trunc::SimpleElement::from_map(sp, vals));
  }

  Subset subset_of(const boolean::PointedBooleanSpace& sp, const std::string& tok) {
    Subset s;
    for (const auto& l : set_labels(tok)) {
      auto i = sp.index_of(l);
      if (!i) throw StructuralError("'" + l + "' is not a point of the space");
      s = s.with(*i);
    }
    return s;
  }

  void family(Cursor& c, const std::string& name) {
    c.expect("on");
    auto sname = c.next();
    const auto& sp = ref<boolean::SpacePtr>(sname, "space");
    c.expect("=");
    Family f{sname, {}};
    for (const auto& t : c.rest()) f.sets.push_back(subset_of(*sp, t));
    inst.add(name, std::move(f));
  }

  void trunc_(Cursor& c, const std::string& name) {
    c.expect("on");
    auto sname = c.next();
    const auto& sp = ref<boolean::SpacePtr>(sname, "space");
    if (c.done()) return inst.add(name, trunc::lc(sp));
    if (c.accept("family")) {
      const auto& f = ref<Family>(c.next(), "family");
      c.finish();
      if (f.space != sname) throw StructuralError("family lives on '" + f.space + "', not '" + sname + "'");
      return inst.add(name, trunc::SimpleTrunc(sp, f.sets));
    }
    c.expect("sets");
    std::vector<Subset> sets;
    for (const auto& t : c.rest()) sets.push_back(subset_of(*sp, t));
    inst.add(name, trunc::SimpleTrunc(sp, sets));
  }

  void sequence(Cursor& c, const std::string& name) {
    Sequence s;
    s.stable = c.accept("stable");
    c.expect("=");
    s.term_names = c.rest();
    if (s.term_names.empty()) throw StructuralError("empty sequence");
    const auto& first = inst.get(s.term_names[0]);
    if (std::holds_alternative<trunc::SimpleElement>(first)) {
      s.kind = Sequence::Kind::simple;
    } else if (std::holds_alternative<frame::FrameReal>(first)) {
      s.kind = Sequence::Kind::frame;
    } else if (std::holds_alternative<seq::TailElement>(first)) {
      s.kind = Sequence::Kind::tail;
    } else {
      throw StructuralError("sequence terms must be elements, reals or tails");
    }
    for (const auto& t : s.term_names) {
      switch (s.kind) {
        case Sequence::Kind::simple: {
          const auto& e = ref<trunc::SimpleElement>(t, "element");
          if (!s.simple.empty()) trunc::require_same_space(s.simple[0], e);
          s.simple.push_back(e);
          break;
        }
        case Sequence::Kind::frame: {
          const auto& r = ref<frame::FrameReal>(t, "real");
          if (!s.reals.empty() && !(*r.pointed() == *s.reals[0].pointed())) {
            throw StructuralError("sequence terms live on different frames");
          }
          s.reals.push_back(r);
          break;
        }
        case Sequence::Kind::tail: s.tails.push_back(ref<seq::TailElement>(t, "tail")); break;
      }
    }
    inst.add(name, std::move(s));
  }

  void gba(Cursor& c, const std::string& name) {
    if (c.accept("sets")) {
      auto toks = c.rest();
      std::vector<std::string> universe;
      std::vector<std::vector<std::string>> sets;
      for (const auto& t : toks) {
        sets.push_back(set_labels(t));
        for (const auto& l : sets.back()) {
          check_label(l);
          if (std::find(universe.begin(), universe.end(), l) == universe.end()) universe.push_back(l);
        }
      }
      if (universe.size() > 16) throw StructuralError("set families are limited to 16 points");
      std::vector<Subset> family;
      for (const auto& s : sets) {
        Subset x;
        for (const auto& l : s) x = x.with(std::find(universe.begin(), universe.end(), l) - universe.begin());
        family.push_back(x);
      }
      // Each set keeps the label it was first written with.
      std::map<Subset, std::string> written;
      for (std::size_t i = 0; i < family.size(); ++i) {
        std::string l;
        for (char ch : toks[i]) {
          if (!std::isspace(static_cast<unsigned char>(ch))) l += ch;
        }
        written.emplace(family[i], l);
      }
      auto label = [&](Subset s) {
        if (auto it = written.find(s); it != written.end()) return it->second;
        std::string out = "{";
        for (auto i : s.indices()) out += (out.size() > 1 ? "," : "") + universe[i];
        return out + "}";
      };
      return inst.add(name, Gba{boolean::GeneralizedBooleanAlgebra::from_family(family, label), universe});
    }
    c.expect("elements");
    auto labels = c.until({"bottom"});
    for (const auto& l : labels) check_label(l);
    c.expect("bottom");
    auto bottom = c.next();
    auto index = [&](const std::string& l) -> std::size_t {
      auto it = std::find(labels.begin(), labels.end(), l);
      if (it == labels.end()) throw StructuralError("unknown element '" + l + "'");
      return it - labels.begin();
    };
    auto table = [&](const char* word) {
      c.expect(word);
      boolean::Table t;
      std::vector<std::size_t> row;
      for (const auto& tok : c.until({"join", "meet", "diff"})) {
        if (tok == "/") {
          t.push_back(std::move(row));
          row.clear();
        } else {
          row.push_back(index(tok));
        }
      }
      t.push_back(std::move(row));
      return t;
    };
    auto join = table("join");
    auto meet = table("meet");
    auto diff = table("diff");
    c.finish();
    inst.add(name, Gba{boolean::GeneralizedBooleanAlgebra(labels, join, meet, index(bottom), diff), {}});
  }

  void frame_(Cursor& c, const std::string& name) {
    c.expect("elements");
    auto labels = c.until({"covers"});
    for (const auto& l : labels) check_label(l);
    std::vector<std::pair<std::string, std::string>> covers;
    if (c.accept("covers")) {
      for (const auto& t : c.rest()) covers.push_back(pair_at(t, '<'));
    }
    inst.add(name, std::make_shared<const frame::FiniteFrame>(labels, covers));
  }

  frame::Elem elem(const frame::FiniteFrame& f, const std::string& l) {
    auto i = f.index_of(l);
    if (!i) throw StructuralError("'" + l + "' is not an element of the frame");
    return *i;
  }

  void pointed(Cursor& c, const std::string& name) {
    c.expect("frame");
    const auto& f = ref<frame::FramePtr>(c.next(), "frame");
    c.expect("point");
    auto p = elem(*f, c.next());
    c.finish();
    inst.add(name, frame::pointed_at(f, p));
  }

  void real(Cursor& c, const std::string& name) {
    c.expect("on");
    const auto& p = ref<frame::PointedPtr>(c.next(), "pointed frame");
    const bool extended = c.accept("extended");
    c.expect("=");
    std::vector<frame::Cell> cells;
    for (const auto& t : c.rest()) {
      auto [v, x] = pair_at(t, ':');
      cells.push_back({parse_ext_rational(v), elem(p->frame(), x)});
    }
    inst.add(name, frame::FrameReal(p, cells, extended ? frame::FrameReal::Kind::extended : frame::FrameReal::Kind::real));
  }

  void surjection(Cursor& c, const std::string& name) {
    c.expect("from");
    const auto& s = ref<frame::PointedPtr>(c.next(), "pointed frame");
    c.expect("to");
    const auto& t = ref<frame::PointedPtr>(c.next(), "pointed frame");
    c.expect("map");
    std::vector<frame::Elem> map(s->frame().size(), s->frame().size());
    for (const auto& tok : c.rest()) {
      auto [a, b] = pair_at(tok, ':');
      map[elem(s->frame(), a)] = elem(t->frame(), b);
    }
    for (frame::Elem x = 0; x < map.size(); ++x) {
      if (map[x] == s->frame().size()) throw StructuralError("no image given for '" + s->frame().label(x) + "'");
    }
    inst.add(name, frame::FrameSurjection(s, t, map));
  }

  void seqtrunc(Cursor& c, const std::string& name) {
    if (c.accept("zero")) {
      c.finish();
      return inst.add(name, seq::SeqTrunc::zero_trunc());
    }
    c.expect("degree");
    auto d = parse_rational(c.next());
    c.finish();
    if (d.get_den() != 1 || d < 0 || d > 8) throw StructuralError("degree must be an integer in [0, 8]");
    inst.add(name, seq::SeqTrunc(static_cast<std::size_t>(d.get_num().get_ui())));
  }

  void tail(Cursor& c, const std::string& name) {
    c.expect("=");
    auto toks = c.rest();
    if (toks.size() != 1) throw StructuralError("expected one {correction: [...], tail: [...]} block");
    inst.add(name, parse_tail(toks[0]));
  }

  void kernel_(Cursor& c, const std::string& name) {
    c.expect("on");
    auto mname = c.next();
    if (!inst.has(mname)) throw StructuralError("unresolved reference '" + mname + "'");
    if (auto* t = inst.find<trunc::SimpleTrunc>(mname)) {
      c.expect("support");
      Subset s;
      for (const auto& l : c.rest()) {
        auto i = t->space()->index_of(l);
        if (!i) throw StructuralError("'" + l + "' is not a point of the space");
        s = s.with(*i);
      }
      return inst.add(name, Kernel{mname, kernel::SimpleKernel(*t, s)});
    }
    const auto& m = ref<seq::SeqTrunc>(mname, "trunc or seqtrunc");
    auto mode = c.next();
    std::optional<kernel::SeqKernel> k;
    if (mode == "whole") {
      k = kernel::SeqKernel::whole(m);
    } else if (mode == "tail-zero") {
      k = kernel::SeqKernel::finite_support(m);
    } else if (mode == "min-order") {
      auto j = parse_rational(c.next());
      if (j.get_den() != 1 || j < 1) throw StructuralError("min-order must be a positive integer");
      k.emplace(m, std::nullopt, static_cast<std::size_t>(j.get_num().get_ui()));
    } else if (mode == "support") {
      std::set<std::int64_t> pts;
      for (const auto& t : c.rest()) {
        auto v = parse_rational(t);
        if (v.get_den() != 1 || v < 1) throw StructuralError("support points are positive integers");
        pts.insert(v.get_num().get_si());
      }
      k.emplace(m, pts, m.degree() + 1);
    } else {
      throw StructuralError("unknown kernel form '" + mode + "'");
    }
    c.finish();
    inst.add(name, Kernel{mname, *k});
  }
};

std::string join_words(const std::vector<std::string>& ws) {
  std::string out;
  for (const auto& w : ws) out += " " + w;
  return out;
}

std::string set_token(const boolean::PointedBooleanSpace& sp, Subset s) { return sp.format(s); }

}  // namespace

std::string_view kind_name(const Object& o) {
  static constexpr std::string_view names[] = {"space", "element",  "family",   "trunc",      "sequence",
                                                "gba",   "frame",    "pointed",  "real",       "surjection",
                                                "seqtrunc", "tail", "kernel"};
  return names[o.index()];
}

const Object& Instance::get(const std::string& name) const {
  auto it = objects_.find(name);
  if (it == objects_.end()) throw StructuralError("unresolved reference '" + name + "'");
  return it->second;
}

void Instance::add(const std::string& name, Object o) {
  if (objects_.contains(name)) throw StructuralError("duplicate name '" + name + "'");
  objects_.emplace(name, std::move(o));
  order_.push_back(name);
}

bool operator==(const Instance& a, const Instance& b) {
  if (a.order_ != b.order_) return false;
  for (const auto& n : a.order_) {
    if (!same(a.objects_.at(n), b.objects_.at(n))) return false;
  }
  return true;
}

std::string LocatedError::to_string() const {
  return "line " + std::to_string(line) + (object.empty() ? "" : ": " + object) + ": " + message;
}

ParseResult parse_instance_text(std::string_view text) {
  ParseResult r;
  Parser p;
  std::size_t lineno = 0;
  for (const auto& raw : split(text, '\n')) {
    ++lineno;
    auto line = raw.substr(0, raw.find('#'));
    std::string name;
    try {
      auto toks = tokenize(line);
      if (toks.empty()) continue;
      Cursor c(std::move(toks));
      p.statement(c, name);
    } catch (const std::exception& e) {
      r.errors.push_back({lineno, name, e.what()});
    }
  }
  if (r.errors.empty()) r.instance = std::move(p.inst);
  return r;
}

ParseResult parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {std::nullopt, {{0, "", "cannot read '" + path + "'"}}};
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str());
}

seq::TailElement parse_tail(std::string_view text) {
  const std::string s = trim(text);
  auto bad = [&] { return StructuralError("malformed tail element '" + s + "'"); };
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw bad();
  auto list_after = [&](const std::string& key) {
    auto k = s.find(key + ":");
    if (k == std::string::npos) throw bad();
    auto open = s.find('[', k), close = s.find(']', k);
    if (open == std::string::npos || close == std::string::npos || close < open) throw bad();
    std::vector<std::string> items;
    auto inner = s.substr(open + 1, close - open - 1);
    if (trim(inner).empty()) return items;
    for (auto& it : split(inner, ',')) items.push_back(trim(it));
    return items;
  };
  std::map<std::int64_t, Rational> corr;
  for (const auto& it : list_after("correction")) {
    auto [n, v] = pair_at(it, ':');
    auto nq = parse_rational(n);
    if (nq.get_den() != 1) throw bad();
    if (!corr.emplace(nq.get_num().get_si(), parse_rational(v)).second) throw StructuralError("point " + n + " given twice");
  }
  std::vector<Rational> tail;
  for (const auto& it : list_after("tail")) tail.push_back(parse_rational(it));
  return {std::move(corr), std::move(tail)};
}

frame::Interval parse_interval(std::string_view text) {
  const std::string s = trim(text);
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw StructuralError("expected (a,b), got '" + s + "'");
  auto parts = split(s.substr(1, s.size() - 2), ',');
  if (parts.size() != 2) throw StructuralError("expected (a,b), got '" + s + "'");
  frame::Interval u{parse_ext_rational(parts[0]), parse_ext_rational(parts[1])};
  if (u.lo == ExtRational::pos_infinity() || u.hi == ExtRational::neg_infinity() || !(u.lo < u.hi)) {
    throw StructuralError("empty interval '" + s + "'");
  }
  return u;
}

std::string serialize(const Instance& inst) {
  std::ostringstream out;
  for (const auto& name : inst.order()) {
    const auto& obj = inst.get(name);
    out << kind_name(obj) << " " << name;
    std::visit(
        overloaded{
            [&](const boolean::SpacePtr& x) {
              out << " points" << join_words(x->points()) << " star " << x->star_label();
            },
            [&](const trunc::SimpleElement& x) {
              // Find the declared space by identity of contents.
              std::string sname;
              for (const auto& n : inst.order()) {
                auto* sp = inst.find<boolean::SpacePtr>(n);
                if (sp && **sp == *x.space()) {
                  sname = n;
                  break;
                }
              }
              out << " on " << sname << " =";
              for (std::size_t i = 0; i < x.values().size(); ++i) {
                if (x[i] != 0) out << " " << x.space()->label(i) << ":" << to_string(x[i]);
              }
            },
            [&](const Family& x) {
              const auto& sp = *inst.find<boolean::SpacePtr>(x.space);
              out << " on " << x.space << " =";
              for (auto s : x.sets) out << " " << set_token(*sp, s);
            },
            [&](const trunc::SimpleTrunc& x) {
              std::string sname;
              for (const auto& n : inst.order()) {
                auto* sp = inst.find<boolean::SpacePtr>(n);
                if (sp && **sp == *x.space()) {
                  sname = n;
                  break;
                }
              }
              out << " on " << sname << " sets";
              for (auto s : x.family()) out << " " << set_token(*x.space(), s);
            },
            [&](const Sequence& x) { out << (x.stable ? " stable" : "") << " =" << join_words(x.term_names); },
            [&](const Gba& x) {
              const auto& a = x.algebra;
              if (x.universe) {
                out << " sets" << join_words(a.labels());
                return;
              }
              out << " elements" << join_words(a.labels()) << " bottom " << a.label(a.bottom());
              auto table = [&](const char* word, const boolean::Table& t) {
                out << " " << word;
                for (std::size_t i = 0; i < t.size(); ++i) {
                  if (i) out << " /";
                  for (auto v : t[i]) out << " " << a.label(v);
                }
              };
              table("join", a.join_table());
              table("meet", a.meet_table());
              table("diff", a.diff_table());
            },
            [&](const frame::FramePtr& x) {
              out << " elements" << join_words(x->labels());
              auto h = x->hasse();
              if (!h.empty()) out << " covers";
              for (auto [a, b] : h) out << " " << x->label(a) << "<" << x->label(b);
            },
            [&](const frame::PointedPtr& x) {
              std::string fname;
              for (const auto& n : inst.order()) {
                auto* f = inst.find<frame::FramePtr>(n);
                if (f && **f == x->frame()) {
                  fname = n;
                  break;
                }
              }
              out << " frame " << fname << " point " << x->frame().label(x->point_generator());
            },
            [&](const frame::FrameReal& x) {
              std::string pname;
              for (const auto& n : inst.order()) {
                auto* p = inst.find<frame::PointedPtr>(n);
                if (p && **p == *x.pointed()) {
                  pname = n;
                  break;
                }
              }
              out << " on " << pname << (x.kind() == frame::FrameReal::Kind::extended ? " extended" : "") << " =";
              for (const auto& c : x.cells()) out << " " << to_string(c.value) << ":" << x.frame().label(c.element);
            },
            [&](const frame::FrameSurjection& x) {
              auto pname = [&](const frame::PointedPtr& p) {
                for (const auto& n : inst.order()) {
                  auto* q = inst.find<frame::PointedPtr>(n);
                  if (q && **q == *p) return n;
                }
                return std::string();
              };
              out << " from " << pname(x.source()) << " to " << pname(x.target()) << " map";
              const auto& s = x.source()->frame();
              for (frame::Elem e = 0; e < s.size(); ++e) {
                out << " " << s.label(e) << ":" << x.target()->frame().label(x(e));
              }
            },
            [&](const seq::SeqTrunc& x) {
              if (x.is_zero_trunc()) {
                out << " zero";
              } else {
                out << " degree " << x.degree();
              }
            },
            [&](const seq::TailElement& x) { out << " = " << x.to_string(); },
            [&](const Kernel& x) {
              out << " on " << x.model;
              if (auto* k = std::get_if<kernel::SimpleKernel>(&x.spec)) {
                out << " support";
                for (auto i : k->support().indices()) out << " " << k->model().space()->label(i);
                return;
              }
              const auto& k = std::get<kernel::SeqKernel>(x.spec);
              if (k.support()) {
                out << " support";
                for (auto n : *k.support()) out << " " << n;
              } else {
                out << " min-order " << k.min_order();
              }
            },
        },
        obj);
    out << "\n";
  }
  return out.str();
}

}  // namespace trunclab::io
