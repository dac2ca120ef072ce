#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "trunclab/boolean/equivalence.hpp"
#include "trunclab/error.hpp"
#include "trunclab/kernel/kernel.hpp"
#include "trunclab/props/suites.hpp"
#include "trunclab/seqspace/ex1.hpp"
#include "trunclab/trunc/analysis.hpp"
#include "trunclab/trunc/sequences.hpp"

namespace trunclab::cli {

namespace {

using io::Instance;
using io::Report;
using Args = std::vector<std::string>;

constexpr std::size_t default_budget = 200;

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : std::string(sep)) + p;
  return out;
}

const io::Object& lookup(const Instance& inst, const std::string& name) {
  if (!inst.has(name)) throw InputError("no object named '" + name + "'");
  return inst.get(name);
}

template <class T>
const T& need(const Instance& inst, const std::string& name, std::string_view what) {
  const auto& o = lookup(inst, name);
  if (const auto* p = std::get_if<T>(&o)) return *p;
  throw InputError("'" + name + "' is a " + std::string(io::kind_name(o)) + ", expected " + std::string(what));
}

void arity(const Args& args, std::size_t lo, std::size_t hi, std::string_view cmd) {
  if (args.size() < lo || args.size() > hi) {
    const auto* c = find_command(cmd);
    throw InputError("usage: trunclab " + std::string(cmd) + " " + std::string(c ? c->args : ""));
  }
}

std::string normal_form_string(const trunc::SimpleElement& g, const std::vector<trunc::NormalTerm>& nf) {
  std::vector<std::string> parts;
  for (const auto& t : nf) parts.push_back("(" + to_string(t.coeff) + "," + g.space()->format(t.component) + ")");
  return "[" + join(parts, ",") + "]";
}

std::string label_list(const std::vector<std::string>& labels) { return "{" + join(labels, ", ") + "}"; }

const io::Sequence& stable_sequence(const Instance& inst, const std::string& name) {
  const auto& s = need<io::Sequence>(inst, name, "sequence");
  if (!s.stable) throw InputError("sequence '" + name + "' must be declared stable (its last term repeats)");
  return s;
}

// check ---------------------------------------------------------------------

void describe_object(Report& r, const Instance& inst, const std::string& name) {
  const auto& o = lookup(inst, name);
  const std::string kind(io::kind_name(o));
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, io::Gba>) {
          auto v = boolean::gba_validate(x.algebra);
          std::string w;
          if (!v.valid()) w = v.violations[0].law + ": " + v.violations[0].detail;
          r.check(name + " is a generalized Boolean algebra", v.valid(), w);
          r.line(name + ": " + std::to_string(x.algebra.size()) + " elements " + label_list(x.algebra.labels()));
        } else {
          r.check(name + " is a valid " + kind, true);
          if constexpr (std::is_same_v<T, boolean::SpacePtr>) {
            r.line(name + ": " + std::to_string(x->size()) + " points, star " + x->star_label());
          } else if constexpr (std::is_same_v<T, trunc::SimpleElement>) {
            r.line(name + " = " + x.tuple_string());
            if (x.is_nonnegative()) {
              auto b = trunc::bounded_away_from_zero(x);
              r.line(name + ": clearance " + to_string(trunc::clearance(x)) + ", bounded by " +
                     std::to_string(trunc::is_bounded(x)) + " * truncate, " +
                     (b.bounded_away ? "bounded away from 0 by " + to_string(b.epsilon) : "zero"));
            }
          } else if constexpr (std::is_same_v<T, trunc::SimpleTrunc>) {
            std::vector<std::string> atoms;
            for (auto a : x.atoms()) atoms.push_back(x.space()->format(a));
            r.line(name + ": dimension " + std::to_string(x.dimension()) + ", atoms " + join(atoms, " "));
          } else if constexpr (std::is_same_v<T, seq::TailElement>) {
            r.line(name + " = " + x.to_string());
            if (x.is_nonnegative()) {
              auto b = seq::bounded_away_from_zero(x);
              r.line(name + ": " + (seq::baf_infinity(x).bounded_away ? "" : "not ") + "bounded away from infinity, " +
                     (b.bounded_away ? "" : "not ") + "bounded away from 0, " +
                     (seq::simple_part_member(x) ? "" : "not ") + "in the simple part");
            }
          } else if constexpr (std::is_same_v<T, seq::SeqTrunc>) {
            r.line(name + ": " + x.name());
          } else if constexpr (std::is_same_v<T, frame::FramePtr>) {
            r.line(name + ": " + std::to_string(x->size()) + " elements " + label_list(x->labels()));
          } else if constexpr (std::is_same_v<T, frame::PointedPtr>) {
            r.line(name + ": point generated by " + x->frame().label(x->point_generator()));
          } else if constexpr (std::is_same_v<T, frame::FrameReal>) {
            r.line(name + " = " + x.to_string() + ", cozero " + x.frame().label(x.cozero()));
          } else if constexpr (std::is_same_v<T, frame::FrameSurjection>) {
            std::vector<std::string> adj;
            const auto& s = x.source()->frame();
            const auto& t = x.target()->frame();
            for (frame::Elem y = 0; y < t.size(); ++y) adj.push_back(t.label(y) + "->" + s.label(x.adjoint(y)));
            r.line(name + ": " + (x.dense() ? "dense" : "not dense, kills " + s.label(*x.density_witness())) +
                   ", adjoint " + join(adj, " "));
          } else if constexpr (std::is_same_v<T, io::Kernel>) {
            r.line(name + ": " + kernel::describe(x.spec));
          } else if constexpr (std::is_same_v<T, io::Sequence>) {
            r.line(name + ": " + std::to_string(x.term_names.size()) + " terms" + (x.stable ? ", stable" : ""));
          } else if constexpr (std::is_same_v<T, io::Family>) {
            r.line(name + ": " + std::to_string(x.sets.size()) + " sets");
          }
        }
      },
      o);
}

Report cmd_check(const std::string& echo, const Instance& inst, const Args& args) {
  Report r(echo);
  const auto& names = args.empty() ? inst.order() : args;
  for (const auto& n : names) describe_object(r, inst, n);
  // Membership of every named element in every named trunc.
  for (const auto& t : args) {
    const auto* tr = inst.find<trunc::SimpleTrunc>(t);
    if (!tr) continue;
    for (const auto& e : args) {
      const auto* g = inst.find<trunc::SimpleElement>(e);
      if (!g) continue;
      if (!(*g->space() == *tr->space())) throw InputError("'" + e + "' and '" + t + "' live on different spaces");
      auto m = trunc::member(*tr, *g);
      r.check(e + " in " + t, m.member,
              m.offending_level_set ? "level set " + tr->space()->format(*m.offending_level_set) + " is not a component"
                                    : "");
      r.value(e + " in " + t, m.member);
    }
  }
  r.value("objects", static_cast<std::int64_t>(names.size()));
  return r;
}

// simple elements -------------------------------------------------------------

Report cmd_normal_form(const std::string& echo, const Instance& inst, const Args& args) {
  arity(args, 1, 1, "normal-form");
  const auto& g = need<trunc::SimpleElement>(inst, args[0], "element");
  Report r(echo);
  const auto nf = trunc::normal_form(g);
  const auto text = normal_form_string(g, nf);
  r.line(args[0] + " = " + g.tuple_string());
  r.line("normal form: " + text);
  r.value("normal_form", text);
  r.check("sum of the terms is " + args[0], trunc::from_normal_form(g.space(), nf) == g);
  bool disjoint = true, distinct = true;
  for (std::size_t i = 0; i < nf.size(); ++i) {
    distinct = distinct && nf[i].coeff != 0;
    for (std::size_t j = i + 1; j < nf.size(); ++j) {
      disjoint = disjoint && (nf[i].component & nf[j].component).empty();
      distinct = distinct && nf[i].coeff != nf[j].coeff;
    }
  }
  r.check("components pairwise disjoint", disjoint);
  r.check("coefficients distinct and nonzero", distinct);
  if (g.is_nonnegative()) r.value("clearance", to_string(trunc::clearance(g)));
  return r;
}

Report cmd_good_seq(const std::string& echo, const Instance& inst, const Args& args) {
  arity(args, 1, 1, "good-seq");
  Report r(echo);
  const auto& o = lookup(inst, args[0]);
  if (const auto* g = std::get_if<trunc::SimpleElement>(&o)) {
    if (!g->is_nonnegative()) throw InputError("'" + args[0] + "' has a negative value");
    const auto f = trunc::good_from_element(*g);
    std::vector<std::string> terms;
    for (std::size_t n = 0; n < f.terms.size(); ++n) {
      terms.push_back(f.terms[n].tuple_string());
      r.line("f" + std::to_string(n + 1) + " = " + terms.back());
    }
    r.value("terms", join(terms, " "));
    const auto c = trunc::check_good_sequence(f);
    r.check("good sequence", c.ok, c.ok ? "" : "term " + std::to_string(c.index) + ": " + c.reason);
    r.check("terms sum to " + args[0], c.ok && trunc::element_from_good(f) == *g);
    const auto ts = trunc::truncation_sequence_check(g->space(), trunc::truncation_sequence(*g));
    r.check("equals the truncation-sequence differences", ts.ok && ts.differences == f.terms);
    return r;
  }
  const auto& s = need<io::Sequence>(inst, args[0], "element or sequence");
  if (s.kind != io::Sequence::Kind::simple || s.simple.empty()) throw InputError("'" + args[0] + "' is not a sequence of elements");
  const trunc::GoodSequence f{s.simple.front().space(), s.simple};
  const auto c = trunc::check_good_sequence(f);
  r.check("good sequence", c.ok, c.ok ? "" : "term " + std::to_string(c.index) + ": " + c.reason);
  if (c.ok) {
    const auto g = trunc::element_from_good(f);
    r.line("sum = " + g.tuple_string());
    r.value("element", g.tuple_string());
    r.check("good_from_element(sum) gives the sequence back", trunc::good_from_element(g).terms == f.terms);
  }
  return r;
}

Report cmd_trunc_seq(const std::string& echo, const Instance& inst, const Args& args) {
  arity(args, 1, 1, "trunc-seq");
  Report r(echo);
  if (const auto* g = inst.find<trunc::SimpleElement>(args[0])) {
    const auto seq = trunc::truncation_sequence(*g);
    std::vector<std::string> terms;
    for (std::size_t n = 0; n < seq.size(); ++n) {
      terms.push_back(seq[n].tuple_string());
      r.line(args[0] + " truncN " + std::to_string(n + 1) + " = " + terms.back());
    }
    r.value("terms", join(terms, " "));
    const auto c = trunc::truncation_sequence_check(g->space(), seq);
    r.check("truncation sequence", c.ok, c.reason);
    r.check("stabilizes at " + args[0], c.ok && c.element && *c.element == *g);
    return r;
  }
  const auto& s = stable_sequence(inst, args[0]);
  if (s.kind != io::Sequence::Kind::simple || s.simple.empty()) throw InputError("'" + args[0] + "' is not a sequence of elements");
  const auto c = trunc::truncation_sequence_check(s.simple.front().space(), s.simple);
  r.check("truncation sequence", c.ok, c.ok ? "" : "term " + std::to_string(c.index) + ": " + c.reason);
  if (c.ok && c.element) {
    r.line("element = " + c.element->tuple_string());
    r.value("element", c.element->tuple_string());
    std::vector<std::string> diffs;
    for (const auto& d : c.differences) diffs.push_back(d.tuple_string());
    r.line("differences: " + join(diffs, " "));
    r.value("differences", join(diffs, " "));
    r.check("differences form the good sequence of the element",
            c.differences == trunc::good_from_element(*c.element).terms);
  }
  return r;
}

Report cmd_uc(const std::string& echo, const Instance& inst, const Args& args) {
  arity(args, 1, 1, "uc");
  Report r(echo);
  const auto& o = lookup(inst, args[0]);
  auto show_algebra = [&](const boolean::GeneralizedBooleanAlgebra& a) {
    r.line("components: " + label_list(a.labels()));
    r.value("components", join(a.labels(), " "));
    r.value("size", static_cast<std::int64_t>(a.size()));
    auto v = boolean::gba_validate(a);
    r.check("components form a generalized Boolean algebra", v.valid(), v.valid() ? "" : v.violations[0].law);
  };
  if (const auto* t = std::get_if<trunc::SimpleTrunc>(&o)) {
    show_algebra(trunc::uc(*t));
  } else if (const auto* x = std::get_if<boolean::SpacePtr>(&o)) {
    show_algebra(trunc::uc(trunc::lc(*x)));
  } else if (const auto* g = std::get_if<trunc::SimpleElement>(&o)) {
    if (!g->is_nonnegative()) throw InputError("'" + args[0] + "' has a negative value");
    const bool u = trunc::is_unital_component(*g);
    r.check(args[0] + " is a unital component", u, u ? g->space()->format(g->support()) : "");
    r.value("unital", u);
  } else if (const auto* h = std::get_if<frame::FrameReal>(&o)) {
    const auto u = frame::frame_uc_check(*h);
    r.check(args[0] + " is a unital component", u.unital, u.witness ? "chi(" + h->frame().label(*u.witness) + ")" : "");
    r.value("unital", u.unital);
  } else {
    throw InputError("'" + args[0] + "' is a " + std::string(io::kind_name(o)) + ", expected trunc, space, element or real");
  }
  return r;
}

Report cmd_equivalence(const std::string& echo, const Instance& inst, const Args& args) {
  arity(args, 1, 1, "equivalence");
  Report r(echo);
  const auto& o = lookup(inst, args[0]);
  if (const auto* x = std::get_if<boolean::SpacePtr>(&o)) {
    const auto rep = boolean::equivalence_witness(*x);
    if (!rep.complete) throw InputError("'" + args[0] + "' has more than " + std::to_string(boolean::equivalence_max_points) + " points");
    for (const auto& t : rep.round_trips) {
      std::string w = t.detail;
      if (t.counterexample) w = t.counterexample->first + " / " + t.counterexample->second + (w.empty() ? "" : ": " + w);
      r.check(t.name, t.verified, w);
    }
    return r;
  }
  const auto& a = need<io::Gba>(inst, args[0], "space or gba").algebra;
  const auto v = boolean::gba_validate(a);
  r.check(args[0] + " is a generalized Boolean algebra", v.valid(), v.valid() ? "" : v.violations[0].law);
  if (!v.valid()) return r;
  const auto bi = boolean::idealize(a);
  const auto sp = boolean::stone(bi);
  std::vector<std::string> pts = sp.points();
  r.line("stone space: " + label_list(pts) + ", star " + sp.star_label());
  r.value("points", static_cast<std::int64_t>(sp.size()));
  const auto iv = boolean::iba_validate(bi);
  r.check("idealized algebra is valid", iv.valid(), iv.valid() ? "" : iv.violations[0].law);
  const auto t = boolean::check_idealize_forget(bi);
  r.check(t.name, t.verified, t.detail);
  return r;
}

// frames ----------------------------------------------------------------------

Report cmd_frame_eval(const std::string& echo, const Instance& inst, const Args& args) {
  if (args.empty()) arity(args, 1, 1, "frame-eval");
  const auto& g = need<frame::FrameReal>(inst, args[0], "real");
  Report r(echo);
  std::vector<frame::Interval> opens;
  if (args.size() > 1) {
    for (std::size_t i = 1; i < args.size(); ++i) {
      try {
        opens.push_back(io::parse_interval(args[i]));
      } catch (const StructuralError& e) {
        throw InputError(e.what());
      }
    }
  } else {
    std::vector<Rational> vs;
    for (const auto& v : g.values()) {
      if (v.is_finite()) vs.push_back(v.value());
    }
    opens = frame::grid_opens(vs);
  }
  r.line(args[0] + " = " + g.to_string());
  for (const auto& u : opens) {
    const auto key = args[0] + frame::to_string(u);
    const auto& label = g.frame().label(g.eval(u));
    r.line(key + " = " + label);
    r.value(key, label);
  }
  return r;
}

Report cmd_induced_op(const std::string& echo, const Instance& inst, const Args& args) {
  arity(args, 2, 3, "induced-op");
  Op op;
  try {
    op = parse_op(args[0]);
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
  const Args names(args.begin() + 1, args.end());
  if (names.size() != op.arity()) {
    throw InputError(to_string(op) + " takes " + std::to_string(op.arity()) + " operand(s), got " + std::to_string(names.size()));
  }
  Report r(echo);
  std::string result;
  const auto& first = lookup(inst, names[0]);
  if (std::holds_alternative<trunc::SimpleElement>(first)) {
    std::vector<trunc::SimpleElement> xs;
    for (const auto& n : names) xs.push_back(need<trunc::SimpleElement>(inst, n, "element"));
    result = trunc::apply_op(op, xs).tuple_string();
  } else if (std::holds_alternative<seq::TailElement>(first)) {
    std::vector<seq::TailElement> xs;
    for (const auto& n : names) xs.push_back(need<seq::TailElement>(inst, n, "tail"));
    result = seq::tail_apply_op(op, xs).to_string();
  } else if (std::holds_alternative<frame::FrameReal>(first)) {
    std::vector<frame::FrameReal> xs;
    for (const auto& n : names) xs.push_back(need<frame::FrameReal>(inst, n, "real"));
    result = frame::induced_op(op, xs).to_string();
  } else {
    throw InputError("'" + names[0] + "' is a " + std::string(io::kind_name(first)) + ", expected element, tail or real");
  }
  r.line(to_string(op) + "(" + join(names, ", ") + ") = " + result);
  r.value("result", result);
  return r;
}

Report cmd_drop(const std::string& echo, const Instance& inst, const Args& args) {
  arity(args, 2, 2, "drop");
  const auto& q = need<frame::FrameSurjection>(inst, args[0], "surjection");
  const auto& h = need<frame::FrameReal>(inst, args[1], "real");
  if (!(*h.pointed()->frame_ptr() == q.source()->frame())) throw InputError("'" + args[1] + "' is not on the source of '" + args[0] + "'");
  Report r(echo);
  const auto d = frame::drop(q, h);
  const auto& cond = q.target()->frame().label(d.condition);
  r.value("condition", cond);
  r.check("q(" + args[1] + "(-inf,inf)) is top", d.dropped, d.dropped ? "" : cond + (d.reason.empty() ? "" : ": " + d.reason));
  r.value("dropped", d.dropped);
  if (d.dropped && d.h) {
    r.line("dropped = " + d.h->to_string());
    r.value("h", d.h->to_string());
    r.check("square commutes on the grid", d.square_verified, d.square_verified ? "" : d.reason);
  }
  return r;
}

Report cmd_e0q(const std::string& echo, const Instance& inst, const Args& args) {
  arity(args, 2, 2, "e0q");
  const auto& q = need<frame::FrameSurjection>(inst, args[0], "surjection");
  const auto& h = need<frame::FrameReal>(inst, args[1], "real");
  if (!(*h.pointed()->frame_ptr() == q.target()->frame())) throw InputError("'" + args[1] + "' is not on the target of '" + args[0] + "'");
  if (!q.dense()) throw InputError("'" + args[0] + "' is not dense: it kills " + q.source()->frame().label(*q.density_witness()));
  Report r(echo);
  const auto m = frame::e0q_member(q, h);
  r.check(args[1] + " lifts along " + args[0], m.member, m.witness ? m.witness->to_string() : m.reason);
  r.value("member", m.member);
  r.value("method", m.method);
  r.value("partitions_tried", static_cast<std::int64_t>(m.partitions_tried));
  if (m.witness) r.line("lift = " + m.witness->to_string());
  return r;
}

// kernels ---------------------------------------------------------------------

void verdict(Report& r, const std::string& name, const kernel::ConditionVerdict& v) {
  r.check(name, v.pass, v.witness);
  r.line(name + ": " + std::to_string(v.samples) + " samples, " + (v.exact ? "exact" : "sampled"));
}

Report cmd_kernel_check(const std::string& echo, const Instance& inst, const Args& args, const Flags& f) {
  arity(args, 1, 1, "kernel-check");
  const auto& k = need<io::Kernel>(inst, args[0], "kernel").spec;
  Report r(echo);
  r.line(args[0] + " = " + kernel::describe(k));
  const auto c = kernel::kernel_conditions(k, f.cases.value_or(default_budget), f.seed);
  verdict(r, "(1) archimedean condition", c.archimedean);
  verdict(r, "(2) truncation condition", c.truncation);
  verdict(r, "(3) tminus 1/n condition", c.tminus);
  r.value("kernel", c.all_pass());
  return r;
}

Report cmd_kernel_close(const std::string& echo, const Instance& inst, const Args& args, const Flags& f) {
  arity(args, 1, 1, "kernel-close");
  const auto& k = need<io::Kernel>(inst, args[0], "kernel").spec;
  Report r(echo);
  const auto c = kernel::kernel_closure(k, f.cases.value_or(default_budget), f.seed);
  for (std::size_t i = 0; i < c.stages.size(); ++i) r.line("stage " + std::to_string(i) + ": " + c.stages[i]);
  r.value("closure", kernel::describe(c.closed));
  r.value("rounds", static_cast<std::int64_t>(c.rounds));
  r.check("stages stabilize", c.converged, c.converged ? "" : "after " + std::to_string(c.rounds) + " rounds");
  r.check("closure meets all three conditions", c.conditions_pass);
  return r;
}

Report cmd_pointwise(const std::string& echo, const Instance& inst, const Args& args, const Flags& f) {
  arity(args, 1, 2, "pointwise");
  Report r(echo);
  const auto& o = lookup(inst, args[0]);
  if (const auto* k = std::get_if<io::Kernel>(&o)) {
    if (args.size() != 1) throw InputError("usage: trunclab pointwise <kernel>");
    const auto p = kernel::pointwise_closed(k->spec, f.cases.value_or(default_budget), f.seed);
    r.check(args[0] + " is pointwise closed", p.closed, p.closed ? "" : p.family + ": " + p.witness);
    r.check("agrees with the three conditions", p.agrees_with_conditions);
    r.value("closed", p.closed);
    r.value("candidates", static_cast<std::int64_t>(p.candidates));
    return r;
  }
  const auto& s = need<io::Sequence>(inst, args[0], "kernel or sequence");
  if (s.kind == io::Sequence::Kind::simple && !s.simple.empty()) {
    const auto sup = trunc::pointwise_sup(s.simple);
    r.line("sup = " + sup.tuple_string());
    r.value("sup", sup.tuple_string());
    const auto& b = args.size() > 1 ? need<trunc::SimpleElement>(inst, args[1], "element") : sup;
    Rational bad;
    const bool ok = trunc::is_pointwise_sup(s.simple, b, &bad);
    r.check((args.size() > 1 ? args[1] : "sup") + " is the pointwise supremum", ok, ok ? "" : "cut " + to_string(bad));
  } else if (s.kind == io::Sequence::Kind::frame && !s.reals.empty()) {
    if (args.size() != 1) throw InputError("usage: trunclab pointwise <sequence of reals>");
    const auto sup = frame::frame_pointwise_sup(s.reals);
    r.line("sup = " + sup.sup.to_string());
    r.value("sup", sup.sup.to_string());
    r.check("cut equations hold", sup.verified, sup.bad_cut ? "cut " + to_string(*sup.bad_cut) : "");
  } else {
    throw InputError("'" + args[0] + "' is not a sequence of elements or reals");
  }
  return r;
}

// Dini: pointwise to 0 forces the uniform criterion, with the index function.
Report cmd_dini(const std::string& echo, const Instance& inst, const Args& args, const Flags& f) {
  arity(args, 1, 1, "dini");
  Report r(echo);
  std::vector<Rational> eps = {Rational(1, 2), Rational(1, 10), Rational(1, 100)};
  auto index_line = [&](const Rational& e, std::optional<std::int64_t> m) {
    const auto text = m ? std::to_string(*m) : std::string("none");
    r.line("index(" + to_string(e) + ") = " + text);
    r.value("index(" + to_string(e) + ")", text);
  };
  if (const auto* g = inst.find<seq::TailElement>(args[0])) {
    if (!g->is_nonnegative()) throw InputError("'" + args[0] + "' has a negative value");
    const auto d = seq::dini_prefix_family(*g, static_cast<std::int64_t>(f.cases.value_or(10)));
    for (std::size_t m = 0; m < d.suprema.size(); ++m) r.line("sup h" + std::to_string(m + 1) + " = " + to_string(d.suprema[m]));
    for (const auto& e : eps) index_line(e, d.index_for(e));
    r.check("prefix remainders decrease to 0", d.pointwise_to_zero);
    r.check("uniformly", d.uniform);
    return r;
  }
  const auto& s = stable_sequence(inst, args[0]);
  bool pointwise = false, uniform = false;
  if (s.kind == io::Sequence::Kind::simple) {
    const auto d = trunc::dini_check(s.simple);
    for (const auto& m : d.maxima) {
      if (m > 0) eps.push_back(m);
    }
    for (const auto& e : eps) {
      auto m = d.index_for(e);
      index_line(e, m ? std::optional<std::int64_t>(static_cast<std::int64_t>(*m)) : std::nullopt);
    }
    pointwise = d.pointwise_to_zero;
    uniform = d.uniform;
  } else if (s.kind == io::Sequence::Kind::frame) {
    const auto d = frame::frame_dini(s.reals);
    for (const auto& t : s.reals) {
      for (const auto& v : t.values()) {
        if (v.is_finite() && v.value() > 0) eps.push_back(v.value());
      }
    }
    std::sort(eps.begin(), eps.end());
    eps.erase(std::unique(eps.begin(), eps.end()), eps.end());
    for (const auto& e : eps) {
      auto m = d.index_for(e);
      index_line(e, m ? std::optional<std::int64_t>(static_cast<std::int64_t>(*m)) : std::nullopt);
    }
    pointwise = d.pointwise_to_zero;
    uniform = d.uniform;
  } else {
    throw InputError("dini takes a stable sequence of elements or reals, or a single tail");
  }
  r.value("pointwise_to_zero", pointwise);
  r.value("uniform", uniform);
  r.check("pointwise to 0 implies uniform", !pointwise || uniform);
  return r;
}

// whole-program reports -------------------------------------------------------

Report cmd_ex1(const std::string& echo, const Flags& f) {
  const std::size_t budget = f.cases.value_or(500);
  const auto rep = seq::ex1_report(budget, f.seed);
  Report r(echo);
  std::vector<std::string> vals;
  for (const auto& v : rep.g0_values) vals.push_back(to_string(v));
  r.line("g0 = 1/n: " + join(vals, ", ") + ", ...");
  r.check("(a) g0 is not bounded away from 0", rep.not_bounded_away());
  r.check("(b) the trunc is not simple", rep.not_simple(),
          rep.enough_uc.witness ? "no unital component under " + rep.enough_uc.witness->to_string() : rep.enough_uc.reason);
  r.check("(c) hyperarchimedean on " + std::to_string(rep.hyperarchimedean.pairs_checked) + " pairs",
          rep.hyperarchimedean.verdict, rep.hyperarchimedean.reason);
  r.check("(d) {tail 0} meets conditions (1) and (2)", rep.kernel_12_hold(),
          std::to_string(rep.conditions.archimedean.samples) + " and " + std::to_string(rep.conditions.truncation.samples) +
              " samples");
  r.check("(d) {tail 0} fails condition (3) at g0", rep.kernel_3_fails_at_g0(), rep.conditions.tminus.witness);
  r.line("g0 tminus 1/3 = " + rep.g0_tminus_third.to_string());
  r.check("(e) {tail 0} is not pointwise closed", rep.not_pointwise_closed_at_g0(),
          rep.pointwise.family + ": " + rep.pointwise.witness);
  r.check("(e) agrees with the three conditions", rep.pointwise.agrees_with_conditions);
  r.value("budget", static_cast<std::int64_t>(budget));
  r.value("hyper_pairs", static_cast<std::int64_t>(rep.hyperarchimedean.pairs_checked));
  r.value("condition3_witness", rep.conditions.tminus.witness);
  r.value("pointwise_witness", rep.pointwise.witness);
  return r;
}

Report cmd_suite(const std::string& echo, const Args& args, const Flags& f) {
  props::SuiteOptions o;
  o.seed = f.seed;
  o.cases = f.cases.value_or(default_budget);
  std::vector<props::SuiteResult> results;
  if (args.empty()) {
    results = props::run_all(o);
  } else {
    for (const auto& n : args) {
      const auto* s = props::find_suite(n);
      if (!s) throw InputError("unknown suite '" + n + "'");
      results.push_back(props::run_suite(*s, o));
    }
  }
  Report r(echo);
  std::size_t cases = 0, checks = 0;
  for (const auto& s : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f s", s.seconds);
    r.line(s.name + ": " + std::to_string(s.cases) + " cases, " + std::to_string(s.checks) + " checks, " +
           std::to_string(s.failures) + " failures, " + secs);
    for (const auto& m : s.messages) r.line("  " + m);
    r.check(s.name, s.pass(), s.pass() ? "" : std::to_string(s.failures) + " failures");
    r.value(s.name + ".cases", static_cast<std::int64_t>(s.cases));
    r.value(s.name + ".checks", static_cast<std::int64_t>(s.checks));
    r.value(s.name + ".failures", static_cast<std::int64_t>(s.failures));
    cases += s.cases;
    checks += s.checks;
  }
  r.line("total: " + std::to_string(cases) + " cases, " + std::to_string(checks) + " checks");
  return r;
}

}  // namespace

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> all = {
      {"check", "[names...]", "validate objects; element membership in named truncs"},
      {"normal-form", "<element>", "normal form with its checks"},
      {"good-seq", "<element|sequence>", "good sequence of an element, or check and sum a sequence"},
      {"trunc-seq", "<element|stable sequence>", "truncation sequence of an element, or check one"},
      {"uc", "<trunc|space|element|real>", "unital components, or whether an element is one"},
      {"equivalence", "<space|gba>", "round trips through the idealized algebra and the Stone space"},
      {"frame-eval", "<real> [(a,b)...]", "evaluate a frame real on intervals (default: the grid)"},
      {"induced-op", "<op> <x> [y]", "apply add|negate|scale:q|meet|join|truncate|tminus:r|truncN:n"},
      {"drop", "<surjection> <real>", "drop a source real to the target and check the square"},
      {"e0q", "<surjection> <real>", "search for a lift of a target real along a dense surjection"},
      {"kernel-check", "<kernel>", "conditions (1)-(3); --cases sets the sample budget"},
      {"kernel-close", "<kernel>", "staged closure until it stabilizes"},
      {"pointwise", "<kernel|sequence> [element]", "pointwise closure of a kernel, or supremum of a sequence"},
      {"dini", "<stable sequence|tail>", "monotone convergence and its index function"},
      {"ex1-report", "", "the omega+1 counterexample battery", false},
      {"suite", "[suite names...]", "run property suites (--seed, --cases)", false},
  };
  return all;
}

const CommandInfo* find_command(std::string_view name) {
  for (const auto& c : commands()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string usage() {
  std::string out = "usage: trunclab <command> [object names] --file <path> [--seed N] [--cases N] [--json]\n\ncommands:\n";
  for (const auto& c : commands()) {
    std::string head = "  " + std::string(c.name) + " " + std::string(c.args);
    head.resize(std::max<std::size_t>(head.size() + 1, 44), ' ');
    out += head + std::string(c.summary) + "\n";
  }
  out += "\nsuites:";
  for (const auto& s : props::suites()) out += " " + std::string(s.name);
  return out + "\n";
}

io::Report run_command(const std::string& cmd, const io::Instance* inst, const std::vector<std::string>& args,
                       const Flags& flags) {
  const auto* info = find_command(cmd);
  if (!info) throw InputError("unknown command '" + cmd + "'");
  if (info->needs_file && !inst) throw InputError(cmd + " needs --file");
  std::string echo = "trunclab " + cmd;
  for (const auto& a : args) echo += " " + a;
  echo += " --seed " + std::to_string(flags.seed);
  if (flags.cases) echo += " --cases " + std::to_string(*flags.cases);

  if (cmd == "ex1-report") return cmd_ex1(echo, flags);
  if (cmd == "suite") return cmd_suite(echo, args, flags);
  const auto& in = *inst;
  if (cmd == "check") return cmd_check(echo, in, args);
  if (cmd == "normal-form") return cmd_normal_form(echo, in, args);
  if (cmd == "good-seq") return cmd_good_seq(echo, in, args);
  if (cmd == "trunc-seq") return cmd_trunc_seq(echo, in, args);
  if (cmd == "uc") return cmd_uc(echo, in, args);
  if (cmd == "equivalence") return cmd_equivalence(echo, in, args);
  if (cmd == "frame-eval") return cmd_frame_eval(echo, in, args);
  if (cmd == "induced-op") return cmd_induced_op(echo, in, args);
  if (cmd == "drop") return cmd_drop(echo, in, args);
  if (cmd == "e0q") return cmd_e0q(echo, in, args);
  if (cmd == "kernel-check") return cmd_kernel_check(echo, in, args, flags);
  if (cmd == "kernel-close") return cmd_kernel_close(echo, in, args, flags);
  if (cmd == "pointwise") return cmd_pointwise(echo, in, args, flags);
  return cmd_dini(echo, in, args, flags);
}

}  // namespace trunclab::cli
