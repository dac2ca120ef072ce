#pragma once

#include <optional>
#include <span>
#include <vector>

#include "trunclab/boolean/algebra.hpp"
#include "trunclab/frame/surjection.hpp"
#include "trunclab/op.hpp"
#include "trunclab/seqspace/tail_element.hpp"
#include "trunclab/trunc/simple_trunc.hpp"

// Brute-force reference computations. None of these call the library routine
// they are compared against.
namespace trunclab::props {

struct GridRow {
  frame::Interval v;
  frame::Elem value;
};

/// For every open V on the output grid: the join over open boxes U of grid
/// intervals with op(U) inside V of the meet of operand_i(U_i). The operand
/// grids are the cut grids of the cell values plus points v +- d, where d is
/// small enough that op maps the d-box around each value tuple inside every
/// output-grid interval containing its image.
std::vector<GridRow> grid_formula(const Op& op, std::span<const frame::FrameReal> operands);

/// Opens of truncate(g) and of g tminus 1, read off g by cases on r.
frame::Elem truncate_below_case(const frame::FrameReal& g, const Rational& r);
frame::Elem truncate_above_case(const frame::FrameReal& g, const Rational& r);
frame::Elem tminus_one_below_case(const frame::FrameReal& g, const Rational& r);
frame::Elem tminus_one_above_case(const frame::FrameReal& g, const Rational& r);

/// Every c with c ^ b = bottom and c v b = a v b.
std::vector<std::size_t> brute_diff(const boolean::GeneralizedBooleanAlgebra& a, std::size_t x, std::size_t y);

/// Value classes of the nonzero values, sorted by coefficient.
std::vector<trunc::NormalTerm> brute_normal_form(const trunc::SimpleElement& g);

/// n-th good term at a point: clamp(value - (n - 1), 0, 1).
trunc::SimpleElement brute_good_term(const trunc::SimpleElement& g, std::int64_t n);

/// Tail element evaluated pointwise at 1..upto.
std::vector<Rational> tail_values(const seq::TailElement& g, std::int64_t upto);

/// Lifts of h along q found by assigning each central atom of the source a
/// value from h's values and +-inf, and comparing the cell images directly.
std::optional<frame::FrameReal> brute_e0q(const frame::FrameSurjection& q, const frame::FrameReal& h);

/// q(join of the finite cells of h') == top, computed from the cells.
bool brute_drop_condition(const frame::FrameSurjection& q, const frame::FrameReal& h_prime);

/// All intervals with ends in {-inf, values, midpoints, one beyond each end, inf}.
std::vector<frame::Interval> full_grid(std::vector<Rational> values);

}  // namespace trunclab::props
