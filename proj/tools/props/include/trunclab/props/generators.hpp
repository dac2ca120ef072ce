#pragma once

#include <vector>

#include "trunclab/boolean/algebra.hpp"
#include "trunclab/frame/surjection.hpp"
#include "trunclab/random.hpp"
#include "trunclab/seqspace/seq_trunc.hpp"
#include "trunclab/trunc/simple_trunc.hpp"

// Seeded random inputs for the property suites.
namespace trunclab::props {

/// Points "*", "1", ..., "k" with star "*", k in [min_points, max_points].
boolean::SpacePtr random_space(Sampler& rng, std::size_t min_points = 1, std::size_t max_points = 5);
trunc::SimpleElement random_simple(const boolean::SpacePtr& x, Sampler& rng, bool nonnegative = false);
/// Nonnegative with every value in [0, 1].
trunc::SimpleElement random_unit_simple(const boolean::SpacePtr& x, Sampler& rng);
/// Component family of a random simple trunc on x: unions of a random
/// partition of the non-star points.
std::vector<Subset> random_components(const boolean::SpacePtr& x, Sampler& rng);

/// Closed set family over at most `max_points` points with at most
/// `max_size` members, from random generators.
std::vector<Subset> random_closed_family(Sampler& rng, std::size_t max_points, std::size_t max_size);
boolean::GeneralizedBooleanAlgebra random_gba(Sampler& rng, std::size_t max_size = 16);

/// Chains, chain products, small Boolean frames and downset frames.
frame::FramePtr random_frame(Sampler& rng, std::size_t max_size = 20);
frame::PointedPtr random_pointed(const frame::FramePtr& f, Sampler& rng);
/// Minimal nonzero complemented elements; they partition top.
std::vector<frame::Elem> central_atoms(const frame::FiniteFrame& f);
/// Real-kind frame real: random values on the central atoms, 0 on the point's
/// atom, at most `max_values` distinct nonzero values.
frame::FrameReal random_frame_real(const frame::PointedPtr& p, Sampler& rng, bool nonnegative = false,
                                   std::size_t max_values = 3);
/// Extended kind: values may be infinite and the point's cell need not be 0.
frame::FrameReal random_extended_real(const frame::PointedPtr& p, Sampler& rng);
/// Identity, open, closed, Booleanization, or a product of two of these.
frame::FrameQuotient random_quotient(Sampler& rng, std::size_t max_size = 20);
frame::FrameSurjection random_surjection(Sampler& rng, std::size_t max_size = 20);

}  // namespace trunclab::props
