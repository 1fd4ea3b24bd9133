#pragma once

#include <string>
#include <vector>

#include "dgrep/modules.hpp"
#include "dgrep/representation.hpp"

namespace dgrep {

/// Names of the bundled representations, in a fixed order:
///   trivial      one-object base, R(*) the ground ring
///   arrow        base 0 -> 1, both fibers the ground ring, R(a) = id
///   z2-strict    base Z/2, R(*) the ground ring, R(s) = id
///   z2-twisted   base Z/2, R(*) two discrete objects swapped by R(s), mu_{s,s} = -1
///   arrow-disk   base 0 -> 1, both fibers End(D^1) with its nonzero differential
const std::vector<std::string>& corpus_names();

RepresentationPtr corpus_representation(const std::string& name, const Ring& ring);

/// A hand-built right R-module that is not one of the generators.
RModule corpus_sample(const std::string& name, RepresentationPtr rep);

/// Endomorphism dg-algebra of D^1 as a one-object dg-category with basis
/// 1, p (degree 0), s (degree -1), t (degree 1).
DgCategoryPtr disk_endomorphisms(const Ring& ring);

/// The ground ring as a one-object dg-category with identity "1".
DgCategoryPtr ground_category(const Ring& ring, const std::string& object);

}  // namespace dgrep
