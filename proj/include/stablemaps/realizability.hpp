#pragma once

#include <vector>

#include "stablemaps/state.hpp"

namespace stablemaps {

/// A fold-map candidate: surfaces with directions and nesting parents all
/// assigned, no circuits anywhere.  Shares the mapstate representation so it
/// serializes through the same format.
using NestingForest = MapState;

/// Genera of the surfaces of a forest, in id order.
std::vector<int> genus_list(const NestingForest& forest);

/// Whether some fold map has exactly these singular surface genera: true iff
/// n + (sum of genera) is odd, where n is the number of surfaces.  Requires
/// a non-empty list of non-negative genera.
bool fold_feasible(const std::vector<int>& genera);

/// Witness for odd n, all genera zero: n concentric fold spheres, innermost
/// first, each nested in the next, the inner (n-1)/2 of them directed
/// outward and the rest inward.  Requires n odd and positive.
NestingForest construct_concentric(int n);

/// Witness for odd surface counts with genus: one inward fold sphere S1,
/// plus for each entry g of `genera` a pair of genus-g surfaces nested
/// directly inside S1 (outer inward, inner outward, inner inside outer).
/// Requires a non-empty list of entries >= 1.
NestingForest construct_nested_pairs(const std::vector<int>& genera);

} // namespace stablemaps
