#include "stablemaps/realizability.hpp"

#include "stablemaps/errors.hpp"

namespace stablemaps {

std::vector<int> genus_list(const NestingForest& forest) {
    std::vector<int> genera;
    genera.reserve(forest.surfaces.size());
    for (const auto& s : forest.surfaces) genera.push_back(s.genus);
    return genera;
}

bool fold_feasible(const std::vector<int>& genera) {
    if (genera.empty())
        throw DomainError("fold feasibility: need at least one surface");
    long long sum = 0;
    for (const int g : genera) {
        if (g < 0) throw DomainError("fold feasibility: genera are non-negative");
        sum += g;
    }
    return (static_cast<long long>(genera.size()) + sum) % 2 != 0;
}

NestingForest construct_concentric(int n) {
    if (n < 1 || n % 2 == 0)
        throw DomainError("concentric construction needs an odd positive count");

    NestingForest forest;
    for (int i = 1; i <= n; ++i) {
        SurfaceComponent sphere;
        sphere.id = static_cast<SurfaceId>(i);
        sphere.genus = 0;
        // Sphere i sits inside sphere i + 1; the innermost (n - 1) / 2 face
        // outward, the rest inward, which alternates the image sheets
        // consistently from the outermost sphere in.
        if (i < n) sphere.parent = static_cast<SurfaceId>(i + 1);
        sphere.direction = (i <= (n - 1) / 2) ? SurfaceDirection::outward
                                              : SurfaceDirection::inward;
        forest.surfaces.push_back(std::move(sphere));
    }
    return forest;
}

NestingForest construct_nested_pairs(const std::vector<int>& genera) {
    if (genera.empty())
        throw DomainError("nested pairs construction needs at least one genus");
    for (const int g : genera)
        if (g < 1)
            throw DomainError("nested pairs construction needs genera >= 1");

    NestingForest forest;
    SurfaceComponent root;
    root.id = 1;
    root.genus = 0;
    root.direction = SurfaceDirection::inward;
    forest.surfaces.push_back(std::move(root));

    // Pair i: an outer and an inner copy of a genus-g surface, the inner one
    // nested directly inside the outer, the pair nested inside the root
    // sphere.  Their images cancel sheet counts against each other, so the
    // total is odd: 2 * |genera| + 1 surfaces.
    for (std::size_t i = 0; i < genera.size(); ++i) {
        SurfaceComponent outer;
        outer.id = static_cast<SurfaceId>(2 * i + 2);
        outer.genus = genera[i];
        outer.direction = SurfaceDirection::inward;
        outer.parent = 1;

        SurfaceComponent inner;
        inner.id = static_cast<SurfaceId>(2 * i + 3);
        inner.genus = genera[i];
        inner.direction = SurfaceDirection::outward;
        inner.parent = outer.id;

        forest.surfaces.push_back(std::move(outer));
        forest.surfaces.push_back(std::move(inner));
    }
    return forest;
}

} // namespace stablemaps
