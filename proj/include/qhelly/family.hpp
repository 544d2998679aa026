#pragma once

#include <string>
#include <vector>

#include "qhelly/geometry.hpp"

namespace qhelly {

// Ordered list of identified convex bodies sharing one ambient dimension;
// the object every family-level check consumes.
struct Family {
    int dim = 0;
    std::vector<std::string> ids;
    std::vector<ConvexBody> bodies;

    Family() = default;
    explicit Family(int d) : dim(d) {
        if (d <= 0) throw std::invalid_argument("Family: dim must be positive");
    }

    void add(std::string id, ConvexBody body);
    std::size_t size() const { return bodies.size(); }

    std::vector<ConvexBody> gather(std::span<const int> indices) const;
    std::vector<std::string> id_subset(std::span<const int> indices) const;
};

// One family per color; colorful tuples draw exactly one member per family.
struct ColorfulFamilies {
    std::vector<Family> families;

    explicit ColorfulFamilies(std::vector<Family> fs);
    int dim() const { return families.front().dim; }
};

}  // namespace qhelly
