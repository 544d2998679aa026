#include "qhelly/family.hpp"

#include <algorithm>

namespace qhelly {

void Family::add(std::string id, ConvexBody body) {
    if (body.dim() != dim) throw DimensionMismatch("Family::add: body dimension mismatch");
    if (std::find(ids.begin(), ids.end(), id) != ids.end())
        throw std::invalid_argument("Family::add: duplicate id '" + id + "'");
    ids.push_back(std::move(id));
    bodies.push_back(std::move(body));
}

std::vector<ConvexBody> Family::gather(std::span<const int> indices) const {
    std::vector<ConvexBody> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(bodies.at(static_cast<std::size_t>(i)));
    return out;
}

std::vector<std::string> Family::id_subset(std::span<const int> indices) const {
    std::vector<std::string> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(ids.at(static_cast<std::size_t>(i)));
    return out;
}

ColorfulFamilies::ColorfulFamilies(std::vector<Family> fs) : families(std::move(fs)) {
    if (families.empty()) throw std::invalid_argument("ColorfulFamilies: needs at least one family");
    for (const auto& f : families) {
        if (f.dim != families.front().dim)
            throw DimensionMismatch("ColorfulFamilies: mixed dimensions");
        if (f.size() == 0) throw std::invalid_argument("ColorfulFamilies: empty color class");
    }
}

}  // namespace qhelly
