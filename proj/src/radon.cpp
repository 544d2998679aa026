#include "qhelly/radon.hpp"

#include <stdexcept>

namespace qhelly {

RadonPartition radon_partition(const std::vector<RatVec>& points) {
    if (points.empty()) throw std::invalid_argument("radon_partition: no points");
    const int d = static_cast<int>(points.front().size());
    const int n = static_cast<int>(points.size());
    if (n < d + 2)
        throw std::invalid_argument("radon_partition: needs at least dim+2 points");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("radon_partition: mixed dimensions");

    // Affine dependence: rows are the coordinates plus an all-ones row.
    RatMat m(static_cast<std::size_t>(d) + 1, RatVec(static_cast<std::size_t>(n), Rational(0)));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < d; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                points[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        m[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)] = 1;
    }
    auto lambda = kernel_vector(std::move(m), n);
    if (!lambda) throw std::logic_error("radon_partition: no dependence found");

    RadonPartition out;
    out.witness = zero_vec(d);
    Rational positive_sum(0);
    for (int j = 0; j < n; ++j) {
        const Rational& l = (*lambda)[static_cast<std::size_t>(j)];
        if (l > 0) {
            out.part_a.push_back(points[static_cast<std::size_t>(j)]);
            positive_sum += l;
            out.witness = add(out.witness, scale(l, points[static_cast<std::size_t>(j)]));
        } else {
            out.part_b.push_back(points[static_cast<std::size_t>(j)]);
        }
    }
    out.witness = scale(1 / positive_sum, out.witness);
    return out;
}

}  // namespace qhelly
