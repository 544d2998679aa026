#include "qhelly/vertices.hpp"

#include <algorithm>

#include "qhelly/lp.hpp"

namespace qhelly {

bool is_bounded(const HPolytope& body) {
    for (int i = 0; i < body.dim; ++i) {
        RatVec e = zero_vec(body.dim);
        for (int sign : {1, -1}) {
            e[static_cast<std::size_t>(i)] = sign;
            LPResult r = lp_solve(e, Sense::Max, body);
            if (r.status == LPStatus::Infeasible) return true;
            if (r.status == LPStatus::Unbounded) return false;
        }
    }
    return true;
}

std::vector<RatVec> vertices(const HPolytope& body) {
    if (!is_bounded(body)) throw UnboundedBody("vertices: unbounded polytope");
    const int d = body.dim;
    const int m = static_cast<int>(body.constraints.size());
    std::vector<RatVec> found;
    if (m < d) return found;

    std::vector<int> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;

    auto advance = [&]() {
        int i = d - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - d + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        return true;
    };

    do {
        RatMat a;
        RatVec b;
        for (int i = 0; i < d; ++i) {
            const HalfSpace& hs = body.constraints[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            a.push_back(hs.normal);
            b.push_back(hs.offset);
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (x && body.contains(*x)) found.push_back(std::move(*x));
    } while (advance());

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace qhelly
