#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qhelly/geometry.hpp"

namespace qhelly {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    std::optional<Rational> optimum;
    std::optional<RatVec> witness;  // values of the declared variables

    bool optimal() const { return status == LPStatus::Optimal; }
};

enum class Sense { Max, Min };

// Exact linear program over free or nonnegative variables with <=, >=, ==
// rows. Solved by a two-phase dense rational simplex with Bland's pivoting
// rule, so every answer is a decision and termination is guaranteed.
class LinearProgram {
  public:
    int add_var(bool nonneg = false);
    int add_vars(int count, bool nonneg = false);
    int num_vars() const { return static_cast<int>(nonneg_.size()); }

    // Coefficient vectors may be shorter than num_vars(); missing entries are 0.
    void add_le(RatVec coeffs, Rational rhs);
    void add_ge(RatVec coeffs, Rational rhs);
    void add_eq(RatVec coeffs, Rational rhs);

    LPResult maximize(const RatVec& objective) const;
    LPResult minimize(const RatVec& objective) const;
    LPResult feasible_point() const { return maximize(RatVec{}); }

  private:
    enum class Rel { Le, Ge, Eq };
    struct Row {
        RatVec coeffs;
        Rel rel;
        Rational rhs;
    };

    LPResult solve(const RatVec& objective, Sense sense) const;

    std::vector<bool> nonneg_;
    std::vector<Row> rows_;
};

// max/min of <objective, x> over an H-polytope; free variables.
LPResult lp_solve(const RatVec& objective, Sense sense, const HPolytope& body);

// LP whose first `dim` variables are a point of the intersection of `bodies`
// (hull members contribute hidden convex-coefficient blocks).
LinearProgram intersection_lp(int dim, std::span<const ConvexBody> bodies);

LPResult support(int dim, std::span<const ConvexBody> bodies, const RatVec& direction, Sense sense);

bool intersection_nonempty(int dim, std::span<const ConvexBody> bodies);

}  // namespace qhelly
