#include "qhelly/lp.hpp"

#include <cassert>

namespace qhelly {

int LinearProgram::add_var(bool nonneg) {
    nonneg_.push_back(nonneg);
    return static_cast<int>(nonneg_.size()) - 1;
}

int LinearProgram::add_vars(int count, bool nonneg) {
    int first = num_vars();
    for (int i = 0; i < count; ++i) add_var(nonneg);
    return first;
}

void LinearProgram::add_le(RatVec coeffs, Rational rhs) {
    if (static_cast<int>(coeffs.size()) > num_vars())
        throw DimensionMismatch("LinearProgram: row longer than variable count");
    rows_.push_back({std::move(coeffs), Rel::Le, std::move(rhs)});
}

void LinearProgram::add_ge(RatVec coeffs, Rational rhs) {
    if (static_cast<int>(coeffs.size()) > num_vars())
        throw DimensionMismatch("LinearProgram: row longer than variable count");
    rows_.push_back({std::move(coeffs), Rel::Ge, std::move(rhs)});
}

void LinearProgram::add_eq(RatVec coeffs, Rational rhs) {
    if (static_cast<int>(coeffs.size()) > num_vars())
        throw DimensionMismatch("LinearProgram: row longer than variable count");
    rows_.push_back({std::move(coeffs), Rel::Eq, std::move(rhs)});
}

LPResult LinearProgram::maximize(const RatVec& objective) const {
    return solve(objective, Sense::Max);
}

LPResult LinearProgram::minimize(const RatVec& objective) const {
    return solve(objective, Sense::Min);
}

namespace {

// Dense simplex tableau. Column layout: structural columns first, then
// slack/surplus, then artificial. Row i stores the coefficients plus the
// rhs in the last slot; `cost` holds reduced costs (z_j - c_j) with the
// current objective value in its last slot.
struct Tableau {
    int cols = 0;  // without rhs
    std::vector<RatVec> rows;
    RatVec cost;
    std::vector<int> basis;       // column basic in each row
    std::vector<bool> banned;     // artificial columns after phase 1

    void pivot(int r, int s) {
        RatVec& prow = rows[static_cast<std::size_t>(r)];
        Rational inv = 1 / prow[static_cast<std::size_t>(s)];
        for (auto& x : prow) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == r) continue;
            eliminate(rows[i], prow, s);
        }
        eliminate(cost, prow, s);
        basis[static_cast<std::size_t>(r)] = s;
    }

    static void eliminate(RatVec& row, const RatVec& prow, int s) {
        Rational f = row[static_cast<std::size_t>(s)];
        if (f == 0) return;
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
    }

    // Bland: entering column is the lowest-index improving one.
    int entering() const {
        for (int j = 0; j < cols; ++j) {
            if (banned[static_cast<std::size_t>(j)]) continue;
            if (cost[static_cast<std::size_t>(j)] < 0) return j;
        }
        return -1;
    }

    // Min-ratio row; ties by smallest basic column index (Bland).
    int leaving(int s) const {
        int best = -1;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& a = rows[i][static_cast<std::size_t>(s)];
            if (a <= 0) continue;
            Rational ratio = rows[i].back() / a;
            if (best < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[static_cast<std::size_t>(best)])) {
                best = static_cast<int>(i);
                best_ratio = ratio;
            }
        }
        return best;
    }

    // Returns false on unboundedness.
    bool run() {
        for (;;) {
            int s = entering();
            if (s < 0) return true;
            int r = leaving(s);
            if (r < 0) return false;
            pivot(r, s);
        }
    }

    // Reduced costs for objective c (length cols, 0 for missing) given the
    // current basis: cost_j = sum_i c[basis_i] * rows[i][j] - c_j.
    void set_objective(const RatVec& c) {
        cost.assign(static_cast<std::size_t>(cols) + 1, Rational(0));
        for (int j = 0; j <= cols; ++j) {
            Rational acc(0);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const Rational& cb = c[static_cast<std::size_t>(basis[i])];
                if (cb != 0) acc += cb * rows[i][static_cast<std::size_t>(j)];
            }
            if (j < cols) acc -= c[static_cast<std::size_t>(j)];
            cost[static_cast<std::size_t>(j)] = acc;
        }
    }
};

Rational coeff_at(const RatVec& coeffs, std::size_t j) {
    return j < coeffs.size() ? coeffs[j] : Rational(0);
}

}  // namespace

LPResult LinearProgram::solve(const RatVec& objective, Sense sense) const {
    if (static_cast<int>(objective.size()) > num_vars())
        throw DimensionMismatch("LinearProgram: objective longer than variable count");

    const int n_user = num_vars();
    // Structural columns: nonnegative vars map to one column, free vars to
    // a difference of two.
    std::vector<std::pair<int, int>> var_cols(static_cast<std::size_t>(n_user), {-1, -1});
    int n_struct = 0;
    for (int v = 0; v < n_user; ++v) {
        var_cols[static_cast<std::size_t>(v)].first = n_struct++;
        if (!nonneg_[static_cast<std::size_t>(v)]) var_cols[static_cast<std::size_t>(v)].second = n_struct++;
    }

    const int m = static_cast<int>(rows_.size());
    int n_slack = 0;
    for (const auto& row : rows_)
        if (row.rel != Rel::Eq) ++n_slack;

    // Artificial columns are allocated pessimistically (one per row) and the
    // unused ones simply stay out of the basis.
    const int cols = n_struct + n_slack + m;
    Tableau t;
    t.cols = cols;
    t.banned.assign(static_cast<std::size_t>(cols), false);
    t.basis.assign(static_cast<std::size_t>(m), -1);

    RatVec phase1_cost(static_cast<std::size_t>(cols) + 1, Rational(0));
    int slack_next = n_struct;
    int art_next = n_struct + n_slack;
    int n_art = 0;

    for (int i = 0; i < m; ++i) {
        const Row& row = rows_[static_cast<std::size_t>(i)];
        RatVec trow(static_cast<std::size_t>(cols) + 1, Rational(0));
        bool flip = row.rhs < 0;
        Rational sign(flip ? -1 : 1);
        for (int v = 0; v < n_user; ++v) {
            Rational a = coeff_at(row.coeffs, static_cast<std::size_t>(v));
            if (a == 0) continue;
            a *= sign;
            trow[static_cast<std::size_t>(var_cols[static_cast<std::size_t>(v)].first)] = a;
            if (var_cols[static_cast<std::size_t>(v)].second >= 0)
                trow[static_cast<std::size_t>(var_cols[static_cast<std::size_t>(v)].second)] = -a;
        }
        trow.back() = row.rhs * sign;

        Rel rel = row.rel;
        if (flip && rel != Rel::Eq) rel = (rel == Rel::Le) ? Rel::Ge : Rel::Le;

        if (rel == Rel::Le) {
            int sc = slack_next++;
            trow[static_cast<std::size_t>(sc)] = 1;
            t.basis[static_cast<std::size_t>(i)] = sc;
        } else if (rel == Rel::Ge) {
            int sc = slack_next++;
            trow[static_cast<std::size_t>(sc)] = -1;
        }
        if (t.basis[static_cast<std::size_t>(i)] < 0) {
            int ac = art_next++;
            ++n_art;
            trow[static_cast<std::size_t>(ac)] = 1;
            t.basis[static_cast<std::size_t>(i)] = ac;
            phase1_cost[static_cast<std::size_t>(ac)] = -1;  // maximize -(sum of artificials)
        }
        t.rows.push_back(std::move(trow));
    }

    // Phase 1.
    if (n_art > 0) {
        RatVec basis_cost(static_cast<std::size_t>(cols), Rational(0));
        for (int j = n_struct + n_slack; j < cols; ++j)
            basis_cost[static_cast<std::size_t>(j)] = phase1_cost[static_cast<std::size_t>(j)];
        t.set_objective(basis_cost);
        bool ok = t.run();
        assert(ok);  // phase-1 objective is bounded
        (void)ok;
        if (t.cost.back() != 0) {
            return {LPStatus::Infeasible, std::nullopt, std::nullopt};
        }
        // Drive surviving artificials out of the basis; an all-zero row is
        // a redundant constraint and is dropped.
        for (std::size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < n_struct + n_slack) {
                ++i;
                continue;
            }
            int pivot_col = -1;
            for (int j = 0; j < n_struct + n_slack; ++j) {
                if (t.rows[i][static_cast<std::size_t>(j)] != 0) {
                    pivot_col = j;
                    break;
                }
            }
            if (pivot_col >= 0) {
                t.pivot(static_cast<int>(i), pivot_col);
                ++i;
            } else {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        for (int j = n_struct + n_slack; j < cols; ++j) t.banned[static_cast<std::size_t>(j)] = true;
    }

    // Phase 2.
    RatVec c(static_cast<std::size_t>(cols), Rational(0));
    for (int v = 0; v < n_user; ++v) {
        Rational cv = coeff_at(objective, static_cast<std::size_t>(v));
        if (sense == Sense::Min) cv = -cv;
        if (cv == 0) continue;
        c[static_cast<std::size_t>(var_cols[static_cast<std::size_t>(v)].first)] = cv;
        if (var_cols[static_cast<std::size_t>(v)].second >= 0)
            c[static_cast<std::size_t>(var_cols[static_cast<std::size_t>(v)].second)] = -cv;
    }
    t.set_objective(c);
    if (!t.run()) {
        return {LPStatus::Unbounded, std::nullopt, std::nullopt};
    }

    RatVec col_values(static_cast<std::size_t>(cols), Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        col_values[static_cast<std::size_t>(t.basis[i])] = t.rows[i].back();
    RatVec witness(static_cast<std::size_t>(n_user), Rational(0));
    for (int v = 0; v < n_user; ++v) {
        const auto& [plus, minus] = var_cols[static_cast<std::size_t>(v)];
        witness[static_cast<std::size_t>(v)] = col_values[static_cast<std::size_t>(plus)];
        if (minus >= 0) witness[static_cast<std::size_t>(v)] -= col_values[static_cast<std::size_t>(minus)];
    }
    Rational opt = t.cost.back();
    if (sense == Sense::Min) opt = -opt;
    return {LPStatus::Optimal, opt, std::move(witness)};
}

LPResult lp_solve(const RatVec& objective, Sense sense, const HPolytope& body) {
    if (static_cast<int>(objective.size()) != body.dim)
        throw DimensionMismatch("lp_solve: objective dimension != body dimension");
    LinearProgram lp;
    lp.add_vars(body.dim, false);
    for (const auto& hs : body.constraints) lp.add_le(hs.normal, hs.offset);
    return sense == Sense::Max ? lp.maximize(objective) : lp.minimize(objective);
}

LinearProgram intersection_lp(int dim, std::span<const ConvexBody> bodies) {
    LinearProgram lp;
    lp.add_vars(dim, false);
    for (const auto& body : bodies) {
        if (body.dim() != dim) throw DimensionMismatch("intersection_lp: body dimension mismatch");
        if (body.is_h()) {
            for (const auto& hs : body.h().constraints) lp.add_le(hs.normal, hs.offset);
        } else {
            const VBody& v = body.v();
            int first = lp.add_vars(static_cast<int>(v.points.size()), true);
            // x - sum_i lambda_i p_i = 0, sum_i lambda_i = 1
            for (int c = 0; c < dim; ++c) {
                RatVec row(static_cast<std::size_t>(first) + v.points.size(), Rational(0));
                row[static_cast<std::size_t>(c)] = 1;
                for (std::size_t i = 0; i < v.points.size(); ++i)
                    row[static_cast<std::size_t>(first) + i] = -v.points[i][static_cast<std::size_t>(c)];
                lp.add_eq(std::move(row), Rational(0));
            }
            RatVec ones(static_cast<std::size_t>(first) + v.points.size(), Rational(0));
            for (std::size_t i = 0; i < v.points.size(); ++i) ones[static_cast<std::size_t>(first) + i] = 1;
            lp.add_eq(std::move(ones), Rational(1));
        }
    }
    return lp;
}

LPResult support(int dim, std::span<const ConvexBody> bodies, const RatVec& direction, Sense sense) {
    LinearProgram lp = intersection_lp(dim, bodies);
    RatVec obj(direction);
    obj.resize(static_cast<std::size_t>(lp.num_vars()), Rational(0));
    LPResult res = sense == Sense::Max ? lp.maximize(obj) : lp.minimize(obj);
    if (res.optimal()) res.witness->resize(static_cast<std::size_t>(dim));
    return res;
}

bool intersection_nonempty(int dim, std::span<const ConvexBody> bodies) {
    LinearProgram lp = intersection_lp(dim, bodies);
    return lp.feasible_point().optimal();
}

}  // namespace qhelly
