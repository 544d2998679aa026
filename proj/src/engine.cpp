#include "qhelly/engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <thread>

#include "qhelly/analytics.hpp"
#include "qhelly/lp.hpp"

namespace qhelly {

Integer binomial(int n, int m) {
    if (m < 0 || m > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return out;
}

// ---------------------------------------------------------------------------
// Lattice cache
// ---------------------------------------------------------------------------

class FamilyLatticeCache {
  public:
    explicit FamilyLatticeCache(const Family& family) {
        const int d = family.dim;
        const std::size_t n = family.size();
        std::vector<std::optional<IntBox>> boxes(n);
        bool any = false;
        IntVec lo, hi;
        for (std::size_t i = 0; i < n; ++i) {
            try {
                boxes[i] = integer_bounding_box(d, std::span<const ConvexBody>(&family.bodies[i], 1));
            } catch (const UnboundedBody&) {
                return;  // unusable; callers fall back to per-subset enumeration
            }
            if (!boxes[i] || boxes[i]->empty()) continue;
            if (!any) {
                lo = boxes[i]->lo;
                hi = boxes[i]->hi;
                any = true;
            } else {
                for (int c = 0; c < d; ++c) {
                    if (boxes[i]->lo[static_cast<std::size_t>(c)] < lo[static_cast<std::size_t>(c)])
                        lo[static_cast<std::size_t>(c)] = boxes[i]->lo[static_cast<std::size_t>(c)];
                    if (boxes[i]->hi[static_cast<std::size_t>(c)] > hi[static_cast<std::size_t>(c)])
                        hi[static_cast<std::size_t>(c)] = boxes[i]->hi[static_cast<std::size_t>(c)];
                }
            }
        }
        if (any) {
            IntBox union_box{lo, hi};
            if (union_box.cell_count() > 200000) return;  // too big to precompute
            IntVec cur = lo;
            for (;;) {
                points_.push_back(cur);
                int c = d - 1;
                while (c >= 0) {
                    if (cur[static_cast<std::size_t>(c)] < hi[static_cast<std::size_t>(c)]) {
                        ++cur[static_cast<std::size_t>(c)];
                        break;
                    }
                    cur[static_cast<std::size_t>(c)] = lo[static_cast<std::size_t>(c)];
                    --c;
                }
                if (c < 0) break;
            }
        }
        masks_.resize(n, std::vector<bool>(points_.size(), false));
        for (std::size_t i = 0; i < n; ++i) {
            if (!boxes[i] || boxes[i]->empty()) continue;
            for (std::size_t p = 0; p < points_.size(); ++p) {
                bool in_box = true;
                for (int c = 0; c < d && in_box; ++c) {
                    const Integer& x = points_[p][static_cast<std::size_t>(c)];
                    in_box = x >= boxes[i]->lo[static_cast<std::size_t>(c)] &&
                             x <= boxes[i]->hi[static_cast<std::size_t>(c)];
                }
                if (in_box && member(to_rational(points_[p]), family.bodies[i]))
                    masks_[i][p] = true;
            }
        }
        usable_ = true;
    }

    bool usable() const { return usable_; }

    std::vector<IntVec> points_in(std::span<const int> subset) const {
        std::vector<IntVec> out;
        for (std::size_t p = 0; p < points_.size(); ++p) {
            bool all = true;
            for (int i : subset) {
                if (!masks_[static_cast<std::size_t>(i)][p]) {
                    all = false;
                    break;
                }
            }
            if (all) out.push_back(points_[p]);
        }
        return out;
    }

  private:
    bool usable_ = false;
    std::vector<IntVec> points_;
    std::vector<std::vector<bool>> masks_;
};

namespace {

bool needs_lattice(const Predicate& pred) {
    return std::holds_alternative<PredContainsIntegerPoint>(pred) ||
           std::holds_alternative<PredKColinear>(pred);
}

EvalOutcome from_width(const WidthCertificate& w, const Rational& threshold) {
    EvalOutcome out;
    switch (w.status) {
        case ExtentStatus::Empty:
            out.value = false;
            break;
        case ExtentStatus::Unbounded:
            out.value = true;
            out.unbounded = true;
            break;
        case ExtentStatus::Ok:
            out.value = w.value >= threshold;
            out.exact = w.value;
            break;
    }
    return out;
}

}  // namespace

EvalOutcome eval_predicate(const Predicate& pred, const Family& family,
                           std::span<const int> subset, const FamilyLatticeCache* cache) {
    const int d = family.dim;
    EvalOutcome out;

    if (std::holds_alternative<PredNonempty>(pred)) {
        auto bodies = family.gather(subset);
        out.value = intersection_nonempty(d, bodies);
        return out;
    }
    if (const auto* p = std::get_if<PredVWidthAtLeast>(&pred)) {
        auto bodies = family.gather(subset);
        return from_width(v_width(d, bodies, p->v), p->threshold);
    }
    if (const auto* p = std::get_if<PredVWidthCap>(&pred)) {
        auto bodies = family.gather(subset);
        WidthCertificate w = v_width(d, bodies, p->v);
        out = from_width(w, Rational(0));
        if (w.status == ExtentStatus::Ok) {
            // width >= c * |v| / sqrt(d), squared on both sides
            out.value = w.value * w.value * d >= p->c * p->c * squared_norm(p->v);
        }
        return out;
    }
    if (const auto* p = std::get_if<PredDiameterAtLeast>(&pred)) {
        auto bodies = family.gather(subset);
        if (p->norm) {
            return from_width(rho_diameter(d, bodies, *p->norm), p->threshold);
        }
        for (const auto& b : bodies) {
            if (!b.is_h()) {
                out.error = true;  // Euclidean diameter needs vertex enumeration
                return out;
            }
        }
        L2Diameter l2 = l2_diameter_exact(d, bodies);
        switch (l2.status) {
            case ExtentStatus::Empty:
                out.value = false;
                break;
            case ExtentStatus::Unbounded:
                out.value = true;
                out.unbounded = true;
                break;
            case ExtentStatus::Ok:
                out.value = l2.squared >= p->threshold * p->threshold;
                out.exact = l2.squared;
                break;
        }
        return out;
    }

    // Lattice predicates.
    std::vector<IntVec> pts;
    try {
        if (cache && cache->usable()) {
            pts = cache->points_in(subset);
        } else {
            auto bodies = family.gather(subset);
            pts = integer_points(d, bodies);
        }
    } catch (const UnboundedBody&) {
        out.error = true;
        return out;
    }
    if (std::holds_alternative<PredContainsIntegerPoint>(pred)) {
        out.value = !pts.empty();
        return out;
    }
    const auto& kc = std::get<PredKColinear>(pred);
    out.value = find_k_colinear(d, pts, kc.k).has_value();
    return out;
}

// ---------------------------------------------------------------------------
// Subset / tuple enumeration
// ---------------------------------------------------------------------------

namespace {

std::vector<int> unrank_combination(std::uint64_t r, int n, int m) {
    std::vector<int> comb;
    comb.reserve(static_cast<std::size_t>(m));
    Integer rem(static_cast<unsigned long>(r));
    int x = 0;
    for (int i = 0; i < m; ++i) {
        for (;;) {
            Integer c = binomial(n - 1 - x, m - i - 1);
            if (rem < c) break;
            rem -= c;
            ++x;
        }
        comb.push_back(x);
        ++x;
    }
    return comb;
}

std::vector<int> random_combination(std::mt19937_64& rng, int n, int m) {
    std::set<int> chosen;
    for (int j = n - m; j < n; ++j) {
        std::uniform_int_distribution<int> dist(0, j);
        int t = dist(rng);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

// code: 0 = violated, 1 = satisfied, 2 = error
template <typename SubsetAt>
void evaluate_codes(std::uint64_t count, int jobs, const Predicate& pred, const Family& family,
                    const FamilyLatticeCache* cache, SubsetAt&& subset_at,
                    std::vector<std::uint8_t>& codes) {
    codes.assign(count, 0);
    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            auto subset = subset_at(i);
            EvalOutcome o = eval_predicate(pred, family, subset, cache);
            codes[i] = o.error ? 2 : (o.value ? 1 : 0);
        }
    };
    if (jobs <= 1 || count < 64) {
        work(0, count);
        return;
    }
    const int threads = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), count);
    std::vector<std::thread> pool;
    std::uint64_t chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::uint64_t lo = static_cast<std::uint64_t>(t) * chunk;
        std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, count);
        if (lo >= hi) break;
        pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
}

}  // namespace

FractionalReport check_helly(const Family& family, int m, const Predicate& pred,
                             const EngineOptions& opts) {
    const int n = static_cast<int>(family.size());
    if (m < 0 || m > n) throw std::invalid_argument("check_helly: subset size out of range");

    FractionalReport rep;
    rep.subset_size = m;
    rep.total = binomial(n, m);

    std::unique_ptr<FamilyLatticeCache> cache;
    if (needs_lattice(pred)) cache = std::make_unique<FamilyLatticeCache>(family);

    std::vector<std::vector<int>> sampled_subsets;
    std::uint64_t count;
    Integer cap(static_cast<unsigned long>(opts.subset_cap));
    if (rep.total <= cap) {
        count = rep.total.get_ui();
    } else {
        rep.sampled = true;
        std::mt19937_64 rng(opts.seed);
        std::uint64_t draws = std::min<std::uint64_t>(opts.subset_cap, 20000);
        for (std::uint64_t i = 0; i < draws; ++i)
            sampled_subsets.push_back(random_combination(rng, n, m));
        count = draws;
    }

    std::vector<std::uint8_t> codes;
    auto subset_at = [&](std::uint64_t i) {
        return rep.sampled ? sampled_subsets[i] : unrank_combination(i, n, m);
    };
    evaluate_codes(count, opts.jobs, pred, family, cache.get(), subset_at, codes);

    rep.evaluated = count;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (codes[i] == 1) ++rep.satisfying;
        else if (codes[i] == 2) ++rep.errors;
        else if (rep.first_violation.empty()) {
            auto subset = subset_at(i);
            rep.first_violation = family.id_subset(subset);
        }
    }
    rep.alpha = count == 0 ? Rational(1)
                           : Rational(static_cast<unsigned long>(rep.satisfying),
                                      static_cast<unsigned long>(count));
    rep.alpha.canonicalize();

    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    EvalOutcome full = eval_predicate(pred, family, all, cache.get());
    if (!full.error) {
        rep.conclusion = full.value;
        rep.conclusion_value = full.exact;
        rep.conclusion_unbounded = full.unbounded;
    }
    return rep;
}

ColorfulReport check_colorful(const ColorfulFamilies& colors, const Predicate& pred,
                              const EngineOptions& opts) {
    const int d = colors.dim();
    const std::size_t ncolors = colors.families.size();

    // Tuples live in a scratch family so eval_predicate applies unchanged.
    ColorfulReport rep;
    rep.total = 1;
    for (const auto& f : colors.families) rep.total *= static_cast<long>(f.size());

    std::vector<std::vector<int>> sampled;
    std::uint64_t count;
    bool sampling = rep.total > Integer(static_cast<unsigned long>(opts.subset_cap));
    if (sampling) {
        rep.sampled = true;
        std::mt19937_64 rng(opts.seed);
        std::uint64_t draws = std::min<std::uint64_t>(opts.subset_cap, 20000);
        for (std::uint64_t t = 0; t < draws; ++t) {
            std::vector<int> pick(ncolors);
            for (std::size_t c = 0; c < ncolors; ++c) {
                std::uniform_int_distribution<int> dist(
                    0, static_cast<int>(colors.families[c].size()) - 1);
                pick[c] = dist(rng);
            }
            sampled.push_back(std::move(pick));
        }
        count = draws;
    } else {
        count = rep.total.get_ui();
    }

    auto tuple_at = [&](std::uint64_t idx) {
        if (sampling) return sampled[idx];
        std::vector<int> pick(ncolors);
        std::uint64_t r = idx;
        for (std::size_t c = ncolors; c-- > 0;) {
            std::uint64_t sz = colors.families[c].size();
            pick[c] = static_cast<int>(r % sz);
            r /= sz;
        }
        return pick;
    };

    std::uint64_t first_violation = count;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto pick = tuple_at(idx);
        Family tuple(d);
        for (std::size_t c = 0; c < ncolors; ++c) {
            tuple.add("c" + std::to_string(c) + ":" + colors.families[c].ids[static_cast<std::size_t>(pick[c])],
                      colors.families[c].bodies[static_cast<std::size_t>(pick[c])]);
        }
        std::vector<int> all(ncolors);
        for (std::size_t c = 0; c < ncolors; ++c) all[c] = static_cast<int>(c);
        EvalOutcome o = eval_predicate(pred, tuple, all);
        if (o.error) ++rep.errors;
        else if (o.value) ++rep.satisfying;
        else if (first_violation == count) {
            first_violation = idx;
            rep.first_violation = tuple.ids;
        }
    }
    rep.evaluated = count;
    rep.alpha = count == 0 ? Rational(1)
                           : Rational(static_cast<unsigned long>(rep.satisfying),
                                      static_cast<unsigned long>(count));
    rep.alpha.canonicalize();
    rep.hypothesis_all = rep.satisfying == count && rep.errors == 0;

    for (std::size_t c = 0; c < ncolors; ++c) {
        const Family& f = colors.families[c];
        std::vector<int> all(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) all[i] = static_cast<int>(i);
        EvalOutcome o = eval_predicate(pred, f, all);
        if (!o.error && o.value) rep.concluding_colors.push_back(static_cast<int>(c));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Fractional v-width
// ---------------------------------------------------------------------------

namespace {

// Largest subfamily whose intersection satisfies the width predicate.
// Exhaustive for n <= 12 (widths are antitone in the subfamily, so scan
// sizes downward); greedy peeling beyond that.
std::pair<std::vector<int>, std::optional<Rational>> best_width_subfamily(
    const Family& family, const Predicate& pred, bool& heuristic) {
    const int n = static_cast<int>(family.size());
    heuristic = n > 12;
    if (!heuristic) {
        for (int size = n; size >= 1; --size) {
            std::vector<int> comb(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i;
            for (;;) {
                EvalOutcome o = eval_predicate(pred, family, comb);
                if (!o.error && o.value) return {comb, o.exact};
                int i = size - 1;
                while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - size + i) --i;
                if (i < 0) break;
                ++comb[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < size; ++j)
                    comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        return {{}, std::nullopt};
    }
    std::vector<int> current(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) current[static_cast<std::size_t>(i)] = i;
    for (;;) {
        EvalOutcome o = eval_predicate(pred, family, current);
        if (!o.error && o.value) return {current, o.exact};
        if (current.size() == 1) return {{}, std::nullopt};
        // Drop the member whose removal loosens the width the most.
        std::size_t best_drop = 0;
        std::optional<Rational> best_width;
        bool best_unbounded = false;
        for (std::size_t drop = 0; drop < current.size(); ++drop) {
            std::vector<int> trial;
            for (std::size_t i = 0; i < current.size(); ++i)
                if (i != drop) trial.push_back(current[i]);
            EvalOutcome t = eval_predicate(pred, family, trial);
            if (t.unbounded) {
                if (!best_unbounded) {
                    best_unbounded = true;
                    best_drop = drop;
                }
            } else if (!best_unbounded && t.exact && (!best_width || *t.exact > *best_width)) {
                best_width = *t.exact;
                best_drop = drop;
            }
        }
        current.erase(current.begin() + static_cast<std::ptrdiff_t>(best_drop));
    }
}

}  // namespace

FractionalReport fractional_vwidth(const Family& family, const RatVec& v, const Rational& threshold,
                                   const EngineOptions& opts) {
    const int n = static_cast<int>(family.size());
    const int m = std::min(2 * family.dim, n);
    Predicate pred = PredVWidthAtLeast{v, threshold};
    FractionalReport rep = check_helly(family, m, pred, opts);

    bool heuristic = false;
    auto [best, width] = best_width_subfamily(family, pred, heuristic);
    rep.best_subfamily_heuristic = heuristic;
    if (!best.empty()) {
        rep.best_subfamily = {family.id_subset(best), width.value_or(Rational(0))};
        // |best| >= (1 - (1-alpha)^{1/2d}) * n, decided exactly as
        // (1 - |best|/n)^{2d} <= 1 - alpha.
        Rational ratio(static_cast<unsigned long>(best.size()), static_cast<unsigned long>(n));
        ratio.canonicalize();
        Rational lhs(1);
        Rational base = 1 - ratio;
        for (int i = 0; i < 2 * family.dim; ++i) lhs *= base;
        rep.meets_fractional_bound = lhs <= 1 - rep.alpha;
    } else {
        rep.meets_fractional_bound = rep.alpha == 0;
    }
    return rep;
}

DirectionSurrogate diameter_direction(const HPolytope& body) {
    L2Diameter d = l2_diameter_exact(body);
    if (d.status == ExtentStatus::Unbounded)
        throw UnboundedBody("diameter_direction: body is unbounded");
    if (d.status == ExtentStatus::Empty)
        throw std::invalid_argument("diameter_direction: body is empty");
    if (d.squared < 1)
        throw std::invalid_argument("diameter_direction: diameter below 1, no unit segment");
    return {sub(d.p, d.q), d.squared};
}

// ---------------------------------------------------------------------------
// Cap covering pipeline
// ---------------------------------------------------------------------------

namespace {

std::vector<double> to_unit_double(const RatVec& z) {
    std::vector<double> out(z.size());
    double norm = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        out[i] = to_double(z[i]);
        norm += out[i] * out[i];
    }
    norm = std::sqrt(norm);
    for (auto& x : out) x /= norm;
    return out;
}

RatVec rationalize(const std::vector<double>& v) {
    RatVec out;
    out.reserve(v.size());
    for (double x : v) {
        long num = std::lround(x * (1 << 20));
        out.push_back(rat(num, 1 << 20));
    }
    return out;
}

}  // namespace

CapCoverReport cap_cover_experiment(const Family& family, const Rational& c,
                                    const Rational& alpha_in, const EngineOptions& opts) {
    const int d = family.dim;
    if (d < 2) throw std::invalid_argument("cap_cover_experiment: needs dimension >= 2");
    const int n = static_cast<int>(family.size());
    const int m = std::min(2 * d, n);

    CapCoverReport rep;

    // Record an unnormalized longest-segment direction for every subset
    // whose intersection reaches Euclidean diameter 1.
    std::vector<RatVec> dirs;
    std::vector<Rational> dir_sq;
    std::vector<int> comb(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) comb[static_cast<std::size_t>(i)] = i;
    Integer total = binomial(n, m);
    if (total > static_cast<long>(opts.subset_cap))
        throw std::invalid_argument("cap_cover_experiment: family too large for exhaustive subsets");
    for (;;) {
        auto bodies = family.gather(comb);
        bool all_h = true;
        for (const auto& b : bodies)
            if (!b.is_h()) all_h = false;
        if (all_h) {
            L2Diameter l2 = l2_diameter_exact(d, bodies);
            if (l2.status == ExtentStatus::Ok && l2.squared >= 1) {
                dirs.push_back(sub(l2.p, l2.q));
                dir_sq.push_back(l2.squared);
            }
        }
        int i = m - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }

    rep.directions_recorded = dirs.size();
    if (dirs.empty()) {
        rep.empty = true;
        return rep;
    }

    // Candidate axes: the recorded directions plus pairwise bisectors.
    std::vector<RatVec> candidates = dirs;
    if (dirs.size() <= 100) {
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            auto ui = to_unit_double(dirs[i]);
            for (std::size_t j = i + 1; j < dirs.size(); ++j) {
                auto uj = to_unit_double(dirs[j]);
                for (int sign : {1, -1}) {
                    std::vector<double> bis(ui.size());
                    double norm = 0;
                    for (std::size_t t = 0; t < ui.size(); ++t) {
                        bis[t] = ui[t] + sign * uj[t];
                        norm += bis[t] * bis[t];
                    }
                    if (norm < 1e-12) continue;
                    candidates.push_back(rationalize(bis));
                }
            }
        }
    }

    // Score in floating point with an exact re-check near the threshold.
    const double thr = to_double(c) / std::sqrt(static_cast<double>(d));
    const Rational c2 = c * c;
    std::vector<std::vector<double>> unit_dirs;
    unit_dirs.reserve(dirs.size());
    for (const auto& z : dirs) unit_dirs.push_back(to_unit_double(z));
    std::size_t best_idx = 0;
    std::uint64_t best_score = 0;
    for (std::size_t cand = 0; cand < candidates.size(); ++cand) {
        if (is_zero(candidates[cand])) continue;
        auto vc = to_unit_double(candidates[cand]);
        Rational cand_sq = squared_norm(candidates[cand]);
        std::uint64_t score = 0;
        for (std::size_t u = 0; u < dirs.size(); ++u) {
            const auto& uu = unit_dirs[u];
            double ip = 0;
            for (std::size_t t = 0; t < uu.size(); ++t) ip += uu[t] * vc[t];
            double gap = std::fabs(ip) - thr;
            bool inside;
            if (std::fabs(gap) > 1e-9) {
                inside = gap >= 0;
            } else {
                Rational ipr = dot(dirs[u], candidates[cand]);
                inside = ipr * ipr * d >= c2 * dir_sq[u] * cand_sq;
            }
            if (inside) ++score;
        }
        if (score > best_score) {
            best_score = score;
            best_idx = cand;
        }
    }
    rep.axis = candidates[best_idx];
    rep.axis_score = best_score;

    // Exact fractional check along the winning axis at width c * d^{-1/2}.
    Predicate pred = PredVWidthCap{rep.axis, c};
    rep.vwidth = check_helly(family, m, pred, opts);
    bool heuristic = false;
    auto [best, width] = best_width_subfamily(family, pred, heuristic);
    rep.vwidth.best_subfamily_heuristic = heuristic;
    if (!best.empty())
        rep.vwidth.best_subfamily = {family.id_subset(best), width.value_or(Rational(0))};

    GammaEval gamma_eval = eval_gamma(to_double(c), 200);
    rep.gamma_used = gamma_eval.value;
    double ag = to_double(alpha_in) * gamma_eval.value;
    rep.beta_bound = 1.0 - std::pow(1.0 - ag, 1.0 / (2.0 * d));
    double best_frac = best.empty() ? 0.0 : static_cast<double>(best.size()) / n;
    rep.meets_beta = best_frac >= rep.beta_bound - 1e-12;
    return rep;
}

// ---------------------------------------------------------------------------
// Iterative diameter certificate
// ---------------------------------------------------------------------------

DiameterCertificate certify_diameter(const Family& family, const PolytopeNorm& norm, int max_n,
                                     const EngineOptions& opts) {
    const int d = family.dim;
    if (norm.dim() != d) throw DimensionMismatch("certify_diameter: norm dimension mismatch");
    const int n = static_cast<int>(family.size());
    const int k = norm.facet_count();
    const int pairs = k / 2;
    const int m = std::min(k * d, n);

    DiameterCertificate cert;
    FractionalReport hypothesis = check_helly(family, m, PredDiameterAtLeast{norm, Rational(1)}, opts);
    if (hypothesis.alpha != 1 || hypothesis.errors > 0) {
        cert.refused = true;
        cert.violating_subset = hypothesis.first_violation;
        return cert;
    }

    // One block of point variables per product coordinate, each constrained
    // to the full intersection, plus the min-max variable s.
    auto build_step = [&](const Rational& f_target) {
        LinearProgram lp;
        std::vector<int> block_start(static_cast<std::size_t>(k));
        for (int b = 0; b < k; ++b) block_start[static_cast<std::size_t>(b)] = lp.add_vars(d, false);
        int s = lp.add_var(false);
        for (int b = 0; b < k; ++b) {
            const int at = block_start[static_cast<std::size_t>(b)];
            for (const auto& body : family.bodies) {
                if (body.is_h()) {
                    for (const auto& hs : body.h().constraints) {
                        RatVec row(static_cast<std::size_t>(lp.num_vars()), Rational(0));
                        for (int i = 0; i < d; ++i)
                            row[static_cast<std::size_t>(at + i)] = hs.normal[static_cast<std::size_t>(i)];
                        lp.add_le(std::move(row), hs.offset);
                    }
                } else {
                    const auto& pts = body.v().points;
                    int lam = lp.add_vars(static_cast<int>(pts.size()), true);
                    for (int i = 0; i < d; ++i) {
                        RatVec row(static_cast<std::size_t>(lp.num_vars()), Rational(0));
                        row[static_cast<std::size_t>(at + i)] = 1;
                        for (std::size_t p = 0; p < pts.size(); ++p)
                            row[static_cast<std::size_t>(lam) + p] = -pts[p][static_cast<std::size_t>(i)];
                        lp.add_eq(std::move(row), Rational(0));
                    }
                    RatVec ones(static_cast<std::size_t>(lp.num_vars()), Rational(0));
                    for (std::size_t p = 0; p < pts.size(); ++p)
                        ones[static_cast<std::size_t>(lam) + p] = 1;
                    lp.add_eq(std::move(ones), Rational(1));
                }
            }
        }
        // f = sum_p <y_p - x_p, v_p> pinned; every pair width below s.
        RatVec f_row(static_cast<std::size_t>(lp.num_vars()), Rational(0));
        for (int p = 0; p < pairs; ++p) {
            const RatVec& vp = norm.functionals()[static_cast<std::size_t>(p)];
            const int x_at = block_start[static_cast<std::size_t>(2 * p)];
            const int y_at = block_start[static_cast<std::size_t>(2 * p + 1)];
            RatVec t_row(static_cast<std::size_t>(lp.num_vars()), Rational(0));
            for (int i = 0; i < d; ++i) {
                f_row[static_cast<std::size_t>(x_at + i)] -= vp[static_cast<std::size_t>(i)];
                f_row[static_cast<std::size_t>(y_at + i)] += vp[static_cast<std::size_t>(i)];
                t_row[static_cast<std::size_t>(x_at + i)] = -vp[static_cast<std::size_t>(i)];
                t_row[static_cast<std::size_t>(y_at + i)] = vp[static_cast<std::size_t>(i)];
            }
            t_row[static_cast<std::size_t>(s)] = -1;
            lp.add_le(std::move(t_row), Rational(0));
        }
        lp.add_eq(f_row, f_target);
        RatVec obj(static_cast<std::size_t>(lp.num_vars()), Rational(0));
        obj[static_cast<std::size_t>(s)] = 1;
        return std::make_pair(std::move(lp), std::move(obj));
    };

    Rational f_target(1);
    Rational beta(0);
    bool reached = false;
    for (int step = 1; step <= max_n; ++step) {
        if (reached) {
            cert.steps.push_back({step, f_target, Rational(0), beta, false});
            continue;
        }
        auto [lp, obj] = build_step(f_target);
        LPResult res = lp.minimize(obj);
        if (!res.optimal()) break;  // cannot happen while the hypothesis holds and beta < 1
        Rational g = *res.optimum;
        if (g > beta) beta = g;
        cert.steps.push_back({step, f_target, g, beta, true});
        if (beta >= 1) {
            reached = true;
        } else {
            f_target += 1 - g;
        }
    }
    cert.final_beta = beta;
    cert.reached_target = reached;
    return cert;
}

}  // namespace qhelly
