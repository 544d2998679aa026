#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>

#include "qhelly/family.hpp"
#include "qhelly/lattice.hpp"
#include "qhelly/norms.hpp"

namespace qhelly {

// ---------------------------------------------------------------------------
// Predicates evaluated on intersections of bodies. Every answer is an exact
// decision; Euclidean thresholds are compared on squared values.
// ---------------------------------------------------------------------------

struct PredNonempty {};

struct PredVWidthAtLeast {
    RatVec v;
    Rational threshold;
};

// v-width of the unit-normalized direction at least c*d^{-1/2}; compared
// exactly via width^2 * d >= c^2 * |v|^2.
struct PredVWidthCap {
    RatVec v;
    Rational c;
};

// norm == nullopt means Euclidean (squared comparison against threshold^2).
struct PredDiameterAtLeast {
    std::optional<PolytopeNorm> norm;
    Rational threshold;
};

struct PredContainsIntegerPoint {};

struct PredKColinear {
    int k;
};

using Predicate = std::variant<PredNonempty, PredVWidthAtLeast, PredVWidthCap,
                               PredDiameterAtLeast, PredContainsIntegerPoint, PredKColinear>;

struct EngineOptions {
    std::uint64_t subset_cap = 2'000'000;  // exhaustive up to here, sampled beyond
    std::uint64_t seed = 0;
    int jobs = 1;
};

struct EvalOutcome {
    bool value = false;
    bool error = false;                // predicate/body incompatibility
    std::optional<Rational> exact;     // width / diameter / squared diameter when finite
    bool unbounded = false;
};

// Shared lattice data for a family: the union bounding box is enumerated
// once and each member keeps a membership mask, so subset checks are set
// intersections instead of fresh enumerations.
class FamilyLatticeCache;

EvalOutcome eval_predicate(const Predicate& pred, const Family& family,
                           std::span<const int> subset, const FamilyLatticeCache* cache = nullptr);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct FractionalReport {
    int subset_size = 0;
    Integer total = 0;             // number of m-subsets (exact)
    std::uint64_t evaluated = 0;   // subsets actually checked
    std::uint64_t satisfying = 0;
    std::uint64_t errors = 0;
    bool sampled = false;
    Rational alpha;                // satisfying / evaluated
    std::optional<bool> conclusion;             // predicate on the full intersection
    std::optional<Rational> conclusion_value;   // exact value when the predicate carries one
    bool conclusion_unbounded = false;
    std::vector<std::string> first_violation;   // ids of the first failing subset
    std::optional<std::pair<std::vector<std::string>, Rational>> best_subfamily;
    bool best_subfamily_heuristic = false;
    std::optional<bool> meets_fractional_bound;  // |best| vs (1-(1-alpha)^{1/2d}) * n
};

FractionalReport check_helly(const Family& family, int m, const Predicate& pred,
                             const EngineOptions& opts = {});

struct ColorfulReport {
    Integer total = 0;  // product of family sizes choose nothing: all tuples
    std::uint64_t evaluated = 0;
    std::uint64_t satisfying = 0;
    std::uint64_t errors = 0;
    bool sampled = false;
    Rational alpha;
    bool hypothesis_all = false;               // every evaluated tuple satisfied
    std::vector<int> concluding_colors;        // color classes whose intersection satisfies
    std::vector<std::string> first_violation;  // ids of the first failing tuple
};

ColorfulReport check_colorful(const ColorfulFamilies& colors, const Predicate& pred,
                              const EngineOptions& opts = {});

// Fractional v-width pipeline: alpha over 2d-subsets at the given width
// threshold, then the largest subfamily whose intersection still meets it
// (exhaustive for small families, greedy peeling above that).
using WidthThreshold = std::variant<Rational, /* cap c: */ PredVWidthCap>;

FractionalReport fractional_vwidth(const Family& family, const RatVec& v,
                                   const Rational& threshold = Rational(1),
                                   const EngineOptions& opts = {});

// Unnormalized direction of a longest segment, with its exact squared
// length (>= 1 required).
struct DirectionSurrogate {
    RatVec z;
    Rational squared_length;
};

DirectionSurrogate diameter_direction(const HPolytope& body);

struct CapCoverReport {
    bool empty = false;           // no subset reached unit diameter
    std::uint64_t directions_recorded = 0;
    RatVec axis;                  // winning candidate axis (rational)
    std::uint64_t axis_score = 0; // directions captured by the axis cap pair
    double gamma_used = 0.0;
    double beta_bound = 0.0;      // 1 - (1 - alpha*gamma(c))^{1/2d}
    FractionalReport vwidth;      // exact fractional v-width run along the axis
    bool meets_beta = false;
};

CapCoverReport cap_cover_experiment(const Family& family, const Rational& c,
                                    const Rational& alpha_in, const EngineOptions& opts = {});

// ---------------------------------------------------------------------------
// Iterative diameter certificate: a nondecreasing sequence of exact lower
// bounds on the rho-diameter of the full intersection, built by pinning the
// pair-sum functional f and taking the most adversarial witness (min-max of
// the per-pair widths) at each step. beta_n >= n/(pairs + n - 1) always.
// ---------------------------------------------------------------------------

struct CertificateStep {
    int n = 0;
    Rational f_target;
    Rational g_value;   // max pair width at the chosen witness
    Rational beta;      // running lower bound
    bool solved = false;  // false once the target threshold 1 was reached
};

struct DiameterCertificate {
    bool refused = false;
    std::vector<std::string> violating_subset;  // when refused
    std::vector<CertificateStep> steps;
    Rational final_beta;
    bool reached_target = false;  // beta >= 1 within the budget
};

DiameterCertificate certify_diameter(const Family& family, const PolytopeNorm& norm, int max_n,
                                     const EngineOptions& opts = {});

// Exact binomial coefficient.
Integer binomial(int n, int m);

}  // namespace qhelly
