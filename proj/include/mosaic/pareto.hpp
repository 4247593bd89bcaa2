#ifndef MOSAIC_PARETO_HPP
#define MOSAIC_PARETO_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace mosaic {

/// Strict Pareto dominance under minimization: a <= b everywhere, < somewhere.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Indices of the maximal non-dominated subset, ordered by lexicographic
/// objective sort of the kept points.
std::vector<std::size_t> pareto_filter_indices(const std::vector<std::vector<double>>& points);

std::vector<std::vector<double>> pareto_filter(const std::vector<std::vector<double>>& points);

/// Exact hypervolume dominated by `points` up to the reference point, for
/// M in {1,2,3}. Points not strictly dominating the reference contribute
/// nothing; their count is reported through `clipped` when given.
double phv(const std::vector<std::vector<double>>& points, std::span<const double> ref,
           std::size_t* clipped = nullptr);

/// Convenience: cubic reference (ref, ref, ..., ref).
double phv(const std::vector<std::vector<double>>& points, double ref,
           std::size_t* clipped = nullptr);

/// Per-objective min-max bounds over one or more fronts, for commensurable
/// PHV comparisons. Objectives that are constant over the union map to 0.
struct NormalizationBounds {
    std::vector<double> lo;
    std::vector<double> hi;

    std::vector<double> apply(std::span<const double> point) const;
};

NormalizationBounds
compute_bounds(const std::vector<const std::vector<std::vector<double>>*>& fronts);

std::vector<std::vector<double>> normalize_front(const std::vector<std::vector<double>>& front,
                                                 const NormalizationBounds& bounds);

/// NSGA-II style crowding distances (boundary points get +inf).
std::vector<double> crowding_distances(const std::vector<std::vector<double>>& points);

/// Per-objective argmin indices; ties broken by lexicographic comparison of
/// the remaining objectives in order.
std::vector<std::size_t> efficient_corners(const std::vector<std::vector<double>>& front);

/// For each epoch front, pick the point minimizing the sum of per-epoch
/// min-max-normalized objectives; returns the pick indices. Totals are the
/// element-wise sums of the raw picked points.
struct CumulativeBest {
    std::vector<std::size_t> picks;   // one per epoch
    std::vector<double> totals;       // per objective
};

CumulativeBest cumulative_best(const std::vector<std::vector<std::vector<double>>>& epoch_fronts);

} // namespace mosaic

#endif
