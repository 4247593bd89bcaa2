#include "mosaic/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mosaic/errors.hpp"

namespace mosaic {

namespace {

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool weakly_dominates(std::span<const double> a, std::span<const double> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// staircase area dominated by 2-D points up to ref (points strictly below ref)
double hv2d(std::vector<std::vector<double>> pts, double ref_x, double ref_y) {
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] < b[1];
    });
    double area = 0.0;
    double best_y = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i][1] >= best_y) continue;  // dominated in the sweep
        // width from this x to the next kept x (or ref)
        double next_x = ref_x;
        for (std::size_t k = i + 1; k < pts.size(); ++k) {
            if (pts[k][1] < pts[i][1]) {
                next_x = pts[k][0];
                break;
            }
        }
        area += (next_x - pts[i][0]) * (ref_y - pts[i][1]);
        best_y = pts[i][1];
    }
    return area;
}

} // namespace

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        fail(ErrorCode::invalid_argument, "dominates: dimension mismatch");
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

std::vector<std::size_t> pareto_filter_indices(const std::vector<std::vector<double>>& points) {
    const std::size_t n = points.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(points[a], points[b]);
    });

    // in lex order a dominator always precedes what it dominates, so one
    // forward pass against the kept set suffices
    std::vector<std::size_t> kept;
    for (std::size_t idx : order) {
        bool dominated = false;
        for (std::size_t k : kept) {
            if (dominates(points[k], points[idx])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(idx);
    }
    return kept;
}

std::vector<std::vector<double>> pareto_filter(const std::vector<std::vector<double>>& points) {
    std::vector<std::vector<double>> out;
    for (std::size_t idx : pareto_filter_indices(points)) out.push_back(points[idx]);
    return out;
}

double phv(const std::vector<std::vector<double>>& points, std::span<const double> ref,
           std::size_t* clipped) {
    const std::size_t m = ref.size();
    if (m < 1 || m > 3)
        fail(ErrorCode::config, "phv: supported objective counts are 1..3");
    if (clipped) *clipped = 0;

    std::vector<std::vector<double>> inside;
    inside.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != m) fail(ErrorCode::invalid_argument, "phv: point dimension mismatch");
        bool out = false;
        for (std::size_t i = 0; i < m; ++i)
            if (!(p[i] < ref[i])) out = true;
        if (out) {
            if (clipped) ++(*clipped);
            continue;
        }
        inside.push_back(p);
    }
    if (inside.empty()) return 0.0;

    if (m == 1) {
        double best = inside[0][0];
        for (const auto& p : inside) best = std::min(best, p[0]);
        return ref[0] - best;
    }
    if (m == 2) return hv2d(std::move(inside), ref[0], ref[1]);

    // m == 3: sweep slabs along the third coordinate; within a slab the
    // dominated area is the 2-D hypervolume of everything at or below it
    std::vector<double> zs;
    zs.reserve(inside.size());
    for (const auto& p : inside) zs.push_back(p[2]);
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());

    double volume = 0.0;
    std::vector<std::vector<double>> active;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const double lo = zs[i];
        const double hi = (i + 1 < zs.size()) ? zs[i + 1] : ref[2];
        active.clear();
        for (const auto& p : inside)
            if (p[2] <= lo) active.push_back({p[0], p[1]});
        volume += hv2d(std::move(active), ref[0], ref[1]) * (hi - lo);
        active = {};
    }
    return volume;
}

double phv(const std::vector<std::vector<double>>& points, double ref, std::size_t* clipped) {
    std::size_t m = points.empty() ? 0 : points[0].size();
    if (m == 0) return 0.0;
    std::vector<double> rv(m, ref);
    return phv(points, rv, clipped);
}

std::vector<double> NormalizationBounds::apply(std::span<const double> point) const {
    std::vector<double> out(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        const double range = hi[i] - lo[i];
        out[i] = range > 0 ? (point[i] - lo[i]) / range : 0.0;
    }
    return out;
}

NormalizationBounds
compute_bounds(const std::vector<const std::vector<std::vector<double>>*>& fronts) {
    NormalizationBounds b;
    bool any = false;
    for (const auto* front : fronts) {
        for (const auto& p : *front) {
            if (!any) {
                b.lo.assign(p.begin(), p.end());
                b.hi.assign(p.begin(), p.end());
                any = true;
                continue;
            }
            if (p.size() != b.lo.size())
                fail(ErrorCode::invalid_argument, "normalize: point dimension mismatch");
            for (std::size_t i = 0; i < p.size(); ++i) {
                b.lo[i] = std::min(b.lo[i], p[i]);
                b.hi[i] = std::max(b.hi[i], p[i]);
            }
        }
    }
    if (!any) fail(ErrorCode::invalid_argument, "normalize: empty union of fronts");
    return b;
}

std::vector<std::vector<double>> normalize_front(const std::vector<std::vector<double>>& front,
                                                 const NormalizationBounds& bounds) {
    std::vector<std::vector<double>> out;
    out.reserve(front.size());
    for (const auto& p : front) out.push_back(bounds.apply(p));
    return out;
}

std::vector<double> crowding_distances(const std::vector<std::vector<double>>& points) {
    const std::size_t n = points.size();
    std::vector<double> dist(n, 0.0);
    if (n == 0) return dist;
    const std::size_t m = points[0].size();
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
        return dist;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t obj = 0; obj < m; ++obj) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return points[a][obj] < points[b][obj];
        });
        const double range = points[order.back()][obj] - points[order.front()][obj];
        dist[order.front()] = std::numeric_limits<double>::infinity();
        dist[order.back()] = std::numeric_limits<double>::infinity();
        if (range <= 0) continue;
        for (std::size_t i = 1; i + 1 < n; ++i)
            dist[order[i]] += (points[order[i + 1]][obj] - points[order[i - 1]][obj]) / range;
    }
    return dist;
}

std::vector<std::size_t> efficient_corners(const std::vector<std::vector<double>>& front) {
    if (front.empty()) fail(ErrorCode::invalid_argument, "efficient_corners: empty front");
    const std::size_t m = front[0].size();
    std::vector<std::size_t> picks(m, 0);
    for (std::size_t obj = 0; obj < m; ++obj) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < front.size(); ++i) {
            const auto& a = front[i];
            const auto& b = front[best];
            if (a[obj] < b[obj]) {
                best = i;
                continue;
            }
            if (a[obj] > b[obj]) continue;
            // tie: lexicographic on the remaining objectives in order
            for (std::size_t k = 0; k < m; ++k) {
                if (k == obj || a[k] == b[k]) continue;
                if (a[k] < b[k]) best = i;
                break;
            }
        }
        picks[obj] = best;
    }
    return picks;
}

CumulativeBest cumulative_best(const std::vector<std::vector<std::vector<double>>>& epoch_fronts) {
    CumulativeBest result;
    if (epoch_fronts.empty())
        fail(ErrorCode::invalid_argument, "cumulative_best: no epoch fronts");

    const std::size_t m = epoch_fronts[0].empty() ? 0 : epoch_fronts[0][0].size();
    result.totals.assign(m, 0.0);

    for (std::size_t e = 0; e < epoch_fronts.size(); ++e) {
        const auto& front = epoch_fronts[e];
        if (front.empty())
            fail(ErrorCode::invalid_argument,
                 "cumulative_best: empty front for epoch " + std::to_string(e));
        NormalizationBounds b = compute_bounds({&front});
        std::size_t best = 0;
        double best_score = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < front.size(); ++i) {
            const std::vector<double> norm = b.apply(front[i]);
            double score = 0.0;
            for (double v : norm) score += v;
            if (score < best_score ||
                (score == best_score && lex_less(front[i], front[best]))) {
                best_score = score;
                best = i;
            }
        }
        result.picks.push_back(best);
        for (std::size_t k = 0; k < m; ++k) result.totals[k] += front[best][k];
    }
    return result;
}

} // namespace mosaic
