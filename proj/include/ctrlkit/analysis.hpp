#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

#include "ctrlkit/errors.hpp"

namespace ctrlkit {

using Vec = Eigen::VectorXd;
using VecMap = std::function<Vec(const Vec&)>;
using PairSampler = std::function<std::pair<Vec, Vec>()>;

enum class BracketSide { minus, plus };

/// One-sided bracket [x,y]± = lim_{h→0±} (‖x+hy‖−‖x‖)/h.
/// In an inner-product space this is ⟨x,y⟩/‖x‖ for x ≠ 0 and ±‖y‖ at x = 0.
double bracket(const Vec& x, const Vec& y, BracketSide side);

/// Difference-quotient evaluation of the bracket at step h (h < 0 for the
/// minus side). Cross-check for the closed form above.
double bracket_quotient(const Vec& x, const Vec& y, double h);

/// Empirical constant estimate with its achieving witness.
struct ProbeReport {
    double estimate = 0.0;
    Vec witness_x;
    Vec witness_y;
    int samples = 0;
    unsigned long seed = 0;
};

/// max over sampled pairs of ⟨x−y, f(x)−f(y)⟩/‖x−y‖². A nonpositive
/// estimate certifies dissipativity on the sample.
ProbeReport estimate_one_sided_constant(const VecMap& map, const PairSampler& sampler, int count);

/// max ‖f(x)−f(y)‖/‖x−y‖ over an explicit pair stream.
ProbeReport lipschitz_ratio_probe(const VecMap& map, const std::vector<std::pair<Vec, Vec>>& pairs);

/// Finite carrier for MNC proxies and condensing estimates.
struct FinitePointSet {
    int dim = 0;
    std::vector<Vec> points;

    static FinitePointSet of(std::vector<Vec> pts);
    double diameter() const;
};

inline constexpr int kuratowski_exact_limit = 14;

/// Fixed-block covering proxy α_n: minimum over partitions of A into at
/// most nblocks blocks of the maximum block diameter. Exact branch-and-bound
/// for |A| ≤ 14, greedy farthest-point upper bound beyond (flagged).
struct KuratowskiResult {
    double value = 0.0;
    bool exact = true;
};
KuratowskiResult kuratowski_n_report(const FinitePointSet& a, int nblocks);
double kuratowski_n(const FinitePointSet& a, int nblocks);

/// max over sets of α_n(map(A))/α_n(A). DegenerateSet if some α_n ≤ 1e−12.
ProbeReport condensing_ratio(const VecMap& map, const std::vector<FinitePointSet>& sets, int nblocks);

/// Does (point−anchor)/scale lie within tol of conv(samples ∪ {0})?
/// Solved as a least-squares feasibility problem over simplex weights by
/// projected gradient (at most 10⁴ iterations or gap < tol/10).
bool hull_membership(const Vec& point, const Vec& anchor, double scale,
                     const FinitePointSet& samples, double tol);

/// Diagnostic midpoint-convexity probe: max over sampled parameter pairs of
/// the largest componentwise excess of f((s+t)/2) over (f(s)+f(t))/2.
/// Nonpositive output is consistent with convexity in the nonnegative wedge
/// order; never used as an enforced check.
double midpoint_convexity_defect(const std::function<Vec(double)>& path,
                                 const std::vector<std::pair<double, double>>& parameter_pairs);

} // namespace ctrlkit
