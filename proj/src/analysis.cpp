#include "ctrlkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ctrlkit {

double bracket(const Vec& x, const Vec& y, BracketSide side) {
    const double nx = x.norm();
    if (nx == 0.0) return side == BracketSide::plus ? y.norm() : -y.norm();
    return x.dot(y) / nx;
}

double bracket_quotient(const Vec& x, const Vec& y, double h) {
    return ((x + h * y).norm() - x.norm()) / h;
}

ProbeReport estimate_one_sided_constant(const VecMap& map, const PairSampler& sampler, int count) {
    ProbeReport report;
    report.estimate = -std::numeric_limits<double>::infinity();
    report.samples = count;
    for (int i = 0; i < count; ++i) {
        auto [x, y] = sampler();
        const double d2 = (x - y).squaredNorm();
        if (d2 <= 1e-14 * 1e-14)
            throw DegeneratePair("sampled pair coincides within 1e-14");
        const double val = (x - y).dot(map(x) - map(y)) / d2;
        if (val > report.estimate) {
            report.estimate = val;
            report.witness_x = x;
            report.witness_y = y;
        }
    }
    return report;
}

ProbeReport lipschitz_ratio_probe(const VecMap& map, const std::vector<std::pair<Vec, Vec>>& pairs) {
    ProbeReport report;
    report.estimate = -std::numeric_limits<double>::infinity();
    report.samples = static_cast<int>(pairs.size());
    for (const auto& [x, y] : pairs) {
        const double d = (x - y).norm();
        if (d <= 1e-14) throw DegeneratePair("pair coincides within 1e-14");
        const double val = (map(x) - map(y)).norm() / d;
        if (val > report.estimate) {
            report.estimate = val;
            report.witness_x = x;
            report.witness_y = y;
        }
    }
    return report;
}

FinitePointSet FinitePointSet::of(std::vector<Vec> pts) {
    FinitePointSet s;
    s.points = std::move(pts);
    s.dim = s.points.empty() ? 0 : static_cast<int>(s.points.front().size());
    for (const auto& p : s.points)
        if (p.size() != s.dim) throw DimensionMismatch("FinitePointSet points of unequal dimension");
    return s;
}

double FinitePointSet::diameter() const {
    double d = 0.0; // diam of the empty (or singleton) set is 0
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            d = std::max(d, (points[i] - points[j]).norm());
    return d;
}

namespace {

struct PartitionSearch {
    const Eigen::MatrixXd& dist;
    int npoints;
    int nblocks;
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::vector<int>> blocks;

    // Lexicographic assignment: point i may open at most one new block.
    void recurse(int i, int used, double current_max) {
        if (current_max >= best) return;
        if (i == npoints) {
            best = current_max;
            return;
        }
        for (int b = 0; b < std::min(used + 1, nblocks); ++b) {
            double extended = current_max;
            for (int member : blocks[b]) extended = std::max(extended, dist(member, i));
            if (extended >= best) continue;
            blocks[b].push_back(i);
            recurse(i + 1, std::max(used, b + 1), extended);
            blocks[b].pop_back();
        }
    }
};

double exact_partition_diameter(const FinitePointSet& a, int nblocks) {
    const int n = static_cast<int>(a.points.size());
    Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dist(i, j) = dist(j, i) = (a.points[i] - a.points[j]).norm();
    PartitionSearch search{dist, n, nblocks, std::numeric_limits<double>::infinity(),
                           std::vector<std::vector<int>>(nblocks)};
    search.recurse(0, 0, 0.0);
    return search.best;
}

// Farthest-point centers, nearest-center assignment: an upper bound on α_n.
double greedy_partition_diameter(const FinitePointSet& a, int nblocks) {
    const int n = static_cast<int>(a.points.size());
    std::vector<int> centers{0};
    while (static_cast<int>(centers.size()) < nblocks) {
        int far_idx = -1;
        double far_dist = -1.0;
        for (int i = 0; i < n; ++i) {
            double d = std::numeric_limits<double>::infinity();
            for (int c : centers) d = std::min(d, (a.points[i] - a.points[c]).norm());
            if (d > far_dist) {
                far_dist = d;
                far_idx = i;
            }
        }
        centers.push_back(far_idx);
    }
    std::vector<std::vector<int>> blocks(centers.size());
    for (int i = 0; i < n; ++i) {
        int nearest = 0;
        double nd = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < centers.size(); ++c) {
            const double d = (a.points[i] - a.points[centers[c]]).norm();
            if (d < nd) {
                nd = d;
                nearest = static_cast<int>(c);
            }
        }
        blocks[nearest].push_back(i);
    }
    double worst = 0.0;
    for (const auto& block : blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                worst = std::max(worst, (a.points[block[i]] - a.points[block[j]]).norm());
    return worst;
}

} // namespace

KuratowskiResult kuratowski_n_report(const FinitePointSet& a, int nblocks) {
    if (nblocks < 1) throw ConfigInvalid("kuratowski_n requires nblocks >= 1");
    const int n = static_cast<int>(a.points.size());
    if (n <= nblocks) return {0.0, true}; // every point its own block
    if (n <= kuratowski_exact_limit) return {exact_partition_diameter(a, nblocks), true};
    return {greedy_partition_diameter(a, nblocks), false};
}

double kuratowski_n(const FinitePointSet& a, int nblocks) {
    return kuratowski_n_report(a, nblocks).value;
}

ProbeReport condensing_ratio(const VecMap& map, const std::vector<FinitePointSet>& sets, int nblocks) {
    ProbeReport report;
    report.estimate = -std::numeric_limits<double>::infinity();
    report.samples = static_cast<int>(sets.size());
    for (const auto& a : sets) {
        const double alpha = kuratowski_n(a, nblocks);
        if (alpha <= 1e-12) throw DegenerateSet("set has alpha_n <= 1e-12");
        std::vector<Vec> mapped;
        mapped.reserve(a.points.size());
        for (const auto& p : a.points) mapped.push_back(map(p));
        const double ratio = kuratowski_n(FinitePointSet::of(std::move(mapped)), nblocks) / alpha;
        if (ratio > report.estimate) {
            report.estimate = ratio;
            report.witness_x = a.points.front();
        }
    }
    return report;
}

namespace {

// Euclidean projection onto the probability simplex (sort-based).
Vec project_simplex(Vec w) {
    const int n = static_cast<int>(w.size());
    std::vector<double> sorted(w.data(), w.data() + n);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double cumsum = 0.0, theta = 0.0;
    int k = 0;
    for (int i = 0; i < n; ++i) {
        cumsum += sorted[i];
        const double candidate = (cumsum - 1.0) / (i + 1);
        if (sorted[i] - candidate > 0.0) {
            theta = candidate;
            k = i + 1;
        }
    }
    (void)k;
    for (int i = 0; i < n; ++i) w[i] = std::max(w[i] - theta, 0.0);
    return w;
}

} // namespace

bool hull_membership(const Vec& point, const Vec& anchor, double scale,
                     const FinitePointSet& samples, double tol) {
    if (scale <= 0.0) throw ZeroScale("hull_membership requires scale > 0");
    const Vec target = (point - anchor) / scale;
    // Hull vertices: the samples plus the origin.
    const int m = static_cast<int>(samples.points.size()) + 1;
    const int d = static_cast<int>(target.size());
    Eigen::MatrixXd verts(d, m);
    verts.col(0).setZero();
    for (int j = 1; j < m; ++j) verts.col(j) = samples.points[j - 1];

    // Accelerated projected gradient (FISTA) on the simplex; the step uses
    // the sharp Lipschitz constant of the gradient, lambda_max(V^T V).
    const Eigen::MatrixXd gram = verts.transpose() * verts;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
    const double lipschitz = std::max(eig.eigenvalues().maxCoeff(), 1e-30);
    const double step = 1.0 / lipschitz;

    Vec w = Vec::Constant(m, 1.0 / m);
    Vec momentum = w;
    double t_accel = 1.0;
    double dist = (verts * w - target).norm();
    for (int iter = 0; iter < 20000; ++iter) {
        const Vec residual = verts * momentum - target;
        const Vec grad = verts.transpose() * residual;
        // Frank-Wolfe gap certifies f(w) - f* <= gap.
        const double gap = grad.dot(momentum) - grad.minCoeff();
        dist = (verts * w - target).norm();
        if (dist <= tol || gap < tol * tol / 10.0) break;
        const Vec wnext = project_simplex(momentum - step * grad);
        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_accel * t_accel));
        momentum = wnext + ((t_accel - 1.0) / t_next) * (wnext - w);
        w = wnext;
        t_accel = t_next;
    }
    dist = std::min(dist, (verts * w - target).norm());
    return dist <= tol;
}

double midpoint_convexity_defect(const std::function<Vec(double)>& path,
                                 const std::vector<std::pair<double, double>>& parameter_pairs) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& [s, t] : parameter_pairs) {
        const Vec excess = path(0.5 * (s + t)) - 0.5 * (path(s) + path(t));
        worst = std::max(worst, excess.maxCoeff());
    }
    return worst;
}

} // namespace ctrlkit
