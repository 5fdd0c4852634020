#include "flowspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace flowspec {

namespace {

void finalize(const Graph& g, SpectrumResult& r, double lambda, Eigen::VectorXd v) {
    const int n = g.num_vertices();
    v.array() -= v.mean(); // hard-deflate the constant direction
    double norm = v.norm();
    check_internal(norm > 0.0, "eigenvector collapsed onto the constant direction");
    v /= norm;
    Eigen::VectorXd lv;
    g.laplacian_apply(v, lv);
    r.lambda2 = lambda;
    r.fiedler = v;
    r.residual = (lv - lambda * v).norm();
}

SpectrumResult dense_solve(const Graph& g, double tol) {
    SpectrumResult r;
    r.method = SpectrumResult::Method::dense_oracle;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.laplacian_dense());
    finalize(g, r, es.eigenvalues()[1], es.eigenvectors().col(1));
    r.converged = r.residual <= tol;
    return r;
}

// Lanczos with full reorthogonalization on the subspace orthogonal to the
// all-ones vector; restarts from the current Ritz vector until the residual
// meets tol.
SpectrumResult lanczos_solve(const Graph& g, double tol) {
    const int n = g.num_vertices();
    SpectrumResult r;
    r.method = SpectrumResult::Method::iterative;

    const int max_basis = std::min(n - 1, 220);
    const int max_restarts = 60;

    std::mt19937_64 rng(0x5eedULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd start(n);
    for (int i = 0; i < n; ++i) start[i] = gauss(rng);

    double best_lambda = 0.0;
    double best_residual = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_vec;

    auto deflate = [n](Eigen::VectorXd& x) { x.array() -= x.sum() / n; };

    for (int restart = 0; restart < max_restarts; ++restart) {
        deflate(start);
        double nrm = start.norm();
        if (nrm == 0.0) {
            for (int i = 0; i < n; ++i) start[i] = gauss(rng);
            deflate(start);
            nrm = start.norm();
        }
        std::vector<Eigen::VectorXd> basis;
        basis.push_back(start / nrm);
        std::vector<double> alpha, beta;
        Eigen::VectorXd w;

        for (int j = 0; j < max_basis; ++j) {
            g.laplacian_apply(basis[j], w);
            double a = basis[j].dot(w);
            alpha.push_back(a);
            w -= a * basis[j];
            if (j > 0) w -= beta[j - 1] * basis[j - 1];
            deflate(w);
            for (const auto& q : basis) w -= q.dot(w) * q; // full reorthogonalization
            double b = w.norm();

            bool invariant = b < 1e-13;
            bool check_now = invariant || j == max_basis - 1 || (j + 1) % 24 == 0;
            if (check_now) {
                const int k = static_cast<int>(alpha.size());
                Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
                for (int i = 0; i < k; ++i) {
                    T(i, i) = alpha[i];
                    if (i + 1 < k) T(i, i + 1) = T(i + 1, i) = beta[i];
                }
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
                Eigen::VectorXd y = es.eigenvectors().col(0);
                Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
                for (int i = 0; i < k; ++i) x += y[i] * basis[i];
                deflate(x);
                double xn = x.norm();
                if (xn > 0.0) {
                    x /= xn;
                    Eigen::VectorXd lx;
                    g.laplacian_apply(x, lx);
                    double theta = x.dot(lx);
                    double res = (lx - theta * x).norm();
                    if (res < best_residual) {
                        best_residual = res;
                        best_lambda = theta;
                        best_vec = x;
                    }
                    if (res <= tol || invariant) break;
                }
                if (invariant) break;
            }
            if (b < 1e-13) break;
            beta.push_back(b);
            basis.push_back(w / b);
        }
        if (best_residual <= tol) break;
        if (best_vec.size() == n) start = best_vec;
    }

    finalize(g, r, best_lambda, best_vec.size() == n ? best_vec : start);
    r.converged = r.residual <= tol;
    return r;
}

} // namespace

SpectrumResult lambda2_solve(const Graph& g, double tol, EigenMethod method) {
    require(tol > 0.0, "tolerance must be positive");
    const int n = g.num_vertices();
    require(n >= 2, "lambda2 needs n >= 2");
    bool dense = method == EigenMethod::dense ||
                 (method == EigenMethod::automatic && n <= 64);
    return dense ? dense_solve(g, tol) : lanczos_solve(g, tol);
}

CutResult sweep_cut(const Graph& g, const Eigen::VectorXd& v) {
    const int n = g.num_vertices();
    require(static_cast<int>(v.size()) == n, "vector size mismatch");
    require(n >= 2, "sweep needs n >= 2");
    require(v.maxCoeff() != v.minCoeff(), "sweep undefined for constant vectors");

    Eigen::VectorXd c = v.array() - v.mean();
    Eigen::VectorXd lc;
    g.laplacian_apply(c, lc);
    double bound = std::sqrt(2.0 * g.max_degree() * c.dot(lc) / c.squaredNorm());

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (c[a] != c[b]) return c[a] < c[b];
        return a < b;
    });

    std::vector<char> in_side(n, 0);
    std::int64_t crossing = 0;
    double best_ratio = std::numeric_limits<double>::infinity();
    int best_prefix = 0;
    std::int64_t best_crossing = 0;
    for (int i = 0; i < n - 1; ++i) {
        int x = order[i];
        std::int64_t into = 0;
        for (int nb : g.neighbors(x)) into += in_side[nb];
        crossing += g.degree(x) - 2 * into;
        in_side[x] = 1;
        double ratio = static_cast<double>(crossing) / std::min(i + 1, n - 1 - i);
        if (ratio < best_ratio) {
            best_ratio = ratio;
            best_prefix = i + 1;
            best_crossing = crossing;
        }
    }

    CutResult out;
    out.side.assign(order.begin(), order.begin() + best_prefix);
    std::sort(out.side.begin(), out.side.end());
    out.ratio = best_ratio;
    out.bound = bound;
    out.crossing_edges = best_crossing;
    check_internal(out.ratio <= bound + 1e-9, "sweep bound violated");
    return out;
}

} // namespace flowspec
