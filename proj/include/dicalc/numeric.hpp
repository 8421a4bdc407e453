#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dicalc {

using DMatrix = std::vector<std::vector<double>>;

inline DMatrix dmat(std::size_t r, std::size_t c, double v = 0.0) { return DMatrix(r, std::vector<double>(c, v)); }

inline DMatrix dmat_mul(const DMatrix& a, const DMatrix& b) {
    DMatrix out = dmat(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline DMatrix dmat_transpose(const DMatrix& a) {
    DMatrix out = dmat(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

struct EigenSym {
    std::vector<double> values;  // ascending
    DMatrix vectors;             // columns are eigenvectors, same order
};

/// Cyclic Jacobi for real symmetric matrices. Plenty for the graph sizes here.
inline EigenSym jacobi_eigen(DMatrix a) {
    const std::size_t n = a.size();
    DMatrix v = dmat(n, n);
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }
    EigenSym out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a[i][i];
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return out.values[x] < out.values[y]; });
    EigenSym sorted;
    sorted.values.resize(n);
    sorted.vectors = dmat(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        sorted.values[j] = out.values[order[j]];
        for (std::size_t i = 0; i < n; ++i) sorted.vectors[i][j] = v[i][order[j]];
    }
    return sorted;
}

struct PowerIterationResult {
    double eigenvalue = 0.0;
    std::vector<double> eigenvector;  // normalized, entrywise positive for connected nonneg matrices
};

inline PowerIterationResult power_iteration(const DMatrix& a, double tol = 1e-12, int max_iter = 100000) {
    const std::size_t n = a.size();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double lambda = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) y[i] += a[i][j] * x[j];
        double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
        if (norm == 0.0) throw std::runtime_error("power_iteration: vector collapsed to zero");
        for (auto& c : y) c /= norm;
        double next = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) next += y[i] * a[i][j] * y[j];
        double drift = 0.0;
        for (std::size_t i = 0; i < n; ++i) drift = std::max(drift, std::abs(std::abs(y[i]) - std::abs(x[i])));
        x = std::move(y);
        if (it > 2 && drift < tol && std::abs(next - lambda) < tol) {
            lambda = next;
            // fix global sign so the vector is positive
            double s = 0.0;
            for (double c : x) s += c;
            if (s < 0)
                for (auto& c : x) c = -c;
            return {lambda, x};
        }
        lambda = next;
    }
    throw std::runtime_error("power_iteration: no convergence within iteration cap");
}

struct Svd {
    DMatrix u;                   // r x r unitary (real orthogonal)
    DMatrix v;                   // c x c unitary
    std::vector<double> sigma;   // min(r,c), descending
    bool degenerate = false;     // repeated singular values within 1e-9
};

/// SVD of a small real matrix via the symmetric eigendecomposition of A^T A,
/// with Gram-Schmidt completion of the left factor on the kernel.
inline Svd svd_small(const DMatrix& a) {
    const std::size_t r = a.size(), c = a[0].size();
    DMatrix ata = dmat_mul(dmat_transpose(a), a);  // c x c
    EigenSym es = jacobi_eigen(ata);
    // descending singular values
    std::vector<std::size_t> order(c);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return es.values[x] > es.values[y]; });

    Svd out;
    out.v = dmat(c, c);
    out.sigma.assign(std::min(r, c), 0.0);
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < c; ++i) out.v[i][j] = es.vectors[i][order[j]];
    for (std::size_t j = 0; j < std::min(r, c); ++j) out.sigma[j] = std::sqrt(std::max(0.0, es.values[order[j]]));
    for (std::size_t j = 0; j + 1 < out.sigma.size(); ++j)
        if (std::abs(out.sigma[j] - out.sigma[j + 1]) < 1e-9) out.degenerate = true;

    out.u = dmat(r, r);
    std::size_t filled = 0;
    for (std::size_t j = 0; j < std::min(r, c); ++j) {
        if (out.sigma[j] < 1e-12) break;
        for (std::size_t i = 0; i < r; ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k < c; ++k) s += a[i][k] * out.v[k][j];
            out.u[i][j] = s / out.sigma[j];
        }
        ++filled;
    }
    // complete to an orthonormal basis
    for (std::size_t e = 0; filled < r && e < r; ++e) {
        std::vector<double> w(r, 0.0);
        w[e] = 1.0;
        for (std::size_t j = 0; j < filled; ++j) {
            double dot = 0.0;
            for (std::size_t i = 0; i < r; ++i) dot += w[i] * out.u[i][j];
            for (std::size_t i = 0; i < r; ++i) w[i] -= dot * out.u[i][j];
        }
        double norm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
        if (norm < 1e-9) continue;
        for (std::size_t i = 0; i < r; ++i) out.u[i][filled] = w[i] / norm;
        ++filled;
    }
    return out;
}

}  // namespace dicalc
