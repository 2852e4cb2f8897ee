#include "gainspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace gainspec {
namespace {

// Clustering width. Gains have unit modulus, so inputs are well scaled and a
// relative width anchored at the Gershgorin radius separates true
// multiplicities from solver noise by several decades.
double cluster_width(const HermitianMatrix& h) {
    return 1e-7 * std::max(1.0, h.gershgorin_radius());
}

double off_diagonal_norm(const std::vector<Complex>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += std::norm(a[static_cast<std::size_t>(p) * n + q]);
    return std::sqrt(2.0 * s);
}

// Diagonalizes a copy of h in place; returns the diagonal ascending and, when
// requested, the matching orthonormal eigenbasis.
void jacobi(const HermitianMatrix& h, std::vector<double>& values,
            std::vector<std::vector<Complex>>* vectors) {
    const int n = h.order();
    std::vector<Complex> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = h(i, j);
    auto at = [&](int i, int j) -> Complex& { return a[static_cast<std::size_t>(i) * n + j]; };

    std::vector<Complex> v;
    if (vectors) {
        v.assign(static_cast<std::size_t>(n) * n, Complex(0.0, 0.0));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
    }
    auto vat = [&](int i, int j) -> Complex& { return v[static_cast<std::size_t>(i) * n + j]; };

    const double scale = std::max(1.0, h.frobenius_norm());
    const double target = 1e-12 * scale;
    const double skip = 1e-15 * scale;
    const int max_sweeps = 100 * n;

    int sweep = 0;
    while (n > 1 && off_diagonal_norm(a, n) > target) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("hermitian_eigenvalues: Jacobi sweep limit exceeded");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = at(p, q);
                const double ab = std::abs(apq);
                if (ab <= skip) continue;

                // Unitary plane rotation zeroing (p, q): with b = |b|e^{i phi}
                // and cot(2theta) = (H_pp - H_qq) / (2|b|), the transformed
                // off-diagonal e^{i phi}(|b|(c^2 - s^2) - cs(H_pp - H_qq))
                // vanishes.
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                const Complex phase = apq / ab;
                const double tau = (app - aqq) / (2.0 * ab);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                at(p, p) = app * c * c + 2.0 * ab * c * s + aqq * s * s;
                at(q, q) = app * s * s - 2.0 * ab * c * s + aqq * c * c;
                at(p, q) = at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex hkp = at(k, p);
                    const Complex hkq = at(k, q);
                    at(k, p) = c * hkp + s * std::conj(phase) * hkq;
                    at(k, q) = -s * phase * hkp + c * hkq;
                    at(p, k) = std::conj(at(k, p));
                    at(q, k) = std::conj(at(k, q));
                }
                if (vectors) {
                    for (int k = 0; k < n; ++k) {
                        const Complex vkp = vat(k, p);
                        const Complex vkq = vat(k, q);
                        vat(k, p) = c * vkp + s * std::conj(phase) * vkq;
                        vat(k, q) = -s * phase * vkp + c * vkq;
                    }
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return at(x, x).real() < at(y, y).real(); });
    values.resize(n);
    for (int k = 0; k < n; ++k) values[k] = at(order[k], order[k]).real();
    if (vectors) {
        vectors->assign(n, std::vector<Complex>(n));
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) (*vectors)[k][i] = vat(i, order[k]);
    }

    const double drift = std::abs(std::accumulate(values.begin(), values.end(), 0.0) - h.trace());
    if (drift > 1e-8 * n * scale)
        throw std::runtime_error("hermitian_eigenvalues: trace drift beyond tolerance");
}

} // namespace

Spectrum make_spectrum(std::vector<double> ascending, double tolerance) {
    Spectrum s;
    s.cluster_tolerance = tolerance;
    s.eigenvalues = std::move(ascending);
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= s.eigenvalues.size(); ++i) {
        if (i == s.eigenvalues.size() || s.eigenvalues[i] - s.eigenvalues[i - 1] > tolerance) {
            double mean = 0.0;
            for (std::size_t k = begin; k < i; ++k) mean += s.eigenvalues[k];
            mean /= static_cast<double>(i - begin);
            s.clusters.emplace_back(mean, static_cast<int>(i - begin));
            begin = i;
        }
    }
    return s;
}

Spectrum hermitian_eigenvalues(const HermitianMatrix& h) {
    std::vector<double> values;
    jacobi(h, values, nullptr);
    return make_spectrum(std::move(values), cluster_width(h));
}

EigenDecomposition hermitian_eigen(const HermitianMatrix& h) {
    EigenDecomposition d;
    jacobi(h, d.eigenvalues, &d.vectors);
    return d;
}

int cluster_multiplicity(const Spectrum& s, double lambda) {
    const auto lo = std::lower_bound(s.eigenvalues.begin(), s.eigenvalues.end(),
                                     lambda - s.cluster_tolerance);
    const auto hi = std::upper_bound(s.eigenvalues.begin(), s.eigenvalues.end(),
                                     lambda + s.cluster_tolerance);
    return static_cast<int>(hi - lo);
}

int nullity_by_spectrum(const HermitianMatrix& h) {
    return cluster_multiplicity(hermitian_eigenvalues(h), 0.0);
}

int rank_by_spectrum(const HermitianMatrix& h) { return h.order() - nullity_by_spectrum(h); }

int rank_by_elimination(const HermitianMatrix& h) {
    const int n = h.order();
    std::vector<Complex> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = h(i, j);
    auto at = [&](int i, int j) -> Complex& { return a[static_cast<std::size_t>(i) * n + j]; };

    const double threshold = 1e-8 * h.frobenius_norm();
    int rank = 0;
    for (; rank < n; ++rank) {
        // Full pivoting: largest modulus in the trailing submatrix.
        int pi = rank, pj = rank;
        double best = 0.0;
        for (int i = rank; i < n; ++i)
            for (int j = rank; j < n; ++j)
                if (std::abs(at(i, j)) > best) { best = std::abs(at(i, j)); pi = i; pj = j; }
        if (best <= threshold) break;
        for (int j = 0; j < n; ++j) std::swap(at(rank, j), at(pi, j));
        for (int i = 0; i < n; ++i) std::swap(at(i, rank), at(i, pj));
        for (int i = rank + 1; i < n; ++i) {
            const Complex factor = at(i, rank) / at(rank, rank);
            for (int j = rank; j < n; ++j) at(i, j) -= factor * at(rank, j);
        }
    }
    return rank;
}

std::optional<KernelWitness> kernel_witness(const HermitianMatrix& b,
                                            const std::vector<int>& positions) {
    const int n = b.order();
    std::vector<int> pos = positions;
    std::sort(pos.begin(), pos.end());
    if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
        throw std::invalid_argument("kernel_witness: positions must be distinct");
    if (!pos.empty() && (pos.front() < 0 || pos.back() >= n))
        throw std::invalid_argument("kernel_witness: position out of range");
    const int s = static_cast<int>(pos.size());

    const auto eigen = hermitian_eigen(b);
    const double width = cluster_width(b);
    std::vector<const std::vector<Complex>*> basis;
    for (int k = 0; k < n; ++k)
        if (std::abs(eigen.eigenvalues[k]) <= width) basis.push_back(&eigen.vectors[k]);
    const int eta = static_cast<int>(basis.size());
    if (eta <= s) return std::nullopt;

    // Constraint matrix C[r][c] = basis vector c evaluated at position r; any
    // nullspace direction of C yields a kernel combination vanishing there.
    std::vector<std::vector<Complex>> c(s, std::vector<Complex>(eta));
    for (int r = 0; r < s; ++r)
        for (int k = 0; k < eta; ++k) c[r][k] = (*basis[k])[pos[r]];

    // Reduced row echelon with partial pivoting; eta > s guarantees a free
    // column.
    std::vector<int> pivot_col(s, -1);
    int row = 0;
    for (int col = 0; col < eta && row < s; ++col) {
        int best_row = -1;
        double best = 1e-10;
        for (int r = row; r < s; ++r)
            if (std::abs(c[r][col]) > best) { best = std::abs(c[r][col]); best_row = r; }
        if (best_row < 0) continue;
        std::swap(c[row], c[best_row]);
        const Complex inv = 1.0 / c[row][col];
        for (int j = col; j < eta; ++j) c[row][j] *= inv;
        for (int r = 0; r < s; ++r) {
            if (r == row) continue;
            const Complex f = c[r][col];
            if (f == Complex(0.0, 0.0)) continue;
            for (int j = col; j < eta; ++j) c[r][j] -= f * c[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    int free_col = -1;
    {
        std::vector<char> is_pivot(eta, 0);
        for (int r = 0; r < row; ++r) is_pivot[pivot_col[r]] = 1;
        for (int k = 0; k < eta && free_col < 0; ++k)
            if (!is_pivot[k]) free_col = k;
    }
    std::vector<Complex> w(eta, Complex(0.0, 0.0));
    w[free_col] = 1.0;
    for (int r = 0; r < row; ++r) w[pivot_col[r]] = -c[r][free_col];

    KernelWitness witness;
    witness.vanishing_positions = pos;
    witness.vector.assign(n, Complex(0.0, 0.0));
    for (int k = 0; k < eta; ++k)
        for (int i = 0; i < n; ++i) witness.vector[i] += w[k] * (*basis[k])[i];
    for (int p : pos) witness.vector[p] = 0.0;
    double norm = 0.0;
    for (const auto& x : witness.vector) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (auto& x : witness.vector) x /= norm;
    return witness;
}

std::string spectrum_to_json(const Spectrum& s) {
    nlohmann::ordered_json j;
    j["eigenvalues"] = s.eigenvalues;
    j["clusters"] = nlohmann::ordered_json::array();
    for (const auto& [value, mult] : s.clusters) j["clusters"].push_back({value, mult});
    j["tolerance"] = s.cluster_tolerance;
    return j.dump();
}

} // namespace gainspec
