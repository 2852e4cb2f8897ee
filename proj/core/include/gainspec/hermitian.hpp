#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "gainspec/gain_graph.hpp"

namespace gainspec {

using Complex = std::complex<double>;

// Dense complex matrix with conjugate symmetry enforced at construction:
// writing entry (i, j) also writes conj at (j, i), and diagonal entries must
// be real. Order is limited to 256.
class HermitianMatrix {
public:
    explicit HermitianMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
        if (n < 1) throw std::invalid_argument("HermitianMatrix: order must be >= 1");
        if (n > 256) throw std::invalid_argument("HermitianMatrix: order above 256 unsupported");
    }

    int order() const { return n_; }

    Complex operator()(int i, int j) const { return entries_[index(i, j)]; }

    void set(int i, int j, Complex value) {
        if (i == j) {
            if (value.imag() != 0.0)
                throw std::invalid_argument("HermitianMatrix: diagonal entry must be real");
            entries_[index(i, i)] = value;
            return;
        }
        entries_[index(i, j)] = value;
        entries_[index(j, i)] = std::conj(value);
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < n_; ++i) t += entries_[index(i, i)].real();
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& e : entries_) s += std::norm(e);
        return std::sqrt(s);
    }

    // max_i (|H_ii| + sum_{j != i} |H_ij|); every eigenvalue lies within this
    // radius of the origin.
    double gershgorin_radius() const {
        double r = 0.0;
        for (int i = 0; i < n_; ++i) {
            double row = 0.0;
            for (int j = 0; j < n_; ++j) row += std::abs(entries_[index(i, j)]);
            r = std::max(r, row);
        }
        return r;
    }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || j < 0 || i >= n_ || j >= n_)
            throw std::out_of_range("HermitianMatrix: index out of range");
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<Complex> entries_;
};

// A(phi): zero diagonal, (s, t) entry = gain of the oriented edge s -> t.
HermitianMatrix adjacency_matrix(const GainGraph& g);

// alpha*D + (1 - alpha)*A for alpha in [0, 1].
HermitianMatrix a_alpha_matrix(const GainGraph& g, double alpha);

} // namespace gainspec
