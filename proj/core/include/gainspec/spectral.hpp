#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gainspec/hermitian.hpp"

namespace gainspec {

// Real eigenvalues of a Hermitian matrix, ascending, with multiplicity
// clusters: consecutive eigenvalues closer than cluster_tolerance belong to
// the same cluster and the representative is the cluster mean.
struct Spectrum {
    std::vector<double> eigenvalues;
    std::vector<std::pair<double, int>> clusters; // (representative, multiplicity)
    double cluster_tolerance = 0.0;
};

// Eigenvalues ascending together with an orthonormal eigenbasis;
// vectors[k] is the eigenvector for eigenvalues[k].
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    std::vector<std::vector<Complex>> vectors;
};

// Cyclic Jacobi with complex unitary 2x2 rotations. Terminates when the
// off-diagonal Frobenius norm drops below 1e-12 * max(1, ||H||_F); throws
// std::runtime_error if that does not happen within 100*n sweeps (it does not
// for well-scaled inputs of order <= 64).
Spectrum hermitian_eigenvalues(const HermitianMatrix& h);
EigenDecomposition hermitian_eigen(const HermitianMatrix& h);

// Clustering of an ascending eigenvalue list at a given tolerance.
Spectrum make_spectrum(std::vector<double> ascending, double tolerance);

// Number of eigenvalues within cluster_tolerance of lambda (0 if none).
int cluster_multiplicity(const Spectrum& s, double lambda);

// n minus the multiplicity of the zero cluster.
int rank_by_spectrum(const HermitianMatrix& h);
int nullity_by_spectrum(const HermitianMatrix& h);

// Independent rank oracle: full-pivot Gaussian elimination, counting pivots
// with modulus above 1e-8 * ||H||_F.
int rank_by_elimination(const HermitianMatrix& h);

// Unit-norm kernel vector with exact zeros at the requested positions.
struct KernelWitness {
    std::vector<Complex> vector;
    std::vector<int> vanishing_positions;
};

// If the nullity of b exceeds positions.size(), combines a kernel basis into
// a witness vanishing at all requested positions (residual below
// 1e-7 * ||B||_F). Returns nullopt when the nullity is too small; that is a
// legitimate outcome, not an error. Positions must be distinct and in range.
std::optional<KernelWitness> kernel_witness(const HermitianMatrix& b,
                                            const std::vector<int>& positions);

// {"eigenvalues":[...], "clusters":[[value,mult],...], "tolerance":eps}
std::string spectrum_to_json(const Spectrum& s);

} // namespace gainspec
