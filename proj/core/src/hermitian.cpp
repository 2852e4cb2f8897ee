#include "gainspec/hermitian.hpp"

namespace gainspec {

HermitianMatrix adjacency_matrix(const GainGraph& g) {
    HermitianMatrix h(g.order());
    for (const auto& e : g.edges()) h.set(e.u, e.v, e.gain.value());
    return h;
}

HermitianMatrix a_alpha_matrix(const GainGraph& g, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("a_alpha_matrix: alpha must lie in [0, 1]");
    HermitianMatrix h(g.order());
    for (const auto& e : g.edges()) h.set(e.u, e.v, (1.0 - alpha) * e.gain.value());
    for (int v = 0; v < g.order(); ++v) h.set(v, v, alpha * g.degree(v));
    return h;
}

} // namespace gainspec
