#pragma once

#include <string>
#include <vector>

#include "detlab/degeneration.hpp"
#include "detlab/poly.hpp"

namespace detlab {

// Layered algebraic branching program.  Vertices live in consecutive layers
// and edges connect layer i to layer i+1 only, labeled by affine forms
// (degree <= 1) with Laurent-eps coefficients.  The source is the first
// vertex of the first layer and the sink the last vertex of the last layer.
class LayeredABP {
public:
    struct Edge {
        std::string from;
        std::string to;
        Poly label;
    };

    LayeredABP(std::vector<std::vector<std::string>> layers, std::vector<Edge> edges);

    const std::vector<std::vector<std::string>>& layers() const { return layers_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& source() const { return layers_.front().front(); }
    const std::string& sink() const { return layers_.back().back(); }
    int vertex_count() const;
    std::set<VarId> variables() const;

private:
    std::vector<std::vector<std::string>> layers_;
    std::vector<Edge> edges_;
};

// Sum over source-sink paths of the edge-label products, by layered DP.
Poly eval_abp(const LayeredABP& p);

// Remove vertices that compute the zero polynomial or cannot reach the sink.
// Returns the trimmed program; the source and sink are always kept.
LayeredABP prune_abp(const LayeredABP& p);

// Degree-grading relabel: alpha_0 + sum alpha_i y_i  becomes
// alpha_0 z + sum alpha_i y_i, so layer-i vertices compute homogeneous
// degree-i polynomials and z -> 1 recovers the original program.
LayeredABP homogenize_abp(const LayeredABP& p, const VarId& z);

// Cycle-cover matrix A with det(A) = 1 + eval_abp(p) and every leading
// principal minor equal to 1.  Dimension = vertex count of p (the odd-length
// case merges source and sink and adds an isolated looped vertex in front).
PolyMatrix valiant_matrix(const LayeredABP& p);

// Clow-sequence program computing det_t over the symbolic matrix x[i,j].
// Vertex count is 2 + (t-1)t(t+1)/2, i.e. at most t^3/2 + 2.
LayeredABP det_abp(int t);

// Iterated matrix product (A_1 ... A_d)[1,1] over entries u[k,i,j] of d
// generic w x w matrices, on exactly w(d-1) + 2 vertices.
LayeredABP imm_abp(int w, int d);

} // namespace detlab
