#ifndef RSF_LINTREE_HPP
#define RSF_LINTREE_HPP

#include <cstddef>
#include <vector>

#include "rsf/graph.hpp"
#include "rsf/intpoly.hpp"

namespace rsf {

// Square matrix of integer polynomials, row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t size) : size_(size), entries_(size * size) {}

    std::size_t size() const noexcept { return size_; }

    IntPoly& at(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
    const IntPoly& at(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.size_ == b.size_ && a.entries_ == b.entries_;
    }

private:
    std::size_t size_ = 0;
    std::vector<IntPoly> entries_;
};

// Weighted Laplacian: off-diagonal (v,v') = -w(vv'), diagonal = sum of
// incident edge weights. Rows sum to zero. pre: g non-oriented.
PolyMatrix laplacian(const WeightedGraph& g);

// Oriented Laplacian: entry (v,v') = -w(v->v') for arcs, diagonal (v,v) =
// total weight of arcs into v. Columns sum to zero. pre: g oriented.
PolyMatrix oriented_laplacian(const WeightedGraph& g);

// Rows and columns of m restricted to the internal vertices of g, in vertex
// order. pre: m has one row per vertex of g.
PolyMatrix internal_submatrix(const PolyMatrix& m, const WeightedGraph& g);

// Exact determinant by Bareiss fraction-free elimination. Pivots prefer the
// lowest-degree nonzero entry of the current column; row swaps flip the
// sign. Size 0 yields 1.
IntPoly det(const PolyMatrix& m);

// Signed minor (-1)^(i+j) * det(m with row i and column j removed).
// Throws std::out_of_range for bad indices.
IntPoly cofactor_det(const PolyMatrix& m, std::size_t i, std::size_t j);

// Weighted sum over rooted spanning forests of g, as the determinant of the
// internal block of the Laplacian. pre: g non-oriented with >= 1 node.
IntPoly forest_sum(const WeightedGraph& g);

// Oriented counterpart: nodes are merged first, then the internal block of
// the oriented Laplacian is evaluated. pre: g oriented with >= 1 node.
IntPoly oriented_forest_sum(const WeightedGraph& g);

// The n x n circulant b*L(C_n) + a*I: diagonal a+2b, cyclic neighbours -b.
// Degenerate sizes follow the same accumulation rule, giving [a] at n=1 and
// off-diagonal -2b at n=2, so the closed forms extend below cycle length 3.
PolyMatrix circulant_internal_matrix(std::size_t n, const IntPoly& a, const IntPoly& b);

} // namespace rsf

#endif
