#include "rsf/lintree.hpp"

#include <stdexcept>
#include <utility>

namespace rsf {

PolyMatrix laplacian(const WeightedGraph& g) {
    if (g.oriented)
        throw DomainError("laplacian expects a non-oriented graph");
    PolyMatrix m(g.vertex_count);
    for (const Edge& e : g.edges) {
        m.at(e.u, e.v) -= e.weight;
        m.at(e.v, e.u) -= e.weight;
        m.at(e.u, e.u) += e.weight;
        m.at(e.v, e.v) += e.weight;
    }
    return m;
}

PolyMatrix oriented_laplacian(const WeightedGraph& g) {
    if (!g.oriented)
        throw DomainError("oriented_laplacian expects an oriented graph");
    PolyMatrix m(g.vertex_count);
    for (const Edge& e : g.edges) {
        m.at(e.u, e.v) -= e.weight;
        m.at(e.v, e.v) += e.weight;
    }
    return m;
}

PolyMatrix internal_submatrix(const PolyMatrix& m, const WeightedGraph& g) {
    if (m.size() != g.vertex_count)
        throw DomainError("matrix size does not match the graph");
    std::vector<std::size_t> internal;
    internal.reserve(g.vertex_count);
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        if (!g.is_node(v))
            internal.push_back(v);
    PolyMatrix sub(internal.size());
    for (std::size_t i = 0; i < internal.size(); ++i)
        for (std::size_t j = 0; j < internal.size(); ++j)
            sub.at(i, j) = m.at(internal[i], internal[j]);
    return sub;
}

IntPoly det(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0)
        return IntPoly::one();

    PolyMatrix w = m;
    int sign = 1;
    IntPoly prev = IntPoly::one();
    for (std::size_t r = 0; r + 1 < n; ++r) {
        // lowest-degree nonzero pivot in column r bounds intermediate growth
        std::size_t pivot = n;
        for (std::size_t i = r; i < n; ++i) {
            const IntPoly& cand = w.at(i, r);
            if (cand.is_zero())
                continue;
            if (pivot == n || cand.degree() < w.at(pivot, r).degree())
                pivot = i;
        }
        if (pivot == n)
            return IntPoly(); // zero column, singular
        if (pivot != r) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w.at(r, j), w.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j) {
                IntPoly num = w.at(r, r) * w.at(i, j) - w.at(i, r) * w.at(r, j);
                try {
                    w.at(i, j) = exact_div(num, prev);
                } catch (const DivisionError&) {
                    // Sylvester's identity guarantees exactness; reaching this
                    // is an internal fault, not a data condition.
                    throw std::logic_error("fraction-free elimination hit an inexact division");
                }
            }
            w.at(i, r) = IntPoly();
        }
        prev = w.at(r, r);
    }
    IntPoly result = w.at(n - 1, n - 1);
    return sign < 0 ? -result : result;
}

IntPoly cofactor_det(const PolyMatrix& m, std::size_t i, std::size_t j) {
    const std::size_t n = m.size();
    if (n == 0)
        throw std::out_of_range("cofactor_det of an empty matrix");
    if (i >= n || j >= n)
        throw std::out_of_range("cofactor_det index out of range");
    PolyMatrix minor(n - 1);
    for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i)
            continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
            if (c == j)
                continue;
            minor.at(mr, mc) = m.at(r, c);
            ++mc;
        }
        ++mr;
    }
    IntPoly d = det(minor);
    return (i + j) % 2 == 0 ? d : -d;
}

IntPoly forest_sum(const WeightedGraph& g) {
    if (g.oriented)
        throw DomainError("forest_sum expects a non-oriented graph");
    if (g.node_count() == 0)
        throw DomainError("forest_sum requires at least one node");
    return det(internal_submatrix(laplacian(g), g));
}

IntPoly oriented_forest_sum(const WeightedGraph& g) {
    if (!g.oriented)
        throw DomainError("oriented_forest_sum expects an oriented graph");
    if (g.node_count() == 0)
        throw DomainError("oriented_forest_sum requires at least one node");
    WeightedGraph merged = collapse_nodes(g);
    return det(internal_submatrix(oriented_laplacian(merged), merged));
}

PolyMatrix circulant_internal_matrix(std::size_t n, const IntPoly& a, const IntPoly& b) {
    if (n == 0)
        throw DomainError("circulant_internal_matrix requires n >= 1");
    IntPoly diagonal = a + b + b;
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) += diagonal;
        m.at(i, (i + 1) % n) -= b;
        m.at(i, (i + n - 1) % n) -= b;
    }
    return m;
}

} // namespace rsf
