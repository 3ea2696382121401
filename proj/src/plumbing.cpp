#include "mcg/plumbing.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace mcg {

void PlumbingGraph::validate() const {
    if (vertices.empty()) throw std::domain_error("plumbing graph must be non-empty");
    for (const auto& v : vertices)
        if (v.genus < 0) throw std::domain_error("vertex genus must be non-negative");
    for (const auto& [a, b] : edges)
        if (a >= vertices.size() || b >= vertices.size())
            throw std::domain_error("edge endpoint out of range");
    // Connectivity.
    std::vector<char> seen(vertices.size(), 0);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = 1;
    while (!frontier.empty()) {
        std::size_t v = frontier.front();
        frontier.pop();
        for (const auto& [a, b] : edges) {
            std::size_t other;
            if (a == v)
                other = b;
            else if (b == v)
                other = a;
            else
                continue;
            if (!seen[other]) {
                seen[other] = 1;
                frontier.push(other);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::domain_error("plumbing graph must be connected");
}

PlumbingGraph build_Y(long long g, long long h, long long n) {
    if (g < 2) throw std::domain_error("top genus must be at least 2");
    if (h < 1) throw std::domain_error("bottom genus must be at least 1");
    if (n > 2 * h - 2)
        throw std::domain_error("bottom euler number is bounded above by 2h-2");
    PlumbingGraph p;
    p.vertices = {PlumbingVertex{g, 0}, PlumbingVertex{h, n}};
    p.edges = {{0, 1}};
    p.validate();
    return p;
}

PlumbingGraph build_generalized(long long k, long long l, long long g, long long h,
                                const std::vector<long long>& framings) {
    if (k < 1 || l < 1) throw std::domain_error("need at least one copy of each part");
    if (g < 2) throw std::domain_error("top genus must be at least 2");
    if (h < 1) throw std::domain_error("bottom genus must be at least 1");
    if (static_cast<long long>(framings.size()) != l)
        throw std::domain_error("need exactly one framing per bottom vertex");
    PlumbingGraph p;
    for (long long i = 0; i < k; ++i) p.vertices.push_back(PlumbingVertex{g, 0});
    for (long long j = 0; j < l; ++j) p.vertices.push_back(PlumbingVertex{h, framings[j]});
    for (long long i = 0; i < k; ++i)
        for (long long j = 0; j < l; ++j)
            p.edges.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(k + j)});
    p.validate();
    return p;
}

std::vector<std::vector<long long>> linking_matrix(const PlumbingGraph& p) {
    p.validate();
    std::size_t n = p.vertices.size();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = p.vertices[i].euler_number;
    for (const auto& [a, b] : p.edges) {
        if (a == b)
            throw std::domain_error("self-plumbing is not supported");
        m[a][b] = checked_add(m[a][b], 1);
        m[b][a] = checked_add(m[b][a], 1);
    }
    return m;
}

namespace {

// Classic pivot reduction to Smith normal form, exact over Z. The matrices
// here are tiny, so entry growth is handled by checked arithmetic rather
// than big integers.
void snf_reduce(std::vector<std::vector<long long>>& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Find the nonzero entry of least magnitude in the lower-right block.
        std::size_t pr = t, pc = t;
        long long best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                    best = std::llabs(a[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(a[t], a[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            long long q = a[i][t] / a[t][t];
            for (std::size_t j = t; j < cols; ++j)
                a[i][j] = checked_add(a[i][j], -checked_mul(q, a[t][j]));
            if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            long long q = a[t][j] / a[t][t];
            for (std::size_t i = t; i < rows; ++i)
                a[i][j] = checked_add(a[i][j], -checked_mul(q, a[i][t]));
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // remainders left; pick a smaller pivot

        // Pivot divides everything in its row and column; enforce the
        // divisor chain by folding in any bad entry below-right.
        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i)
            for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (std::size_t jj = t; jj < cols; ++jj)
                        a[t][jj] = checked_add(a[t][jj], a[i][jj]);
                    divides_all = false;
                }
        if (divides_all) ++t;
    }
}

}  // namespace

std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> matrix) {
    if (matrix.empty()) return {};
    for (const auto& row : matrix)
        if (row.size() != matrix[0].size())
            throw std::invalid_argument("matrix rows must have equal length");
    snf_reduce(matrix);
    std::vector<long long> factors;
    std::size_t n = std::min(matrix.size(), matrix[0].size());
    for (std::size_t i = 0; i < n; ++i) factors.push_back(std::llabs(matrix[i][i]));
    std::stable_partition(factors.begin(), factors.end(), [](long long d) { return d != 0; });
    return factors;
}

HomologyResult first_homology(const PlumbingGraph& p) {
    auto factors = smith_invariant_factors(linking_matrix(p));
    HomologyResult result;
    for (const auto& v : p.vertices) result.free_rank += 2 * v.genus;
    for (long long d : factors) {
        if (d == 0)
            ++result.free_rank;
        else if (d > 1)
            result.torsion.push_back(d);
    }
    return result;
}

}  // namespace mcg
