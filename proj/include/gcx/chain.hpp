#ifndef GCX_CHAIN_HPP
#define GCX_CHAIN_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gcx/error.hpp"
#include "gcx/lincomb.hpp"
#include "gcx/sparse.hpp"

namespace gcx {

// Truncated chain complex: degrees min_degree .. min_degree + basis.size() - 1.
// d[i] maps degree (min_degree + i) to degree (min_degree + i - 1); the
// lowest degree gets a 0 x size matrix.
template <class B>
struct ChainComplexSlice {
    int min_degree = 0;
    std::vector<std::vector<B>> basis;
    std::vector<SparseMatrix> d;
    std::vector<bool> complete;

    int max_degree() const { return min_degree + static_cast<int>(basis.size()) - 1; }
    bool has_degree(int k) const { return k >= min_degree && k <= max_degree(); }
    std::size_t index(int k) const
    {
        if (!has_degree(k))
            throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(k));
        return static_cast<std::size_t>(k - min_degree);
    }
};

// Builds the matrices from a differential on basis elements. Terms that
// land outside the next basis are dropped; pass a projection-aware
// differential if that is not intended.
template <class B>
ChainComplexSlice<B> build_slice(int min_degree, std::vector<std::vector<B>> basis,
                                 const std::function<LinComb<B>(const B&)>& diff,
                                 std::vector<bool> complete)
{
    ChainComplexSlice<B> c;
    c.min_degree = min_degree;
    c.complete = std::move(complete);
    c.complete.resize(basis.size(), true);
    c.d.resize(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i == 0) {
            c.d[0] = SparseMatrix(0, basis[0].size());
            continue;
        }
        std::map<B, std::size_t> idx;
        for (std::size_t r = 0; r < basis[i - 1].size(); ++r)
            idx.emplace(basis[i - 1][r], r);
        SparseMatrix m(basis[i - 1].size(), basis[i].size());
        for (std::size_t col = 0; col < basis[i].size(); ++col)
            for (const auto& [b, v] : diff(basis[i][col])) {
                auto it = idx.find(b);
                if (it != idx.end())
                    m.add(it->second, col, v);
            }
        c.d[i] = std::move(m);
    }
    c.basis = std::move(basis);
    return c;
}

struct HomologyDim {
    std::size_t dim = 0;
    bool reliable = false;
    friend bool operator==(const HomologyDim&, const HomologyDim&) = default;
};

// Throws Error(NotAComplex) if some d_{k-1} d_k is nonzero.
template <class B>
std::map<int, HomologyDim> homology_dims(const ChainComplexSlice<B>& c)
{
    std::size_t n = c.basis.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (c.d[i].cols() != c.basis[i].size() ||
            c.d[i].rows() != (i == 0 ? 0 : c.basis[i - 1].size()))
            throw Error(ErrorCode::NotAComplex, "matrix shape mismatch in degree " +
                                                    std::to_string(c.min_degree + static_cast<int>(i)));
    }
    for (std::size_t i = 2; i < n; ++i)
        if (!(c.d[i - 1] * c.d[i]).is_zero())
            throw Error(ErrorCode::NotAComplex, "d∘d nonzero at degree " +
                                                    std::to_string(c.min_degree + static_cast<int>(i)));
    std::vector<std::size_t> rk(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        rk[i] = rank(c.d[i]);
    std::map<int, HomologyDim> out;
    for (std::size_t i = 0; i < n; ++i) {
        HomologyDim h;
        h.dim = c.basis[i].size() - rk[i] - rk[i + 1];
        h.reliable = i > 0 && i + 1 < n && c.complete[i - 1] && c.complete[i] && c.complete[i + 1];
        out[c.min_degree + static_cast<int>(i)] = h;
    }
    return out;
}

template <class B>
HomologyDim homology_dim(const ChainComplexSlice<B>& c, int k)
{
    c.index(k);
    return homology_dims(c).at(k);
}

} // namespace gcx

#endif
