#ifndef GCX_SPARSE_HPP
#define GCX_SPARSE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gcx/rational.hpp"

namespace gcx {

// Sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

// x + a*y
SparseVec axpy(const SparseVec& x, const Rational& a, const SparseVec& y);

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void add(std::size_t r, std::size_t c, const Rational& v);
    void set(std::size_t r, std::size_t c, const Rational& v);
    Rational get(std::size_t r, std::size_t c) const;

    const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const { return entries_; }
    std::size_t nonzeros() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    std::vector<SparseVec> columns() const;

    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

// Incremental echelon basis of a span of vectors in Q^dim. Each stored pivot
// vector is normalized to leading coefficient 1 at its smallest index, and
// (optionally) remembers which combination of inserted generators produced it.
class Echelon {
public:
    explicit Echelon(bool track = false) : track_(track) {}

    struct Reduced {
        SparseVec residual;
        SparseVec combo; // v = residual + sum combo[k] * generator[k]
    };

    Reduced reduce(SparseVec v) const;

    // Insert generator number `id`; returns true if it enlarged the span.
    bool insert(const SparseVec& v, std::size_t id);

    std::size_t rank() const { return pivots_.size(); }

private:
    struct Pivot {
        SparseVec vec;
        SparseVec combo;
    };
    bool track_;
    std::map<std::size_t, Pivot> pivots_;
};

std::size_t rank(const SparseMatrix& m);

} // namespace gcx

#endif
