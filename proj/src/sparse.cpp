#include "gcx/sparse.hpp"

#include "gcx/error.hpp"

#include <algorithm>
#include <string>

namespace gcx {

SparseVec axpy(const SparseVec& x, const Rational& a, const SparseVec& y)
{
    if (a == 0)
        return x;
    SparseVec out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, Rational(a * y[j].second));
            ++j;
        } else {
            Rational v = x[i].second + a * y[j].second;
            if (v != 0)
                out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v)
{
    if (r >= rows_ || c >= cols_)
        throw Error(ErrorCode::DegreeOutOfRange, "matrix index out of range");
    if (v == 0)
        return;
    auto key = std::make_pair(r, c);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, v);
        return;
    }
    it->second += v;
    if (it->second == 0)
        entries_.erase(it);
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v)
{
    if (r >= rows_ || c >= cols_)
        throw Error(ErrorCode::DegreeOutOfRange, "matrix index out of range");
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const
{
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<SparseVec> SparseMatrix::columns() const
{
    std::vector<SparseVec> cols(cols_);
    // entries_ iterates row-major, so every column comes out row-sorted
    for (const auto& [rc, v] : entries_)
        cols[rc.second].emplace_back(rc.first, v);
    return cols;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows)
{
    std::size_t nr = rows.size(), nc = nr ? rows[0].size() : 0;
    SparseMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            m.set(i, j, rows[i][j]);
    return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error(ErrorCode::SizeMismatch, "matrix product shapes");
    SparseMatrix out(a.rows_, b.cols_);
    std::vector<std::vector<std::pair<std::size_t, Rational>>> brows(b.rows_);
    for (const auto& [rc, v] : b.entries_)
        brows[rc.first].emplace_back(rc.second, v);
    for (const auto& [rc, v] : a.entries_)
        for (const auto& [c, w] : brows[rc.second])
            out.add(rc.first, c, Rational(v * w));
    return out;
}

Echelon::Reduced Echelon::reduce(SparseVec v) const
{
    Reduced r;
    std::size_t start = 0; // entries before `start` have no pivot
    while (start < v.size()) {
        auto it = pivots_.find(v[start].first);
        if (it == pivots_.end()) {
            ++start;
            continue;
        }
        Rational f = -v[start].second;
        v = axpy(v, f, it->second.vec);
        if (track_)
            r.combo = axpy(r.combo, Rational(-f), it->second.combo);
    }
    r.residual = std::move(v);
    return r;
}

bool Echelon::insert(const SparseVec& v, std::size_t id)
{
    Reduced r = reduce(v);
    if (r.residual.empty())
        return false;
    Pivot p;
    Rational lead = r.residual.front().second;
    Rational inv = 1 / lead;
    for (auto& e : r.residual)
        e.second *= inv;
    p.vec = std::move(r.residual);
    if (track_) {
        // residual = v - sum combo*gen  =>  combo' = (e_id - combo) / lead
        SparseVec c = axpy(SparseVec{{id, Rational(1)}}, Rational(-1), r.combo);
        for (auto& e : c)
            e.second *= inv;
        p.combo = std::move(c);
    }
    std::size_t key = p.vec.front().first;
    pivots_.emplace(key, std::move(p));
    return true;
}

std::size_t rank(const SparseMatrix& m)
{
    // eliminate along the shorter dimension
    std::vector<SparseVec> vecs;
    if (m.rows() <= m.cols()) {
        vecs.assign(m.rows(), {});
        for (const auto& [rc, v] : m.entries())
            vecs[rc.first].emplace_back(rc.second, v);
    } else {
        vecs = m.columns();
    }
    std::stable_sort(vecs.begin(), vecs.end(),
                     [](const SparseVec& a, const SparseVec& b) { return a.size() < b.size(); });
    Echelon e;
    for (std::size_t i = 0; i < vecs.size(); ++i)
        e.insert(vecs[i], i);
    return e.rank();
}

} // namespace gcx
