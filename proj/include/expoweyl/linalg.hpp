#pragma once

#include <map>
#include <vector>

#include "expoweyl/scalar.hpp"

namespace expoweyl {

/// Sparse row of an exact linear system: column index -> nonzero scalar.
using SparseRow = std::map<std::size_t, FieldScalar>;

/// Incremental exact row reduction over the scalar field. Rows are kept with
/// unit leading coefficient, fully reduced against each other.
class RowReducer {
public:
    /// reduces `row` against the current basis; if a nonzero remainder is
    /// left it joins the basis and true is returned
    bool insert(SparseRow row) {
        reduce(row);
        if (row.empty()) return false;
        FieldScalar lead = row.begin()->second;
        for (auto& [c, v] : row) v = v / lead;
        // reduce existing rows against the new one
        std::size_t pivot = row.begin()->first;
        for (auto& r : rows_) {
            auto it = r.second.find(pivot);
            if (it == r.second.end()) continue;
            FieldScalar f = it->second;
            axpy(r.second, row, f);
        }
        rows_.emplace(pivot, std::move(row));
        return true;
    }

    /// reduces a copy of `row` against the basis; empty result means the row
    /// lies in the span
    SparseRow remainder(SparseRow row) const {
        reduce(row);
        return row;
    }

    bool contains(const SparseRow& row) const { return remainder(row).empty(); }

    std::size_t rank() const { return rows_.size(); }
    const std::map<std::size_t, SparseRow>& rows() const { return rows_; }

private:
    std::map<std::size_t, SparseRow> rows_; // pivot column -> row

    void reduce(SparseRow& row) const {
        while (!row.empty()) {
            auto it = rows_.find(row.begin()->first);
            if (it == rows_.end()) {
                // leading entry is not a pivot; try to eliminate deeper entries
                bool changed = false;
                for (auto e = std::next(row.begin()); e != row.end();) {
                    auto p = rows_.find(e->first);
                    if (p == rows_.end()) {
                        ++e;
                        continue;
                    }
                    FieldScalar f = e->second;
                    axpy(row, p->second, f);
                    e = row.upper_bound(p->first);
                    changed = true;
                }
                if (!changed) return;
                continue;
            }
            FieldScalar f = row.begin()->second;
            axpy(row, it->second, f);
        }
    }

    static void axpy(SparseRow& target, const SparseRow& src, const FieldScalar& factor) {
        // target -= factor * src
        for (const auto& [c, v] : src) {
            auto it = target.find(c);
            FieldScalar nv = (it == target.end())
                                 ? -(factor * v)
                                 : it->second - factor * v;
            if (nv.is_zero()) {
                if (it != target.end()) target.erase(it);
            } else if (it == target.end()) {
                target.emplace(c, std::move(nv));
            } else {
                it->second = std::move(nv);
            }
        }
    }
};

/// Basis of the solution space of (rows) * x = 0 in n unknowns.
inline std::vector<std::vector<FieldScalar>> nullspace(const std::vector<SparseRow>& rows,
                                                       std::size_t ncols, SymbolTablePtr tab) {
    RowReducer red;
    for (const auto& r : rows) red.insert(r);
    // pivots and free columns
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& [p, r] : red.rows()) is_pivot[p] = true;
    std::vector<std::vector<FieldScalar>> basis;
    FieldScalar zero(tab, 0), one(tab, 1);
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldScalar> v(ncols, zero);
        v[free_col] = one;
        for (const auto& [p, r] : red.rows()) {
            auto it = r.find(free_col);
            if (it != r.end()) v[p] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace expoweyl
