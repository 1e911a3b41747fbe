#pragma once

// Square integer matrices stored column by column. Operators here send each
// basis vector to a short signed sum, so columns are tiny sorted lists.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "dmod/composition.hpp"

namespace dmod {

class OperatorMatrix {
public:
    using Entry = std::pair<std::size_t, std::int64_t>;  // (row, value)
    using Column = std::vector<Entry>;

    OperatorMatrix() = default;
    explicit OperatorMatrix(std::size_t dim) : cols_(dim) {}

    static OperatorMatrix identity(std::size_t dim, std::int64_t scalar = 1) {
        OperatorMatrix m(dim);
        if (scalar != 0)
            for (std::size_t j = 0; j < dim; ++j) m.cols_[j].push_back({j, scalar});
        return m;
    }

    std::size_t dim() const noexcept { return cols_.size(); }
    const Column& column(std::size_t j) const { return cols_.at(j); }

    /// Adds v to entry (row, col).
    void add(std::size_t row, std::size_t col, std::int64_t v) {
        if (row >= dim() || col >= dim()) throw domain_error("matrix index out of range");
        if (v == 0) return;
        auto& c = cols_[col];
        auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.first < r; });
        if (it != c.end() && it->first == row) {
            it->second += v;
            if (it->second == 0) c.erase(it);
        } else {
            c.insert(it, {row, v});
        }
    }

    /// Replaces column `col`; duplicate rows are summed and zeros dropped.
    void set_column(std::size_t col, Column entries) {
        if (col >= dim()) throw domain_error("matrix index out of range");
        std::sort(entries.begin(), entries.end());
        Column merged;
        for (const auto& [r, v] : entries) {
            if (r >= dim()) throw domain_error("matrix index out of range");
            if (!merged.empty() && merged.back().first == r)
                merged.back().second += v;
            else
                merged.push_back({r, v});
        }
        std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
        cols_[col] = std::move(merged);
    }

    std::int64_t at(std::size_t row, std::size_t col) const {
        const auto& c = cols_.at(col);
        auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.first < r; });
        return it != c.end() && it->first == row ? it->second : 0;
    }

    std::size_t nonzeros() const {
        std::size_t total = 0;
        for (const auto& c : cols_) total += c.size();
        return total;
    }

    /// Every stored entry as (row, col, value), column-major.
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> triplets() const {
        std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> out;
        for (std::size_t j = 0; j < dim(); ++j)
            for (const auto& [r, v] : cols_[j]) out.emplace_back(r, j, v);
        return out;
    }

    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
        if (a.dim() != b.dim()) throw domain_error("matrix dimension mismatch");
        OperatorMatrix out(a.dim());
        std::vector<std::int64_t> acc(a.dim(), 0);
        std::vector<std::size_t> touched;
        for (std::size_t j = 0; j < b.dim(); ++j) {
            for (const auto& [k, bv] : b.cols_[j])
                for (const auto& [r, av] : a.cols_[k]) {
                    if (acc[r] == 0) touched.push_back(r);
                    acc[r] += av * bv;
                }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (std::size_t r : touched) {
                if (acc[r] != 0) out.cols_[j].push_back({r, acc[r]});
                acc[r] = 0;
            }
            touched.clear();
        }
        return out;
    }

    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
        if (a.dim() != b.dim()) throw domain_error("matrix dimension mismatch");
        OperatorMatrix out = a;
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (const auto& [r, v] : b.cols_[j]) out.add(r, j, v);
        return out;
    }

    friend OperatorMatrix operator-(const OperatorMatrix& a) {
        OperatorMatrix out = a;
        for (auto& c : out.cols_)
            for (auto& e : c) e.second = -e.second;
        return out;
    }

    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) { return a + (-b); }

    /// Image of basis vector j as a sparse vector.
    const Column& apply_basis(std::size_t j) const { return column(j); }

private:
    std::vector<Column> cols_;
};

}  // namespace dmod
