#include "cat/dataset.hpp"

#include <cmath>

#include "cat/error.hpp"

namespace cat {

std::vector<std::string> default_names(std::size_t p) {
    std::vector<std::string> names(p);
    for (std::size_t c = 0; c < p; ++c) names[c] = "X" + std::to_string(c + 1);
    return names;
}

Dataset::Dataset(std::size_t n, std::size_t p, std::span<const double> row_major, std::vector<std::string> names)
    : m_n(n), m_columns(p, std::vector<double>(n)), m_names(std::move(names)) {
    if (n == 0 || p == 0) throw InvalidArgument("a dataset needs at least one row and one column");
    if (row_major.size() != n * p) throw DimensionMismatchError("value count does not match n * p");
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < p; ++c) {
            const double v = row_major[r * p + c];
            if (!std::isfinite(v)) {
                throw NonFiniteInput("non-finite value at row " + std::to_string(r + 1) + ", column " + std::to_string(c + 1));
            }
            m_columns[c][r] = v;
        }
    }
    if (m_names.empty()) m_names = default_names(p);
    if (m_names.size() != p) throw DimensionMismatchError("column name count does not match p");
}

Dataset Dataset::from_columns(std::vector<std::vector<double>> columns, std::vector<std::string> names) {
    if (columns.empty() || columns.front().empty()) throw InvalidArgument("a dataset needs at least one row and one column");
    Dataset d;
    d.m_n = columns.front().size();
    for (const auto& c : columns) {
        if (c.size() != d.m_n) throw LengthMismatch("columns have different lengths");
        for (double v : c) {
            if (!std::isfinite(v)) throw NonFiniteInput("dataset values must be finite");
        }
    }
    d.m_names = names.empty() ? default_names(columns.size()) : std::move(names);
    if (d.m_names.size() != columns.size()) throw DimensionMismatchError("column name count does not match p");
    d.m_columns = std::move(columns);
    return d;
}

Dataset Dataset::rows(std::size_t first, std::size_t count) const {
    if (first + count > m_n || count == 0) throw InvalidArgument("row range out of bounds");
    std::vector<std::vector<double>> cols(p());
    for (std::size_t c = 0; c < p(); ++c) {
        const auto begin = m_columns[c].begin() + static_cast<std::ptrdiff_t>(first);
        cols[c].assign(begin, begin + static_cast<std::ptrdiff_t>(count));
    }
    return from_columns(std::move(cols), m_names);
}

Dataset Dataset::permuted(std::span<const std::size_t> order) const {
    if (order.size() != m_n) throw DimensionMismatchError("permutation length does not match n");
    std::vector<std::vector<double>> cols(p(), std::vector<double>(m_n));
    for (std::size_t c = 0; c < p(); ++c) {
        for (std::size_t r = 0; r < m_n; ++r) cols[c][r] = m_columns[c].at(order[r]);
    }
    return from_columns(std::move(cols), m_names);
}

}  // namespace cat
