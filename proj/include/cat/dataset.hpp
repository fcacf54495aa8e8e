#ifndef CAT_DATASET_HPP
#define CAT_DATASET_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cat {

/// n observations of p variables, stored column by column.
class Dataset {
public:
    Dataset() = default;
    // Values are row-major. Names default to X1..Xp. Throws on non-finite
    // values, a size mismatch, or n == 0 / p == 0.
    Dataset(std::size_t n, std::size_t p, std::span<const double> row_major, std::vector<std::string> names = {});
    static Dataset from_columns(std::vector<std::vector<double>> columns, std::vector<std::string> names = {});

    std::size_t n() const { return m_n; }
    std::size_t p() const { return m_columns.size(); }
    double operator()(std::size_t row, std::size_t col) const { return m_columns[col][row]; }
    std::span<const double> column(std::size_t col) const { return m_columns.at(col); }
    const std::vector<std::string>& names() const { return m_names; }

    // rows [first, first + count)
    Dataset rows(std::size_t first, std::size_t count) const;
    // row k of the result is row order[k] of this dataset
    Dataset permuted(std::span<const std::size_t> order) const;

    bool operator==(const Dataset&) const = default;

private:
    std::size_t m_n = 0;
    std::vector<std::vector<double>> m_columns;
    std::vector<std::string> m_names;
};

std::vector<std::string> default_names(std::size_t p);

}  // namespace cat

#endif  // CAT_DATASET_HPP
