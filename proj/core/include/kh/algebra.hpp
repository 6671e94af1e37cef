#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kh {

using Int = boost::multiprecision::cpp_int;

// Sparse integer matrix with exact arbitrary-precision entries.
// Column-major storage plus a row index of nonzero positions; stored
// entries are always nonzero.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_data_(cols), row_cols_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int at(int r, int c) const;
    void set(int r, int c, Int v);
    void add(int r, int c, const Int& v);

    const std::map<int, Int>& column(int c) const { return col_data_[c]; }
    // Column indices of the nonzero entries in row r, ascending.
    const std::vector<int>& row_support(int r) const { return row_cols_[r]; }

    std::size_t nonzero_count() const;
    bool is_zero() const { return nonzero_count() == 0; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && col_data_ == o.col_data_;
    }

private:
    void row_insert(int r, int c);
    void row_erase(int r, int c);

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::map<int, Int>> col_data_;
    std::vector<std::vector<int>> row_cols_;
};

// Invariant factors d_1 | d_2 | ... | d_r (positive, 1s included) and the
// rank r over the rationals.
struct SmithForm {
    std::vector<Int> invariant_factors;
    int rank = 0;
};

// Exact Smith normal form. Pivoting prefers +-1 entries with minimal fill,
// falling back to the smallest absolute value.
SmithForm smith_normal_form(const IntMatrix& m);

// Rank over the rationals, by exact integer elimination.
int rank(const IntMatrix& m);

// Rank of the reduction mod p. Throws domain_error when p is not prime.
int rank_mod_p(const IntMatrix& m, std::int64_t p);

} // namespace kh
