#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgbc/rational.hpp"

namespace bgbc {

/// Small dense matrix over Q; used for rank-d data (changes of basis,
/// Lie algebra elements, finite group elements).
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols, Rational(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Rational trace() const {
        Rational t = 0;
        for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
        Mat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (sgn(a.at(i, k)) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    Rational t = a.at(i, k) * b.at(k, j);
                    c.at(i, j) += t;
                }
            }
        return c;
    }

    friend Mat operator-(Mat a) {
        for (auto& x : a.e_) x = -x;
        return a;
    }

    friend bool operator==(const Mat&, const Mat&) = default;

    /// Gauss-Jordan inverse; throws std::domain_error on singular input.
    Mat inverse() const {
        if (rows_ != cols_) throw std::domain_error("Mat::inverse: not square");
        const int n = rows_;
        Mat a = *this;
        Mat inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (sgn(a.at(r, col)) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) throw std::domain_error("Mat::inverse: singular matrix");
            if (pivot != col) {
                for (int j = 0; j < n; ++j) {
                    std::swap(a.at(pivot, j), a.at(col, j));
                    std::swap(inv.at(pivot, j), inv.at(col, j));
                }
            }
            Rational p = a.at(col, col);
            for (int j = 0; j < n; ++j) {
                a.at(col, j) /= p;
                inv.at(col, j) /= p;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col || sgn(a.at(r, col)) == 0) continue;
                Rational f = a.at(r, col);
                for (int j = 0; j < n; ++j) {
                    Rational t = f * a.at(col, j);
                    a.at(r, j) -= t;
                    t = f * inv.at(col, j);
                    inv.at(r, j) -= t;
                }
            }
        }
        return inv;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

/// Sparse row: (column, coefficient) pairs sorted by column.
using SparseRow = std::vector<std::pair<int, Rational>>;

inline SparseRow sparse_axpy(const SparseRow& x, const Rational& alpha, const SparseRow& y) {
    // x + alpha * y, merged by column.
    SparseRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            Rational v = alpha * y[j].second;
            if (sgn(v) != 0) out.emplace_back(y[j].first, std::move(v));
            ++j;
        } else {
            Rational v = x[i].second + alpha * y[j].second;
            if (sgn(v) != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

/// Incremental reduced row echelon form with lexicographic pivoting.
/// Feeding rows in any order yields the same pivot set; the stored rows
/// are fully reduced against each other, so kernels and ranks read off
/// deterministically.
class RowReducer {
  public:
    explicit RowReducer(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(pivots_.size()); }

    /// Reduces the row against the current echelon set; inserts it if a
    /// new pivot appears. Returns true when the rank grew. Pivot rows
    /// carry zeros at every other pivot column, so one ascending pass
    /// clears all of them from the incoming row.
    bool add_row(SparseRow row) {
        for (const auto& [pcol, prow] : pivots_) {
            Rational c = coeff_at(row, pcol);
            if (sgn(c) != 0) row = sparse_axpy(row, Rational(-c), prow);
        }
        if (row.empty()) return false;
        const int col = row.front().first;
        Rational lead = row.front().second;
        for (auto& [c, v] : row) v /= lead;
        for (auto& [pcol, prow] : pivots_) {
            Rational coeff = coeff_at(prow, col);
            if (sgn(coeff) != 0) prow = sparse_axpy(prow, Rational(-coeff), row);
        }
        pivots_.emplace(col, std::move(row));
        return true;
    }

    const std::map<int, SparseRow>& pivot_rows() const { return pivots_; }

    /// Kernel of the matrix whose rows were fed in, one basis vector per
    /// free column, in ascending column order.
    std::vector<std::vector<Rational>> kernel() const {
        std::vector<std::vector<Rational>> out;
        for (int col = 0; col < ncols_; ++col) {
            if (pivots_.count(col)) continue;
            std::vector<Rational> v(ncols_, Rational(0));
            v[col] = 1;
            for (const auto& [pcol, prow] : pivots_) {
                Rational c = coeff_at(prow, col);
                if (sgn(c) != 0) v[pcol] = -c;
            }
            out.push_back(std::move(v));
        }
        return out;
    }

  private:
    static Rational coeff_at(const SparseRow& row, int col) {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto& p, int c) { return p.first < c; });
        if (it != row.end() && it->first == col) return it->second;
        return Rational(0);
    }

    int ncols_;
    std::map<int, SparseRow> pivots_;
};

inline int rank_of_rows(const std::vector<SparseRow>& rows, int ncols) {
    RowReducer red(ncols);
    for (const auto& r : rows) red.add_row(r);
    return red.rank();
}

inline std::vector<std::vector<Rational>> kernel_of_rows(const std::vector<SparseRow>& rows,
                                                         int ncols) {
    RowReducer red(ncols);
    for (const auto& r : rows) red.add_row(r);
    return red.kernel();
}

}  // namespace bgbc
