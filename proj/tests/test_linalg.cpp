#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace bgbc;
using namespace bgbc_test;

TEST_CASE("dense inverse round trip", "[linalg]") {
    Mat m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    Mat inv = m.inverse();
    CHECK(m * inv == Mat::identity(2));
    CHECK(inv * m == Mat::identity(2));
}

TEST_CASE("singular matrices are rejected", "[linalg]") {
    Mat m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    CHECK_THROWS_AS(m.inverse(), std::domain_error);
}

TEST_CASE("row reducer rank and kernel of a known matrix", "[linalg]") {
    // rows: (1 2 3), (2 4 6), (0 1 1) -> rank 2, kernel spanned by (-1,-1,1).
    std::vector<SparseRow> rows = {
        {{0, rational(1)}, {1, rational(2)}, {2, rational(3)}},
        {{0, rational(2)}, {1, rational(4)}, {2, rational(6)}},
        {{1, rational(1)}, {2, rational(1)}},
    };
    CHECK(rank_of_rows(rows, 3) == 2);
    auto ker = kernel_of_rows(rows, 3);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == rational(-1));
    CHECK(ker[0][1] == rational(-1));
    CHECK(ker[0][2] == rational(1));
}

TEST_CASE("kernel of the zero and identity matrices", "[linalg]") {
    std::vector<SparseRow> zero_rows = {{}, {}};
    CHECK(kernel_of_rows(zero_rows, 3).size() == 3);
    std::vector<SparseRow> id_rows = {
        {{0, rational(1)}}, {{1, rational(1)}}, {{2, rational(1)}}};
    CHECK(kernel_of_rows(id_rows, 3).empty());
}

TEST_CASE("kernel vectors satisfy the original rows exactly", "[linalg]") {
    auto rng = test_rng(99);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const int rows_n = 6, cols_n = 5;
        std::vector<SparseRow> rows;
        for (int r = 0; r < rows_n; ++r) {
            SparseRow row;
            for (int c = 0; c < cols_n; ++c) {
                int v = entry(rng);
                if (v != 0) row.emplace_back(c, rational(v));
            }
            rows.push_back(std::move(row));
        }
        RowReducer red(cols_n);
        for (const auto& r : rows) red.add_row(r);
        auto ker = red.kernel();
        CHECK(red.rank() + static_cast<int>(ker.size()) == cols_n);
        for (const auto& v : ker)
            for (const auto& row : rows) {
                Rational dot = 0;
                for (const auto& [c, val] : row) dot += val * v[std::size_t(c)];
                CHECK(sgn(dot) == 0);
            }
    }
}

TEST_CASE("row order does not change the reduced result", "[linalg]") {
    std::vector<SparseRow> rows = {
        {{0, rational(1)}, {2, rational(1)}},
        {{1, rational(2)}, {3, rational(1)}},
        {{0, rational(1)}, {1, rational(2)}, {2, rational(1)}, {3, rational(1)}},
        {{2, rational(5)}},
    };
    RowReducer a(4), b(4);
    for (const auto& r : rows) a.add_row(r);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) b.add_row(*it);
    CHECK(a.rank() == b.rank());
    CHECK(a.pivot_rows() == b.pivot_rows());
    CHECK(a.kernel() == b.kernel());
}

TEST_CASE("sparse_axpy merges and cancels", "[linalg]") {
    SparseRow x = {{0, rational(1)}, {2, rational(2)}};
    SparseRow y = {{0, rational(1)}, {1, rational(1)}, {2, rational(-2)}};
    SparseRow z = sparse_axpy(x, rational(1), y);
    REQUIRE(z.size() == 2);
    CHECK(z[0] == std::make_pair(0, rational(2)));
    CHECK(z[1] == std::make_pair(1, rational(1)));
    CHECK(sparse_axpy(x, rational(-1), x).empty());
}
