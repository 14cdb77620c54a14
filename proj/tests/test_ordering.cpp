// Copyright 2026 The tlsynth Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "tlsynth/ordering.hpp"

using namespace tlsynth;

namespace {

using Columns = std::vector<std::vector<std::size_t>>;

// Direct transcription of the in-place array construction: a square
// 2^m x 2^m table indexed [row][column] whose column c holds its rows in
// table rows 1 .. 2^m - c - 1, filled with a decrementing insertion row k.
Columns produce_array_reference(int n) {
    std::vector<std::vector<std::size_t>> a = {
        {0, 0, 0, 0}, {1, 2, 3, 0}, {2, 3, 0, 0}, {3, 0, 0, 0}};
    for (int m = 3; m <= n; ++m) {
        const std::size_t size = std::size_t{1} << m;
        const std::size_t half = size / 2;
        std::vector<std::vector<std::size_t>> b(size,
                                                std::vector<std::size_t>(size));
        std::size_t k = half;
        for (std::size_t c = 0; c <= half - 1; ++c) {
            b[k][2 * c] = 2 * c + 1;
            for (std::size_t r = 1; r <= half - c - 1; ++r) {
                b[r][2 * c] = 2 * a[r][c];
                b[r + k][2 * c] = 2 * a[r][c] + 1;
                b[r][2 * c + 1] = 2 * a[r][c];
                b[r + k - 1][2 * c + 1] = 2 * a[r][c] + 1;
            }
            k = k - 1;
        }
        a = std::move(b);
    }
    const std::size_t dim = a.size();
    Columns cols(dim - 1);
    for (std::size_t c = 0; c + 1 < dim; ++c) {
        for (std::size_t r = 1; r <= dim - c - 1; ++r) {
            cols[c].push_back(a[r][c]);
        }
    }
    return cols;
}

TEST(Ordering, ConventionalExamples) {
    EXPECT_EQ(conventional_order(2).columns, (Columns{{1, 2, 3}, {2, 3}, {3}}));
    EXPECT_EQ(conventional_order(1).columns, (Columns{{1}}));
    EXPECT_EQ(conventional_order(3).columns.at(5),
              (std::vector<std::size_t>{6, 7}));
    EXPECT_THROW((void)conventional_order(0), std::invalid_argument);
}

TEST(Ordering, PoaBaseCaseIsConventional) {
    EXPECT_EQ(poa_order(2), conventional_order(2));
    EXPECT_THROW((void)poa_order(1), std::invalid_argument);
}

TEST(Ordering, PoaThreeQubitColumns) {
    const Columns expected = {{2, 4, 6, 1, 3, 5, 7}, {2, 4, 6, 3, 5, 7},
                              {4, 6, 3, 5, 7},       {4, 6, 5, 7},
                              {6, 5, 7},             {6, 7},
                              {7}};
    EXPECT_EQ(poa_order(3).columns, expected);
}

TEST(Ordering, PoaMatchesIndexArithmeticReference) {
    EXPECT_EQ(produce_array_reference(2), conventional_order(2).columns);
    for (int n = 3; n <= 8; ++n) {
        EXPECT_EQ(poa_order(n).columns, produce_array_reference(n)) << "n=" << n;
    }
}

TEST(Ordering, BothOrdersValidate) {
    for (int n = 2; n <= 7; ++n) {
        EXPECT_TRUE(validate_order(conventional_order(n))) << n;
        EXPECT_TRUE(validate_order(poa_order(n))) << n;
        EXPECT_EQ(poa_order(n).pair_count(),
                  (std::size_t{1} << (n - 1)) * ((std::size_t{1} << n) - 1));
    }
    EXPECT_TRUE(validate_order(conventional_order(1)));
}

TEST(Ordering, ValidateRejectsBrokenArrays) {
    OrderArray dup = conventional_order(3);
    dup.columns[2][1] = dup.columns[2][0];
    EXPECT_FALSE(validate_order(dup));

    OrderArray low = conventional_order(3);
    low.columns[3][0] = 3;
    EXPECT_FALSE(validate_order(low));

    OrderArray short_col = conventional_order(3);
    short_col.columns[0].pop_back();
    EXPECT_FALSE(validate_order(short_col));

    OrderArray missing = conventional_order(3);
    missing.columns.pop_back();
    EXPECT_FALSE(validate_order(missing));

    OrderArray out_of_range = conventional_order(2);
    out_of_range.columns[2][0] = 4;
    EXPECT_FALSE(validate_order(out_of_range));
}

TEST(Ordering, ShuffledColumnsStayValid) {
    std::mt19937 rng(5);
    for (int n = 2; n <= 6; ++n) {
        OrderArray o = conventional_order(n);
        for (auto &col : o.columns) {
            std::shuffle(col.begin(), col.end(), rng);
        }
        EXPECT_TRUE(validate_order(o));
    }
}

TEST(Ordering, PoaLastColumnIsSingleEntry) {
    for (int n = 2; n <= 7; ++n) {
        const OrderArray o = poa_order(n);
        EXPECT_EQ(o.columns.back(), (std::vector<std::size_t>{o.dim() - 1}));
    }
}

TEST(Ordering, PoaParityStructure) {
    for (int n = 3; n <= 7; ++n) {
        const OrderArray o = poa_order(n);
        for (std::size_t c = 0; c < o.columns.size(); ++c) {
            const auto &col = o.columns[c];
            const auto first_odd = std::find_if(
                col.begin(), col.end(), [](std::size_t r) { return r % 2 == 1; });
            // evens first, then odds only
            EXPECT_TRUE(std::all_of(col.begin(), first_odd,
                                    [](std::size_t r) { return r % 2 == 0; }));
            EXPECT_TRUE(std::all_of(first_odd, col.end(),
                                    [](std::size_t r) { return r % 2 == 1; }))
                << "n=" << n << " c=" << c;
            if (c % 2 == 0) {
                const auto evens = static_cast<std::size_t>(first_odd - col.begin());
                ASSERT_LT(evens, col.size());
                EXPECT_EQ(*first_odd, c + 1);
                EXPECT_EQ(col.size(), 2 * evens + 1);
            } else {
                EXPECT_EQ(col.size() % 2, 0U);
                EXPECT_EQ(static_cast<std::size_t>(first_odd - col.begin()),
                          col.size() / 2);
            }
        }
    }
}

TEST(Ordering, EvenColumnEndsOddNextColumnStartsEven) {
    for (int n = 2; n <= 7; ++n) {
        for (const OrderArray &o : {poa_order(n), conventional_order(n)}) {
            for (std::size_t c = 0; c + 1 < o.columns.size(); c += 2) {
                EXPECT_EQ(o.columns[c].back() % 2, 1U);
                EXPECT_EQ(o.columns[c + 1].front() % 2, 0U);
            }
        }
    }
}

TEST(Ordering, SaveFormat) {
    EXPECT_EQ(save_order(conventional_order(2)), "n=2\n0: 1 2 3\n1: 2 3\n2: 3\n");
    const std::string text = save_order(poa_order(3));
    EXPECT_NE(text.find("\n0: 2 4 6 1 3 5 7\n"), std::string::npos);
}

TEST(Ordering, SaveLoadRoundTrip) {
    for (int n = 2; n <= 6; ++n) {
        EXPECT_EQ(load_order(save_order(poa_order(n))), poa_order(n));
    }
    EXPECT_EQ(load_order("n=2\n0: 1 2 3\n1: 2 3\n2: 3\n"), conventional_order(2));
}

TEST(Ordering, LoadErrors) {
    // column 0 omits row 1
    EXPECT_THROW((void)load_order("n=2\n0: 2 3\n1: 2 3\n2: 3\n"), ParseError);
    EXPECT_THROW((void)load_order("2\n0: 1 2 3\n"), ParseError);
    EXPECT_THROW((void)load_order("n=2\n0 1 2 3\n1: 2 3\n2: 3\n"), ParseError);
    EXPECT_THROW((void)load_order("n=2\n1: 2 3\n0: 1 2 3\n2: 3\n"), ParseError);
    EXPECT_THROW((void)load_order("n=2\n0: 1 2 x\n1: 2 3\n2: 3\n"), ParseError);
    EXPECT_THROW((void)load_order("n=2\n0: 1 2 3\n1: 2 3\n"), ParseError);
    EXPECT_THROW((void)load_order(""), ParseError);
}

} // namespace
