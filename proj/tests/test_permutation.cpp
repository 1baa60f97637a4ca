#include <doctest.h>

#include <stdexcept>

#include "macword/permutation.hpp"
#include "oracles.hpp"

using namespace macword;

TEST_CASE("construction and application") {
  const Permutation p(std::vector<int>{4, 2, 1, 3});
  CHECK(p(1) == 4);
  CHECK(p(4) == 3);
  CHECK(p.inverse()(4) == 1);
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1}), std::invalid_argument);
  CHECK(Permutation(3).is_identity());
}

TEST_CASE("compose follows p(q(x))") {
  const Permutation id(4);
  const Permutation p4213(std::vector<int>{4, 2, 1, 3});
  CHECK(compose(id, p4213) == p4213);

  // s_3 composed after s_1 s_2 s_1 gives 4213.
  const Permutation s1 = adjacent_transposition(4, 1);
  const Permutation s2 = adjacent_transposition(4, 2);
  const Permutation s3 = adjacent_transposition(4, 3);
  CHECK(compose(s3, compose(s1, compose(s2, s1))) == p4213);

  const Permutation p213(std::vector<int>{2, 1, 3});
  CHECK(compose(p213, p213) == Permutation(3));
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), std::invalid_argument);
}

TEST_CASE("length counts inversions") {
  CHECK(length(Permutation(5)) == 0);
  CHECK(length(Permutation(std::vector<int>{4, 2, 1, 3})) == 4);
  CHECK(length(Permutation(std::vector<int>{4, 3, 1, 2})) == 5);
}

TEST_CASE("rothe diagram cells") {
  const std::set<Cell> expected2413 = {{1, 1}, {1, 2}, {3, 2}};
  CHECK(rothe_diagram(Permutation(std::vector<int>{2, 4, 1, 3})) == expected2413);
  CHECK(rothe_diagram(Permutation(4)).empty());
  const std::set<Cell> expected4312 = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}};
  CHECK(rothe_diagram(Permutation(std::vector<int>{4, 3, 1, 2})) == expected4312);
}

TEST_CASE("dominance") {
  CHECK(is_dominant(Permutation(std::vector<int>{4, 2, 1, 3})));
  CHECK_FALSE(is_dominant(Permutation(std::vector<int>{2, 4, 1, 3})));
  CHECK(is_dominant(Permutation(4)));
}

TEST_CASE("dominant permutation from a partition") {
  CHECK(dominant_from_partition({2, 1, 1}, 4) == Permutation(std::vector<int>{4, 2, 1, 3}));
  CHECK(dominant_from_partition({2, 2, 1}, 4) == Permutation(std::vector<int>{4, 3, 1, 2}));
  CHECK(dominant_from_partition({}, 3) == Permutation(3));
  CHECK_THROWS_AS(dominant_from_partition({2, 1, 1}, 3), std::invalid_argument);
}

TEST_CASE("crossing pairs") {
  const std::set<std::pair<int, int>> expected312 = {{1, 3}, {2, 3}};
  CHECK(crossing_pairs(Permutation(std::vector<int>{3, 1, 2})) == expected312);
  CHECK(crossing_pairs(Permutation(4)).empty());
  const std::set<std::pair<int, int>> expected4213 = {{1, 2}, {1, 4}, {2, 4}, {3, 4}};
  CHECK(crossing_pairs(Permutation(std::vector<int>{4, 2, 1, 3})) == expected4213);
}

TEST_CASE("diagram size, dominance and crossing pairs agree exhaustively") {
  for (int n = 1; n <= 6; ++n) {
    int dominant_count = 0;
    for (const Permutation& p : testbrute::all_permutations(n)) {
      CHECK(static_cast<int>(rothe_diagram(p).size()) == length(p));
      CHECK(static_cast<int>(crossing_pairs(p).size()) == length(p));

      // Young diagram test straight from the cells.
      const auto cells = rothe_diagram(p);
      std::vector<int> row_counts(n + 1, 0);
      bool left_justified = true;
      for (const Cell& cell : cells) ++row_counts[cell.first];
      for (const Cell& cell : cells) {
        if (cell.second > row_counts[cell.first]) left_justified = false;
      }
      bool weakly_decreasing = true;
      for (int r = 2; r <= n; ++r) {
        if (row_counts[r] > row_counts[r - 1]) weakly_decreasing = false;
      }
      const bool young = left_justified && weakly_decreasing;
      CHECK(is_dominant(p) == young);
      if (is_dominant(p)) ++dominant_count;
    }
    // dominant_from_partition is a bijection onto the dominant elements
    int shapes_fitting = 0;
    for (int cells = 0; cells <= n * (n - 1) / 2; ++cells) {
      for (const Partition& shape : partitions_with_cells(cells)) {
        const Partition conj = conjugate_partition(shape);
        bool fits = true;
        for (std::size_t i = 0; i < conj.size(); ++i) {
          if (conj[i] + static_cast<int>(i) + 1 > n) fits = false;
        }
        if (!fits) continue;
        ++shapes_fitting;
        const Permutation p = dominant_from_partition(shape, n);
        CHECK(is_dominant(p));
        CHECK(rothe_shape(p) == shape);
      }
    }
    CHECK(shapes_fitting == dominant_count);
  }
}
