#include <doctest.h>

#include <stdexcept>

#include "macword/tableau.hpp"
#include "oracles.hpp"

using namespace macword;

TEST_CASE("tableau validation") {
  CHECK_NOTHROW(StandardTableau({{1, 3}, {2, 5}, {4}}));
  CHECK_THROWS_AS(StandardTableau({{1, 2}, {4, 3}}), std::invalid_argument);  // row not increasing
  CHECK_THROWS_AS(StandardTableau({{2, 3}, {1}}), std::invalid_argument);     // column not increasing
  CHECK_THROWS_AS(StandardTableau(std::vector<std::vector<int>>{{1}, {2, 3}}),
                  std::invalid_argument);  // not a partition shape
  CHECK_THROWS_AS(StandardTableau({{1, 1}}), std::invalid_argument);          // repeated entry
}

TEST_CASE("chain of shapes") {
  const StandardTableau t({{1, 3}, {2, 5}, {4}});
  const std::vector<Partition> expected = {{}, {1}, {1, 1}, {2, 1}, {2, 1, 1}, {2, 2, 1}};
  CHECK(chain_from_tableau(t) == expected);

  CHECK(chain_from_tableau(StandardTableau({{1}})) == std::vector<Partition>{{}, {1}});

  const StandardTableau square({{1, 2}, {3, 4}});
  const std::vector<Partition> square_chain = {{}, {1}, {2}, {2, 1}, {2, 2}};
  CHECK(chain_from_tableau(square) == square_chain);
}

TEST_CASE("insertion wires") {
  const StandardTableau t({{1, 3}, {2, 5}, {4}});
  const std::vector<int> expected = {1, 2, 1, 3, 2};
  for (int m = 1; m <= 5; ++m) CHECK(insertion_wire(t, m) == expected[m - 1]);
  CHECK(insertion_wire(StandardTableau({{1, 2}, {3, 4}}), 3) == 2);
  CHECK_THROWS_AS(insertion_wire(t, 6), std::out_of_range);
}

TEST_CASE("wire pairs of consecutive chain permutations") {
  CHECK(wire_pair(Permutation(std::vector<int>{2, 1, 3}), Permutation(std::vector<int>{3, 1, 2})) ==
        std::pair{2, 3});
  CHECK(wire_pair(Permutation(2), Permutation(std::vector<int>{2, 1})) == std::pair{1, 2});
  CHECK(wire_pair(Permutation(std::vector<int>{3, 2, 1, 4}), Permutation(std::vector<int>{4, 2, 1, 3})) ==
        std::pair{3, 4});
  CHECK_THROWS_AS(wire_pair(Permutation(3), Permutation(std::vector<int>{2, 3, 1})),
                  std::invalid_argument);
}

TEST_CASE("row-major tableau") {
  CHECK(row_major_tableau({2, 1}) == StandardTableau({{1, 2}, {3}}));
  CHECK(row_major_tableau({1, 1, 1}) == StandardTableau({{1}, {2}, {3}}));
  CHECK(row_major_tableau({2, 2, 1}) == StandardTableau({{1, 2}, {3, 4}, {5}}));
}

TEST_CASE("tableau enumeration") {
  CHECK(enumerate_syt({2, 1}).size() == 2);
  CHECK(enumerate_syt({1}).size() == 1);
  CHECK(enumerate_syt({2, 2}).size() == 2);
  CHECK(enumerate_syt({}).size() == 1);
  CHECK(enumerate_syt({3, 2}).size() == 5);
  CHECK_THROWS_AS(enumerate_syt({5, 5, 5}, 12), std::invalid_argument);
}

TEST_CASE("every chain stays dominant and the wire pair minimum is the insertion wire") {
  for (int cells = 1; cells <= 6; ++cells) {
    for (const Partition& shape : partitions_with_cells(cells)) {
      const int ambient = chain_ambient(shape);
      for (const StandardTableau& t : enumerate_syt(shape)) {
        const auto chain = chain_from_tableau(t);
        Permutation prev = dominant_from_partition(chain[0], ambient);
        for (int m = 1; m <= cells; ++m) {
          const Permutation next = dominant_from_partition(chain[m], ambient);
          CHECK(is_dominant(next));
          CHECK(length(next) == m);
          const auto pair = wire_pair(prev, next);
          CHECK(pair.first == insertion_wire(t, m));
          prev = next;
        }
        CHECK(prev == dominant_from_partition(t.shape(), ambient));
      }
    }
  }
}

TEST_CASE("tableau JSON round trip") {
  const StandardTableau t({{1, 3}, {2, 5}, {4}});
  CHECK(tableau_from_json(tableau_to_json(t)) == t);
  CHECK_THROWS_AS(tableau_from_json(nlohmann::json::parse("[[1,2],[2]]")), std::invalid_argument);
}
