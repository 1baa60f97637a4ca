#pragma once

#include <string>
#include <vector>

namespace macword {

/// Integer partition: weakly decreasing positive parts. {} is the empty
/// partition.
using Partition = std::vector<int>;

bool is_partition(const Partition& shape);

/// Number of cells |shape|.
int partition_cells(const Partition& shape);

Partition conjugate_partition(const Partition& shape);

/// The staircase (n-1, n-2, ..., 1); the Rothe shape of the reverse
/// permutation in S_n.
Partition staircase(int n);

/// Parse "2,2,1" (or "" for the empty partition).
Partition parse_partition(const std::string& text);

/// All partitions of `cells`, in lexicographically decreasing part order.
std::vector<Partition> partitions_with_cells(int cells);

std::string to_string(const Partition& shape);

}  // namespace macword
