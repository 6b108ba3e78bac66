#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

// Data-parallel table kernels. Each OpenMP kernel has a *_serial twin that
// is the reference implementation used by the tests and the benchmarks.
namespace cpt::kernels {

/// n x n table with cell (r, c) = product(r, c). Throws StructureError if any
/// product is negative (element not found).
std::vector<int> fill_table(int n, const std::function<int(int, int)>& product);
std::vector<int> fill_table_serial(int n, const std::function<int(int, int)>& product);

bool is_latin_square(int n, const std::vector<int>& table);
bool is_latin_square_serial(int n, const std::vector<int>& table);

/// First (x, y, z) in lexicographic order with (xy)z != x(yz).
std::optional<std::array<int, 3>> associativity_violation(int n, const std::vector<int>& table);
std::optional<std::array<int, 3>> associativity_violation_serial(int n, const std::vector<int>& table);

/// Number of threads the parallel kernels will use.
int max_threads();

}  // namespace cpt::kernels
