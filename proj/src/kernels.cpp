#include "cpt/kernels.hpp"

#include <atomic>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cpt/errors.hpp"

namespace cpt::kernels {

namespace {

std::size_t cell(int n, int r, int c) { return static_cast<std::size_t>(r) * n + c; }

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<int> fill_table(int n, const std::function<int(int, int)>& product) {
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  std::atomic<bool> failed{false};
  // exceptions must not escape the parallel region
#pragma omp parallel for schedule(static)
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int v = -1;
      try {
        v = product(r, c);
      } catch (...) {
        v = -1;
      }
      if (v < 0 || v >= n) failed.store(true, std::memory_order_relaxed);
      table[cell(n, r, c)] = v;
    }
  }
  if (failed.load()) throw StructureError("product left the element set while filling the Cayley table");
  return table;
}

std::vector<int> fill_table_serial(int n, const std::function<int(int, int)>& product) {
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int v = product(r, c);
      if (v < 0 || v >= n) throw StructureError("product left the element set while filling the Cayley table");
      table[cell(n, r, c)] = v;
    }
  }
  return table;
}

bool is_latin_square_serial(int n, const std::vector<int>& table) {
  if (table.size() != static_cast<std::size_t>(n) * n) return false;
  for (int r = 0; r < n; ++r) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int c = 0; c < n; ++c) {
      const int a = table[cell(n, r, c)];
      const int b = table[cell(n, c, r)];
      if (a < 0 || a >= n || b < 0 || b >= n || row_seen[a] || col_seen[b]) return false;
      row_seen[a] = col_seen[b] = 1;
    }
  }
  return true;
}

bool is_latin_square(int n, const std::vector<int>& table) {
  if (table.size() != static_cast<std::size_t>(n) * n) return false;
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(static)
  for (int r = 0; r < n; ++r) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int c = 0; c < n; ++c) {
      const int a = table[cell(n, r, c)];
      const int b = table[cell(n, c, r)];
      if (a < 0 || a >= n || b < 0 || b >= n || row_seen[a] || col_seen[b]) {
        ok.store(false, std::memory_order_relaxed);
        break;
      }
      row_seen[a] = col_seen[b] = 1;
    }
  }
  return ok.load();
}

std::optional<std::array<int, 3>> associativity_violation_serial(int n, const std::vector<int>& table) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = table[cell(n, x, y)];
      for (int z = 0; z < n; ++z) {
        if (table[cell(n, xy, z)] != table[cell(n, x, table[cell(n, y, z)])]) return std::array<int, 3>{x, y, z};
      }
    }
  return std::nullopt;
}

std::optional<std::array<int, 3>> associativity_violation(int n, const std::vector<int>& table) {
  // Each x is scanned independently; the lowest failing x wins so the witness
  // matches the serial scan.
  std::atomic<int> first_bad_x{n};
  std::vector<std::array<int, 3>> witness(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int x = 0; x < n; ++x) {
    if (x > first_bad_x.load(std::memory_order_relaxed)) continue;
    bool found = false;
    for (int y = 0; y < n && !found; ++y) {
      const int xy = table[cell(n, x, y)];
      for (int z = 0; z < n; ++z) {
        if (table[cell(n, xy, z)] != table[cell(n, x, table[cell(n, y, z)])]) {
          witness[x] = {x, y, z};
          found = true;
          break;
        }
      }
    }
    if (found) {
      int cur = first_bad_x.load();
      while (x < cur && !first_bad_x.compare_exchange_weak(cur, x)) {
      }
    }
  }
  const int bad = first_bad_x.load();
  if (bad == n) return std::nullopt;
  return witness[bad];
}

}  // namespace cpt::kernels
