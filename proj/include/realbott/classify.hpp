#pragma once

#include <cstdint>
#include <vector>

#include "realbott/bott_matrix.hpp"

namespace realbott {

// Which isomorphism search decides merges between normal-form orbits.
enum class MergeOracle {
  kBlockSearch,  // find_isomorphism on normal forms
  kExhaustive,   // exhaustive_isomorphism, no block restriction
};

struct ClassifyOptions {
  int threads = 1;  // 0 = hardware concurrency
  MergeOracle oracle = MergeOracle::kBlockSearch;
  int max_dim = 5;
};

struct DiffeomorphismClass {
  BottMatrix representative;  // minimal canonical key among members
  TypeSignature type;
  bool orientable = false;
  std::uint64_t member_count = 0;
  std::vector<std::uint64_t> members;  // keys of every member, ascending
  // Normal-form members grouped into permutation orbits; each orbit sorted by
  // key, orbits ordered by descending size then by smallest key.
  std::vector<std::vector<BottMatrix>> normal_form_orbits;

  std::vector<int> orbit_sizes() const;
};

struct Classification {
  int dim = 0;
  std::uint64_t total_matrices = 0;
  // Sorted by type, lexicographically descending as in the published tables,
  // then by representative key.
  std::vector<DiffeomorphismClass> classes;
  std::uint64_t isomorphism_searches = 0;

  // Index of the class containing the matrix with this key.
  std::size_t class_of(std::uint64_t key) const;
};

// Throws std::invalid_argument unless 1 <= n <= options.max_dim (and n <= 8).
Classification classify_dimension(int n, const ClassifyOptions& options = {});

}  // namespace realbott
