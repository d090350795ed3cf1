#include "realbott/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "realbott/ring.hpp"

namespace realbott {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

struct MatrixInfo {
  TypeSignature type;
  bool orientable = false;
  std::uint64_t normal_key = 0;
};

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < count; i += static_cast<std::size_t>(threads)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<int> DiffeomorphismClass::orbit_sizes() const {
  std::vector<int> sizes;
  for (const auto& orbit : normal_form_orbits) sizes.push_back(static_cast<int>(orbit.size()));
  return sizes;
}

std::size_t Classification::class_of(std::uint64_t key) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::binary_search(classes[c].members.begin(), classes[c].members.end(), key)) return c;
  throw std::out_of_range("class_of: key not in classification");
}

Classification classify_dimension(int n, const ClassifyOptions& options) {
  if (n < 1 || n > std::min(options.max_dim, kMaxDim))
    throw std::invalid_argument("classify_dimension: n must be in [1, " + std::to_string(std::min(options.max_dim, kMaxDim)) +
                                "], got " + std::to_string(n));
  int threads = options.threads;
  if (threads == 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  const auto enumeration = enumerate_all(n);
  const std::size_t total = enumeration.size();

  std::vector<MatrixInfo> info(total);
  parallel_for(total, threads, [&](std::size_t key) {
    const auto a = BottMatrix::from_key(n, key);
    info[key] = {type_signature(a), is_orientable(a), normal_form(a).matrix.key()};
  });

  UnionFind uf(total);
  std::vector<std::uint64_t> normal_keys;
  for (std::size_t key = 0; key < total; ++key) {
    uf.unite(key, info[key].normal_key);
    if (info[key].normal_key == key) normal_keys.push_back(key);
  }

  // Permutation orbits among normal forms.
  std::vector<std::vector<BottMatrix>> orbit_of(normal_keys.size());
  parallel_for(normal_keys.size(), threads,
               [&](std::size_t idx) { orbit_of[idx] = permutation_orbit(BottMatrix::from_key(n, normal_keys[idx])); });
  std::map<std::uint64_t, std::vector<BottMatrix>> orbits;  // smallest key -> orbit
  for (auto& orbit : orbit_of) {
    for (const auto& m : orbit) uf.unite(orbit.front().key(), m.key());
    orbits.emplace(orbit.front().key(), std::move(orbit));
  }

  // Ring-isomorphism merges between orbit representatives sharing the cheap invariants.
  std::map<std::pair<TypeSignature, bool>, std::vector<std::uint64_t>> buckets;
  for (const auto& [rep, orbit] : orbits) buckets[{info[rep].type, info[rep].orientable}].push_back(rep);

  Classification result;
  result.dim = n;
  result.total_matrices = total;
  for (const auto& [invariants, reps] : buckets) {
    std::vector<std::uint64_t> leaders;
    for (auto rep : reps) {
      const auto b = BottMatrix::from_key(n, rep);
      bool merged = false;
      for (auto leader : leaders) {
        if (uf.find(leader) == uf.find(rep)) {
          merged = true;
          break;
        }
        const auto a = BottMatrix::from_key(n, leader);
        ++result.isomorphism_searches;
        const bool iso = options.oracle == MergeOracle::kBlockSearch ? find_isomorphism(a, b).has_value()
                                                                     : exhaustive_isomorphism(a, b).has_value();
        if (iso) {
          uf.unite(leader, rep);
          merged = true;
          break;
        }
      }
      if (!merged) leaders.push_back(rep);
    }
  }

  std::map<std::size_t, DiffeomorphismClass> by_root;
  for (std::size_t key = 0; key < total; ++key) {
    auto& cls = by_root[uf.find(key)];
    if (cls.members.empty()) {
      cls.representative = BottMatrix::from_key(n, key);  // keys visited in ascending order
      cls.type = info[key].type;
      cls.orientable = info[key].orientable;
    }
    cls.members.push_back(key);
  }
  for (auto& [rep, orbit] : orbits) by_root[uf.find(rep)].normal_form_orbits.push_back(std::move(orbit));

  for (auto& [root, cls] : by_root) {
    cls.member_count = cls.members.size();
    std::sort(cls.normal_form_orbits.begin(), cls.normal_form_orbits.end(), [](const auto& x, const auto& y) {
      if (x.size() != y.size()) return x.size() > y.size();
      return x.front().key() < y.front().key();
    });
    result.classes.push_back(std::move(cls));
  }
  std::sort(result.classes.begin(), result.classes.end(), [](const auto& x, const auto& y) {
    if (x.type != y.type) return x.type > y.type;
    return x.representative.key() < y.representative.key();
  });
  return result;
}

}  // namespace realbott
