#include "realbott/bott_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "realbott/error.hpp"

namespace realbott {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Permutation: not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<int> image(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) image[static_cast<std::size_t>(i)] = a(b(i));
  return Permutation(std::move(image));
}

// -------------------------------------------------------------- TypeSignature

int TypeSignature::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string TypeSignature::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(parts[k]);
  }
  return s + ")";
}

// ----------------------------------------------------------------- BottMatrix

namespace {

void check_dim(int n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("Bott matrix dimension must be in [1, 8], got " + std::to_string(n));
}

}  // namespace

BottMatrix::BottMatrix(int n) : n_(n) { check_dim(n); }

BottMatrix BottMatrix::from_rows(const std::vector<std::string>& rows) {
  std::ostringstream text;
  text << rows.size() << '\n';
  for (const auto& r : rows) text << r << '\n';
  return parse_matrix(text.str());
}

BottMatrix BottMatrix::from_key(int n, std::uint64_t key) {
  BottMatrix a(n);
  const int bits = a.key_bits();
  if (bits < 64 && (key >> bits) != 0) throw std::invalid_argument("Bott matrix key has too many bits");
  int p = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++p) {
      if ((key >> (bits - 1 - p)) & 1u) a.rows_[i] = static_cast<std::uint8_t>(a.rows_[i] | (1u << j));
    }
  }
  return a;
}

BottMatrix BottMatrix::from_key_string(int n, std::string_view bits) {
  BottMatrix a(n);
  if (static_cast<int>(bits.size()) != a.key_bits())
    throw std::invalid_argument("key string must have n(n-1)/2 = " + std::to_string(a.key_bits()) + " bits");
  std::uint64_t key = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("key string must contain only 0 and 1");
    key = (key << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return from_key(n, key);
}

BottMatrix BottMatrix::with_entry(int i, int j, bool value) const {
  if (i < 0 || j >= n_ || i >= j) throw std::invalid_argument("Bott matrix entries exist only strictly above the diagonal");
  BottMatrix b = *this;
  if (value)
    b.rows_[i] = static_cast<std::uint8_t>(b.rows_[i] | (1u << j));
  else
    b.rows_[i] = static_cast<std::uint8_t>(b.rows_[i] & ~(1u << j));
  return b;
}

std::uint8_t BottMatrix::column_mask(int j) const noexcept {
  std::uint8_t mask = 0;
  for (int i = 0; i < j; ++i)
    if (entry(i, j)) mask = static_cast<std::uint8_t>(mask | (1u << i));
  return mask;
}

std::uint64_t BottMatrix::key() const noexcept {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) k = (k << 1) | (entry(i, j) ? 1u : 0u);
  return k;
}

std::string BottMatrix::key_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) s.push_back(entry(i, j) ? '1' : '0');
  return s;
}

std::optional<BottMatrix> BottMatrix::conjugate(const Permutation& sigma) const {
  if (sigma.size() != n_) throw std::invalid_argument("conjugate: permutation size mismatch");
  BottMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!entry(i, j)) continue;
      const int si = sigma(i), sj = sigma(j);
      if (si >= sj) return std::nullopt;
      out.rows_[si] = static_cast<std::uint8_t>(out.rows_[si] | (1u << sj));
    }
  }
  return out;
}

bool BottMatrix::is_zero() const noexcept {
  for (int i = 0; i < n_; ++i)
    if (rows_[i]) return false;
  return true;
}

bool key_less(const BottMatrix& a, const BottMatrix& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.key() < b.key();
}

// ---------------------------------------------------------------- file format

BottMatrix parse_matrix(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  // A single trailing newline leaves one empty final piece.
  if (lines.size() > 1 && lines.back().empty()) lines.pop_back();

  if (lines.empty() || lines[0].empty()) throw ParseError("dimension line is empty", 1, 0);
  int n = 0;
  const auto dim_line = lines[0];
  const auto [ptr, ec] = std::from_chars(dim_line.data(), dim_line.data() + dim_line.size(), n);
  if (ec != std::errc() || ptr != dim_line.data() + dim_line.size())
    throw ParseError("dimension line is not a decimal integer", 1, 0);
  if (n < 1 || n > kMaxDim) throw ParseError("dimension must be in [1, 8], got " + std::to_string(n), 1, 0);
  if (static_cast<int>(lines.size()) != n + 1)
    throw ParseError("expected " + std::to_string(n) + " matrix rows, got " + std::to_string(lines.size() - 1),
                     // first missing line, or first surplus line
                     static_cast<int>(lines.size()) < n + 1 ? static_cast<int>(lines.size()) + 1 : n + 2, 0);

  BottMatrix a(n);
  for (int i = 0; i < n; ++i) {
    const auto row = lines[static_cast<std::size_t>(i + 1)];
    if (static_cast<int>(row.size()) != n)
      throw ParseError("row " + std::to_string(i + 1) + " must have exactly " + std::to_string(n) + " characters", i + 2, 0);
    for (int j = 0; j < n; ++j) {
      const char c = row[static_cast<std::size_t>(j)];
      if (c != '0' && c != '1') throw ParseError("character must be 0 or 1", i + 2, j + 1);
      if (c == '1') {
        if (j <= i)
          throw ParseError("nonzero entry at row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1) +
                               " is on or below the diagonal",
                           i + 2, j + 1);
        a = a.with_entry(i, j, true);
      }
    }
  }
  return a;
}

std::string format_matrix(const BottMatrix& a) {
  std::string s = std::to_string(a.dim()) + "\n";
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) s.push_back(a.entry(i, j) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

BottMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

// ------------------------------------------------------------------ invariants

bool is_orientable(const BottMatrix& a) {
  for (int i = 0; i < a.dim(); ++i)
    if (__builtin_parity(a.row_mask(i))) return false;
  return true;
}

std::vector<std::uint8_t> type_stages(const BottMatrix& a) {
  std::vector<std::uint8_t> stages;
  auto survivors = static_cast<std::uint8_t>((1u << a.dim()) - 1u);
  while (survivors) {
    std::uint8_t stage = 0;
    for (int j = 0; j < a.dim(); ++j) {
      if (((survivors >> j) & 1u) && (a.column_mask(j) & survivors) == 0) stage = static_cast<std::uint8_t>(stage | (1u << j));
    }
    // The lowest surviving index always has a zero restricted column.
    stages.push_back(stage);
    survivors = static_cast<std::uint8_t>(survivors & ~stage);
  }
  return stages;
}

TypeSignature type_signature(const BottMatrix& a) {
  TypeSignature t;
  for (auto stage : type_stages(a)) t.parts.push_back(__builtin_popcount(stage));
  return t;
}

std::vector<int> block_of(const TypeSignature& type) {
  std::vector<int> block;
  for (std::size_t k = 0; k < type.parts.size(); ++k)
    for (int c = 0; c < type.parts[k]; ++c) block.push_back(static_cast<int>(k));
  return block;
}

bool has_zero_diagonal_blocks(const BottMatrix& a, const TypeSignature& type) {
  if (type.total() != a.dim()) return false;
  const auto block = block_of(type);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      if (a.entry(i, j) && block[static_cast<std::size_t>(i)] == block[static_cast<std::size_t>(j)]) return false;
  return true;
}

bool is_normal_form(const BottMatrix& a) { return has_zero_diagonal_blocks(a, type_signature(a)); }

NormalForm normal_form(const BottMatrix& a) {
  std::vector<int> image(static_cast<std::size_t>(a.dim()));
  int next = 0;
  for (auto stage : type_stages(a))
    for (int j = 0; j < a.dim(); ++j)
      if ((stage >> j) & 1u) image[static_cast<std::size_t>(j)] = next++;
  Permutation sigma(std::move(image));
  auto conj = a.conjugate(sigma);
  // Stage-k generators only see earlier stages in their columns, so the
  // stable ordering preserves strict upper triangularity.
  if (!conj) throw std::logic_error("normal_form: stable permutation left the upper-triangular class");
  return {*conj, sigma};
}

std::vector<Permutation> within_block_permutations(const TypeSignature& type) {
  std::vector<std::vector<int>> images{{}};
  int offset = 0;
  for (int size : type.parts) {
    std::vector<int> block(static_cast<std::size_t>(size));
    std::iota(block.begin(), block.end(), offset);
    std::vector<std::vector<int>> grown;
    auto local = block;
    do {
      for (const auto& prefix : images) {
        auto img = prefix;
        img.insert(img.end(), local.begin(), local.end());
        grown.push_back(std::move(img));
      }
    } while (std::next_permutation(local.begin(), local.end()));
    images = std::move(grown);
    offset += size;
  }
  // next_permutation starts from the sorted block, so the identity comes first.
  std::vector<Permutation> out;
  out.reserve(images.size());
  for (auto& img : images) out.emplace_back(std::move(img));
  return out;
}

std::vector<BottMatrix> permutation_orbit(const BottMatrix& a) {
  const auto type = type_signature(a);
  std::vector<int> image(static_cast<std::size_t>(a.dim()));
  std::iota(image.begin(), image.end(), 0);
  std::set<std::uint64_t> keys;
  do {
    auto conj = a.conjugate(Permutation(image));
    if (conj && has_zero_diagonal_blocks(*conj, type)) keys.insert(conj->key());
  } while (std::next_permutation(image.begin(), image.end()));
  std::vector<BottMatrix> orbit;
  orbit.reserve(keys.size());
  for (auto k : keys) orbit.push_back(BottMatrix::from_key(a.dim(), k));
  return orbit;
}

// ----------------------------------------------------------------- enumeration

MatrixEnumeration::MatrixEnumeration(int n, int shard, int shards) : n_(n) {
  check_dim(n);
  if (shards < 1 || shard < 0 || shard >= shards) throw std::invalid_argument("invalid enumeration shard");
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  first_ = total * static_cast<std::uint64_t>(shard) / static_cast<std::uint64_t>(shards);
  last_ = total * static_cast<std::uint64_t>(shard + 1) / static_cast<std::uint64_t>(shards);
}

MatrixEnumeration enumerate_all(int n) { return MatrixEnumeration(n); }

}  // namespace realbott
