#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pmf/bipartite.hpp"

namespace pmf {

// Signs ordered +,- > 0: s <= t iff s is zero or s equals t.
enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

inline Sign operator*(Sign a, Sign b) {
  return Sign(static_cast<int>(a) * static_cast<int>(b));
}
inline Sign operator-(Sign a) { return Sign(-static_cast<int>(a)); }
inline bool sign_leq(Sign a, Sign b) { return a == Sign::zero || a == b; }

Sign sign_of(long long v);
char sign_char(Sign s);        // '+', '-', '0'
Sign sign_from_char(char c);   // throws InputError

// Sign vector over a fixed index set; the index set size is set at
// construction and all binary operations require matching sizes.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<Sign> v) : v_(std::move(v)) {}
  SignVector(std::initializer_list<int> v);
  static SignVector zero(int m) { return SignVector(std::vector<Sign>(m, Sign::zero)); }

  int size() const { return static_cast<int>(v_.size()); }
  Sign operator[](int e) const { return v_[e]; }
  Sign& operator[](int e) { return v_[e]; }
  int support_size() const;
  std::uint32_t support_mask() const;  // requires size() <= 32
  bool is_zero() const { return support_size() == 0; }
  std::string str() const;  // e.g. "+-0+"

  SignVector concat(const SignVector& tail) const;
  SignVector slice(int begin, int end) const;

  friend SignVector operator-(const SignVector& x);
  friend bool operator==(const SignVector&, const SignVector&) = default;
  auto operator<=>(const SignVector&) const = default;

 private:
  std::vector<Sign> v_;
};

SignVector sv_from_string(const std::string& s);  // over {+,-,0}

// (X o Y)_e = X_e if X_e != 0 else Y_e.
SignVector compose(const SignVector& x, const SignVector& y);

// (S n T)^+ = S^+ n T^+ and (S n T)^- = S^- n T^-, zero elsewhere.
SignVector intersect(const SignVector& s, const SignVector& t);

// Componentwise zero-extension order.
bool sv_leq(const SignVector& x, const SignVector& y);

class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), v_(rows * cols, Sign::zero) {}
  // Rows of {-1,0,1} entries, e.g. {{-1,1,-1},{1,1,-1},{-1,-1,-1}}.
  explicit SignMatrix(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Sign at(int i, int j) const { return v_[i * cols_ + j]; }
  Sign& at(int i, int j) { return v_[i * cols_ + j]; }
  bool has_zero_entry() const;
  SignVector column(int j) const;
  SignVector row(int i) const;
  // Column-major flattening: entry (i,j) lands at position j*rows + i.
  SignVector flatten_col_major() const;
  std::string str() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Sign> v_;
};

// (SA_F)_{i,j} = S_i * A_{i,j} for (i,j) in F, zero otherwise.
SignMatrix sa_matrix(const SignVector& s, const ColGraph& f, const SignMatrix& a);

// Partition of {0,..,universe-1} into disjoint nonempty blocks.
class Partition {
 public:
  Partition(int universe, std::vector<std::vector<int>> blocks);
  static Partition singletons(int universe);
  // Column blocks of an R x E matrix flattened column-major.
  static Partition matrix_columns(int rows, int cols);

  int universe() const { return universe_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int index) const { return block_of_[index]; }

  // Merges the blocks containing the two indices (no-op if already equal);
  // returns the coarsened partition with blocks re-sorted canonically.
  Partition merge(int index_a, int index_b) const;

  // True if every block of *this lies inside one block of coarser.
  bool refines(const Partition& coarser) const;

 private:
  int universe_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

enum class GenSign : std::uint8_t { zero = 0, plus = 1, minus = 2, both = 3 };

// Sign vector over the blocks of a partition, with entries in {0,+,-,±}.
struct GeneralizedSignVector {
  std::vector<GenSign> blocks;

  // Number of nonzero coordinates with each ± counted twice.
  int weight() const;
  std::string str() const;  // '0', '+', '-', '#' for ±

  friend bool operator==(const GeneralizedSignVector&,
                         const GeneralizedSignVector&) = default;
  auto operator<=>(const GeneralizedSignVector&) const = default;
};

GeneralizedSignVector classify(const SignVector& x, const Partition& p);
GeneralizedSignVector classify(const SignMatrix& x, const Partition& p);
bool equiv(const SignVector& x, const SignVector& y, const Partition& p);
bool equiv(const SignMatrix& x, const SignMatrix& y, const Partition& p);

}  // namespace pmf
