#include "pmf/sign.hpp"

#include <algorithm>

#include "pmf/error.hpp"

namespace pmf {

Sign sign_of(long long v) {
  if (v > 0) return Sign::plus;
  if (v < 0) return Sign::minus;
  return Sign::zero;
}

char sign_char(Sign s) {
  switch (s) {
    case Sign::plus: return '+';
    case Sign::minus: return '-';
    default: return '0';
  }
}

Sign sign_from_char(char c) {
  switch (c) {
    case '+': return Sign::plus;
    case '-': return Sign::minus;
    case '0': return Sign::zero;
    default: throw InputError(std::string("bad sign character '") + c + "'");
  }
}

SignVector::SignVector(std::initializer_list<int> v) {
  v_.reserve(v.size());
  for (int x : v) {
    if (x < -1 || x > 1) throw InputError("sign entries must be -1, 0 or 1");
    v_.push_back(Sign(static_cast<std::int8_t>(x)));
  }
}

int SignVector::support_size() const {
  int c = 0;
  for (Sign s : v_) c += (s != Sign::zero);
  return c;
}

std::uint32_t SignVector::support_mask() const {
  if (size() > 32) throw DimensionError("support_mask limited to 32 entries");
  std::uint32_t m = 0;
  for (int i = 0; i < size(); ++i)
    if (v_[i] != Sign::zero) m |= (1u << i);
  return m;
}

std::string SignVector::str() const {
  std::string s;
  s.reserve(v_.size());
  for (Sign x : v_) s += sign_char(x);
  return s;
}

SignVector SignVector::concat(const SignVector& tail) const {
  std::vector<Sign> v = v_;
  v.insert(v.end(), tail.v_.begin(), tail.v_.end());
  return SignVector(std::move(v));
}

SignVector SignVector::slice(int begin, int end) const {
  if (begin < 0 || end > size() || begin > end) throw DimensionError("bad slice");
  return SignVector(std::vector<Sign>(v_.begin() + begin, v_.begin() + end));
}

SignVector operator-(const SignVector& x) {
  SignVector y = x;
  for (int i = 0; i < y.size(); ++i) y[i] = -y[i];
  return y;
}

SignVector sv_from_string(const std::string& s) {
  std::vector<Sign> v;
  v.reserve(s.size());
  for (char c : s) v.push_back(sign_from_char(c));
  return SignVector(std::move(v));
}

static void require_same_size(const SignVector& x, const SignVector& y,
                              const char* op) {
  if (x.size() != y.size())
    throw DimensionError(std::string(op) + ": index sets differ (" +
                         std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()) + ")");
}

SignVector compose(const SignVector& x, const SignVector& y) {
  require_same_size(x, y, "compose");
  SignVector z = x;
  for (int e = 0; e < z.size(); ++e)
    if (z[e] == Sign::zero) z[e] = y[e];
  return z;
}

SignVector intersect(const SignVector& s, const SignVector& t) {
  require_same_size(s, t, "intersect");
  SignVector z = SignVector::zero(s.size());
  for (int e = 0; e < s.size(); ++e)
    if (s[e] != Sign::zero && s[e] == t[e]) z[e] = s[e];
  return z;
}

bool sv_leq(const SignVector& x, const SignVector& y) {
  require_same_size(x, y, "sv_leq");
  for (int e = 0; e < x.size(); ++e)
    if (!sign_leq(x[e], y[e])) return false;
  return true;
}

SignMatrix::SignMatrix(const std::vector<std::vector<int>>& rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows[0].size()) : 0;
  v_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw DimensionError("ragged sign matrix");
    for (int x : r) {
      if (x < -1 || x > 1) throw InputError("sign entries must be -1, 0 or 1");
      v_.push_back(Sign(static_cast<std::int8_t>(x)));
    }
  }
}

bool SignMatrix::has_zero_entry() const {
  return std::find(v_.begin(), v_.end(), Sign::zero) != v_.end();
}

SignVector SignMatrix::column(int j) const {
  std::vector<Sign> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return SignVector(std::move(v));
}

SignVector SignMatrix::row(int i) const {
  std::vector<Sign> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return SignVector(std::move(v));
}

SignVector SignMatrix::flatten_col_major() const {
  std::vector<Sign> v;
  v.reserve(rows_ * cols_);
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return SignVector(std::move(v));
}

std::string SignMatrix::str() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    if (i) s += "|";
    for (int j = 0; j < cols_; ++j) s += sign_char(at(i, j));
  }
  return s;
}

SignMatrix sa_matrix(const SignVector& s, const ColGraph& f, const SignMatrix& a) {
  if (s.size() != a.rows() || f.d != a.rows() || f.n() != a.cols())
    throw DimensionError("sa_matrix: S, F, A dimensions disagree");
  SignMatrix out(a.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      if (f.has_edge(i, j)) out.at(i, j) = s[i] * a.at(i, j);
  return out;
}

Partition::Partition(int universe, std::vector<std::vector<int>> blocks)
    : universe_(universe), blocks_(std::move(blocks)), block_of_(universe, -1) {
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
    auto& blk = blocks_[b];
    if (blk.empty()) throw InputError("partition has an empty block");
    std::sort(blk.begin(), blk.end());
    for (int x : blk) {
      if (x < 0 || x >= universe_) throw InputError("partition index out of range");
      if (block_of_[x] != -1) throw InputError("partition blocks overlap");
      block_of_[x] = b;
    }
  }
  for (int x = 0; x < universe_; ++x)
    if (block_of_[x] == -1) throw InputError("partition does not cover the index set");
  std::sort(blocks_.begin(), blocks_.end());
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b)
    for (int x : blocks_[b]) block_of_[x] = b;
}

Partition Partition::singletons(int universe) {
  std::vector<std::vector<int>> blocks(universe);
  for (int i = 0; i < universe; ++i) blocks[i] = {i};
  return Partition(universe, std::move(blocks));
}

Partition Partition::matrix_columns(int rows, int cols) {
  std::vector<std::vector<int>> blocks(cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) blocks[j].push_back(j * rows + i);
  return Partition(rows * cols, std::move(blocks));
}

Partition Partition::merge(int index_a, int index_b) const {
  int ba = block_of(index_a), bb = block_of(index_b);
  if (ba == bb) return *this;
  std::vector<std::vector<int>> blocks;
  blocks.reserve(blocks_.size() - 1);
  std::vector<int> merged = blocks_[ba];
  merged.insert(merged.end(), blocks_[bb].begin(), blocks_[bb].end());
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b)
    if (b != ba && b != bb) blocks.push_back(blocks_[b]);
  blocks.push_back(std::move(merged));
  return Partition(universe_, std::move(blocks));
}

bool Partition::refines(const Partition& coarser) const {
  if (universe_ != coarser.universe()) return false;
  for (const auto& blk : blocks_) {
    int target = coarser.block_of(blk[0]);
    for (int x : blk)
      if (coarser.block_of(x) != target) return false;
  }
  return true;
}

int GeneralizedSignVector::weight() const {
  int w = 0;
  for (GenSign g : blocks) {
    if (g == GenSign::plus || g == GenSign::minus) w += 1;
    if (g == GenSign::both) w += 2;
  }
  return w;
}

std::string GeneralizedSignVector::str() const {
  std::string s;
  for (GenSign g : blocks) {
    switch (g) {
      case GenSign::zero: s += '0'; break;
      case GenSign::plus: s += '+'; break;
      case GenSign::minus: s += '-'; break;
      case GenSign::both: s += '#'; break;
    }
  }
  return s;
}

GeneralizedSignVector classify(const SignVector& x, const Partition& p) {
  if (x.size() != p.universe())
    throw InputError("classify: partition does not match the index set");
  GeneralizedSignVector out;
  out.blocks.reserve(p.block_count());
  for (const auto& blk : p.blocks()) {
    bool pos = false, neg = false;
    for (int e : blk) {
      pos |= (x[e] == Sign::plus);
      neg |= (x[e] == Sign::minus);
    }
    out.blocks.push_back(pos && neg   ? GenSign::both
                         : pos        ? GenSign::plus
                         : neg        ? GenSign::minus
                                      : GenSign::zero);
  }
  return out;
}

GeneralizedSignVector classify(const SignMatrix& x, const Partition& p) {
  return classify(x.flatten_col_major(), p);
}

bool equiv(const SignVector& x, const SignVector& y, const Partition& p) {
  if (x.size() != y.size())
    throw DimensionError("equiv: index sets differ");
  return classify(x, p) == classify(y, p);
}

bool equiv(const SignMatrix& x, const SignMatrix& y, const Partition& p) {
  return equiv(x.flatten_col_major(), y.flatten_col_major(), p);
}

}  // namespace pmf
