#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pmf {

// Fixed-width bitset over poset elements.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= (1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ull; }
  void or_with(const Bitset& o);
  bool intersects(const Bitset& o) const;
  bool contains(const Bitset& o) const;  // superset test
  bool any() const;
  int count() const;
  // Highest and lowest set bit positions, -1 if empty.
  int highest() const;
  int lowest() const;
  Bitset and_with(const Bitset& o) const;
  std::vector<int> bits() const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Equivalence classes over {0,..,n-1}; class ids are dense and ordered by
// first occurrence, so the numbering is deterministic.
struct EquivalenceClasses {
  std::vector<int> class_of;
  int count = 0;

  static EquivalenceClasses identity(int n);
  static EquivalenceClasses from_map(std::vector<int> raw_ids);
  int size() const { return static_cast<int>(class_of.size()); }
  std::vector<std::vector<int>> members() const;
};

template <typename Key>
EquivalenceClasses classes_by_key(const std::vector<Key>& keys) {
  std::map<Key, int> ids;
  std::vector<int> raw(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, inserted] = ids.emplace(keys[i], static_cast<int>(ids.size()));
    raw[i] = it->second;
  }
  return EquivalenceClasses::from_map(std::move(raw));
}

struct HomogeneityReport {
  bool ok = true;
  // On failure: tau <= sigma in P, but u in [tau] has no upper in [sigma].
  int tau = -1, sigma = -1, u = -1;
  std::string message;
};

struct ElementaryReport {
  bool ok = true;
  int bad_class = -1;
  std::string message;
};

struct GradeResult {
  bool ok = false;
  std::vector<int> rank;  // anchored so minimal elements sit at rank 1
  std::pair<int, int> witness{-1, -1};
  std::string message;
};

struct LatticeReport {
  bool ok = true;
  int x = -1, y = -1;
  std::string message;  // names the pair lacking a meet or join
};

// Finite poset stored by its cover relation. Immutable after construction;
// reachability is computed on first use and memoized (thread-safe).
class Poset {
 public:
  Poset() = default;
  // covers are (lower, upper) pairs; construction validates acyclicity.
  Poset(int n, std::vector<std::pair<int, int>> covers);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<std::vector<int>>& upper_covers() const { return up_adj_; }
  const std::vector<std::vector<int>>& lower_covers() const { return down_adj_; }

  bool leq(int a, int b) const;  // reflexive order
  // Reachability bitsets are indexed by *topo position*, not element id:
  // bit k refers to the element topo_order()[k].
  const Bitset& down_set(int x) const;  // {y : y <= x}
  const Bitset& up_set(int x) const;    // {y : y >= x}
  const std::vector<int>& topo_order() const { return topo_; }
  int topo_pos(int x) const { return pos_[x]; }
  std::vector<int> minimals() const;
  std::vector<int> maximals() const;
  bool is_cover(int a, int b) const;

  std::string to_dot(const std::vector<std::string>& labels = {}) const;

 private:
  struct Memo;
  void ensure_memo() const;

  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_adj_, down_adj_;
  std::vector<int> topo_, pos_;
  std::shared_ptr<Memo> memo_;
};

HomogeneityReport is_homogeneous(const Poset& p, const EquivalenceClasses& cls);

// Quotient poset; throws ContractError unless the relation is homogeneous.
Poset quotient(const Poset& p, const EquivalenceClasses& cls);
// Same, for callers that already hold a homogeneity certificate.
Poset quotient_unchecked(const Poset& p, const EquivalenceClasses& cls);

ElementaryReport is_elementary(const Poset& p, const EquivalenceClasses& cls);

GradeResult grade(const Poset& p);

// Lattice property of the augmented poset L(P) = P + {bottom, top}.
LatticeReport is_lattice_augmented(const Poset& p);
// Meet of x and y in L(P): an element id, or nullopt for the bottom.
std::optional<int> meet_in_augmented(const Poset& p, int x, int y);

struct SimplicialComplex {
  int vertices = 0;
  // faces_by_dim[k] lists the k-faces, each a sorted vertex tuple.
  std::vector<std::vector<std::vector<int>>> faces_by_dim;

  int dim() const { return static_cast<int>(faces_by_dim.size()) - 1; }
  std::vector<long long> f_vector() const;
  long long face_count() const;
};

inline constexpr long long kDefaultChainBudget = 2'000'000;
inline constexpr long long kDefaultHomologyBudget = 200'000;

// Order complex: faces are the nonempty chains of P.
SimplicialComplex order_complex(const Poset& p,
                                long long budget = kDefaultChainBudget);

long long euler_char(const SimplicialComplex& k);

// Euler characteristic of the order complex via chain counting, without
// materializing the faces.
long long euler_char_of_poset(const Poset& p);

// Betti numbers over the rationals, i.e. ranks of rational homology.
std::vector<long long> homology_ranks(const SimplicialComplex& k,
                                      long long budget = kDefaultHomologyBudget);

}  // namespace pmf
