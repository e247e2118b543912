#ifndef CELLALG_POSET_HPP
#define CELLALG_POSET_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cellalg {

/// Finite poset given by elements and (normalized, irredundant) cover
/// relations. Immutable after construction; the transitive closure is
/// materialized once and all interval queries read it.
class Poset {
 public:
  /// covers are (lower, upper) pairs over element ids. Redundant covers
  /// (implied by transitivity) are dropped with a warning flag; cycles throw.
  Poset(std::vector<std::string> elements,
        std::vector<std::pair<std::string, std::string>> covers);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(int i) const { return ids_[i]; }
  int index(const std::string& id) const;           // throws if unknown
  std::optional<int> find(const std::string& id) const;

  bool leq(int a, int b) const { return leq_[a][b]; }
  bool less(int a, int b) const { return a != b && leq_[a][b]; }
  const std::vector<int>& covers_up(int a) const { return up_[a]; }
  const std::vector<int>& covers_down(int a) const { return down_[a]; }
  std::vector<std::pair<int, int>> cover_pairs() const;  // (lower, upper)

  std::vector<int> up_set(int a) const;    // { b : b >= a }
  std::vector<int> down_set(int a) const;  // { b : b <= a }
  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;
  std::vector<int> linear_extension() const;  // minimal-first, deterministic

  bool redundant_covers_dropped() const { return dropped_redundant_; }

  /// Mobius function of the interval [x, y]; throws on incomparable pairs.
  /// Values are memoized per lower element.
  long long mobius(int x, int y) const;

  /// New poset with a fresh maximum "@top" covering all maximal elements
  /// (added even if the poset already has a greatest element).
  Poset adjoin_top() const;

  /// True iff every pair with a common upper bound has a least upper bound.
  /// On failure the witness is a violating pair.
  std::pair<bool, std::optional<std::pair<int, int>>> is_meet_semilattice() const;

  /// Least upper bound, if the pair has any upper bound. Throws
  /// std::logic_error naming two minimal upper bounds when no least one exists.
  std::optional<int> join(int a, int b) const;

  /// Same elements, reversed order.
  Poset opposite() const;

  /// All nonempty chains, each sorted increasingly.
  std::vector<std::vector<int>> chains() const;

 private:
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> up_, down_;   // cover adjacency
  std::vector<std::vector<bool>> leq_;
  bool dropped_redundant_ = false;
  mutable std::map<std::pair<int, int>, long long> mobius_cache_;
};

}  // namespace cellalg

#endif
