#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace polytree {

/// (lower, upper): element `lower` is covered by element `upper`.
using Cover = std::pair<int, int>;
using Bitset = boost::dynamic_bitset<>;

/// A finite poset stored as its Hasse diagram over opaque string keys.
///
/// Instances are immutable once built. Every constructor checks that keys are
/// distinct and that the cover digraph is acyclic; the checked constructor
/// also rejects redundant covers.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Throws std::invalid_argument on duplicate keys, out-of-range indices,
  /// cycles, or covers implied by longer chains.
  FinitePoset(std::vector<std::string> keys, std::vector<Cover> covers);

  /// Skips the redundancy check (callers guarantee the covers are irredundant).
  static FinitePoset from_trusted_covers(std::vector<std::string> keys, std::vector<Cover> covers);

  std::size_t size() const noexcept { return keys_.size(); }
  bool empty() const noexcept { return keys_.empty(); }

  const std::string& key(int i) const { return keys_.at(i); }
  const std::vector<std::string>& keys() const noexcept { return keys_; }
  std::optional<int> find(std::string_view key) const;
  /// Throws std::out_of_range for an unknown key.
  int index_of(std::string_view key) const;

  /// Sorted cover pairs.
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  std::span<const int> upper_covers(int i) const;
  std::span<const int> lower_covers(int i) const;
  bool covers_pair(int lower, int upper) const;

  bool leq(int a, int b) const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  /// Elements ordered so that every cover goes forward.
  const std::vector<int>& linear_extension() const noexcept { return order_; }
  /// Length of the longest chain from a minimal element up to i (minimal = 0).
  std::vector<int> heights() const;
  /// Length of the longest chain from i up to a maximal element.
  std::vector<int> depths() const;
  /// up[i] holds every j with i < j.
  std::vector<Bitset> strict_up_sets() const;

 private:
  void index_and_check(bool check_redundancy);

  std::vector<std::string> keys_;
  std::vector<Cover> covers_;
  std::vector<int> up_offsets_, up_;
  std::vector<int> down_offsets_, down_;
  std::vector<int> order_;
  std::map<std::string, int, std::less<>> index_;
};

/// Builds a poset from an order predicate by transitive reduction.
/// leq(i, j) is queried for every ordered pair. Throws std::invalid_argument
/// when the predicate has a 2-cycle or is not transitive.
FinitePoset from_leq(std::vector<std::string> keys, const std::function<bool(int, int)>& leq);

FinitePoset lower_set(const FinitePoset& p, int x);
FinitePoset upper_set(const FinitePoset& p, int x);
/// Throws std::invalid_argument unless a <= b.
FinitePoset interval(const FinitePoset& p, int a, int b);
FinitePoset lower_set(const FinitePoset& p, std::string_view x);
FinitePoset upper_set(const FinitePoset& p, std::string_view x);
FinitePoset interval(const FinitePoset& p, std::string_view a, std::string_view b);

/// Induced order on an arbitrary subset (indices into p, any order).
FinitePoset induced_subposet(const FinitePoset& p, std::span<const int> members);

/// Subsets of {1..k} under inclusion, keyed "{}", "{1}", "{1,2}", ...
FinitePoset boolean_lattice(int k);
/// boolean_lattice(k) without the empty set; k >= 1.
FinitePoset boolean_star(int k);
FinitePoset chain(int length);
FinitePoset antichain(int size);

/// Componentwise order; keys "(a,b)".
FinitePoset product(const FinitePoset& p, const FinitePoset& q);
/// Product of a list; the empty product is a single point keyed "()".
FinitePoset product(std::span<const FinitePoset> factors);
FinitePoset dual(const FinitePoset& p);

/// Number of elements at each height.
std::vector<std::size_t> height_profile(const FinitePoset& p);

}  // namespace polytree
