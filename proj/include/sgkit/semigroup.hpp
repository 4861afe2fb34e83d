#ifndef SGKIT_SEMIGROUP_HPP
#define SGKIT_SEMIGROUP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgkit/errors.hpp"

namespace sgkit {

/// A finite semigroup given by its full multiplication table.  Elements are
/// dense indices 0..n-1; labels are cosmetic metadata.  Instances are
/// immutable after construction and every table is associativity-checked,
/// so a FiniteSemigroup value is always a semigroup.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;

  /// Validates entry ranges and associativity (exhaustive O(n^3) loop).
  /// Throws OutOfRangeEntry or NotAssociative (with the witnessing triple).
  static FiniteSemigroup parse_and_validate(int order, std::vector<int> flat_table,
                                            std::vector<std::string> labels = {});
  static FiniteSemigroup parse_and_validate(const std::vector<std::vector<int>>& rows,
                                            std::vector<std::string> labels = {});

  int order() const { return order_; }
  int product(int x, int y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }
  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(int x) const;

  bool operator==(const FiniteSemigroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  int order_ = 0;
  std::vector<int> table_;
  std::vector<std::string> labels_;
};

/// Least index and period of the orbit x, x^2, x^3, ...
struct MonogenicProfile {
  int element;
  int index;        // least i with x^i == x^{i+p}
  int period;       // least such p
  int omega_power;  // the unique idempotent in the orbit cycle
};

struct IndexPeriod {
  int index;
  int period;
};

int product(const FiniteSemigroup& s, int x, int y);

/// x^k for k >= 1, by repeated squaring.
int power(const FiniteSemigroup& s, int x, long long k);

MonogenicProfile monogenic_profile(const FiniteSemigroup& s, int x);

/// x^{omega+i} for any integer i: omega_power(x) * x^{i'} with i' > 0,
/// i' congruent to i modulo the period of x.
int omega_plus(const FiniteSemigroup& s, int x, long long i);

/// index = max of element indices, period = lcm of element periods; the
/// least (i, p) with x^i == x^{i+p} holding identically.
IndexPeriod semigroup_index_period(const FiniteSemigroup& s);

std::vector<int> idempotents(const FiniteSemigroup& s);

std::optional<int> zero_element(const FiniteSemigroup& s);

/// Least product-closed superset of the generators, sorted ascending.
std::vector<int> generate_subsemigroup(const FiniteSemigroup& s, const std::vector<int>& generators);

FiniteSemigroup direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t);

/// Sorted element indices closed under left and right multiplication.
using IdealSet = std::vector<int>;

bool is_ideal(const FiniteSemigroup& s, const IdealSet& members);

struct ReesQuotientResult {
  FiniteSemigroup quotient;       // ideal collapsed to a zero, placed last
  std::vector<int> renumbering;   // old element -> new element
};

/// Collapses a (verified) nonempty ideal to a single zero element.  Survivors
/// keep their relative order; the zero gets the last index.
ReesQuotientResult rees_quotient(const FiniteSemigroup& s, const IdealSet& ideal);

/// The set of values of all products of exactly k elements.
std::vector<int> length_k_products(const FiniteSemigroup& s, int k);

/// Least m with all length-m products equal to a zero, or nullopt.
std::optional<int> nilpotency_degree(const FiniteSemigroup& s);

/// True iff s has a zero, all length-k products are that zero, and some
/// product of length k-1 is not.
bool is_proper_k_nilpotent(const FiniteSemigroup& s, int k);

/// Reindexes a product-closed element set as a standalone semigroup.
/// Elements are taken in ascending order; labels carry over from the host.
FiniteSemigroup subsemigroup(const FiniteSemigroup& s, const std::vector<int>& elements);

/// Injective multiplication-preserving map from pattern into host, or absent.
/// Backtracking over element assignments with monogenic-profile pruning;
/// candidates are tried in ascending index order and the first embedding in
/// that order is returned.
std::optional<std::vector<int>> find_embedding(const FiniteSemigroup& pattern,
                                               const FiniteSemigroup& host);

bool is_isomorphic(const FiniteSemigroup& s, const FiniteSemigroup& t);

/// Text table format: line 1 is n; lines 2..n+1 hold n space-separated
/// entries in 0..n-1 (row x gives x*0 .. x*(n-1)); optional final line holds
/// n labels.  Trailing garbage is rejected.
FiniteSemigroup read_table(std::istream& in);
FiniteSemigroup read_table_file(const std::string& path);
std::string write_table(const FiniteSemigroup& s);

}  // namespace sgkit

#endif  // SGKIT_SEMIGROUP_HPP
