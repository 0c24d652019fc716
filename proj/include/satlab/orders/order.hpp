#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "satlab/orders/ordinal.hpp"

namespace satlab::orders {

// Immutable, shared, value-compared box used to build the recursive
// descriptor and term trees.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}  // NOLINT

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_; }
  friend std::strong_ordering operator<=>(const Box& a, const Box& b) {
    if (a.ptr_ == b.ptr_) return std::strong_ordering::equal;
    return *a.ptr_ <=> *b.ptr_;
  }

 private:
  std::shared_ptr<const T> ptr_;
};

class OrderTerm;
class OrderDesc;

enum class Side : std::uint8_t { Left, Right };

struct IndexTerm {
  std::uint64_t index = 0;
  friend bool operator==(const IndexTerm&, const IndexTerm&) = default;
  friend std::strong_ordering operator<=>(const IndexTerm&, const IndexTerm&) = default;
};

struct SideTerm {
  Side side;
  Box<OrderTerm> inner;
  friend bool operator==(const SideTerm& a, const SideTerm& b);
  friend std::strong_ordering operator<=>(const SideTerm& a, const SideTerm& b);
};

struct PairTerm {
  Box<OrderTerm> outer;
  Box<OrderTerm> inner;
  friend bool operator==(const PairTerm& a, const PairTerm& b);
  friend std::strong_ordering operator<=>(const PairTerm& a, const PairTerm& b);
};

struct ReversedTerm {
  Box<OrderTerm> inner;
  friend bool operator==(const ReversedTerm& a, const ReversedTerm& b);
  friend std::strong_ordering operator<=>(const ReversedTerm& a, const ReversedTerm& b);
};

struct PowerEntry {
  Ordinal position;
  Box<OrderTerm> value;
  friend bool operator==(const PowerEntry& a, const PowerEntry& b);
  friend std::strong_ordering operator<=>(const PowerEntry& a, const PowerEntry& b);
};

// Element of a lexicographic power: the finite support, sorted by position,
// holding only values different from the power's default.
struct PowerTerm {
  std::vector<PowerEntry> support;
  friend bool operator==(const PowerTerm& a, const PowerTerm& b);
  friend std::strong_ordering operator<=>(const PowerTerm& a, const PowerTerm& b);
};

// Element of the finite-support ternary order: position -> -1 or +1, all
// other positions are 0.
struct TernaryTerm {
  std::map<std::uint64_t, int> support;
  friend bool operator==(const TernaryTerm&, const TernaryTerm&) = default;
  friend std::strong_ordering operator<=>(const TernaryTerm& a, const TernaryTerm& b);
};

class OrderTerm {
 public:
  using Node = std::variant<IndexTerm, SideTerm, PairTerm, ReversedTerm, PowerTerm, TernaryTerm>;

  OrderTerm(Node node) : node_(std::move(node)) {}  // NOLINT
  template <class T>
    requires(std::is_same_v<std::remove_cvref_t<T>, IndexTerm> || std::is_same_v<std::remove_cvref_t<T>, SideTerm> ||
             std::is_same_v<std::remove_cvref_t<T>, PairTerm> || std::is_same_v<std::remove_cvref_t<T>, ReversedTerm> ||
             std::is_same_v<std::remove_cvref_t<T>, PowerTerm> || std::is_same_v<std::remove_cvref_t<T>, TernaryTerm>)
  OrderTerm(T&& alternative) : node_(std::forward<T>(alternative)) {}  // NOLINT

  static OrderTerm index(std::uint64_t i) { return IndexTerm{i}; }
  static OrderTerm left(OrderTerm t) { return SideTerm{Side::Left, std::move(t)}; }
  static OrderTerm right(OrderTerm t) { return SideTerm{Side::Right, std::move(t)}; }
  static OrderTerm pair(OrderTerm outer, OrderTerm inner) {
    return PairTerm{std::move(outer), std::move(inner)};
  }
  static OrderTerm reversed(OrderTerm t) { return ReversedTerm{std::move(t)}; }
  // Entries are sorted by position; duplicate positions are rejected.
  static OrderTerm power(std::vector<PowerEntry> support);
  static OrderTerm ternary(std::map<std::uint64_t, int> support = {}) {
    return TernaryTerm{std::move(support)};
  }

  const Node& node() const { return node_; }
  template <class T>
  const T& as() const { return std::get<T>(node_); }
  template <class T>
  bool is() const { return std::holds_alternative<T>(node_); }

  friend bool operator==(const OrderTerm& a, const OrderTerm& b) { return a.node_ == b.node_; }
  // Structural order (for containers); not the order of any descriptor.
  friend std::strong_ordering operator<=>(const OrderTerm& a, const OrderTerm& b);

 private:
  Node node_;
};

struct FiniteOrder {
  std::uint64_t size = 1;
  friend bool operator==(const FiniteOrder&, const FiniteOrder&) = default;
};

struct ReverseOrder {
  Box<OrderDesc> inner;
  friend bool operator==(const ReverseOrder& a, const ReverseOrder& b);
};

// `left` entirely below `right`.
struct SumOrder {
  Box<OrderDesc> left;
  Box<OrderDesc> right;
  friend bool operator==(const SumOrder& a, const SumOrder& b);
};

// Lexicographic: compare the outer coordinate first.
struct ProductOrder {
  Box<OrderDesc> outer;
  Box<OrderDesc> inner;
  friend bool operator==(const ProductOrder& a, const ProductOrder& b);
};

// Functions exponent -> base that differ from `default_value` at finitely
// many positions, ordered at the least position where they differ.
struct LexPowerOrder {
  Box<OrderDesc> base;
  Ordinal exponent;
  Box<OrderTerm> default_value;
  friend bool operator==(const LexPowerOrder& a, const LexPowerOrder& b);
};

// Finite-support sequences omega -> {-1, 0, +1}, default 0, lexicographic.
struct TernaryOrder {
  friend bool operator==(const TernaryOrder&, const TernaryOrder&) = default;
};

class OrderDesc {
 public:
  using Node = std::variant<FiniteOrder, ReverseOrder, SumOrder, ProductOrder, LexPowerOrder, TernaryOrder>;

  // Validating constructors.
  static OrderDesc finite(std::uint64_t n);
  static OrderDesc reverse(OrderDesc inner);
  static OrderDesc sum(OrderDesc left, OrderDesc right);
  static OrderDesc product(OrderDesc outer, OrderDesc inner);
  static OrderDesc lexpow(OrderDesc base, Ordinal exponent, OrderTerm default_value);
  static OrderDesc ternary();

  const Node& node() const { return node_; }
  template <class T>
  const T& as() const { return std::get<T>(node_); }
  template <class T>
  bool is() const { return std::holds_alternative<T>(node_); }

  friend bool operator==(const OrderDesc& a, const OrderDesc& b) { return a.node_ == b.node_; }

 private:
  explicit OrderDesc(Node node) : node_(std::move(node)) {}
  Node node_;
};

// Throws InvalidTerm unless `t` is a canonical element of `desc`.
void validate(const OrderDesc& desc, const OrderTerm& t);
bool is_valid(const OrderDesc& desc, const OrderTerm& t);

// Total order of `desc`; both terms are validated first.
std::strong_ordering cmp(const OrderDesc& desc, const OrderTerm& x, const OrderTerm& y);
// Same comparison without validation, for terms already known to be valid.
std::strong_ordering cmp_unchecked(const OrderDesc& desc, const OrderTerm& x, const OrderTerm& y);

// Functor for std::sort and friends.
struct OrderLess {
  const OrderDesc* desc;
  bool operator()(const OrderTerm& x, const OrderTerm& y) const { return cmp_unchecked(*desc, x, y) < 0; }
};

// Number of elements, or nullopt when infinite or beyond 2^62.
std::optional<std::uint64_t> finite_size(const OrderDesc& desc);
bool is_finite(const OrderDesc& desc);

// All elements of a finite order, ascending. Throws TooLarge beyond `limit`
// elements and InvalidArgument for infinite descriptors.
std::vector<OrderTerm> elements(const OrderDesc& desc, std::uint64_t limit = 1u << 20);

struct Enumeration {
  std::vector<OrderTerm> terms;  // distinct, in enumeration (not order) sequence
  bool complete = false;         // true iff `terms` is the whole order
};

// Deterministic enumeration by growing levels; stops once `bound` terms are
// collected or the order is exhausted.
Enumeration enumerate(const OrderDesc& desc, std::uint64_t bound);

// Least and greatest elements, when they exist and are computable.
std::optional<OrderTerm> least(const OrderDesc& desc);
std::optional<OrderTerm> greatest(const OrderDesc& desc);

// The value a lexicographic-power term takes at `position`.
const OrderTerm& power_value(const LexPowerOrder& power, const PowerTerm& t, const Ordinal& position);
// Builds a canonical power term from position/value pairs, dropping defaults.
OrderTerm make_power_term(const LexPowerOrder& power, std::vector<PowerEntry> entries);

}  // namespace satlab::orders
