#pragma once

// Element arithmetic for the three supported group families:
//   zd      free abelian group Z^d, elements are integer vectors,
//   cyclic  Z_n, elements are least non-negative residues,
//   free    free group F_k on generators a, b, c, ... where the uppercase
//           letter denotes the inverse generator.
//
// Serialization: zd elements are comma-separated coordinates ("1,-2"),
// cyclic elements the residue ("3"), free elements the reduced letter string
// with the identity written as "e".

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace symmatch {

enum class Family { kZd, kCyclic, kFree };

struct GroupDescriptor {
  Family family = Family::kCyclic;
  int param = 1;  // d for zd, n for cyclic, rank k for free

  static GroupDescriptor zd(int d);
  static GroupDescriptor cyclic(int n);
  static GroupDescriptor free(int rank);
  // The trivial group, presented as Z_1.
  static GroupDescriptor trivial() { return cyclic(1); }

  // Throws InputError when param is out of range for the family.
  void validate() const;
  std::string family_name() const;
  static Family parse_family(std::string_view name);

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

class GroupElem {
 public:
  // Identity of the trivial group.
  GroupElem() : data_{0} {}

  static GroupElem identity(const GroupDescriptor& group);
  static GroupElem vector(std::vector<std::int64_t> coords);
  static GroupElem residue(std::int64_t value, int n);
  // Builds a free-group element from letters, reducing cancelling pairs.
  // "" and "e" both denote the identity.
  static GroupElem word(std::string_view letters, int rank);
  static GroupElem parse(const GroupDescriptor& group, std::string_view text);

  const GroupDescriptor& group() const { return group_; }
  // zd: the coordinates; cyclic: one residue; free: signed letters, +g for
  // generator g (1-based) and -g for its inverse.
  std::span<const std::int64_t> data() const { return data_; }
  std::int64_t residue() const { return data_.empty() ? 0 : data_[0]; }

  bool is_identity() const;
  // Word length for free groups, L-infinity norm for zd, distance to 0 in Z_n.
  std::int64_t norm() const;
  std::string to_string() const;

  friend bool operator==(const GroupElem& x, const GroupElem& y) {
    return x.group_ == y.group_ && x.data_ == y.data_;
  }

 private:
  GroupElem(GroupDescriptor group, std::vector<std::int64_t> data)
      : group_(group), data_(std::move(data)) {}

  friend GroupElem compose(const GroupElem&, const GroupElem&);
  friend GroupElem inverse(const GroupElem&);

  GroupDescriptor group_;
  std::vector<std::int64_t> data_;
};

// Group product x*y. Throws InputError on descriptor mismatch.
GroupElem compose(const GroupElem& x, const GroupElem& y);
GroupElem inverse(const GroupElem& x);

// Orders elements lexicographically by their serialization.
struct SerializedLess {
  bool operator()(const GroupElem& x, const GroupElem& y) const;
};

struct GroupElemHash {
  std::size_t operator()(const GroupElem& x) const;
};

// A finite set of group elements kept in canonical (serialized) order.
class FiniteSubset {
 public:
  explicit FiniteSubset(GroupDescriptor group) : group_(group) {}
  // Deduplicates and sorts; throws InputError if an element belongs to a
  // different group.
  FiniteSubset(GroupDescriptor group, std::vector<GroupElem> elements);

  const GroupDescriptor& group() const { return group_; }
  std::span<const GroupElem> elements() const& { return elements_; }
  // A span into a temporary would dangle, e.g. in a range-for over ball(...).elements().
  std::span<const GroupElem> elements() const&& = delete;
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const GroupElem& x) const { return index_.contains(x); }
  // Position in canonical order, or -1.
  std::ptrdiff_t index_of(const GroupElem& x) const;
  std::int64_t max_norm() const;

  friend bool operator==(const FiniteSubset& x, const FiniteSubset& y) {
    return x.group_ == y.group_ && x.elements_ == y.elements_;
  }

 private:
  GroupDescriptor group_;
  std::vector<GroupElem> elements_;
  std::unordered_map<GroupElem, std::size_t, GroupElemHash> index_;
};

// zd: the box [-r, r]^d; free: reduced words of length <= r; cyclic:
// residues whose representative has absolute value <= r.
FiniteSubset ball(const GroupDescriptor& group, int radius);
// zd only: the box [lo, hi]^d.
FiniteSubset box(const GroupDescriptor& group, std::int64_t lo, std::int64_t hi);
// Symmetric generating set: +-e_i for zd, +-1 for cyclic, a, A, b, B, ... for free.
FiniteSubset generators(const GroupDescriptor& group);

FiniteSubset right_translate(const FiniteSubset& set, const GroupElem& g);
// {f*u | f in F, u in U}.
FiniteSubset product_set(const FiniteSubset& left, const FiniteSubset& right);

}  // namespace symmatch
