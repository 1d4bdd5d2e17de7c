#pragma once

// Exact Følner-ratio probes and the explicit paradoxical decomposition of
// the free group F_2. Everything here is integer or rational arithmetic.

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "symmatch/groups.hpp"
#include "symmatch/symmetry.hpp"

namespace symmatch {

struct FolnerRow {
  std::string window;  // description, e.g. "box 10" or "ball 3"
  std::int64_t f = 0;
  std::int64_t fu = 0;
  Ratio ratio;  // |FU| / |F|
};

struct FolnerReport {
  std::vector<FolnerRow> rows;
  Ratio infimum_so_far;  // min over rows; undefined for an empty report
};

struct NamedWindow {
  std::string name;
  FiniteSubset set;
};

// |F|, |FU| and |FU|/|F| for every window. Throws InputError on empty sets
// or descriptor mismatch.
FolnerReport folner_ratio(const GroupDescriptor& group, const std::vector<NamedWindow>& windows,
                          const FiniteSubset& u);

// max over g in U of |F \ Fg| / |F|.
Ratio folner_witness_translate(const GroupDescriptor& group, const FiniteSubset& f,
                               const FiniteSubset& u);

// One index g of a decomposition with its two pieces A_g and B_g given as
// membership predicates on reduced words.
struct Piece {
  GroupElem index;
  std::function<bool(const GroupElem&)> in_a;
  std::function<bool(const GroupElem&)> in_b;
};

// Pieces indexed by a finite F with
//   G = disjoint union A_g = disjoint union B_g
//     = disjoint union A_g g  (+)  disjoint union B_g g.
struct ParadoxDecomp {
  GroupDescriptor group;
  std::vector<Piece> pieces;

  FiniteSubset index_set() const;
  // The index g of the unique A-piece (B-piece) containing w; throws
  // InputError if w lies in zero or several pieces.
  GroupElem classify_a(const GroupElem& w) const;
  GroupElem classify_b(const GroupElem& w) const;
};

enum class ParadoxMutation {
  kNone,
  // A_e := T(a): the powers a^n stay in A_e, so e is never covered.
  kNoHotelFix,
  // e is moved from B_{b^-1} into B_e, so e is covered twice.
  kCorruptedTable,
};

// F = {e, a^-1, b^-1} with T(x) the reduced words ending in x:
//   A_e      = T(a) \ {a^n : n >= 1}
//   A_{a^-1} = (G \ T(a)) u {a^n : n >= 1}
//   B_e      = T(b)
//   B_{b^-1} = G \ T(b)
ParadoxDecomp standard_f2_paradox(ParadoxMutation mutation = ParadoxMutation::kNone);

struct ParadoxCertificate {
  int radius = 0;
  std::size_t words_classified = 0;  // all words of length <= radius + max |g|
  std::size_t interior_words = 0;    // words of length <= radius, covered exactly once
  std::size_t images = 0;            // translated images collected
};

struct ParadoxViolation {
  enum class Kind { kNotPartitionA, kNotPartitionB, kCoveredTwice, kUncovered };
  Kind kind = Kind::kUncovered;
  GroupElem word;
  std::string detail;
};

const char* violation_kind_name(ParadoxViolation::Kind kind);

std::variant<ParadoxCertificate, ParadoxViolation> verify_paradox(const ParadoxDecomp& p,
                                                                  int radius);

struct ClassificationRow {
  GroupElem word;
  GroupElem a_index;
  GroupElem b_index;
};

// Classification of every word of length <= radius, in canonical order.
std::vector<ClassificationRow> classification_table(const ParadoxDecomp& p, int radius);

}  // namespace symmatch
