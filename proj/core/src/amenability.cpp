#include "symmatch/amenability.hpp"

#include <algorithm>
#include <unordered_map>

#include "symmatch/error.hpp"

namespace symmatch {

namespace {

void require_group(const GroupDescriptor& group, const FiniteSubset& set, const char* what) {
  if (!(set.group() == group)) throw InputError(std::string(what) + " is not in the given group");
  if (set.empty()) throw InputError(std::string(what) + " must be non-empty");
}

constexpr std::int64_t kA = 1;
constexpr std::int64_t kB = 2;

bool ends_with(const GroupElem& w, std::int64_t letter) {
  const auto d = w.data();
  return !d.empty() && d.back() == letter;
}

bool positive_power_of_a(const GroupElem& w) {
  const auto d = w.data();
  return !d.empty() && std::all_of(d.begin(), d.end(), [](std::int64_t l) { return l == kA; });
}

GroupElem classify(const ParadoxDecomp& p, const GroupElem& w, bool a_family) {
  const GroupElem* found = nullptr;
  for (const auto& piece : p.pieces) {
    if (!(a_family ? piece.in_a(w) : piece.in_b(w))) continue;
    if (found != nullptr) {
      throw InputError("word " + w.to_string() + " lies in two " + (a_family ? "A" : "B") +
                       "-pieces");
    }
    found = &piece.index;
  }
  if (found == nullptr) {
    throw InputError("word " + w.to_string() + " lies in no " + (a_family ? "A" : "B") +
                     "-piece");
  }
  return *found;
}

}  // namespace

FolnerReport folner_ratio(const GroupDescriptor& group, const std::vector<NamedWindow>& windows,
                          const FiniteSubset& u) {
  require_group(group, u, "U");
  FolnerReport report;
  for (const auto& w : windows) {
    require_group(group, w.set, "window");
    FolnerRow row;
    row.window = w.name;
    row.f = static_cast<std::int64_t>(w.set.size());
    row.fu = static_cast<std::int64_t>(product_set(w.set, u).size());
    row.ratio = Ratio(row.fu, row.f);
    if (report.rows.empty() || row.ratio < report.infimum_so_far) {
      report.infimum_so_far = row.ratio;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

Ratio folner_witness_translate(const GroupDescriptor& group, const FiniteSubset& f,
                               const FiniteSubset& u) {
  require_group(group, f, "F");
  require_group(group, u, "U");
  std::int64_t worst = 0;
  for (const auto& g : u.elements()) {
    const auto fg = right_translate(f, g);
    std::int64_t outside = 0;
    for (const auto& x : f.elements()) {
      if (!fg.contains(x)) ++outside;
    }
    worst = std::max(worst, outside);
  }
  return Ratio(worst, static_cast<std::int64_t>(f.size()));
}

FiniteSubset ParadoxDecomp::index_set() const {
  std::vector<GroupElem> out;
  for (const auto& piece : pieces) out.push_back(piece.index);
  return FiniteSubset(group, std::move(out));
}

GroupElem ParadoxDecomp::classify_a(const GroupElem& w) const { return classify(*this, w, true); }
GroupElem ParadoxDecomp::classify_b(const GroupElem& w) const { return classify(*this, w, false); }

ParadoxDecomp standard_f2_paradox(ParadoxMutation mutation) {
  const auto f2 = GroupDescriptor::free(2);
  const auto in_ta = [](const GroupElem& w) { return ends_with(w, kA); };
  const auto in_tb = [](const GroupElem& w) { return ends_with(w, kB); };
  const bool hotel = mutation != ParadoxMutation::kNoHotelFix;
  const bool corrupt = mutation == ParadoxMutation::kCorruptedTable;

  ParadoxDecomp p{f2, {}};
  p.pieces.push_back(
      {GroupElem::identity(f2),
       [=](const GroupElem& w) { return in_ta(w) && !(hotel && positive_power_of_a(w)); },
       [=](const GroupElem& w) { return in_tb(w) || (corrupt && w.is_identity()); }});
  p.pieces.push_back(
      {GroupElem::word("A", 2),
       [=](const GroupElem& w) { return !in_ta(w) || (hotel && positive_power_of_a(w)); },
       [](const GroupElem&) { return false; }});
  p.pieces.push_back({GroupElem::word("B", 2), [](const GroupElem&) { return false; },
                      [=](const GroupElem& w) {
                        return !in_tb(w) && !(corrupt && w.is_identity());
                      }});
  return p;
}

const char* violation_kind_name(ParadoxViolation::Kind kind) {
  switch (kind) {
    case ParadoxViolation::Kind::kNotPartitionA:
      return "not_partition_a";
    case ParadoxViolation::Kind::kNotPartitionB:
      return "not_partition_b";
    case ParadoxViolation::Kind::kCoveredTwice:
      return "covered_twice";
    case ParadoxViolation::Kind::kUncovered:
      return "uncovered";
  }
  return "?";
}

std::variant<ParadoxCertificate, ParadoxViolation> verify_paradox(const ParadoxDecomp& p,
                                                                  int radius) {
  if (radius < 0) throw InputError("radius must be >= 0");
  const auto index = p.index_set();
  const auto reach = static_cast<int>(index.max_norm());
  const auto words = ball(p.group, radius + reach);

  // Images x * g(x) over the enumerated ball; every preimage of a word of
  // length <= radius lies in this ball, so those words are covered exactly
  // once, while outer words are only required to be covered at most once.
  std::unordered_map<GroupElem, int, GroupElemHash> cover;
  std::size_t images = 0;
  for (const auto& w : words.elements()) {
    GroupElem ga;
    GroupElem gb;
    try {
      ga = p.classify_a(w);
    } catch (const InputError& e) {
      return ParadoxViolation{ParadoxViolation::Kind::kNotPartitionA, w, e.what()};
    }
    try {
      gb = p.classify_b(w);
    } catch (const InputError& e) {
      return ParadoxViolation{ParadoxViolation::Kind::kNotPartitionB, w, e.what()};
    }
    for (const auto& g : {ga, gb}) {
      const auto image = compose(w, g);
      ++images;
      if (++cover[image] > 1) {
        return ParadoxViolation{ParadoxViolation::Kind::kCoveredTwice, image,
                                "translate of " + w.to_string() + " by " + g.to_string() +
                                    " covers it again"};
      }
    }
  }
  std::size_t interior = 0;
  for (const auto& w : words.elements()) {
    if (w.norm() > radius) continue;
    ++interior;
    if (!cover.contains(w)) {
      return ParadoxViolation{ParadoxViolation::Kind::kUncovered, w,
                              "no translated piece covers " + w.to_string()};
    }
  }
  return ParadoxCertificate{radius, words.size(), interior, images};
}

std::vector<ClassificationRow> classification_table(const ParadoxDecomp& p, int radius) {
  const auto words = ball(p.group, radius);
  std::vector<ClassificationRow> rows;
  for (const auto& w : words.elements()) {
    rows.push_back({w, p.classify_a(w), p.classify_b(w)});
  }
  return rows;
}

}  // namespace symmatch
