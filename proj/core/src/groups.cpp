#include "symmatch/groups.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <utility>

#include "symmatch/error.hpp"

namespace symmatch {

namespace {

constexpr int kMaxFreeRank = 26;

void require_same_group(const GroupDescriptor& x, const GroupDescriptor& y) {
  if (!(x == y)) {
    throw InputError("group descriptor mismatch: " + x.family_name() + "(" +
                     std::to_string(x.param) + ") vs " + y.family_name() + "(" +
                     std::to_string(y.param) + ")");
  }
}

std::int64_t mod(std::int64_t value, std::int64_t n) {
  std::int64_t r = value % n;
  return r < 0 ? r + n : r;
}

char letter(std::int64_t signed_gen) {
  const auto g = static_cast<char>(std::llabs(signed_gen) - 1);
  return signed_gen > 0 ? static_cast<char>('a' + g) : static_cast<char>('A' + g);
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw InputError("invalid integer '" + std::string(text) + "'");
  }
  return value;
}

// Appends one signed letter to a reduced word, cancelling if needed.
void push_letter(std::vector<std::int64_t>& word, std::int64_t letter) {
  if (!word.empty() && word.back() == -letter) {
    word.pop_back();
  } else {
    word.push_back(letter);
  }
}

}  // namespace

GroupDescriptor GroupDescriptor::zd(int d) {
  GroupDescriptor g{Family::kZd, d};
  g.validate();
  return g;
}

GroupDescriptor GroupDescriptor::cyclic(int n) {
  GroupDescriptor g{Family::kCyclic, n};
  g.validate();
  return g;
}

GroupDescriptor GroupDescriptor::free(int rank) {
  GroupDescriptor g{Family::kFree, rank};
  g.validate();
  return g;
}

void GroupDescriptor::validate() const {
  if (param < 1) {
    throw InputError(family_name() + " parameter must be >= 1, got " +
                     std::to_string(param));
  }
  if (family == Family::kFree && param > kMaxFreeRank) {
    throw InputError("free group rank must be <= 26");
  }
}

std::string GroupDescriptor::family_name() const {
  switch (family) {
    case Family::kZd:
      return "zd";
    case Family::kCyclic:
      return "cyclic";
    case Family::kFree:
      return "free";
  }
  return "?";
}

Family GroupDescriptor::parse_family(std::string_view name) {
  if (name == "zd") return Family::kZd;
  if (name == "cyclic") return Family::kCyclic;
  if (name == "free") return Family::kFree;
  throw InputError("unknown group family '" + std::string(name) + "'");
}

GroupElem GroupElem::identity(const GroupDescriptor& group) {
  group.validate();
  switch (group.family) {
    case Family::kZd:
      return GroupElem(group, std::vector<std::int64_t>(group.param, 0));
    case Family::kCyclic:
      return GroupElem(group, {0});
    case Family::kFree:
      return GroupElem(group, {});
  }
  return GroupElem(group, {});
}

GroupElem GroupElem::vector(std::vector<std::int64_t> coords) {
  const auto group = GroupDescriptor::zd(static_cast<int>(coords.size()));
  return GroupElem(group, std::move(coords));
}

GroupElem GroupElem::residue(std::int64_t value, int n) {
  const auto group = GroupDescriptor::cyclic(n);
  return GroupElem(group, {mod(value, n)});
}

GroupElem GroupElem::word(std::string_view letters, int rank) {
  const auto group = GroupDescriptor::free(rank);
  std::vector<std::int64_t> word;
  if (letters == "e") letters = {};
  for (char c : letters) {
    std::int64_t signed_gen = 0;
    if (c >= 'a' && c <= 'z') {
      signed_gen = c - 'a' + 1;
    } else if (c >= 'A' && c <= 'Z') {
      signed_gen = -(c - 'A' + 1);
    } else {
      throw InputError("invalid free-group letter '" + std::string(1, c) + "'");
    }
    if (std::llabs(signed_gen) > rank) {
      throw InputError("letter '" + std::string(1, c) + "' exceeds free rank " +
                       std::to_string(rank));
    }
    push_letter(word, signed_gen);
  }
  return GroupElem(group, std::move(word));
}

GroupElem GroupElem::parse(const GroupDescriptor& group, std::string_view text) {
  group.validate();
  switch (group.family) {
    case Family::kZd: {
      std::vector<std::int64_t> coords;
      std::size_t start = 0;
      while (true) {
        const auto comma = text.find(',', start);
        coords.push_back(parse_int(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      if (static_cast<int>(coords.size()) != group.param) {
        throw InputError("expected " + std::to_string(group.param) +
                         " coordinates in '" + std::string(text) + "'");
      }
      return vector(std::move(coords));
    }
    case Family::kCyclic: {
      const auto value = parse_int(text);
      if (value < 0 || value >= group.param) {
        throw InputError("residue " + std::string(text) + " not in [0, " +
                         std::to_string(group.param) + ")");
      }
      return residue(value, group.param);
    }
    case Family::kFree: {
      // Serialized words are required to be reduced already.
      auto w = word(text, group.param);
      const std::size_t raw = text == "e" ? 0 : text.size();
      if (w.data_.size() != raw) {
        throw InputError("free-group word '" + std::string(text) + "' is not reduced");
      }
      return w;
    }
  }
  throw InputError("unsupported group");
}

bool GroupElem::is_identity() const {
  if (group_.family == Family::kFree) return data_.empty();
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t GroupElem::norm() const {
  switch (group_.family) {
    case Family::kZd: {
      std::int64_t m = 0;
      for (auto v : data_) m = std::max<std::int64_t>(m, std::llabs(v));
      return m;
    }
    case Family::kCyclic:
      return std::min<std::int64_t>(data_[0], group_.param - data_[0]);
    case Family::kFree:
      return static_cast<std::int64_t>(data_.size());
  }
  return 0;
}

std::string GroupElem::to_string() const {
  std::string out;
  switch (group_.family) {
    case Family::kZd:
      for (std::size_t i = 0; i < data_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(data_[i]);
      }
      break;
    case Family::kCyclic:
      out = std::to_string(data_[0]);
      break;
    case Family::kFree:
      if (data_.empty()) return "e";
      for (auto l : data_) out += letter(l);
      break;
  }
  return out;
}

GroupElem compose(const GroupElem& x, const GroupElem& y) {
  require_same_group(x.group_, y.group_);
  switch (x.group_.family) {
    case Family::kZd: {
      std::vector<std::int64_t> sum(x.data_);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += y.data_[i];
      return GroupElem(x.group_, std::move(sum));
    }
    case Family::kCyclic:
      return GroupElem(x.group_, {mod(x.data_[0] + y.data_[0], x.group_.param)});
    case Family::kFree: {
      std::vector<std::int64_t> word(x.data_);
      for (auto l : y.data_) push_letter(word, l);
      return GroupElem(x.group_, std::move(word));
    }
  }
  return x;
}

GroupElem inverse(const GroupElem& x) {
  switch (x.group_.family) {
    case Family::kZd: {
      std::vector<std::int64_t> neg(x.data_);
      for (auto& v : neg) v = -v;
      return GroupElem(x.group_, std::move(neg));
    }
    case Family::kCyclic:
      return GroupElem(x.group_, {mod(-x.data_[0], x.group_.param)});
    case Family::kFree: {
      std::vector<std::int64_t> word(x.data_.rbegin(), x.data_.rend());
      for (auto& l : word) l = -l;
      return GroupElem(x.group_, std::move(word));
    }
  }
  return x;
}

bool SerializedLess::operator()(const GroupElem& x, const GroupElem& y) const {
  return x.to_string() < y.to_string();
}

std::size_t GroupElemHash::operator()(const GroupElem& x) const {
  std::size_t h = static_cast<std::size_t>(x.group().family) * 1000003u +
                  static_cast<std::size_t>(x.group().param);
  for (auto v : x.data()) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

FiniteSubset::FiniteSubset(GroupDescriptor group, std::vector<GroupElem> elements)
    : group_(group) {
  group_.validate();
  std::vector<std::pair<std::string, GroupElem>> keyed;
  keyed.reserve(elements.size());
  for (auto& e : elements) {
    require_same_group(group_, e.group());
    keyed.emplace_back(e.to_string(), std::move(e));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  elements_.reserve(keyed.size());
  for (auto& [key, e] : keyed) {
    index_.emplace(e, elements_.size());
    elements_.push_back(std::move(e));
  }
}

std::ptrdiff_t FiniteSubset::index_of(const GroupElem& x) const {
  auto it = index_.find(x);
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

std::int64_t FiniteSubset::max_norm() const {
  std::int64_t m = 0;
  for (const auto& e : elements_) m = std::max(m, e.norm());
  return m;
}

FiniteSubset box(const GroupDescriptor& group, std::int64_t lo, std::int64_t hi) {
  if (group.family != Family::kZd) throw InputError("box() requires a zd group");
  std::vector<GroupElem> out;
  if (hi < lo) return FiniteSubset(group, {});
  std::vector<std::int64_t> coords(group.param, lo);
  while (true) {
    out.push_back(GroupElem::vector(coords));
    int axis = 0;
    while (axis < group.param && coords[axis] == hi) coords[axis++] = lo;
    if (axis == group.param) break;
    ++coords[axis];
  }
  return FiniteSubset(group, std::move(out));
}

FiniteSubset ball(const GroupDescriptor& group, int radius) {
  group.validate();
  if (radius < 0) throw InputError("ball radius must be >= 0");
  switch (group.family) {
    case Family::kZd:
      return box(group, -radius, radius);
    case Family::kCyclic: {
      std::vector<GroupElem> out;
      for (std::int64_t v = -radius; v <= radius; ++v) {
        out.push_back(GroupElem::residue(v, group.param));
      }
      return FiniteSubset(group, std::move(out));
    }
    case Family::kFree: {
      std::vector<GroupElem> out{GroupElem::identity(group)};
      std::vector<std::string> shell{""};
      for (int len = 1; len <= radius; ++len) {
        std::vector<std::string> next;
        for (const auto& w : shell) {
          for (int g = 1; g <= group.param; ++g) {
            for (int sign : {1, -1}) {
              const char c = letter(sign * g);
              if (!w.empty() && w.back() == letter(-sign * g)) continue;
              next.push_back(w + c);
            }
          }
        }
        for (const auto& w : next) out.push_back(GroupElem::word(w, group.param));
        shell = std::move(next);
      }
      return FiniteSubset(group, std::move(out));
    }
  }
  return FiniteSubset(group);
}

FiniteSubset generators(const GroupDescriptor& group) {
  group.validate();
  std::vector<GroupElem> out;
  switch (group.family) {
    case Family::kZd:
      for (int i = 0; i < group.param; ++i) {
        for (int sign : {1, -1}) {
          std::vector<std::int64_t> v(group.param, 0);
          v[i] = sign;
          out.push_back(GroupElem::vector(std::move(v)));
        }
      }
      break;
    case Family::kCyclic:
      out.push_back(GroupElem::residue(1, group.param));
      out.push_back(GroupElem::residue(-1, group.param));
      break;
    case Family::kFree:
      for (int g = 1; g <= group.param; ++g) {
        out.push_back(GroupElem::word(std::string(1, letter(g)), group.param));
        out.push_back(GroupElem::word(std::string(1, letter(-g)), group.param));
      }
      break;
  }
  return FiniteSubset(group, std::move(out));
}

FiniteSubset right_translate(const FiniteSubset& set, const GroupElem& g) {
  require_same_group(set.group(), g.group());
  std::vector<GroupElem> out;
  out.reserve(set.size());
  for (const auto& s : set.elements()) out.push_back(compose(s, g));
  return FiniteSubset(set.group(), std::move(out));
}

FiniteSubset product_set(const FiniteSubset& left, const FiniteSubset& right) {
  require_same_group(left.group(), right.group());
  std::vector<GroupElem> out;
  out.reserve(left.size() * right.size());
  for (const auto& f : left.elements()) {
    for (const auto& u : right.elements()) out.push_back(compose(f, u));
  }
  return FiniteSubset(left.group(), std::move(out));
}

}  // namespace symmatch
