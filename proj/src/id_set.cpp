#include "reconf/id_set.hpp"

#include <iterator>

namespace reconf {

IdSet set_difference(const IdSet& a, const IdSet& b) {
  std::vector<std::int32_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return IdSet::from_sorted_unique(std::move(out));
}

std::size_t difference_size(const IdSet& a, const IdSet& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end()) {
    if (j == b.end() || *i < *j) {
      ++count;
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return count;
}

std::optional<std::pair<std::int32_t, std::int32_t>> single_exchange(
    const IdSet& from, const IdSet& to) {
  if (from.size() != to.size()) return std::nullopt;
  std::int32_t removed = -1;
  std::int32_t added = -1;
  int removed_count = 0;
  int added_count = 0;
  auto i = from.begin();
  auto j = to.begin();
  while (i != from.end() || j != to.end()) {
    if (j == to.end() || (i != from.end() && *i < *j)) {
      removed = *i++;
      if (++removed_count > 1) return std::nullopt;
    } else if (i == from.end() || *j < *i) {
      added = *j++;
      if (++added_count > 1) return std::nullopt;
    } else {
      ++i;
      ++j;
    }
  }
  if (removed_count != 1 || added_count != 1) return std::nullopt;
  return std::pair{removed, added};
}

std::string to_string(const IdSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto id : s) {
    if (!first) out += ",";
    out += std::to_string(id);
    first = false;
  }
  out += "}";
  return out;
}

std::size_t IdSetHash::operator()(const IdSet& s) const noexcept {
  // FNV-1a over the sorted ids.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto id : s) {
    h ^= static_cast<std::uint32_t>(id);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace reconf
