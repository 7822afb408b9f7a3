#ifndef RECONF_ID_SET_HPP
#define RECONF_ID_SET_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace reconf {

using VertexId = std::int32_t;
using ArcId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr ArcId kNoArc = -1;

/// Finite set of non-negative ids kept as a sorted, duplicate-free vector.
///
/// Used for arc sets (trees, forests, paths, feedback arc sets) and vertex
/// sets alike. The sorted encoding doubles as the canonical form used to key
/// reconfiguration-graph nodes.
class IdSet {
 public:
  IdSet() = default;
  IdSet(std::initializer_list<std::int32_t> ids) : ids_(ids) { normalize(); }
  explicit IdSet(std::vector<std::int32_t> ids) : ids_(std::move(ids)) {
    normalize();
  }

  static IdSet from_sorted_unique(std::vector<std::int32_t> ids) {
    IdSet s;
    s.ids_ = std::move(ids);
    return s;
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  bool contains(std::int32_t id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  /// Returns false when the id was already present.
  bool insert(std::int32_t id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it != ids_.end() && *it == id) return false;
    ids_.insert(it, id);
    return true;
  }

  bool erase(std::int32_t id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return false;
    ids_.erase(it);
    return true;
  }

  /// Copy with `removed` taken out and `added` put in.
  IdSet exchanged(std::int32_t removed, std::int32_t added) const {
    IdSet out = *this;
    out.erase(removed);
    out.insert(added);
    return out;
  }

  std::span<const std::int32_t> ids() const { return ids_; }
  const std::vector<std::int32_t>& vector() const { return ids_; }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  std::int32_t front() const { return ids_.front(); }

  friend bool operator==(const IdSet&, const IdSet&) = default;
  friend auto operator<=>(const IdSet& a, const IdSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<std::int32_t> ids_;
};

using ArcSet = IdSet;
using VertexSet = IdSet;

/// Elements of `a` that are not in `b`, ascending.
IdSet set_difference(const IdSet& a, const IdSet& b);

/// |a \ b| without materializing the difference.
std::size_t difference_size(const IdSet& a, const IdSet& b);

/// The (removed, added) pair when `to` is obtained from `from` by exactly one
/// exchange, i.e. |from \ to| = |to \ from| = 1.
std::optional<std::pair<std::int32_t, std::int32_t>> single_exchange(
    const IdSet& from, const IdSet& to);

std::string to_string(const IdSet& s);

struct IdSetHash {
  std::size_t operator()(const IdSet& s) const noexcept;
};

}  // namespace reconf

#endif  // RECONF_ID_SET_HPP
