#include "rgconj/delta.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace rgconj {

const ChoiceSet& cached_choice_set(Nat i, Nat n) {
  thread_local std::unordered_map<std::pair<Nat, Nat>, ChoiceSet, boost::hash<std::pair<Nat, Nat>>> cache;
  const std::pair<Nat, Nat> key{i, n};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (cache.size() > (1U << 16)) cache.clear();
  return cache.emplace(key, choice_set(i, n)).first->second;
}

bool delta_adj(const GraphOracle& x, VertexCode u, VertexCode v) {
  if (u == v) return false;
  if (u.row > v.row) std::swap(u, v);
  if (v.row <= 1) {
    if (u.row == v.row) return x.adj(u.column, v.column);
    return u.column == v.column;
  }
  if (u.row == v.row) return false;
  return cached_choice_set(v.row, v.column).contains(u.row, u.column);
}

bool delta_adj_code(const GraphOracle& x, Nat u, Nat v) { return delta_adj(x, unpair(u), unpair(v)); }

std::optional<VertexCode> WideVertex::narrow() const {
  if (column > std::numeric_limits<Nat>::max()) return std::nullopt;
  return VertexCode{row, column.convert_to<Nat>()};
}

bool delta_adj_wide(const GraphOracle& x, VertexCode u, const WideVertex& w) {
  if (auto v = w.narrow()) return delta_adj(x, u, *v);
  // a column past 64 bits lies in a row >= 2
  if (u.row >= w.row) return false;
  return choice_set(w.row, w.column).contains(u.row, u.column);
}

WideVertex delta_witness(std::span<const VertexCode> U, std::span<const VertexCode> V) {
  std::set<VertexCode> u_set(U.begin(), U.end());
  for (const auto& v : V) {
    if (u_set.count(v) != 0) {
      throw Error(ErrorKind::OverlappingSets,
                  "vertex (" + std::to_string(v.row) + "," + std::to_string(v.column) + ") in both U and V");
    }
  }
  Nat row = 2;
  for (const auto& u : U) row = std::max(row, u.row + 1);
  for (const auto& v : V) row = std::max(row, v.row + 1);
  std::vector<std::vector<Nat>> columns(row);
  std::vector<std::set<Nat>> blocked(row);
  for (const auto& u : u_set) {
    columns[u.row].push_back(u.column);
    blocked[u.row].insert(u.column);
  }
  for (const auto& v : V) blocked[v.row].insert(v.column);
  for (const auto& c : columns) row = std::max<Nat>(row, c.size());
  columns.resize(row);
  blocked.resize(row);
  for (Nat r = 0; r < row; ++r) {
    for (Nat c = 0; columns[r].size() < row; ++c) {
      if (blocked[r].count(c) == 0) columns[r].push_back(c);
    }
  }
  return {row, choice_index_big(row, columns)};
}

RowPermutation::RowPermutation(bool swap_rows, std::function<Nat(Nat)> column)
    : swap_rows_(swap_rows), column_(std::move(column)) {}

VertexCode RowPermutation::apply(VertexCode v) const {
  if (v.row <= 1) {
    const Nat row = swap_rows_ ? 1 - v.row : v.row;
    return {row, column_(v.column)};
  }
  const std::pair<Nat, Nat> key{v.row, v.column};
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const ChoiceSet source = cached_choice_set(v.row, v.column);
  std::vector<std::vector<Nat>> image(v.row);
  for (Nat r = 0; r < v.row; ++r) {
    image[r].reserve(v.row);
    for (Nat c : source.rows[r]) {
      const VertexCode mapped = apply({r, c});
      image[mapped.row].push_back(mapped.column);
    }
  }
  const VertexCode out{v.row, choice_index(v.row, image)};
  std::lock_guard lock(mutex_);
  if (memo_.size() > (1U << 20)) memo_.clear();
  memo_.emplace(key, out);
  return out;
}

namespace {

const RowPermutation& swap_permutation() {
  static const RowPermutation swap(true, [](Nat c) { return c; });
  return swap;
}

}  // namespace

VertexPool::VertexPool(bool swap_rows, std::function<Nat(Nat)> column)
    : swap_rows_(swap_rows), column_(std::move(column)) {}

VertexPool::ListId VertexPool::intern_list(std::vector<Ref> list) {
  std::sort(list.begin(), list.end());
  auto [it, fresh] = list_ids_.try_emplace(list, static_cast<ListId>(lists_.size()));
  if (fresh) lists_.push_back(std::move(list));
  return it->second;
}

const std::vector<VertexPool::ListId>& VertexPool::lists_of(Ref v) {
  if (v.node) return nodes_[v.value];
  auto it = coded_lists_.find(v);
  if (it != coded_lists_.end()) return it->second;
  const ChoiceSet set = choice_set(v.row, v.value);
  std::vector<ListId> lists;
  lists.reserve(v.row);
  for (Nat r = 0; r < v.row; ++r) {
    // a sorted list of `row` distinct columns ending at row-1 is exactly 0..row-1
    const bool initial = set.rows[r].back() + 1 == v.row;
    if (initial) {
      auto it = initial_lists_.find({r, v.row});
      if (it != initial_lists_.end()) {
        lists.push_back(it->second);
        continue;
      }
    }
    std::vector<Ref> members;
    members.reserve(set.rows[r].size());
    for (Nat c : set.rows[r]) members.push_back(coded({r, c}));
    lists.push_back(intern_list(std::move(members)));
    if (initial) initial_lists_.emplace(std::make_pair(r, v.row), lists.back());
  }
  return coded_lists_.emplace(v, std::move(lists)).first->second;
}

VertexPool::ListId VertexPool::image_list(ListId list) {
  auto it = list_images_.find(list);
  if (it != list_images_.end()) return it->second;
  std::vector<Ref> mapped;
  mapped.reserve(lists_[list].size());
  for (std::size_t k = 0; k < lists_[list].size(); ++k) mapped.push_back(image(lists_[list][k]));
  const ListId out = intern_list(std::move(mapped));
  list_images_.emplace(list, out);
  return out;
}

VertexPool::Ref VertexPool::image(Ref v) {
  if (!v.node && v.row <= 1) return coded({swap_rows_ ? 1 - v.row : v.row, column_(v.value)});
  auto it = images_.find(v);
  if (it != images_.end()) return it->second;
  const std::vector<ListId> source = lists_of(v);
  std::vector<ListId> target(v.row);
  for (Nat r = 0; r < v.row; ++r) {
    const Nat to = (swap_rows_ && r <= 1) ? 1 - r : r;
    target[to] = image_list(source[r]);
  }
  Ref out;
  std::vector<std::vector<Nat>> columns(v.row);
  bool all_coded = true;
  for (Nat r = 0; r < v.row && all_coded; ++r) {
    for (const Ref& m : lists_[target[r]]) {
      if (m.node) {
        all_coded = false;
        break;
      }
      columns[r].push_back(m.value);
    }
  }
  std::optional<Nat> rank;
  if (all_coded) {
    try {
      rank = choice_index(v.row, columns);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Overflow) throw;
    }
  }
  if (rank) {
    out = coded({v.row, *rank});
  } else {
    auto [slot, fresh] = node_ids_.try_emplace({v.row, target}, nodes_.size());
    if (fresh) nodes_.push_back(target);
    out = {true, v.row, slot->second};
  }
  images_.emplace(v, out);
  return out;
}

bool VertexPool::adj(const GraphOracle& x, Ref u, Ref v) {
  if (u == v) return false;
  if (u.row > v.row) std::swap(u, v);
  if (v.row <= 1) {
    if (u.row == v.row) return x.adj(u.value, v.value);
    return u.value == v.value;
  }
  if (u.row == v.row) return false;
  const auto& members = lists_[lists_of(v)[u.row]];
  return std::binary_search(members.begin(), members.end(), u);
}

std::optional<VertexCode> VertexPool::code(Ref v) const {
  if (v.node) return std::nullopt;
  return VertexCode{v.row, v.value};
}

VertexCode swap_vertex(VertexCode v) { return swap_permutation().apply(v); }

Nat swap_code(Nat code) { return swap_permutation().apply_code(code); }

}  // namespace rgconj
