#include "rgconj/choice_set.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

namespace rgconj {

namespace {

constexpr Nat kSaturated = std::numeric_limits<Nat>::max();

// Count arithmetic: saturating for Nat, exact for BigInt.
Nat add(Nat a, Nat b) {
  Nat r = 0;
  return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}
Nat mul(Nat a, Nat b) {
  Nat r = 0;
  return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}
BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }

bool saturated(Nat v) { return v == kSaturated; }
bool saturated(const BigInt&) { return false; }

// Work in excess coordinates: a sorted row w_0 < ... < w_{i-1} becomes the
// nondecreasing sequence lambda_m = w_m - m, and a set's excess is the sum of
// all lambdas. Order by total sum equals order by excess, and lexicographic
// order on the w lists equals lexicographic order on the lambda lists.
//
// partitions[k][t]: nondecreasing length-k sequences of naturals summing to t.
// rows[r][t]: r independent full rows (length i) with total excess t.
template <class Count>
class Tables {
 public:
  explicit Tables(Nat i) : i_(i) {}

  void ensure(Nat excess) {
    if (excess < width_) return;
    const Nat old = width_;
    width_ = std::max<Nat>(excess + 1, width_ * 2);
    partitions_.resize(i_ + 1);
    for (auto& row : partitions_) row.resize(width_, Count(0));
    for (Nat t = old; t < width_; ++t) partitions_[0][t] = Count(t == 0 ? 1 : 0);
    for (Nat k = 1; k <= i_; ++k) {
      for (Nat t = old; t < width_; ++t) {
        Count value = partitions_[k - 1][t];
        if (t >= k) value = add(value, partitions_[k][t - k]);
        partitions_[k][t] = value;
      }
    }
    rows_.resize(i_ + 1);
    for (auto& row : rows_) row.resize(width_, Count(0));
    for (Nat t = old; t < width_; ++t) rows_[0][t] = Count(t == 0 ? 1 : 0);
    for (Nat r = 1; r <= i_; ++r) {
      for (Nat t = old; t < width_; ++t) {
        Count value(0);
        for (Nat a = 0; a <= t; ++a) value = add(value, mul(partitions_[i_][a], rows_[r - 1][t - a]));
        rows_[r][t] = value;
      }
    }
  }

  const Count& full(Nat excess) {
    ensure(excess);
    return rows_[i_][excess];
  }

  // Completions when the current position takes lambda = v, with `tail`
  // more positions in this row (each >= v) and `later` full rows after it,
  // within the excess budget.
  Count completions(Nat v, Nat tail, Nat later, Nat budget) {
    Nat used = 0;
    if (__builtin_mul_overflow(v, tail + 1, &used) || used > budget) return Count(0);
    const Nat rest = budget - used;
    ensure(rest);
    Count total(0);
    for (Nat t = 0; t <= rest; ++t) total = add(total, mul(partitions_[tail][t], rows_[later][rest - t]));
    return total;
  }

 private:
  Nat i_;
  Nat width_ = 0;
  std::vector<std::vector<Count>> partitions_;
  std::vector<std::vector<Count>> rows_;
};

template <class Count>
Tables<Count>& tables_for(Nat i) {
  thread_local std::unordered_map<Nat, Tables<Count>> cache;
  return cache.try_emplace(i, i).first->second;
}

[[noreturn]] void malformed(Nat i, const std::string& why) {
  throw Error(ErrorKind::MalformedChoiceSet, "row " + std::to_string(i) + ": " + why);
}

template <class Count>
ChoiceSet unrank(Nat i, Count n) {
  if (i < 2) malformed(i, "choice sets need i >= 2");
  auto& tables = tables_for<Count>(i);
  Nat excess = 0;
  for (;;) {
    const Count& count = tables.full(excess);
    if (n < count) break;
    n -= count;
    ++excess;
  }
  ChoiceSet out{i, std::vector<std::vector<Nat>>(i)};
  Nat budget = excess;
  for (Nat r = 0; r < i; ++r) {
    Nat low = 0;
    out.rows[r].reserve(i);
    for (Nat m = 0; m < i; ++m) {
      const Nat tail = i - m - 1;
      const Nat later = i - r - 1;
      for (Nat v = low;; ++v) {
        const Count c = tables.completions(v, tail, later, budget);
        if (n < c) {
          budget -= v;
          low = v;
          out.rows[r].push_back(v + m);
          break;
        }
        n -= c;
      }
    }
  }
  return out;
}

template <class Count>
Count rank(Nat i, const std::vector<std::vector<Nat>>& input) {
  if (i < 2) malformed(i, "choice sets need i >= 2");
  if (input.size() != i) malformed(i, "expected " + std::to_string(i) + " rows, got " + std::to_string(input.size()));
  std::vector<std::vector<Nat>> lambdas(i);
  Nat excess = 0;
  for (Nat r = 0; r < i; ++r) {
    std::vector<Nat> row = input[r];
    std::sort(row.begin(), row.end());
    if (row.size() != i) {
      malformed(i, "row " + std::to_string(r) + " has " + std::to_string(row.size()) + " columns");
    }
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      malformed(i, "row " + std::to_string(r) + " repeats a column");
    }
    for (Nat m = 0; m < i; ++m) {
      lambdas[r].push_back(row[m] - m);
      excess = add(excess, row[m] - m);
    }
  }
  if (saturated(excess)) throw Error(ErrorKind::Overflow, "choice set excess");
  auto& tables = tables_for<Count>(i);
  auto checked_add = [](const Count& a, const Count& b) {
    Count r = add(a, b);
    if (saturated(r)) throw Error(ErrorKind::Overflow, "choice set rank exceeds 64 bits");
    return r;
  };
  Count total(0);
  for (Nat e = 0; e < excess; ++e) total = checked_add(total, tables.full(e));
  Nat budget = excess;
  for (Nat r = 0; r < i; ++r) {
    Nat low = 0;
    for (Nat m = 0; m < i; ++m) {
      const Nat tail = i - m - 1;
      const Nat later = i - r - 1;
      const Nat actual = lambdas[r][m];
      for (Nat v = low; v < actual; ++v) total = checked_add(total, tables.completions(v, tail, later, budget));
      budget -= actual;
      low = actual;
    }
  }
  return total;
}

}  // namespace

bool ChoiceSet::contains(Nat row, Nat column) const {
  if (row >= rows.size()) return false;
  return std::binary_search(rows[row].begin(), rows[row].end(), column);
}

Nat choice_count_with_sum(Nat i, Nat sum) {
  const Nat base = mul(i, mul(i, i - 1) / 2);
  if (sum < base) return 0;
  return tables_for<Nat>(i).full(sum - base);
}

ChoiceSet choice_set(Nat i, Nat n) { return unrank<Nat>(i, n); }

ChoiceSet choice_set(Nat i, const BigInt& n) {
  if (n <= kSaturated - 1) return unrank<Nat>(i, n.convert_to<Nat>());
  return unrank<BigInt>(i, n);
}

Nat choice_index(Nat i, const std::vector<std::vector<Nat>>& rows) { return rank<Nat>(i, rows); }

BigInt choice_index_big(Nat i, const std::vector<std::vector<Nat>>& rows) { return rank<BigInt>(i, rows); }

}  // namespace rgconj
