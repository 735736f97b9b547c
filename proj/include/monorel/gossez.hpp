#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "monorel/rational.hpp"

namespace monorel {

/// Finitely supported sequence (x_1, x_2, ...), indices starting at 1.
class FinSeq {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  FinSeq() = default;
  /// Sorts by index and drops zeros. Throws std::invalid_argument on index 0
  /// or a repeated index.
  explicit FinSeq(std::vector<Entry> entries);

  const std::vector<Entry>& support() const { return entries_; }
  std::size_t max_index() const { return entries_.empty() ? 0 : entries_.back().first; }
  Scalar at(std::size_t index) const;
  /// <x, e> with e = (1, 1, ...).
  Scalar sum() const;

  bool operator==(const FinSeq&) const = default;

 private:
  std::vector<Entry> entries_;
};

/// Eventually constant sequence: head[i - 1] for i <= head.size(), then tail.
struct EvConstSeq {
  Vec head;
  Scalar tail;

  Scalar at(std::size_t index) const { return index <= head.size() ? head[index - 1] : tail; }
};

/// y_n = sum_k x_k + x_n - 2 sum_{k <= n} x_k, with head up to max_index(x).
EvConstSeq gossez_apply(const FinSeq& x);

/// T x + <x, e> e, which tends to 0.
EvConstSeq gossez_shifted(const FinSeq& x);

/// sum_i x_i y_i over the support of x.
Scalar pair(const FinSeq& x, const EvConstSeq& y);

struct IdentityCheck {
  std::string name;
  Scalar residual;
  bool applicable = true;

  bool passed() const { return !applicable || residual == 0; }
};

struct GossezReport {
  std::vector<IdentityCheck> checks;
  Scalar shifted_pairing;  // <T v + <v, e> e, v>
  Scalar sum_v_squared;    // <v, e>^2

  bool all_passed() const;
};

/// Skewness of x and v, antisymmetry, the limit identity, the shifted operator
/// tending to 0, the complement-membership identity (applicable when
/// <x, e> = 0) and <T v + <v, e> e, v> = <v, e>^2.
GossezReport check_identities(const FinSeq& x, const FinSeq& v);

}  // namespace monorel
