#include "monorel/gossez.hpp"

#include <algorithm>
#include <stdexcept>

namespace monorel {

FinSeq::FinSeq(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first == 0) throw std::invalid_argument("sequence indices start at 1");
    if (i > 0 && entries[i].first == entries[i - 1].first) {
      throw std::invalid_argument("repeated sequence index " + std::to_string(entries[i].first));
    }
    if (entries[i].second != 0) entries_.push_back(std::move(entries[i]));
  }
}

Scalar FinSeq::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  return (it != entries_.end() && it->first == index) ? it->second : Scalar(0);
}

Scalar FinSeq::sum() const {
  Scalar s = 0;
  for (const auto& [i, v] : entries_) s += v;
  return s;
}

EvConstSeq gossez_apply(const FinSeq& x) {
  const Scalar total = x.sum();
  const std::size_t n = x.max_index();
  EvConstSeq y{Vec(n), -total};
  Scalar prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const Scalar xk = x.at(k);
    prefix += xk;
    y.head[k - 1] = total + xk - 2 * prefix;
  }
  return y;
}

EvConstSeq gossez_shifted(const FinSeq& x) {
  EvConstSeq y = gossez_apply(x);
  const Scalar s = x.sum();
  for (auto& h : y.head) h += s;
  y.tail += s;
  return y;
}

Scalar pair(const FinSeq& x, const EvConstSeq& y) {
  Scalar s = 0;
  for (const auto& [i, v] : x.support()) s += v * y.at(i);
  return s;
}

bool GossezReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed(); });
}

GossezReport check_identities(const FinSeq& x, const FinSeq& v) {
  const EvConstSeq tx = gossez_apply(x);
  const EvConstSeq tv = gossez_apply(v);
  const EvConstSeq t1x = gossez_shifted(x);
  const EvConstSeq t1v = gossez_shifted(v);

  GossezReport r;
  r.shifted_pairing = pair(v, t1v);
  r.sum_v_squared = v.sum() * v.sum();
  r.checks.push_back({"skew <x, Tx> = 0", pair(x, tx), true});
  r.checks.push_back({"skew <v, Tv> = 0", pair(v, tv), true});
  r.checks.push_back({"antisymmetry <x, Tv> + <v, Tx> = 0", pair(x, tv) + pair(v, tx), true});
  r.checks.push_back({"limit lim Tx + <x, e> = 0", tx.tail + x.sum(), true});
  r.checks.push_back({"shifted limit lim (Tx + <x, e> e) = 0", t1x.tail, true});
  r.checks.push_back({"complement <Tx, v> + <Tv + <v, e> e, x> = 0", pair(v, tx) + pair(x, t1v), x.sum() == 0});
  r.checks.push_back({"positivity <Tv + <v, e> e, v> = <v, e>^2", r.shifted_pairing - r.sum_v_squared, true});
  return r;
}

}  // namespace monorel
