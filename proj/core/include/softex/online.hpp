// Copyright 2026 The SoftEx Model Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOFTEX_ONLINE_HPP_
#define SOFTEX_ONLINE_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace softex {

// Streaming max/denominator recurrence, written once over an arithmetic
// policy so the hardware model and the exact symbolic oracle share the same
// control flow. A policy provides:
//   using Elem, Sum;
//   Elem Sub(Elem, Elem); Sum Exp(Elem); Sum Zero();
//   Sum Add(Sum, Sum); Sum Fma(Sum acc, Sum scale, Sum addend);
//   bool Less(Elem, Elem);
template <class Policy>
struct OnlineState {
  typename Policy::Elem running_max{};
  typename Policy::Sum denom{};
  std::vector<std::pair<typename Policy::Elem, typename Policy::Elem>> rescale_log;
  std::uint64_t elements_seen = 0;
};

// Balanced pairwise reduction over `lanes` slots, zero-padded past the
// group's end. The order is fixed, so results are reproducible.
template <class Policy>
typename Policy::Sum TreeSum(Policy& policy, std::vector<typename Policy::Sum> slots) {
  if (slots.empty()) return policy.Zero();
  while (slots.size() > 1) {
    std::vector<typename Policy::Sum> next;
    next.reserve((slots.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < slots.size(); i += 2) {
      next.push_back(policy.Add(slots[i], slots[i + 1]));
    }
    if (slots.size() % 2) next.push_back(policy.Add(slots.back(), policy.Zero()));
    slots = std::move(next);
  }
  return slots.front();
}

template <class Policy>
void OnlineAccumulate(Policy& policy, OnlineState<Policy>& state,
                      std::span<const typename Policy::Elem> chunk, std::size_t lanes) {
  using Elem = typename Policy::Elem;
  using Sum = typename Policy::Sum;
  for (std::size_t start = 0; start < chunk.size(); start += lanes) {
    const std::size_t end = std::min(chunk.size(), start + lanes);
    Elem group_max = chunk[start];
    for (std::size_t i = start + 1; i < end; ++i) {
      if (policy.Less(group_max, chunk[i])) group_max = chunk[i];
    }

    bool rescale = false;
    if (state.elements_seen == 0) {
      state.running_max = group_max;
    } else if (policy.Less(state.running_max, group_max)) {
      rescale = true;
    }
    const Elem old_max = state.running_max;
    if (rescale) state.running_max = group_max;

    std::vector<Sum> slots(lanes, policy.Zero());
    for (std::size_t i = start; i < end; ++i) {
      slots[i - start] = policy.Exp(policy.Sub(chunk[i], state.running_max));
    }
    const Sum group_sum = TreeSum(policy, std::move(slots));

    if (rescale) {
      state.rescale_log.emplace_back(old_max, state.running_max);
      state.denom = policy.Fma(state.denom, policy.Exp(policy.Sub(old_max, state.running_max)),
                               group_sum);
    } else {
      state.denom = policy.Add(state.denom, group_sum);
    }
    state.elements_seen += end - start;
  }
}

}  // namespace softex

#endif  // SOFTEX_ONLINE_HPP_
