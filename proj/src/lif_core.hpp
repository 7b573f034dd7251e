#pragma once
// Shared implementation of the flow-based code construction, with optional
// security constraints. Internal to the library.

#include <optional>
#include <vector>

#include "wnc/netcode.hpp"

namespace wnc::detail {

struct SecurityConstraints {
  const Matrix* parity;  // k x n, full row rank
  int mu;
  std::vector<char> tappable;  // per edge id
};

NetworkCode lif_core(const Network& net, int n, const Field& field, Rng& rng,
                     bool shuffle_candidates,
                     const SecurityConstraints* security);

}  // namespace wnc::detail
