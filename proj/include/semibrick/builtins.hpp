#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "semibrick/rep.hpp"

namespace semibrick {

// "k<r>" (Kronecker K_r, r >= 1) or "a<n>" (linear A_n). UsageError otherwise.
std::shared_ptr<const Quiver> builtin_quiver(std::string_view name);

// Named representations on a builtin quiver:
//   r<l>, x<l>   (1,1) Kronecker module with arrow scalars (1, l, l^2, ...); l an
//                integer or p/q, "inf" for (0, ..., 0, 1)
//   s<v>, p<v>, i<v>   simple, projective, injective at vertex v
//   kq           the path algebra as a representation, (+)_v P(v)
std::optional<Rep> builtin_rep(const std::shared_ptr<const Quiver>& q, const Field& f, std::string_view name);

}  // namespace semibrick
