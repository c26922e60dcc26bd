#pragma once

#include <string_view>

namespace fraxform {

enum class TransformKind { sine, cosine };

constexpr std::string_view to_string(TransformKind k) {
  return k == TransformKind::sine ? "sine" : "cosine";
}

}  // namespace fraxform
