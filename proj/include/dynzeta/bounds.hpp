#pragma once
#include <cstdint>

namespace dynzeta {

// Global size limits. Defaults can be overridden through the environment
// variables DYNZETA_ENUM_BOUND and DYNZETA_DEGREE_BOUND.
std::uint64_t enumeration_bound();
std::uint64_t degree_bound();

}  // namespace dynzeta
