// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

namespace banzhaf {

inline constexpr std::string_view kLibraryVersion = "1.0.0";

// Version tag carried by every report and certificate; readers refuse files
// whose major version differs.
inline constexpr std::string_view kSpecVersion = "1.0.0";

}  // namespace banzhaf
