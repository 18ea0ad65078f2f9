// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

namespace banzhaf::cli {

// Ensures the two SPECT heart-imaging partitions exist in dir, downloading
// from UCI when absent, and validates them against the checksum manifest
// (structure always; SHA-256 when the manifest has recorded hashes).
// record=true writes freshly computed hashes back into the manifest.
// manifest empty -> "<dir>/spect.manifest.json".
//
// Throws FetchError when the host is unreachable and files are absent, and
// ParseError/ArgumentError when present files fail validation.
void fetch_spect(const std::filesystem::path& dir,
                 const std::filesystem::path& manifest, bool record,
                 std::ostream& log);

// True when both partitions are present and valid; never touches the network.
bool spect_available(const std::filesystem::path& dir,
                     const std::filesystem::path& manifest);

}  // namespace banzhaf::cli
