// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "fetch.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "httplib.h"
#include "json.hpp"

#include "banzhaf/dataset.hpp"
#include "banzhaf/errors.hpp"
#include "banzhaf/sha256.hpp"

namespace banzhaf::cli {

namespace {

using nlohmann::ordered_json;

struct ManifestFile {
  std::string name;
  std::string url;
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::optional<std::string> sha256;
};

struct Manifest {
  ordered_json raw;
  std::vector<ManifestFile> files;
};

std::filesystem::path manifest_path(const std::filesystem::path& dir,
                                    const std::filesystem::path& manifest) {
  return manifest.empty() ? dir / "spect.manifest.json" : manifest;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open manifest " + path.string());
  Manifest m;
  try {
    in >> m.raw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("manifest " + path.string() + ": invalid JSON: " +
                     e.what());
  }
  if (!m.raw.is_object() || !m.raw.contains("files") ||
      !m.raw.at("files").is_array() || m.raw.at("files").empty())
    throw ParseError("manifest " + path.string() +
                     " needs a non-empty \"files\" array");
  for (const auto& f : m.raw.at("files")) {
    ManifestFile mf;
    mf.name = f.at("name").get<std::string>();
    mf.url = f.at("url").get<std::string>();
    mf.rows = f.at("rows").get<std::size_t>();
    mf.columns = f.at("columns").get<std::size_t>();
    if (f.contains("sha256") && !f.at("sha256").is_null())
      mf.sha256 = f.at("sha256").get<std::string>();
    m.files.push_back(std::move(mf));
  }
  return m;
}

// Structural validation: strict binary CSV, expected shape. Returns the
// file's SHA-256 so callers can verify or record it.
std::string validate_file(const ManifestFile& expect, const std::string& body,
                          const std::string& origin) {
  const Dataset data =
      parse_csv_text(body, CsvSchema{HeaderMode::no, std::nullopt}, origin);
  if (data.size() != expect.rows)
    throw ArgumentError(origin + ": expected " + std::to_string(expect.rows) +
                        " rows, found " + std::to_string(data.size()));
  if (static_cast<std::size_t>(data.n) + 1 != expect.columns)
    throw ArgumentError(origin + ": expected " +
                        std::to_string(expect.columns) + " columns, found " +
                        std::to_string(data.n + 1));
  return sha256_hex(body);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string download(const std::string& url) {
  const std::string https = "https://";
  if (url.compare(0, https.size(), https) != 0)
    throw FetchError("unsupported URL (https only): " + url);
  const std::size_t slash = url.find('/', https.size());
  if (slash == std::string::npos) throw FetchError("malformed URL: " + url);
  const std::string host = url.substr(https.size(), slash - https.size());
  const std::string path = url.substr(slash);

  httplib::SSLClient client(host);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(60, 0);
  client.set_follow_location(true);
  const httplib::Result res = client.Get(path);
  if (!res)
    throw FetchError("could not reach " + host + " (" +
                     httplib::to_string(res.error()) + ")");
  if (res->status != 200)
    throw FetchError("GET " + url + " returned status " +
                     std::to_string(res->status));
  return res->body;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path.string());
  out << body;
  if (!out) throw ArgumentError("failed writing " + path.string());
}

}  // namespace

void fetch_spect(const std::filesystem::path& dir,
                 const std::filesystem::path& manifest_file, bool record,
                 std::ostream& log) {
  const std::filesystem::path mpath = manifest_path(dir, manifest_file);
  Manifest manifest = load_manifest(mpath);
  std::filesystem::create_directories(dir);

  bool updated = false;
  for (std::size_t i = 0; i < manifest.files.size(); ++i) {
    ManifestFile& mf = manifest.files[i];
    const std::filesystem::path target = dir / mf.name;
    std::string body;
    if (std::filesystem::exists(target)) {
      body = read_file(target);
      log << mf.name << ": already present\n";
    } else {
      log << mf.name << ": downloading " << mf.url << "\n";
      try {
        body = download(mf.url);
      } catch (const FetchError& e) {
        throw FetchError(
            std::string(e.what()) + "; place " + mf.name + " into " +
            dir.string() +
            " by hand (URLs are in the manifest) or run "
            "scripts/fetch_spect.sh on a networked machine, then rerun");
      }
    }

    const std::string digest = validate_file(mf, body, target.string());
    if (mf.sha256 && *mf.sha256 != digest)
      throw ArgumentError(target.string() +
                          ": SHA-256 mismatch against the manifest (got " +
                          digest + ", manifest has " + *mf.sha256 +
                          "); delete the file to re-fetch, or re-record if "
                          "the upstream file legitimately changed");
    if (!std::filesystem::exists(target)) write_file(target, body);
    log << mf.name << ": " << mf.rows << " rows, sha256 " << digest << "\n";

    if (record && (!mf.sha256 || *mf.sha256 != digest)) {
      manifest.raw.at("files").at(i)["sha256"] = digest;
      updated = true;
    }
  }

  if (record && updated) {
    write_file(mpath, manifest.raw.dump(2) + "\n");
    log << "recorded hashes in " << mpath.string() << "\n";
  }
}

bool spect_available(const std::filesystem::path& dir,
                     const std::filesystem::path& manifest_file) {
  try {
    const Manifest manifest = load_manifest(manifest_path(dir, manifest_file));
    for (const ManifestFile& mf : manifest.files) {
      const std::filesystem::path target = dir / mf.name;
      if (!std::filesystem::exists(target)) return false;
      const std::string body = read_file(target);
      const std::string digest = validate_file(mf, body, target.string());
      if (mf.sha256 && *mf.sha256 != digest) return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace banzhaf::cli
