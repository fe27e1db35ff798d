#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace maxcut {

/// One line of a download manifest: "<name> <url> <sha256>".
struct ManifestEntry {
  std::string name;
  std::string url;
  std::string sha256;  // lowercase hex, 64 chars

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

/// Parse a manifest file. '#' lines and blank lines are ignored. Names must
/// be plain file names (no path separators, no ".."); digests must be 64 hex
/// characters. Errors carry 1-based line numbers in the message.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

/// Hex-encoded SHA-256 of a file's contents.
std::string sha256_file(const std::filesystem::path& path);

enum class FetchStatus {
  AlreadyVerified,   // file existed and matched its digest; no network touched
  Downloaded,        // fetched and verified
  ChecksumMismatch,  // digest mismatch; offending file moved to quarantine/
  DownloadFailed,    // network or HTTP error
  MissingOffline,    // offline mode and the file is absent
};

struct FetchOutcome {
  ManifestEntry entry;
  FetchStatus status = FetchStatus::DownloadFailed;
  std::string detail;  // human-readable elaboration (HTTP status, digests, ...)
};

struct FetchReport {
  std::vector<FetchOutcome> outcomes;

  /// True when every manifest entry is present on disk and verified.
  bool ok() const;
};

/// Ensure every manifest entry exists in dest_dir with a verified digest.
/// Existing verified files are never re-downloaded or overwritten; existing
/// files that fail verification are moved to dest_dir/quarantine/ before any
/// download attempt. Downloads land in a temporary file and are renamed into
/// place only after their digest checks out. With offline=true the network
/// is never touched and missing files are reported as MissingOffline.
FetchReport fetch_instances(const std::filesystem::path& manifest_path,
                            const std::filesystem::path& dest_dir, bool offline = false);

}  // namespace maxcut
