#include "maxcut/fetch.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

namespace maxcut {
namespace {

bool is_hex_digest(const std::string& s) {
  return s.size() == 64 && std::all_of(s.begin(), s.end(), [](unsigned char c) {
           return std::isdigit(c) || (c >= 'a' && c <= 'f');
         });
}

bool is_plain_name(const std::string& s) {
  return !s.empty() && s.find('/') == std::string::npos && s.find('\\') == std::string::npos &&
         s.find("..") == std::string::npos;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

/// Split "https://host:port/some/path" into the client base and request path.
std::pair<std::string, std::string> split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw std::runtime_error("unsupported url (expected http:// or https://): " + url);
  }
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw std::runtime_error("unsupported url scheme: " + scheme);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    return {url, "/"};
  }
  return {url.substr(0, path_start), url.substr(path_start)};
}

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (ctx_ == nullptr || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("failed to initialize SHA-256 context");
    }
  }
  ~Sha256() { EVP_MD_CTX_free(ctx_); }
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(const char* data, std::size_t len) {
    if (EVP_DigestUpdate(ctx_, data, len) != 1) {
      throw std::runtime_error("SHA-256 update failed");
    }
  }

  std::string hex_digest() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> raw{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_, raw.data(), &len) != 1) {
      throw std::runtime_error("SHA-256 finalization failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
      out.push_back(hex[raw[i] >> 4]);
      out.push_back(hex[raw[i] & 0xf]);
    }
    return out;
  }

 private:
  EVP_MD_CTX* ctx_;
};

void quarantine(const std::filesystem::path& file, const std::filesystem::path& dest_dir) {
  const std::filesystem::path qdir = dest_dir / "quarantine";
  std::filesystem::create_directories(qdir);
  std::filesystem::rename(file, qdir / file.filename());
}

FetchOutcome fetch_one(const ManifestEntry& entry, const std::filesystem::path& dest_dir,
                       bool offline) {
  FetchOutcome outcome;
  outcome.entry = entry;
  const std::filesystem::path target = dest_dir / entry.name;

  if (std::filesystem::exists(target)) {
    const std::string digest = sha256_file(target);
    if (digest == entry.sha256) {
      outcome.status = FetchStatus::AlreadyVerified;
      return outcome;
    }
    quarantine(target, dest_dir);
    outcome.detail = "existing file had digest " + digest + ", moved to quarantine/";
    if (offline) {
      outcome.status = FetchStatus::ChecksumMismatch;
      return outcome;
    }
  }

  if (offline) {
    outcome.status = FetchStatus::MissingOffline;
    outcome.detail = "offline mode; file not present";
    return outcome;
  }

  std::string base;
  std::string request_path;
  try {
    std::tie(base, request_path) = split_url(entry.url);
  } catch (const std::exception& e) {
    outcome.status = FetchStatus::DownloadFailed;
    outcome.detail = e.what();
    return outcome;
  }

  const std::filesystem::path partial = dest_dir / (entry.name + ".part");
  {
    std::ofstream out(partial, std::ios::binary | std::ios::trunc);
    if (!out) {
      outcome.status = FetchStatus::DownloadFailed;
      outcome.detail = "cannot open " + partial.string() + " for writing";
      return outcome;
    }

    httplib::Client client(base);
    client.set_follow_location(true);
    client.set_connection_timeout(30);
    client.set_read_timeout(120);

    Sha256 hasher;
    auto res = client.Get(request_path, [&](const char* data, size_t len) {
      out.write(data, static_cast<std::streamsize>(len));
      hasher.update(data, len);
      return static_cast<bool>(out);
    });
    if (!res || res->status != 200 || !out) {
      out.close();
      std::filesystem::remove(partial);
      outcome.status = FetchStatus::DownloadFailed;
      if (!res) {
        outcome.detail = "request failed: " + httplib::to_string(res.error());
      } else if (res->status != 200) {
        outcome.detail = "HTTP status " + std::to_string(res->status);
      } else {
        outcome.detail = "write failed for " + partial.string();
      }
      return outcome;
    }
    out.close();

    const std::string digest = hasher.hex_digest();
    if (digest != entry.sha256) {
      quarantine(partial, dest_dir);
      outcome.status = FetchStatus::ChecksumMismatch;
      outcome.detail = "downloaded digest " + digest + " != expected " + entry.sha256 +
                       ", moved to quarantine/";
      return outcome;
    }
  }

  std::filesystem::rename(partial, target);
  outcome.status = FetchStatus::Downloaded;
  return outcome;
}

}  // namespace

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open manifest: " + path.string());
  }
  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name) || name.front() == '#') {
      continue;  // blank or comment line
    }
    ManifestEntry entry;
    entry.name = name;
    std::string extra;
    if (!(fields >> entry.url >> entry.sha256) || (fields >> extra)) {
      throw std::runtime_error("manifest line " + std::to_string(line_no) +
                               ": expected '<name> <url> <sha256>'");
    }
    if (!is_plain_name(entry.name)) {
      throw std::runtime_error("manifest line " + std::to_string(line_no) +
                               ": name must be a plain file name: " + entry.name);
    }
    entry.sha256 = lower(entry.sha256);
    if (!is_hex_digest(entry.sha256)) {
      throw std::runtime_error("manifest line " + std::to_string(line_no) +
                               ": digest must be 64 hex characters");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file for hashing: " + path.string());
  }
  Sha256 hasher;
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    hasher.update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  return hasher.hex_digest();
}

bool FetchReport::ok() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const FetchOutcome& o) {
    return o.status == FetchStatus::AlreadyVerified || o.status == FetchStatus::Downloaded;
  });
}

FetchReport fetch_instances(const std::filesystem::path& manifest_path,
                            const std::filesystem::path& dest_dir, bool offline) {
  const std::vector<ManifestEntry> entries = load_manifest(manifest_path);
  std::filesystem::create_directories(dest_dir);
  FetchReport report;
  report.outcomes.reserve(entries.size());
  for (const ManifestEntry& entry : entries) {
    report.outcomes.push_back(fetch_one(entry, dest_dir, offline));
  }
  return report;
}

}  // namespace maxcut
