// Copyright 2026 The normkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NORMKIT_GAZETTEER_H_
#define NORMKIT_GAZETTEER_H_

#include <chrono>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace normkit {

struct GazetteerEntry {
  std::string cep;  // 8 digits, no hyphen
  std::string logradouro;
  std::string bairro;
  std::string cidade;
  std::string estado;  // UF code

  bool operator==(const GazetteerEntry &) const = default;
};

struct RowProblem {
  size_t line = 0;
  std::string reason;
};

struct GazetteerLoad {
  std::vector<GazetteerEntry> entries;
  size_t malformed_rows = 0;
  size_t duplicates = 0;
  std::vector<RowProblem> problems;
};

// Returns the reason a row is invalid, or nullopt. Normalizes the CEP
// (strips one hyphen) and trims fields in place.
std::optional<std::string> ValidateEntry(GazetteerEntry &entry);

// Splits one CSV record. Handles double-quoted fields with "" escapes.
std::vector<std::string> ParseCsvLine(std::string_view line);

// Reads `cep,logradouro,bairro,cidade,estado`. Invalid rows are skipped and
// counted; exact duplicates are dropped. An empty stream yields no entries.
GazetteerLoad IngestGazetteerCsv(std::istream &in);
GazetteerLoad IngestGazetteerFile(const std::string &path);
void WriteGazetteerCsv(std::ostream &out,
                       const std::vector<GazetteerEntry> &entries);

// The shipped fixture (data/gazetteer.csv).
const std::vector<GazetteerEntry> &DefaultGazetteer();

struct CepClientConfig {
  // "http://host:port/ws/{cep}/json"; "/{cep}" is appended when the
  // placeholder is missing.
  std::string base_url;
  // Name of the environment variable holding an API token. When set and
  // non-empty the token is sent as "Authorization: Bearer <token>".
  std::string credential_env = "NORMKIT_CEP_TOKEN";
  // JSON object keyed by CEP. Empty disables caching.
  std::string cache_path;
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  std::chrono::milliseconds max_backoff{2000};
  std::chrono::seconds timeout{10};
};

struct LookupFailure {
  std::string cep;
  std::string reason;
};

struct FetchResult {
  std::vector<GazetteerEntry> entries;
  std::vector<LookupFailure> failures;
  size_t cache_hits = 0;
};

class CepClient {
 public:
  explicit CepClient(CepClientConfig config);

  // Cache first, then the network with bounded exponential backoff.
  // Throws Error(kLookupFailure) once attempts are exhausted or the answer
  // cannot be turned into a valid entry.
  GazetteerEntry Lookup(std::string_view cep);

  // Looks up every CEP, recording failures instead of throwing, and saves
  // the cache afterwards.
  FetchResult FetchAll(const std::vector<std::string> &ceps);

  void SaveCache() const;
  size_t cache_size() const { return cache_.size(); }

  // Replaces the sleep between retries (tests).
  void set_sleeper(std::function<void(std::chrono::milliseconds)> sleeper) {
    sleeper_ = std::move(sleeper);
  }

 private:
  std::optional<GazetteerEntry> FromCache(const std::string &cep) const;

  CepClientConfig config_;
  std::string scheme_host_;
  std::string path_template_;
  std::map<std::string, GazetteerEntry> cache_;
  std::function<void(std::chrono::milliseconds)> sleeper_;
};

// Maps a CEP API response onto an entry. Accepts ViaCEP-style keys
// (logradouro, bairro, localidade, uf) and the CSV column names.
std::optional<GazetteerEntry> EntryFromApiJson(std::string_view cep,
                                               std::string_view body);

}  // namespace normkit

#endif  // NORMKIT_GAZETTEER_H_
