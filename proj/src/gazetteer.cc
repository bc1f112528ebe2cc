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

#include "normkit/gazetteer.h"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "httplib.h"
#include "json.hpp"
#include "normkit/embedded_data.h"
#include "normkit/error.h"
#include "normkit/lexicon.h"
#include "normkit/text.h"

namespace normkit {
namespace {

bool AllDigits(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::string NormalizeCep(std::string_view raw) {
  std::string cep(Trim(raw));
  size_t dash = cep.find('-');
  if (dash != std::string::npos) cep.erase(dash, 1);
  return cep;
}

std::string CsvField(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

auto Key(const GazetteerEntry &e) {
  return std::tie(e.cep, e.logradouro, e.bairro, e.cidade, e.estado);
}

}  // namespace

std::optional<std::string> ValidateEntry(GazetteerEntry &e) {
  e.cep = NormalizeCep(e.cep);
  for (std::string *f : {&e.logradouro, &e.bairro, &e.cidade, &e.estado}) {
    *f = std::string(Trim(*f));
  }
  if (e.cep.size() != 8 || !AllDigits(e.cep)) {
    return "cep '" + e.cep + "' is not 8 digits";
  }
  if (e.logradouro.empty()) return std::string("empty logradouro");
  if (e.bairro.empty()) return std::string("empty bairro");
  if (e.cidade.empty()) return std::string("empty cidade");
  if (!IsUf(e.estado)) return "unknown UF '" + e.estado + "'";
  return std::nullopt;
}

std::vector<std::string> ParseCsvLine(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

GazetteerLoad IngestGazetteerCsv(std::istream &in) {
  GazetteerLoad load;
  std::set<std::tuple<std::string, std::string, std::string, std::string,
                      std::string>>
      seen;
  std::string line;
  size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    auto cols = ParseCsvLine(line);
    if (!header_seen) {
      header_seen = true;
      std::string first = cols.empty() ? "" : std::string(Trim(cols[0]));
      if (StartsWith(first, "\xEF\xBB\xBF")) first = first.substr(3);
      if (first == "cep") continue;
    }
    auto bad = [&](std::string reason) {
      ++load.malformed_rows;
      load.problems.push_back({lineno, std::move(reason)});
    };
    if (cols.size() != 5) {
      bad("expected 5 columns, got " + std::to_string(cols.size()));
      continue;
    }
    GazetteerEntry e{cols[0], cols[1], cols[2], cols[3], cols[4]};
    if (auto why = ValidateEntry(e)) {
      bad(*why);
      continue;
    }
    if (!seen.insert(Key(e)).second) {
      ++load.duplicates;
      continue;
    }
    load.entries.push_back(std::move(e));
  }
  return load;
}

GazetteerLoad IngestGazetteerFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return IngestGazetteerCsv(in);
}

void WriteGazetteerCsv(std::ostream &out,
                       const std::vector<GazetteerEntry> &entries) {
  out << "cep,logradouro,bairro,cidade,estado\n";
  for (const auto &e : entries) {
    out << e.cep << ',' << CsvField(e.logradouro) << ',' << CsvField(e.bairro)
        << ',' << CsvField(e.cidade) << ',' << e.estado << '\n';
  }
}

const std::vector<GazetteerEntry> &DefaultGazetteer() {
  static const std::vector<GazetteerEntry> entries = [] {
    std::istringstream in{std::string(EmbeddedGazetteer())};
    return IngestGazetteerCsv(in).entries;
  }();
  return entries;
}

std::optional<GazetteerEntry> EntryFromApiJson(std::string_view cep,
                                               std::string_view body) {
  auto j = nlohmann::json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (j.value("erro", false)) return std::nullopt;
  auto pick = [&](std::initializer_list<const char *> keys) {
    for (const char *k : keys) {
      if (j.contains(k) && j[k].is_string()) return j[k].get<std::string>();
    }
    return std::string();
  };
  GazetteerEntry e;
  e.cep = std::string(cep);
  e.logradouro = pick({"logradouro", "street"});
  e.bairro = pick({"bairro", "neighborhood"});
  e.cidade = pick({"localidade", "cidade", "city"});
  e.estado = pick({"uf", "estado", "state"});
  if (ValidateEntry(e)) return std::nullopt;
  return e;
}

CepClient::CepClient(CepClientConfig config)
    : config_(std::move(config)),
      sleeper_([](std::chrono::milliseconds d) {
        std::this_thread::sleep_for(d);
      }) {
  const std::string &url = config_.base_url;
  size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "base URL needs a scheme: '" + url + "'");
  }
  if (url.compare(0, scheme_end, "http") != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "only http:// base URLs are supported: '" + url + "'");
  }
  size_t path_start = url.find('/', scheme_end + 3);
  scheme_host_ = url.substr(0, path_start);
  path_template_ =
      path_start == std::string::npos ? "/" : url.substr(path_start);
  if (path_template_.find("{cep}") == std::string::npos) {
    if (path_template_.back() != '/') path_template_ += '/';
    path_template_ += "{cep}";
  }
  if (config_.max_attempts < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_attempts must be >= 1");
  }
  if (!config_.cache_path.empty()) {
    std::ifstream in(config_.cache_path);
    if (in) {
      auto j = nlohmann::json::parse(in, nullptr, false);
      if (j.is_object()) {
        for (auto &[cep, v] : j.items()) {
          GazetteerEntry e{cep, v.value("logradouro", ""),
                           v.value("bairro", ""), v.value("cidade", ""),
                           v.value("estado", "")};
          if (!ValidateEntry(e)) cache_[e.cep] = e;
        }
      }
    }
  }
}

std::optional<GazetteerEntry> CepClient::FromCache(
    const std::string &cep) const {
  auto it = cache_.find(cep);
  if (it == cache_.end()) return std::nullopt;
  return it->second;
}

GazetteerEntry CepClient::Lookup(std::string_view raw_cep) {
  std::string cep = NormalizeCep(raw_cep);
  if (cep.size() != 8 || !AllDigits(cep)) {
    throw Error(ErrorCode::kLookupFailure, "invalid cep '" + cep + "'");
  }
  if (auto hit = FromCache(cep)) return *hit;

  std::string path = path_template_;
  path.replace(path.find("{cep}"), 5, cep);
  httplib::Headers headers;
  if (!config_.credential_env.empty()) {
    if (const char *token = std::getenv(config_.credential_env.c_str());
        token && *token) {
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }
  }

  std::chrono::milliseconds backoff = config_.initial_backoff;
  std::string last_error;
  for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
    httplib::Client client(scheme_host_);
    client.set_connection_timeout(config_.timeout);
    client.set_read_timeout(config_.timeout);
    auto res = client.Get(path, headers);
    if (!res) {
      last_error = httplib::to_string(res.error());
    } else if (res->status == 200) {
      auto entry = EntryFromApiJson(cep, res->body);
      if (!entry) {
        throw Error(ErrorCode::kLookupFailure,
                    cep + ": response lacks a valid address");
      }
      cache_[cep] = *entry;
      return *entry;
    } else if (res->status >= 400 && res->status < 500 &&
               res->status != 429) {
      throw Error(ErrorCode::kLookupFailure,
                  cep + ": HTTP " + std::to_string(res->status));
    } else {
      last_error = "HTTP " + std::to_string(res->status);
    }
    if (attempt < config_.max_attempts) {
      sleeper_(backoff);
      backoff = std::min(backoff * 2, config_.max_backoff);
    }
  }
  throw Error(ErrorCode::kLookupFailure,
              cep + ": " + last_error + " after " +
                  std::to_string(config_.max_attempts) + " attempts");
}

FetchResult CepClient::FetchAll(const std::vector<std::string> &ceps) {
  FetchResult result;
  std::set<std::string> done;
  for (const auto &raw : ceps) {
    std::string cep = NormalizeCep(raw);
    if (!done.insert(cep).second) continue;
    if (auto hit = FromCache(cep)) {
      ++result.cache_hits;
      result.entries.push_back(*hit);
      continue;
    }
    try {
      result.entries.push_back(Lookup(cep));
    } catch (const Error &e) {
      result.failures.push_back({cep, e.what()});
    }
  }
  SaveCache();
  return result;
}

void CepClient::SaveCache() const {
  if (config_.cache_path.empty()) return;
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto &[cep, e] : cache_) {
    j[cep] = {{"logradouro", e.logradouro},
              {"bairro", e.bairro},
              {"cidade", e.cidade},
              {"estado", e.estado}};
  }
  std::ofstream out(config_.cache_path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + config_.cache_path);
  out << j.dump(2) << '\n';
}

}  // namespace normkit
