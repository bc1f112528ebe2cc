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

#include "normkit/addresses.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "normkit/embedded_data.h"
#include "normkit/error.h"
#include "normkit/lexicon.h"
#include "normkit/parallel.h"
#include "normkit/text.h"

namespace normkit {
namespace {

struct TokenName {
  std::string_view name;
  AddressToken token;
};

constexpr TokenName kTokenNames[] = {
    {"LOGRADOURO", AddressToken::kLogradouro},
    {"NUMERO", AddressToken::kNumero},
    {"COMPLEMENTO", AddressToken::kComplemento},
    {"BAIRRO", AddressToken::kBairro},
    {"CIDADE", AddressToken::kCidade},
    {"ESTADO", AddressToken::kEstado},
    {"ESTADO_NOME", AddressToken::kEstadoNome},
    {"NUM_LABEL", AddressToken::kNumLabel},
};

// ESTADO and ESTADO_NOME fill the same slot.
int SlotOf(AddressToken t) {
  if (t == AddressToken::kEstadoNome) return static_cast<int>(AddressToken::kEstado);
  return static_cast<int>(t);
}

bool Clean(std::string_view s) { return !s.empty() && Trim(s) == s; }

}  // namespace

bool IsValid(const AddressFields &f) {
  if (!Clean(f.logradouro) || !Clean(f.bairro) || !Clean(f.cidade)) {
    return false;
  }
  if (!IsUf(f.estado)) return false;
  if (f.numero != "s/n") {
    if (f.numero.empty() ||
        !std::all_of(f.numero.begin(), f.numero.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      return false;
    }
  }
  return !f.complemento || Clean(*f.complemento);
}

std::string CanonicalAddress(const AddressFields &f) {
  std::string out = f.logradouro + ", " + f.numero;
  if (f.complemento) out += " " + *f.complemento;
  out += ", " + f.bairro + ", " + f.cidade + ", " + f.estado;
  return out;
}

AddressFormatTemplate AddressFormatTemplate::Parse(
    std::string id, std::string text, std::vector<std::string> labels) {
  AddressFormatTemplate t;
  t.id = std::move(id);
  t.text = std::move(text);
  t.number_labels = std::move(labels);
  auto fail = [&](const std::string &why) {
    return Error(ErrorCode::kInvalidArgument,
                 "address template " + t.id + " (\"" + t.text + "\"): " + why);
  };

  std::set<int> seen;
  std::string literal;
  bool in_group = false;
  bool group_has_complement = false;
  auto flush = [&] {
    if (!literal.empty()) t.pieces.push_back({std::nullopt, literal, in_group});
    literal.clear();
  };
  for (size_t i = 0; i < t.text.size();) {
    char c = t.text[i];
    if (c == '[') {
      if (in_group) throw fail("nested '['");
      flush();
      in_group = true;
      group_has_complement = false;
      ++i;
    } else if (c == ']') {
      if (!in_group) throw fail("unbalanced ']'");
      if (!group_has_complement) throw fail("group without {COMPLEMENTO}");
      flush();
      in_group = false;
      ++i;
    } else if (c == '{') {
      size_t close = t.text.find('}', i);
      if (close == std::string::npos) throw fail("unterminated token");
      std::string_view name =
          std::string_view(t.text).substr(i + 1, close - i - 1);
      auto it = std::find_if(std::begin(kTokenNames), std::end(kTokenNames),
                             [&](const TokenName &n) { return n.name == name; });
      if (it == std::end(kTokenNames)) {
        throw fail("unknown token {" + std::string(name) + "}");
      }
      if (!seen.insert(SlotOf(it->token)).second) {
        throw fail("slot repeated by {" + std::string(name) + "}");
      }
      if (it->token == AddressToken::kComplemento) {
        if (!in_group) throw fail("{COMPLEMENTO} must sit inside [...]");
        group_has_complement = true;
      }
      flush();
      t.pieces.push_back({it->token, "", in_group});
      i = close + 1;
    } else if (c == '}') {
      throw fail("unbalanced '}'");
    } else {
      literal.push_back(c);
      ++i;
    }
  }
  if (in_group) throw fail("unterminated '['");
  flush();
  if (!seen.count(SlotOf(AddressToken::kLogradouro))) {
    throw fail("missing {LOGRADOURO}");
  }
  if (seen.count(SlotOf(AddressToken::kNumLabel)) && t.number_labels.empty()) {
    throw fail("{NUM_LABEL} without number_labels");
  }
  return t;
}

bool AddressFormatTemplate::Uses(AddressToken token) const {
  return std::any_of(pieces.begin(), pieces.end(),
                     [&](const AddressPiece &p) { return p.token == token; });
}

std::string RenderAddress(const AddressFields &f,
                          const AddressFormatTemplate &format,
                          RecordRng &rng) {
  std::string out;
  for (const AddressPiece &p : format.pieces) {
    if (p.optional_group && !f.complemento) continue;
    if (!p.token) {
      out += p.literal;
      continue;
    }
    switch (*p.token) {
      case AddressToken::kLogradouro: out += f.logradouro; break;
      case AddressToken::kNumero: out += f.numero; break;
      case AddressToken::kComplemento: out += *f.complemento; break;
      case AddressToken::kBairro: out += f.bairro; break;
      case AddressToken::kCidade: out += f.cidade; break;
      case AddressToken::kEstado: out += f.estado; break;
      case AddressToken::kEstadoNome: out += StateName(f.estado); break;
      case AddressToken::kNumLabel: {
        int64_t k = rng.Uniform(
            0, static_cast<int64_t>(format.number_labels.size()) - 1);
        out += format.number_labels[k];
        break;
      }
    }
  }
  return out;
}

const AddressInventory &AddressInventory::Default() {
  static const AddressInventory inventory = FromJson(EmbeddedAddressFormats());
  return inventory;
}

AddressInventory AddressInventory::FromJson(std::string_view json_text) {
  AddressInventory inv;
  try {
    auto j = nlohmann::json::parse(json_text);
    const nlohmann::json &list = j.is_array() ? j : j.at("formats");
    std::set<std::string> ids;
    for (const auto &f : list) {
      auto t = AddressFormatTemplate::Parse(
          f.at("id").get<std::string>(), f.at("template").get<std::string>(),
          f.value("number_labels", std::vector<std::string>{}));
      if (!ids.insert(t.id).second) {
        throw Error(ErrorCode::kInvalidArgument, "duplicate id " + t.id);
      }
      inv.formats_.push_back(std::move(t));
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("address inventory: ") + e.what());
  }
  return inv;
}

AddressInventory AddressInventory::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return FromJson(ss.str());
}

const AddressFormatTemplate *AddressInventory::Find(std::string_view id) const {
  for (const auto &f : formats_) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

AddressFields SampleAddress(const std::vector<GazetteerEntry> &gazetteer,
                            const AddressCorpusConfig &config,
                            RecordRng &rng) {
  const GazetteerEntry &e = gazetteer[rng.Uniform(
      0, static_cast<int64_t>(gazetteer.size()) - 1)];
  AddressFields f;
  f.logradouro = e.logradouro;
  f.bairro = e.bairro;
  f.cidade = e.cidade;
  f.estado = e.estado;
  if (rng.Bernoulli(config.sem_numero_probability)) {
    f.numero = "s/n";
  } else {
    f.numero = std::to_string(rng.Uniform(1, 9999));
  }
  switch (static_cast<ComplementPattern>(
      rng.Weighted(config.complement_weights))) {
    case ComplementPattern::kApto:
      f.complemento = "apto " + std::to_string(rng.Uniform(1, 999));
      break;
    case ComplementPattern::kBloco:
      f.complemento =
          "bloco " + std::string(1, static_cast<char>('A' + rng.Uniform(0, 7)));
      break;
    case ComplementPattern::kCasa:
      f.complemento = "casa " + std::to_string(rng.Uniform(1, 20));
      break;
    case ComplementPattern::kSala:
      f.complemento = "sala " + std::to_string(rng.Uniform(1, 2000));
      break;
    case ComplementPattern::kAbsent:
      break;
  }
  return f;
}

Corpus GenerateAddressCorpus(const AddressCorpusConfig &config,
                             const std::vector<GazetteerEntry> &gazetteer,
                             const AddressInventory &inventory) {
  if (gazetteer.empty()) {
    throw Error(ErrorCode::kGazetteerEmpty, "no gazetteer entries");
  }
  if (config.per_format < 0) {
    throw Error(ErrorCode::kInvalidArgument, "per_format must be >= 0");
  }
  if (config.sem_numero_probability < 0 || config.sem_numero_probability > 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "sem_numero_probability must lie in [0, 1]");
  }
  if (std::any_of(config.complement_weights.begin(),
                  config.complement_weights.end(),
                  [](double w) { return w < 0; }) ||
      std::none_of(config.complement_weights.begin(),
                   config.complement_weights.end(),
                   [](double w) { return w > 0; })) {
    throw Error(ErrorCode::kInvalidArgument,
                "complement weights must be >= 0 with one positive");
  }
  config.noise.Validate();
  const auto &formats = inventory.formats();
  if (formats.empty()) {
    throw Error(ErrorCode::kInventoryTooSmall, "no address formats");
  }

  std::vector<std::string> ids;
  for (const auto &f : formats) ids.push_back(f.id);
  SplitPolicy policy = config.split.value_or(kDefaultAddressSplit);
  FormatSplit split = SplitByFamily(ids, ids, policy, config.seed, 100);

  Corpus corpus;
  SplitManifest &m = corpus.manifest;
  m.train_formats = split.train;
  m.test_formats = split.test;
  m.seed = config.seed;
  m.kind = "address";
  m.language = "pt";
  m.noise_level = config.noise.level;
  m.generator = {
      {"command", "gen addresses"},
      {"per_format", config.per_format},
      {"split", std::to_string(policy.train) + ":" +
                    std::to_string(policy.test)},
      {"sem_numero_probability", config.sem_numero_probability},
      {"complement_weights", config.complement_weights},
      {"gazetteer_entries", gazetteer.size()},
      {"noise_seed", config.noise.seed},
      {"ops_per_record", config.noise.ops_per_record}};

  size_t n = static_cast<size_t>(config.per_format) * formats.size();
  corpus.records.resize(n);
  ParallelFor(n, config.jobs, [&](size_t i) {
    RecordRng rng(config.seed, i, Stream::kPayload);
    const AddressFormatTemplate &f = formats[i % formats.size()];
    AddressFields fields = SampleAddress(gazetteer, config, rng);
    RecordRng decoration(config.seed, i, Stream::kDecoration);
    Record r;
    r.input = RenderAddress(fields, f, decoration);
    r.target = CanonicalAddress(fields);
    r.format_id = f.id;
    r.language = Language::kPt;
    r.task = Task::kAddress;
    corpus.records[i] = Corrupt(r, i, config.noise);
  });
  return corpus;
}

}  // namespace normkit
