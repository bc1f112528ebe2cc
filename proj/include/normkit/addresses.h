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

#ifndef NORMKIT_ADDRESSES_H_
#define NORMKIT_ADDRESSES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normkit/dates.h"
#include "normkit/gazetteer.h"
#include "normkit/noise.h"
#include "normkit/record.h"
#include "normkit/rng.h"

namespace normkit {

struct AddressFields {
  std::string logradouro;
  std::string numero;  // digits or "s/n"
  std::optional<std::string> complemento;
  std::string bairro;
  std::string cidade;
  std::string estado;  // UF code

  bool operator==(const AddressFields &) const = default;
};

bool IsValid(const AddressFields &fields);

// "<logradouro>, <numero>[ <complemento>], <bairro>, <cidade>, <UF>"
std::string CanonicalAddress(const AddressFields &fields);

// Template tokens:
//   {LOGRADOURO} {NUMERO} {COMPLEMENTO} {BAIRRO} {CIDADE}
//   {ESTADO}       UF code
//   {ESTADO_NOME}  full state name
//   {NUM_LABEL}    one of the template's number_labels, picked by the rng
// A bracketed group "[...]" is dropped when the complement is absent and
// must contain {COMPLEMENTO}. Everything else is literal.
enum class AddressToken {
  kLogradouro, kNumero, kComplemento, kBairro, kCidade, kEstado,
  kEstadoNome, kNumLabel,
};

struct AddressPiece {
  std::optional<AddressToken> token;
  std::string literal;
  bool optional_group = false;  // inside "[...]"
};

struct AddressFormatTemplate {
  std::string id;
  std::string text;
  std::vector<std::string> number_labels;
  std::vector<AddressPiece> pieces;

  // Throws Error(kInvalidArgument) on unknown tokens, repeated slots, a
  // missing logradouro, unbalanced brackets, or {NUM_LABEL} without labels.
  static AddressFormatTemplate Parse(std::string id, std::string text,
                                     std::vector<std::string> number_labels);

  bool Uses(AddressToken token) const;
};

std::string RenderAddress(const AddressFields &fields,
                          const AddressFormatTemplate &format,
                          RecordRng &rng);

class AddressInventory {
 public:
  static const AddressInventory &Default();
  static AddressInventory FromJson(std::string_view json_text);
  static AddressInventory FromFile(const std::string &path);

  const std::vector<AddressFormatTemplate> &formats() const {
    return formats_;
  }
  const AddressFormatTemplate *Find(std::string_view id) const;

 private:
  std::vector<AddressFormatTemplate> formats_;
};

inline constexpr int kDefaultPerFormat = 750;
inline constexpr SplitPolicy kDefaultAddressSplit = {17, 5};

enum class ComplementPattern { kApto, kBloco, kCasa, kSala, kAbsent };

struct AddressCorpusConfig {
  uint64_t seed = 7;
  int64_t per_format = kDefaultPerFormat;
  double sem_numero_probability = 0.02;
  // Indexed by ComplementPattern.
  std::array<double, 5> complement_weights = {0.2, 0.1, 0.1, 0.1, 0.5};
  std::optional<SplitPolicy> split;  // kDefaultAddressSplit when unset
  NoiseConfig noise;
  unsigned jobs = 1;
};

// Draws gazetteer entry, numero and complemento for one record.
AddressFields SampleAddress(const std::vector<GazetteerEntry> &gazetteer,
                            const AddressCorpusConfig &config,
                            RecordRng &rng);

// per_format records for every template, interleaved so record i uses
// template i % 22. Throws Error(kGazetteerEmpty) on an empty gazetteer.
Corpus GenerateAddressCorpus(
    const AddressCorpusConfig &config,
    const std::vector<GazetteerEntry> &gazetteer = DefaultGazetteer(),
    const AddressInventory &inventory = AddressInventory::Default());

}  // namespace normkit

#endif  // NORMKIT_ADDRESSES_H_
