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

#ifndef NORMKIT_TEXT_H_
#define NORMKIT_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace normkit {

// UTF-8 <-> code point conversion. Invalid bytes decode as U+FFFD.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(char32_t c);

// Number of code points in a UTF-8 string.
size_t CodePointLength(std::string_view text);

// Lower-cases and strips Latin-1 diacritics ("Março" -> "marco",
// "Nº" -> "no"). Characters outside Latin-1 pass through unchanged.
char32_t FoldChar(char32_t c);
std::string Fold(std::string_view text);

// Case mapping restricted to ASCII and the Latin-1 supplement.
char32_t ToLower(char32_t c);
char32_t ToUpper(char32_t c);
bool IsUpper(char32_t c);

bool IsAsciiDigit(char32_t c);
bool IsLetter(char32_t c);

std::string_view Trim(std::string_view text);
std::vector<std::string> SplitString(std::string_view text, std::string_view sep);
std::string Join(const std::vector<std::string> &parts, std::string_view sep);
bool StartsWith(std::string_view text, std::string_view prefix);
bool EndsWith(std::string_view text, std::string_view suffix);

// Levenshtein distance over code points.
int EditDistance(std::u32string_view a, std::u32string_view b);
int EditDistance(std::string_view a, std::string_view b);

// 64-bit FNV-1a, printed as 16 hex digits. Used to fingerprint corpora.
std::string Fnv1aHex(std::string_view data);

}  // namespace normkit

#endif  // NORMKIT_TEXT_H_
