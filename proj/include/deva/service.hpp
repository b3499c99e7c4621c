// Copyright 2026 The Deva IME Authors.
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

#ifndef DEVA_SERVICE_HPP_
#define DEVA_SERVICE_HPP_

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "deva/char_table.hpp"
#include "deva/engine.hpp"
#include "deva/lexicon.hpp"
#include "json.hpp"

namespace httplib {
class Server;
}

namespace deva {

struct ServiceConfig {
  std::string lexicon_path;  // empty: serve an empty lexicon
  int port = 8080;
  std::size_t max_suggestions = 5;
  bool cors = true;
  std::string cors_origin = "*";
};

inline constexpr std::size_t kMaxHttpLimit = 25;

// Throws Error{InvalidArgument} unless port is in [1, 65535] and
// max_suggestions >= 1.
void validate(const ServiceConfig& config);

// Reads a lexicon file; an empty path yields an empty lexicon.
Lexicon load_lexicon_file(const std::string& path, const CharacterTable& table);

nlohmann::json suggestions_to_json(std::string_view query,
                                   const std::vector<Suggestion>& suggestions);

/// Read-only suggestion backend shared by the HTTP handlers. Requests made
/// before a lexicon is installed are answered with 503.
class SuggestService {
 public:
  explicit SuggestService(const CharacterTable& table) : table_(table) {}

  void install(Lexicon lexicon);
  bool ready() const;
  std::size_t entries() const;

  // Untypeable tokens give an empty suggestion list.
  nlohmann::json suggest(std::string_view query, std::size_t limit) const;
  nlohmann::json translit(std::string_view text) const;

 private:
  std::shared_ptr<const Lexicon> lexicon() const;

  const CharacterTable& table_;
  mutable std::mutex mutex_;
  std::shared_ptr<const Lexicon> lexicon_;
};

void install_routes(httplib::Server& server, const SuggestService& service,
                    const ServiceConfig& config);

}  // namespace deva

#endif  // DEVA_SERVICE_HPP_
