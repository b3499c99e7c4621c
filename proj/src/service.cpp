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

#include "deva/service.hpp"

#include <charconv>
#include <fstream>

#include "deva/error.hpp"
#include "httplib.h"

namespace deva {

namespace {

constexpr const char* kJsonType = "application/json; charset=utf-8";

void reply(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(), kJsonType);
}

}  // namespace

void validate(const ServiceConfig& config) {
  if (config.port < 1 || config.port > 65535) {
    throw Error(ErrorKind::InvalidArgument, "port must be in [1, 65535]");
  }
  if (config.max_suggestions == 0) {
    throw Error(ErrorKind::InvalidArgument, "max suggestions must be >= 1");
  }
}

Lexicon load_lexicon_file(const std::string& path, const CharacterTable& table) {
  if (path.empty()) return Lexicon{};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedFile, "cannot open lexicon '" + path + "'");
  return Lexicon::load(in, table);
}

nlohmann::json suggestions_to_json(std::string_view query,
                                   const std::vector<Suggestion>& suggestions) {
  nlohmann::json list = nlohmann::json::array();
  for (const Suggestion& s : suggestions) {
    list.push_back({{"word", s.word},
                    {"frequency", s.frequency},
                    {"source", std::string(to_string(s.source))}});
  }
  return {{"query", std::string(query)}, {"suggestions", std::move(list)}};
}

void SuggestService::install(Lexicon lexicon) {
  auto loaded = std::make_shared<const Lexicon>(std::move(lexicon));
  std::lock_guard lock(mutex_);
  lexicon_ = std::move(loaded);
}

std::shared_ptr<const Lexicon> SuggestService::lexicon() const {
  std::lock_guard lock(mutex_);
  return lexicon_;
}

bool SuggestService::ready() const { return lexicon() != nullptr; }

std::size_t SuggestService::entries() const {
  const auto lex = lexicon();
  return lex ? lex->size() : 0;
}

nlohmann::json SuggestService::suggest(std::string_view query, std::size_t limit) const {
  const auto lex = lexicon();
  if (!lex) throw Error(ErrorKind::MissingData, "lexicon not loaded");
  const Engine engine(table_, *lex, EngineConfig{limit, EngineConfig{}.path_limit});
  std::vector<Suggestion> suggestions;
  try {
    suggestions = engine.suggest(query);
  } catch (const Error&) {
    // Untypeable token.
  }
  return suggestions_to_json(query, suggestions);
}

nlohmann::json SuggestService::translit(std::string_view text) const {
  const auto lex = lexicon();
  if (!lex) throw Error(ErrorKind::MissingData, "lexicon not loaded");
  const Engine engine(table_, *lex);
  return {{"text", engine.transliterate_sentence(text)}};
}

void install_routes(httplib::Server& server, const SuggestService& service,
                    const ServiceConfig& config) {
  if (config.cors) {
    server.set_default_headers({{"Access-Control-Allow-Origin", config.cors_origin}});
  }
  const std::size_t default_limit = config.max_suggestions;

  server.Get("/healthz", [&service](const httplib::Request&, httplib::Response& res) {
    if (!service.ready()) {
      reply(res, 503, {{"error", "lexicon loading"}});
      return;
    }
    reply(res, 200, {{"entries", service.entries()}});
  });

  server.Get("/api/suggest", [&service, default_limit](const httplib::Request& req,
                                                       httplib::Response& res) {
    const std::string q = req.get_param_value("q");
    if (q.empty()) {
      reply(res, 400, {{"error", "missing or empty q"}});
      return;
    }
    std::size_t limit = default_limit;
    if (req.has_param("limit")) {
      const std::string raw = req.get_param_value("limit");
      const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), limit);
      if (ec != std::errc() || ptr != raw.data() + raw.size() || limit == 0) {
        reply(res, 400, {{"error", "limit must be a positive integer"}});
        return;
      }
    }
    limit = std::min(limit, kMaxHttpLimit);
    if (!service.ready()) {
      reply(res, 503, {{"error", "lexicon loading"}});
      return;
    }
    reply(res, 200, service.suggest(q, limit));
  });

  server.Get("/api/translit", [&service](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("text")) {
      reply(res, 400, {{"error", "missing text"}});
      return;
    }
    if (!service.ready()) {
      reply(res, 503, {{"error", "lexicon loading"}});
      return;
    }
    reply(res, 200, service.translit(req.get_param_value("text")));
  });
}

}  // namespace deva
