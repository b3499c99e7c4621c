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

#include "deva/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "deva/error.hpp"
#include "deva/evaluator.hpp"
#include "deva/lexicon.hpp"
#include "deva/service.hpp"
#include "httplib.h"

namespace deva {

namespace {

struct Options {
  std::string table_path;
  std::string lexicon_path;
  std::vector<std::string> corpus_paths;
  std::string out_path;
  std::size_t limit = 5;
  int port = 8080;
  std::string host = "0.0.0.0";
  bool direct = false;
  bool no_cors = false;
  std::vector<std::string> words;
  std::string responses_path;
  std::vector<std::string> scheme_paths;
  std::string freq_path;
  bool tsv = false;
};

CharacterTable load_table(const Options& opt) {
  if (opt.table_path.empty()) return CharacterTable::load_default();
  std::ifstream in(opt.table_path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedFile, "cannot open table '" + opt.table_path + "'");
  return CharacterTable::load_tsv(in);
}

std::string resolve_lexicon_path(const Options& opt) {
  if (opt.direct) return {};
  if (!opt.lexicon_path.empty()) return opt.lexicon_path;
  if (const char* env = std::getenv("DEVA_LEXICON")) return env;
  return {};
}

std::ifstream open_input(const std::string& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::MalformedFile, "cannot read " + std::string(what) + " '" + path + "'");
  }
  return in;
}

int build_lexicon(const Options& opt, std::ostream& out, std::ostream& err) {
  const CharacterTable table = load_table(opt);
  FrequencyMap counts;
  for (const std::string& path : opt.corpus_paths) {
    std::ifstream in = open_input(path, "corpus");
    FrequencyMap file_counts;
    try {
      file_counts = ingest_corpus(in);
    } catch (const Error& e) {
      throw Error(e.kind(), path + ": " + e.what());
    }
    for (const auto& [word, n] : file_counts) counts[word] += n;
  }
  LexiconBuildStats stats;
  const Lexicon lexicon = Lexicon::build(counts, table, &stats);
  std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::MalformedFile, "cannot write '" + opt.out_path + "'");
  lexicon.save(file);
  file.close();
  if (!file) throw Error(ErrorKind::MalformedFile, "failed writing '" + opt.out_path + "'");
  out << "words\t" << lexicon.size() << '\n' << "total tokens\t" << lexicon.total_tokens() << '\n';
  if (stats.skipped_words > 0) {
    err << "warning: skipped " << stats.skipped_words
        << " word(s) with characters outside the table\n";
  }
  return 0;
}

int suggest(const Options& opt, std::ostream& out) {
  const CharacterTable table = load_table(opt);
  const Lexicon lexicon = load_lexicon_file(resolve_lexicon_path(opt), table);
  const Engine engine(table, lexicon, EngineConfig{opt.limit, EngineConfig{}.path_limit});
  out << format_suggestion_lines(engine.suggest(opt.words.front()));
  return 0;
}

int translit(const Options& opt, std::ostream& out) {
  const CharacterTable table = load_table(opt);
  const Lexicon lexicon = load_lexicon_file(resolve_lexicon_path(opt), table);
  const Engine engine(table, lexicon, EngineConfig{opt.limit, EngineConfig{}.path_limit});
  if (!opt.words.empty()) {
    std::string text;
    for (std::size_t i = 0; i < opt.words.size(); ++i) {
      if (i) text += ' ';
      text += opt.words[i];
    }
    out << engine.transliterate_sentence(text) << '\n';
    return 0;
  }
  std::string line;
  while (std::getline(std::cin, line)) out << engine.transliterate_sentence(line) << '\n';
  return 0;
}

int evaluate(const Options& opt, std::ostream& out) {
  std::ifstream responses_in = open_input(opt.responses_path, "responses");
  const SubjectResponses responses = SubjectResponses::load_tsv(responses_in);
  std::vector<SchemeEncoding> schemes;
  for (const std::string& path : opt.scheme_paths) {
    std::ifstream in = open_input(path, "scheme");
    schemes.push_back(SchemeEncoding::load_tsv(in, std::filesystem::path(path).stem().string()));
  }
  CharFrequencies freqs = [&] {
    if (!opt.freq_path.empty()) {
      std::ifstream in = open_input(opt.freq_path, "frequency file");
      return CharFrequencies::load_tsv(in);
    }
    std::vector<std::string> ids;
    for (const auto& [id, typed] : responses.by_char()) ids.push_back(id);
    return CharFrequencies::uniform(ids);
  }();
  const auto reports = compare_schemes(responses, schemes, freqs);
  if (opt.tsv) {
    write_report_tsv(out, reports);
  } else {
    write_report_table(out, reports);
  }
  return 0;
}

int serve(const Options& opt, std::ostream& out) {
  ServiceConfig config;
  config.lexicon_path = resolve_lexicon_path(opt);
  config.port = opt.port;
  config.max_suggestions = opt.limit;
  config.cors = !opt.no_cors;
  validate(config);

  const CharacterTable table = load_table(opt);
  SuggestService service(table);
  httplib::Server server;
  install_routes(server, service, config);
  if (!server.bind_to_port(opt.host, config.port)) {
    throw Error(ErrorKind::InvalidArgument, "cannot bind port " + std::to_string(config.port));
  }
  std::thread listener([&server] { server.listen_after_bind(); });
  try {
    service.install(load_lexicon_file(config.lexicon_path, table));
  } catch (...) {
    server.stop();
    listener.join();
    throw;
  }
  out << "serving " << service.entries() << " entries on " << opt.host << ':' << config.port
      << std::endl;
  listener.join();
  return 0;
}

}  // namespace

std::string format_suggestion_lines(const std::vector<Suggestion>& suggestions) {
  std::ostringstream out;
  for (std::size_t i = 0; i < suggestions.size(); ++i) {
    const Suggestion& s = suggestions[i];
    out << (i + 1) << '\t' << s.word << '\t' << s.frequency << '\t' << to_string(s.source)
        << '\n';
  }
  return out.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Roman-to-Devanagari phonetic input engine"};
  app.require_subcommand(1);
  app.add_option("--table", opt.table_path, "Character table override (TSV)");

  auto* build = app.add_subcommand("build-lexicon", "Build a lexicon from UTF-8 corpus files");
  build->add_option("--corpus", opt.corpus_paths, "Corpus file (repeatable)")->required();
  build->add_option("--out", opt.out_path, "Output lexicon TSV")->required();

  auto* sugg = app.add_subcommand("suggest", "Rank Devanagari candidates for a roman token");
  sugg->add_option("--lexicon", opt.lexicon_path, "Lexicon TSV (default: $DEVA_LEXICON)");
  sugg->add_option("--limit", opt.limit, "Maximum suggestions")->check(CLI::PositiveNumber);
  sugg->add_flag("--direct", opt.direct, "Bypass the lexicon");
  sugg->add_option("query", opt.words, "Roman token")->required()->expected(1);

  auto* trans = app.add_subcommand("translit", "Transliterate a sentence (stdin if none given)");
  trans->add_option("--lexicon", opt.lexicon_path, "Lexicon TSV (default: $DEVA_LEXICON)");
  trans->add_flag("--direct", opt.direct, "Bypass the lexicon");
  trans->add_option("text", opt.words, "Text to transliterate");

  auto* eval = app.add_subcommand("eval", "Score input schemes against subject responses");
  eval->add_option("--responses", opt.responses_path, "charId TAB subjectId TAB sequence")
      ->required();
  eval->add_option("--scheme", opt.scheme_paths, "charId TAB proposed (repeatable)")->required();
  eval->add_option("--freq", opt.freq_path, "charId TAB weight (default: uniform)");
  eval->add_flag("--tsv", opt.tsv, "Emit scheme TAB weightedAverage only");

  auto* srv = app.add_subcommand("serve", "Run the HTTP suggestion service");
  srv->add_option("--lexicon", opt.lexicon_path, "Lexicon TSV (default: $DEVA_LEXICON)");
  srv->add_option("--port", opt.port, "TCP port")->check(CLI::Range(1, 65535));
  srv->add_option("--host", opt.host, "Bind address");
  srv->add_option("--limit", opt.limit, "Default suggestion count")->check(CLI::PositiveNumber);
  srv->add_flag("--direct", opt.direct, "Serve without a lexicon");
  srv->add_flag("--no-cors", opt.no_cors, "Do not send CORS headers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*build) return build_lexicon(opt, out, err);
    if (*sugg) return suggest(opt, out);
    if (*trans) return translit(opt, out);
    if (*eval) return evaluate(opt, out);
    if (*srv) return serve(opt, out);
  } catch (const std::exception& e) {
    err << "deva: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace deva
