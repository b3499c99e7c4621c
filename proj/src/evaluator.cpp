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

#include "deva/evaluator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>

#include "deva/error.hpp"
#include "deva/unicode.hpp"

namespace deva {

namespace {

std::vector<std::string> split_tabs(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find('\t', start);
    out.emplace_back(s.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

// Calls row(fields, where) for each non-blank, non-comment line.
template <typename RowFn>
void read_tsv(std::istream& in, std::size_t arity, std::string_view what, RowFn row) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::string where = std::string(what) + " line " + std::to_string(line_no);
    if (!is_valid_utf8(line)) throw Error(ErrorKind::MalformedFile, where + ": invalid UTF-8");
    auto fields = split_tabs(line);
    if (fields.size() != arity) {
      throw Error(ErrorKind::MalformedFile, where + ": expected " + std::to_string(arity) +
                                                " tab-separated fields");
    }
    row(fields, where);
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

}  // namespace

std::size_t edit_distance(std::string_view a, std::string_view b) {
  const std::u32string s = decode_utf8(a);
  const std::u32string t = decode_utf8(b);
  // Single-row DP; row[j] = distance between s[0..i) and t[0..j).
  std::vector<std::size_t> row(t.size() + 1);
  for (std::size_t j = 0; j <= t.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= t.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (s[i - 1] == t[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[t.size()];
}

void SubjectResponses::add(const std::string& char_id, const std::string& subject_id,
                           std::string sequence) {
  responses_[char_id][subject_id] = std::move(sequence);
}

const std::map<std::string, std::string>* SubjectResponses::for_char(
    const std::string& char_id) const {
  const auto it = responses_.find(char_id);
  return it == responses_.end() || it->second.empty() ? nullptr : &it->second;
}

SubjectResponses SubjectResponses::load_tsv(std::istream& in) {
  SubjectResponses out;
  read_tsv(in, 3, "responses", [&](std::vector<std::string>& f, const std::string& where) {
    if (f[0].empty() || f[1].empty()) {
      throw Error(ErrorKind::MalformedFile, where + ": empty charId or subjectId");
    }
    out.add(f[0], f[1], std::move(f[2]));
  });
  return out;
}

SchemeEncoding SchemeEncoding::load_tsv(std::istream& in, std::string name) {
  SchemeEncoding out{std::move(name), {}};
  read_tsv(in, 2, "scheme", [&](std::vector<std::string>& f, const std::string& where) {
    if (f[0].empty()) throw Error(ErrorKind::MalformedFile, where + ": empty charId");
    out.proposed[f[0]] = std::move(f[1]);
  });
  return out;
}

CharFrequencies::CharFrequencies(std::map<std::string, double> weights)
    : weights_(std::move(weights)) {
  double total = 0.0;
  for (const auto& [id, w] : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorKind::InvalidArgument, "weight of '" + id + "' must be non-negative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kTolerance) {
    throw Error(ErrorKind::InvalidArgument,
                "character weights sum to " + format_double(total) + ", expected 1");
  }
}

CharFrequencies CharFrequencies::uniform(const std::vector<std::string>& char_ids) {
  std::map<std::string, double> weights;
  for (const std::string& id : char_ids) weights[id] = 0.0;
  for (auto& [id, w] : weights) w = 1.0 / static_cast<double>(weights.size());
  return CharFrequencies(std::move(weights));
}

CharFrequencies CharFrequencies::load_tsv(std::istream& in) {
  std::map<std::string, double> weights;
  read_tsv(in, 2, "frequency", [&](std::vector<std::string>& f, const std::string& where) {
    double w = 0.0;
    const auto [ptr, ec] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), w);
    if (ec != std::errc() || ptr != f[1].data() + f[1].size() || f[1].empty()) {
      throw Error(ErrorKind::MalformedFile, where + ": weight '" + f[1] + "' is not a number");
    }
    weights[f[0]] = w;
  });
  try {
    return CharFrequencies(std::move(weights));
  } catch (const Error& err) {
    throw Error(ErrorKind::MalformedFile, err.what());
  }
}

double avg_edit_dist(const std::string& char_id, const SubjectResponses& responses,
                     const SchemeEncoding& scheme) {
  const auto* typed = responses.for_char(char_id);
  if (typed == nullptr) {
    throw Error(ErrorKind::MissingData, "no responses for '" + char_id + "'");
  }
  const auto proposed = scheme.proposed.find(char_id);
  if (proposed == scheme.proposed.end()) {
    throw Error(ErrorKind::MissingData,
                "scheme '" + scheme.name + "' has no encoding for '" + char_id + "'");
  }
  // Integer sum first: the mean does not depend on subject order.
  std::size_t total = 0;
  for (const auto& [subject, sequence] : *typed) {
    total += edit_distance(sequence, proposed->second);
  }
  return static_cast<double>(total) / static_cast<double>(typed->size());
}

double weighted_average(const std::map<std::string, double>& per_char,
                        const CharFrequencies& freqs) {
  double sum = 0.0;
  for (const auto& [id, avg] : per_char) {
    const auto w = freqs.weights().find(id);
    if (w == freqs.weights().end()) {
      throw Error(ErrorKind::MissingData, "no weight for '" + id + "'");
    }
    sum += w->second * avg;
  }
  return sum;
}

std::vector<EvalReport> compare_schemes(const SubjectResponses& responses,
                                        const std::vector<SchemeEncoding>& schemes,
                                        const CharFrequencies& freqs) {
  std::vector<EvalReport> reports;
  reports.reserve(schemes.size());
  for (const SchemeEncoding& scheme : schemes) {
    EvalReport report{scheme.name, {}, 0.0};
    for (const auto& [char_id, typed] : responses.by_char()) {
      report.per_char[char_id] = avg_edit_dist(char_id, responses, scheme);
    }
    report.weighted_average = weighted_average(report.per_char, freqs);
    reports.push_back(std::move(report));
  }
  std::stable_sort(reports.begin(), reports.end(), [](const EvalReport& a, const EvalReport& b) {
    return a.scheme_name < b.scheme_name;
  });
  return reports;
}

void write_report_tsv(std::ostream& out, const std::vector<EvalReport>& reports) {
  for (const EvalReport& r : reports) {
    out << r.scheme_name << '\t' << format_double(r.weighted_average) << '\n';
  }
}

void write_report_table(std::ostream& out, const std::vector<EvalReport>& reports) {
  std::set<std::string> ids;
  for (const EvalReport& r : reports) {
    for (const auto& [id, avg] : r.per_char) ids.insert(id);
  }
  constexpr int kWidth = 14;
  out << std::left << std::setw(10) << "char";
  for (const EvalReport& r : reports) out << std::right << std::setw(kWidth) << r.scheme_name;
  out << '\n';
  out << std::fixed << std::setprecision(4);
  for (const std::string& id : ids) {
    // Devanagari ids are multi-byte; pad by scalar count.
    const std::size_t shown = decode_utf8(id).size();
    out << id << std::string(shown < 10 ? 10 - shown : 1, ' ');
    for (const EvalReport& r : reports) {
      const auto it = r.per_char.find(id);
      if (it == r.per_char.end()) {
        out << std::setw(kWidth) << "-";
      } else {
        out << std::setw(kWidth) << it->second;
      }
    }
    out << '\n';
  }
  out << std::left << std::setw(10) << "weighted";
  for (const EvalReport& r : reports) out << std::right << std::setw(kWidth) << r.weighted_average;
  out << '\n';
  out << std::defaultfloat;
}

}  // namespace deva
