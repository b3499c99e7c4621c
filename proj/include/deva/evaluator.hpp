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

#ifndef DEVA_EVALUATOR_HPP_
#define DEVA_EVALUATOR_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace deva {

// Unit-cost Levenshtein distance over Unicode scalars.
std::size_t edit_distance(std::string_view a, std::string_view b);

/// charId -> (subjectId -> typed roman sequence).
class SubjectResponses {
 public:
  void add(const std::string& char_id, const std::string& subject_id, std::string sequence);

  const std::map<std::string, std::string>* for_char(const std::string& char_id) const;
  const std::map<std::string, std::map<std::string, std::string>>& by_char() const {
    return responses_;
  }

  // Rows: charId TAB subjectId TAB romanSequence.
  static SubjectResponses load_tsv(std::istream& in);

 private:
  std::map<std::string, std::map<std::string, std::string>> responses_;
};

struct SchemeEncoding {
  std::string name;
  std::map<std::string, std::string> proposed;

  // Rows: charId TAB proposed.
  static SchemeEncoding load_tsv(std::istream& in, std::string name);
};

/// Per-character weights; construction checks they sum to 1 within 1e-9.
class CharFrequencies {
 public:
  static constexpr double kTolerance = 1e-9;

  explicit CharFrequencies(std::map<std::string, double> weights);
  static CharFrequencies uniform(const std::vector<std::string>& char_ids);
  // Rows: charId TAB weight.
  static CharFrequencies load_tsv(std::istream& in);

  const std::map<std::string, double>& weights() const { return weights_; }

 private:
  std::map<std::string, double> weights_;
};

struct EvalReport {
  std::string scheme_name;
  std::map<std::string, double> per_char;
  double weighted_average = 0.0;
};

// Mean distance between each subject's sequence and the scheme's proposal.
// Throws Error{MissingData}.
double avg_edit_dist(const std::string& char_id, const SubjectResponses& responses,
                     const SchemeEncoding& scheme);

double weighted_average(const std::map<std::string, double>& per_char,
                        const CharFrequencies& freqs);

// Scores every charId present in `responses`; one report per scheme, ordered
// by scheme name.
std::vector<EvalReport> compare_schemes(const SubjectResponses& responses,
                                        const std::vector<SchemeEncoding>& schemes,
                                        const CharFrequencies& freqs);

void write_report_tsv(std::ostream& out, const std::vector<EvalReport>& reports);
void write_report_table(std::ostream& out, const std::vector<EvalReport>& reports);

}  // namespace deva

#endif  // DEVA_EVALUATOR_HPP_
