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

#ifndef DEVA_CLI_HPP_
#define DEVA_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "deva/engine.hpp"

namespace deva {

// "rank TAB word TAB frequency TAB source" per suggestion, rank from 1.
std::string format_suggestion_lines(const std::vector<Suggestion>& suggestions);

// Entry point of the `deva` tool: build-lexicon, suggest, translit, eval,
// serve. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace deva

#endif  // DEVA_CLI_HPP_
