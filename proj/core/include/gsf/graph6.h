// Copyright 2026 The gsf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GSF_GRAPH6_H
#define GSF_GRAPH6_H

#include <string>
#include <string_view>

#include "gsf/graph.h"

namespace gsf {

/// Parses one graph6 line (an optional ">>graph6<<" prefix and trailing
/// newline are accepted). Throws ParseError with the byte offset of the fault.
Graph parse_graph6(std::string_view text);

/// Encodes `g` as graph6, without a trailing newline.
std::string write_graph6(const Graph &g);

/// True when every byte is a printable graph6 character (63..126).
bool looks_like_graph6(std::string_view text);

}  // namespace gsf

#endif
