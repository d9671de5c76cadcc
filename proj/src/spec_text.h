// Copyright 2026 The ghzsdc Authors
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

#ifndef GHZSDC_SRC_SPEC_TEXT_H
#define GHZSDC_SRC_SPEC_TEXT_H

#include <string>

#include "json.hpp"

namespace ghzsdc::detail {

/// Parses either a JSON object or the shorthand `name[:key=value,...]`. The
/// shorthand name is stored under `name_key`. Returns a discarded value on
/// malformed JSON.
nlohmann::json spec_text_to_json(const std::string& spec, const std::string& name_key);

}  // namespace ghzsdc::detail

#endif  // GHZSDC_SRC_SPEC_TEXT_H
