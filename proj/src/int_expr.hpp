/*
 * Copyright 2026 The qrloop Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <map>
#include <string>
#include <string_view>

namespace qrloop {

using IntEnv = std::map<std::string, long, std::less<>>;

/**
 * @brief Evaluates a small integer expression over named variables.
 *
 * Grammar: integers, identifiers, + - * / (floor division), parentheses,
 * comparisons < <= > >= == != (yielding 0/1) and &&, || with C precedence.
 */
long eval_int(std::string_view text, const IntEnv &env);

bool eval_condition(std::string_view text, const IntEnv &env);

} // namespace qrloop
