/*
   Copyright 2026 the rlmc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <cstdint>
#include <string>

namespace rlmc::csv {

/// Shortest round-trip-exact decimal form of an IEEE double ("%.17g" pruned).
/// Deterministic, locale-independent.
std::string fmt(double v);

/// FNV-1a 64-bit hash of a canonical config string; printed into every
/// output header so artifacts are traceable to their configuration.
std::uint64_t fnv1a(const std::string& text);

/// `# config-hash=0x... seed=...` header comment line.
std::string header_comment(const std::string& canonical_config, std::uint64_t seed);

}  // namespace rlmc::csv
