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
#include "rlmc/csv.hpp"

#include <cstdio>
#include <cstring>
#include <sstream>

namespace rlmc::csv {

std::string fmt(double v) {
    char buf[40];
    // Try increasing precision until the value round-trips exactly.
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    return buf;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = UINT64_C(0xcbf29ce484222325);
    for (unsigned char c : text) {
        h ^= c;
        h *= UINT64_C(0x100000001b3);
    }
    return h;
}

std::string header_comment(const std::string& canonical_config, std::uint64_t seed) {
    std::ostringstream os;
    char hex[20];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(fnv1a(canonical_config)));
    os << "# config-hash=0x" << hex << " seed=" << seed;
    return os.str();
}

}  // namespace rlmc::csv
