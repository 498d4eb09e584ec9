/*
   Copyright 2026 The outerweb authors

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

#ifndef OUTERWEB_CLI_HPP
#define OUTERWEB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ow {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitLimit = 3;

// Runs one command line (without the program name). Exit 0 on success,
// 2 on usage or domain errors, 3 when an iteration limit is exceeded.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ow

#endif
