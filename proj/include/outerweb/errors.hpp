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

#ifndef OUTERWEB_ERRORS_HPP
#define OUTERWEB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ow {

// Domain errors map to CLI exit code 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define OW_DOMAIN_ERROR(Name)                                          \
    struct Name : DomainError {                                        \
        explicit Name(const std::string& what) : DomainError(what) {} \
    }

OW_DOMAIN_ERROR(DivisionByZero);
OW_DOMAIN_ERROR(TanPole);
OW_DOMAIN_ERROR(NonIntegral);
OW_DOMAIN_ERROR(NotTwiceOdd);
OW_DOMAIN_ERROR(EqualStarIndices);
OW_DOMAIN_ERROR(DegenerateWeave);
OW_DOMAIN_ERROR(SingularPoint);
OW_DOMAIN_ERROR(InsidePolygon);
OW_DOMAIN_ERROR(NoRelationFound);
OW_DOMAIN_ERROR(PrecisionInsufficient);
OW_DOMAIN_ERROR(DegreeExceeded);
OW_DOMAIN_ERROR(BadMagic);
OW_DOMAIN_ERROR(TruncatedFile);
OW_DOMAIN_ERROR(VersionMismatch);
OW_DOMAIN_ERROR(EmptyScene);

#undef OW_DOMAIN_ERROR

}  // namespace ow

#endif
