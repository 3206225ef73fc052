/*
   Copyright 2026 The cherednik authors

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

#ifndef CHEREDNIK_ERROR_HPP
#define CHEREDNIK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cherednik {

enum class ErrorCode {
    NotPrime,
    EvenCharacteristic,
    BadDegree,
    DivisionByZero,
    ContextMismatch,
    Singular,
    BadParameter,
    DimensionMismatch,
    SyntaxError,
    ExponentOnS,
    NotScalar,
    Inconclusive,
    BudgetExceeded,
    BadInput,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

} // namespace cherednik

#endif
