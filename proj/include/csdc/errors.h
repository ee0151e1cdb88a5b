// Copyright 2026 The CSDC Simulator Authors
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

#ifndef CSDC_ERRORS_H
#define CSDC_ERRORS_H

#include <stdexcept>
#include <string>

namespace csdc {

/// Rejected protocol configuration (capacity, parity, ranges). Raised before any quantum action.
class ConfigError : public std::invalid_argument {
   public:
    explicit ConfigError(const std::string &what) : std::invalid_argument(what) {
    }
};

/// A simulator invariant was broken: qubit measured twice, phase regression, decode miss.
class InternalError : public std::logic_error {
   public:
    explicit InternalError(const std::string &what) : std::logic_error(what) {
    }
};

}  // namespace csdc

#endif
