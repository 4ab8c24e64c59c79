/*
   Copyright 2026 The pointless Authors

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

#ifndef POINTLESS_ERROR_HPP
#define POINTLESS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pointless {

/// Malformed textual input (polynomials, moduli, fixture rows). The message
/// names the offending token.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition does not hold (reducible conductor factor,
/// split place inside the modulus, index not dividing the group order, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured computational bound was exceeded (group too large to
/// enumerate, one-unit part too large, unfactored group order).
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pointless

#endif
