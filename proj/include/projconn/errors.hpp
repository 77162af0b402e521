/*
   Copyright 2026 The projconn Authors

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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace projconn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is the 0-based byte offset of the offending token.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

class ArityMismatch : public Error {
    using Error::Error;
};
class RingMismatch : public Error {
    using Error::Error;
};
class DimensionMismatch : public Error {
    using Error::Error;
};
class DivisionByZero : public Error {
    using Error::Error;
};
class OffSurface : public Error {
    using Error::Error;
};
class NotTangent : public Error {
    using Error::Error;
};
class NotIdempotent : public Error {
    using Error::Error;
};
class KernelNotAnnihilated : public Error {
    using Error::Error;
};
class PotentialNotPreserving : public Error {
    using Error::Error;
};
class BracketMismatch : public Error {
    using Error::Error;
};
class InvalidParameters : public Error {
    using Error::Error;
};
class UnknownCheck : public Error {
    using Error::Error;
};

/// An identity that the mathematics guarantees failed to hold; indicates a bug, never bad input.
class IdentityViolation : public Error {
    using Error::Error;
};

}  // namespace projconn
