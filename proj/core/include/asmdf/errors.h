// Copyright 2026 The asmdf-pitch Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exception hierarchy shared by every module. Callers that only care about
// "something in the pitch pipeline failed" catch asmdf::Error.

#ifndef ASMDF_ERRORS_H_
#define ASMDF_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asmdf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside the domain of the operation (lag 0, frequency
// above Nyquist, inverted lag range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input has too few samples for the requested analysis.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// The measure has no value here, e.g. autocorrelation of a constant frame.
class UndefinedMeasureError : public Error {
 public:
  using Error::Error;
};

// Fewer than two usable pitch pairs survive exclusion.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// Pearson correlation of a constant sequence.
class UndefinedCorrelationError : public Error {
 public:
  using Error::Error;
};

// Truth and estimate contours cannot be matched frame by frame.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// Base for file-level failures (missing file, bad bytes, bad rows).
class IoError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormatError : public IoError {
 public:
  using IoError::IoError;
};

class MalformedFileError : public IoError {
 public:
  using IoError::IoError;
};

class ParseError : public IoError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : IoError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace asmdf

#endif  // ASMDF_ERRORS_H_
