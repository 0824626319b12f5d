// Copyright 2026 The spherical_dubins Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace sdubins {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSkew : public Error {
 public:
  explicit NotSkew(const std::string& what) : Error("matrix is not skew-symmetric: " + what) {}
};

class NotUnit : public Error {
 public:
  explicit NotUnit(const std::string& what) : Error("axial vector is not unit length: " + what) {}
};

class InvalidRotation : public Error {
 public:
  explicit InvalidRotation(const std::string& what) : Error("not a proper rotation: " + what) {}
};

class InvalidPath : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class SolveFailed : public Error {
 public:
  using Error::Error;
};

class IOError : public Error {
 public:
  IOError(const std::string& destination, const std::string& what)
      : Error(destination + ": " + what) {}
};

class NoPathFound : public Error {
 public:
  NoPathFound() : Error("no candidate family produced a path to the goal") {}
};

}  // namespace sdubins
