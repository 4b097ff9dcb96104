/*
 * Copyright (C) 2026 The permodel Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permodel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value was used at the wrong kind (e.g. first() on an atom).
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

class DuplicateElement : public Error {
 public:
  using Error::Error;
};

// rel_apply on a key with two or more images.
class AmbiguousApplication : public Error {
 public:
  using Error::Error;
};

// A quantifier binding produced zero or several results for some element.
class BindingNotFunctional : public Error {
 public:
  using Error::Error;
};

// defPerms and systemImage disagree on the permissions an app defines.
class AmbiguousDefinition : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace permodel
