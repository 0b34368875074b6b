// Copyright 2026 The wga-toolkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace wga {

// Usage / precondition errors map to std::invalid_argument and
// std::domain_error from the standard library.

/// An element lies outside the radius of the available ball table.
class OutOfBallError : public std::runtime_error {
 public:
  OutOfBallError(const std::string& what, int required_radius)
      : std::runtime_error(what), required_radius_(required_radius) {}
  int required_radius() const noexcept { return required_radius_; }

 private:
  int required_radius_;
};

/// A configured memory / size cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t projected)
      : std::runtime_error(what), projected_(projected) {}
  std::size_t projected_size() const noexcept { return projected_; }

 private:
  std::size_t projected_;
};

}  // namespace wga
