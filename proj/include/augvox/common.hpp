// include/augvox/common.hpp

// Copyright 2026  The augvox authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace augvox {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename... Parts>
std::string cat(Parts&&... parts) {
  std::ostringstream oss;
  (oss << ... << std::forward<Parts>(parts));
  return oss.str();
}

template <typename... Parts>
[[noreturn]] void raise(Parts&&... parts) {
  throw Error(cat(std::forward<Parts>(parts)...));
}

template <typename... Parts>
void require(bool condition, Parts&&... parts) {
  if (!condition) raise(std::forward<Parts>(parts)...);
}

inline double db_to_gain(double db) { return std::pow(10.0, db / 20.0); }

inline double gain_to_db(double gain) { return 20.0 * std::log10(gain); }

}  // namespace augvox
