// Copyright 2026 The kpell Authors
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

#ifndef KPELL_ERROR_HPP_
#define KPELL_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kpell {

// Bad arguments: wrong parity, letters out of range, malformed words.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size limit would be exceeded.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t requested, std::uint64_t budget)
      : std::runtime_error(what + ": " + std::to_string(requested) + " exceeds budget " +
                           std::to_string(budget)),
        requested_(requested),
        budget_(budget) {}

  // For counts past 64 bits; requested() then saturates.
  BudgetError(const std::string& what, const std::string& requested, std::uint64_t budget)
      : std::runtime_error(what + ": " + requested + " exceeds budget " + std::to_string(budget)),
        requested_(UINT64_MAX),
        budget_(budget) {}

  std::uint64_t requested() const { return requested_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t requested_;
  std::uint64_t budget_;
};

// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kpell

#endif  // KPELL_ERROR_HPP_
