// Copyright 2026 The gsmon Authors.
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

#ifndef GSMON_ERROR_HPP
#define GSMON_ERROR_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace gsmon {

/// Error categories raised by the library. Each maps to one of the
/// structured error names used throughout the module contracts.
enum class ErrorKind {
  TableShape,
  LawViolation,
  TypeMismatch,
  UnsupportedStructural,
  UnsupportedCapability,
  NotEnriched,
  NotParallel,
  UnknownKind,
  UnknownName,
  CarrierTooLarge,
  SemiringMismatch,
  FilterNotClosed,
  MonadLawsFail,
  MonoidLawsFail,
  VariantNotClosed,
  OrderIncompatible,
  BudgetZero,
  ArityMismatch,
  SyntaxError,
  AssignmentMismatch,
  Io,
};

const char* to_string(ErrorKind k);

/// Exception carrying a structured kind plus an optional JSON detail payload
/// (witnesses, offending subterms, positions).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, nlohmann::json detail = nullptr)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(std::move(detail)) {}

  ErrorKind kind() const { return kind_; }
  const nlohmann::json& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  nlohmann::json detail_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::TableShape: return "TableShapeError";
    case ErrorKind::LawViolation: return "LawViolation";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::UnsupportedStructural: return "UnsupportedStructural";
    case ErrorKind::UnsupportedCapability: return "UnsupportedCapability";
    case ErrorKind::NotEnriched: return "NotEnriched";
    case ErrorKind::NotParallel: return "NotParallel";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::SemiringMismatch: return "SemiringMismatch";
    case ErrorKind::FilterNotClosed: return "FilterNotClosed";
    case ErrorKind::MonadLawsFail: return "MonadLawsFail";
    case ErrorKind::MonoidLawsFail: return "MonoidLawsFail";
    case ErrorKind::VariantNotClosed: return "VariantNotClosed";
    case ErrorKind::OrderIncompatible: return "OrderIncompatible";
    case ErrorKind::BudgetZero: return "BudgetZero";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::AssignmentMismatch: return "AssignmentMismatch";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

}  // namespace gsmon

#endif  // GSMON_ERROR_HPP
