//
//   Copyright 2026 The qlp Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qlp {

/// Base class for all qlp failures. Catching this at the CLI boundary maps
/// every operational error to exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A document could not be read as its base format (malformed JSON, wrong
/// root type, unknown status string, ...).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A document parsed but violates the schema. `field()` names the offending
/// path, e.g. "metadata.doi" or "items[3].id".
class SchemaError : public Error {
public:
  SchemaError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

private:
  std::string field_;
};

/// Filesystem-level failure (unreadable root, failed write).
class IoError : public Error {
public:
  using Error::Error;
};

/// An entry references an item id that the active checklist does not define.
class UnknownItemError : public Error {
public:
  explicit UnknownItemError(std::string item_id)
      : Error("unknown checklist item: " + item_id), item_id_(std::move(item_id)) {}

  const std::string& item_id() const { return item_id_; }

private:
  std::string item_id_;
};

/// Invalid render options (duplicate or empty status glyphs).
class OptionError : public Error {
public:
  using Error::Error;
};

/// Assessment rows for different checklists cannot share a matrix.
class MixedChecklistsError : public Error {
public:
  using Error::Error;
};

/// Two assessment rows claim the same target id.
class DuplicateTargetError : public Error {
public:
  using Error::Error;
};

/// A matrix needs at least one row.
class EmptyMatrixError : public Error {
public:
  using Error::Error;
};

/// Status distribution over zero cells is undefined.
class EmptyTotalError : public Error {
public:
  using Error::Error;
};

/// Scaffold refuses to write into an existing non-empty directory
/// unless forced.
class TargetNotEmptyError : public Error {
public:
  using Error::Error;
};

/// Non-fatal finding attached to an operation result (empty author list,
/// unknown manifest key, detector/attestation conflict, ...).
struct Warning {
  std::string subject;
  std::string message;

  bool operator==(const Warning&) const = default;
};

/// Structural rule breach reported as data, not as a failure. `code` is a
/// stable machine token, `subject` the offending id or path.
struct Violation {
  std::string code;
  std::string subject;
  std::string message;

  bool operator==(const Violation&) const = default;
};

}  // namespace qlp
