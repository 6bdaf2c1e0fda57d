// syndcim -- performance-aware DCIM macro compiler
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace syndcim {

enum class Errc {
  // input / spec
  MalformedDocument,
  InvalidSpec,
  // library
  MissingKind,
  DuplicateKey,
  NegativeValue,
  ManifestSyntax,
  OutOfRange,
  Incompatible,
  // adder tree
  BudgetInfeasible,
  // pipeline transforms
  NoSlack,
  AlreadyRetimed,
  MinHeightReached,
  // search
  EmptyFrontier,
  // functional model
  UnsupportedPrecision,
  DimensionMismatch,
  BadGrouping,
  NonFiniteInput,
  // netlist
  CombinationalLoop,
  UndrivenNet,
  UnboundBlock,
  // cli
  UnknownDesignId,
  VerificationMismatch,
  IoError,
};

const char *errc_name(Errc c);

/// All recoverable failures are reported as SynError carrying a typed code;
/// callers that probe (e.g. the searcher trying a transform) catch by code.
class SynError : public std::runtime_error {
public:
  SynError(Errc code, const std::string &msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string &msg) { throw SynError(code, msg); }

} // namespace syndcim
