#pragma once

#include <stdexcept>
#include <string>

namespace crayon {

// Shape or axis disagreement between tensors and an operation's contract.
class DimensionError : public std::runtime_error {
 public:
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized artifact (CGC container, checkpoint, manifest).
class DecodeError : public std::runtime_error {
 public:
  explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

// Wiring or audit failure while assembling the network.
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite values where finite ones are required (gradients, losses).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Dataset ingestion problems (missing trees, unreadable required inputs).
class IngestError : public std::runtime_error {
 public:
  explicit IngestError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument values at API boundaries.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crayon
