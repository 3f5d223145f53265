/*
 * Copyright 2026 The qgen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgen {

enum class Errc {
  // corpus
  FileNotFound,
  MalformedBlocksFile,
  EmptyDocument,
  InvalidChunkParams,
  NoStandardsFound,
  DuplicateStandard,
  WrongRole,
  MalformedChunkFile,
  // vecstore
  EmptyText,
  DimensionMismatch,
  ZeroVector,
  LengthMismatch,
  DuplicateChunkId,
  EmptyIndex,
  IoError,
  CorruptIndexFile,
  // providers
  Provider,
  UnsupportedCapability,
  // generation
  EmptyTopic,
  EmptyContext,
  MissingIndex,
  MissingEmbedder,
  InvalidRequest,
  // evaluation
  EmptyStandards,
  WrongIndexRole,
  EmptyBatch,
  DanglingReference,
  CardinalityMismatch,
  // pipeline
  InvalidConfig,
  MissingArtifact,
};

std::string_view to_string(Errc code);

/// Base error for everything the library throws. Callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Failure reported by an embedding or chat provider. `status` is the HTTP
/// status for remote providers and 0 for transport failures.
class ProviderError : public Error {
 public:
  ProviderError(int status, const std::string& message, bool retryable);

  int status() const noexcept { return status_; }
  bool retryable() const noexcept { return retryable_; }

 private:
  int status_;
  bool retryable_;
};

}  // namespace qgen
