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

#include "qgen/error.hpp"

namespace qgen {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::MalformedBlocksFile: return "MalformedBlocksFile";
    case Errc::EmptyDocument: return "EmptyDocument";
    case Errc::InvalidChunkParams: return "InvalidChunkParams";
    case Errc::NoStandardsFound: return "NoStandardsFound";
    case Errc::DuplicateStandard: return "DuplicateStandard";
    case Errc::WrongRole: return "WrongRole";
    case Errc::MalformedChunkFile: return "MalformedChunkFile";
    case Errc::EmptyText: return "EmptyText";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DuplicateChunkId: return "DuplicateChunkId";
    case Errc::EmptyIndex: return "EmptyIndex";
    case Errc::IoError: return "IoError";
    case Errc::CorruptIndexFile: return "CorruptIndexFile";
    case Errc::Provider: return "ProviderError";
    case Errc::UnsupportedCapability: return "UnsupportedCapability";
    case Errc::EmptyTopic: return "EmptyTopic";
    case Errc::EmptyContext: return "EmptyContext";
    case Errc::MissingIndex: return "MissingIndex";
    case Errc::MissingEmbedder: return "MissingEmbedder";
    case Errc::InvalidRequest: return "InvalidRequest";
    case Errc::EmptyStandards: return "EmptyStandards";
    case Errc::WrongIndexRole: return "WrongIndexRole";
    case Errc::EmptyBatch: return "EmptyBatch";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::CardinalityMismatch: return "CardinalityMismatch";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::MissingArtifact: return "MissingArtifact";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ProviderError::ProviderError(int status, const std::string& message, bool retryable)
    : Error(Errc::Provider, "status " + std::to_string(status) + ": " + message),
      status_(status),
      retryable_(retryable) {}

}  // namespace qgen
