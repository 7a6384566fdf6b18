// Copyright 2026 The Medtx Authors.
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


#include "medtx/error.h"

namespace medtx {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kEmptyReference: return "empty_reference";
    case ErrorCode::kIo: return "io_error";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kSchemaVersion: return "schema_version";
    case ErrorCode::kCorruptRecord: return "corrupt_record";
    case ErrorCode::kSessionFinalized: return "session_finalized";
    case ErrorCode::kUndecidedSentences: return "undecided_sentences";
    case ErrorCode::kDuplicateRow: return "duplicate_row";
    case ErrorCode::kTimeout: return "timeout";
    case ErrorCode::kAuthentication: return "authentication";
    case ErrorCode::kHttpStatus: return "http_status";
    case ErrorCode::kRetriesExhausted: return "retries_exhausted";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kBind: return "bind";
    case ErrorCode::kNoReference: return "no_reference";
    case ErrorCode::kAlreadyExists: return "already_exists";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace medtx
