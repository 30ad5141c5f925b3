// Copyright 2026 The qtunnel Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qtunnel/error.hpp"

namespace qtunnel {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::IndexOutOfRange:
        return "IndexOutOfRange";
    case ErrorCode::UnsupportedSize:
        return "UnsupportedSize";
    case ErrorCode::NotNormalized:
        return "NotNormalized";
    case ErrorCode::LengthMismatch:
        return "LengthMismatch";
    case ErrorCode::DuplicateQubit:
        return "DuplicateQubit";
    case ErrorCode::SizeMismatch:
        return "SizeMismatch";
    case ErrorCode::TooLarge:
        return "TooLarge";
    case ErrorCode::BadLength:
        return "BadLength";
    case ErrorCode::EigenFailure:
        return "EigenFailure";
    case ErrorCode::InvalidConfig:
        return "InvalidConfig";
    }
    return "Unknown";
}

} // namespace qtunnel
