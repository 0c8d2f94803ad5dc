#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace akshar {

enum class ErrorKind {
    // codetable
    ParseError,
    DuplicateCode,
    DuplicateChar,
    RowOutOfRange,
    BankOverlap,
    NotAssigned,
    UnassignedCode,
    // codec
    TruncatedPair,
    InvalidTrail,
    IllegalByte,
    FramingError,
    NoCounterpart,
    // fontlib
    BadMagic,
    LengthNotMultiple,
    TruncatedBank,
    OutOfBank,
    // shaping
    InvalidRule,
    UnknownChar,
    NotDecomposable,
    // ime
    InvalidKey,
    IndexOutOfRange,
    // anusaaraka
    InvalidResource,
    MissingResources,
    // service
    UnknownSession,
    BadRequest,
    // io
    IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every module reports failures through this one exception type. The kind
// name is what the CLI and HTTP layers surface; offset is the byte (or
// character) position when the error is tied to a position in the input.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message,
          std::optional<std::size_t> offset = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> offset() const noexcept { return offset_; }
    // The message without the kind and offset prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> offset_;
    std::string detail_;
};

}  // namespace akshar
