#include "akshar/error.hpp"

namespace akshar {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateCode: return "DuplicateCode";
    case ErrorKind::DuplicateChar: return "DuplicateChar";
    case ErrorKind::RowOutOfRange: return "RowOutOfRange";
    case ErrorKind::BankOverlap: return "BankOverlap";
    case ErrorKind::NotAssigned: return "NotAssigned";
    case ErrorKind::UnassignedCode: return "UnassignedCode";
    case ErrorKind::TruncatedPair: return "TruncatedPair";
    case ErrorKind::InvalidTrail: return "InvalidTrail";
    case ErrorKind::IllegalByte: return "IllegalByte";
    case ErrorKind::FramingError: return "FramingError";
    case ErrorKind::NoCounterpart: return "NoCounterpart";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::LengthNotMultiple: return "LengthNotMultiple";
    case ErrorKind::TruncatedBank: return "TruncatedBank";
    case ErrorKind::OutOfBank: return "OutOfBank";
    case ErrorKind::InvalidRule: return "InvalidRule";
    case ErrorKind::UnknownChar: return "UnknownChar";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::InvalidKey: return "InvalidKey";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidResource: return "InvalidResource";
    case ErrorKind::MissingResources: return "MissingResources";
    case ErrorKind::UnknownSession: return "UnknownSession";
    case ErrorKind::BadRequest: return "BadRequest";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

static std::string format_message(ErrorKind kind, const std::string& message,
                                  std::optional<std::size_t> offset)
{
    std::string s(to_string(kind));
    if (offset)
        s += " at offset " + std::to_string(*offset);
    if (!message.empty())
        s += ": " + message;
    return s;
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(format_message(kind, message, offset)),
      kind_(kind),
      offset_(offset),
      detail_(message)
{
}

}  // namespace akshar
