#pragma once

#include <stdexcept>
#include <string>

namespace lietypes {

enum class ErrorCode {
    UnsupportedRank,
    UnsupportedFamily,
    NotARoot,
    GroupTooLarge,
    UnsupportedEmbedding,
    UnknownPair,
    ConstraintViolated,
    SignatureDataUnavailable,
    Case4Detected,
    UnknownDiagramClassification,
    NonSimpleTheta,
    ParseError,
    InvalidDiagram,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string& msg)
        : std::runtime_error(std::string(error_name(c)) + ": " + msg), code_(c) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace lietypes
