#pragma once

#include <stdexcept>
#include <string>

namespace refrank {

/// Base type for every error the pipeline can raise.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input bytes are empty or not in a format we can read.
struct UnsupportedFormat : Error {
    using Error::Error;
};

/// A text-extraction adapter accepted the input but failed; carries the adapter message.
struct ExtractionFailed : Error {
    using Error::Error;
};

/// Neither "REFERENCES" nor "References" was found as a line-anchored marker.
struct NoReferenceSection : Error {
    using Error::Error;
};

/// The reference section matched no known segmentation pattern.
struct NoCitationsFound : Error {
    using Error::Error;
};

/// A name was empty after trimming.
struct EmptyName : Error {
    using Error::Error;
};

/// No profile id could be extracted from a search page.
struct IdNotFound : Error {
    using Error::Error;
};

/// A required profile field is missing or inconsistent; `field` names it.
struct ProfileParseError : Error {
    std::string field;
    ProfileParseError(std::string field_name, const std::string& message)
        : Error(message), field(std::move(field_name)) {}
};

/// Transport-level failure in live mode (DNS, connect, TLS, ...).
struct FetchError : Error {
    using Error::Error;
};

/// Ground truth does not cover a candidate under evaluation.
struct MissingLabel : Error {
    using Error::Error;
};

/// Bad configuration file or option combination.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace refrank
