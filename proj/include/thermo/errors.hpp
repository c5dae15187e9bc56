#pragma once

#include <stdexcept>
#include <string>

namespace thermo {

/// Base of every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInstance : public Error { public: using Error::Error; };
class InvalidTrace : public Error { public: using Error::Error; };
class PolicyViolation : public Error { public: using Error::Error; };
class InvalidSource : public Error { public: using Error::Error; };
class InvalidCertificate : public Error { public: using Error::Error; };
class NotFullThroughput : public Error { public: using Error::Error; };
class TooLarge : public Error { public: using Error::Error; };

/// Malformed input text. `where` names the line or field at fault.
class ParseError : public Error {
public:
    ParseError(const std::string& where, const std::string& what)
        : Error(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

}  // namespace thermo
