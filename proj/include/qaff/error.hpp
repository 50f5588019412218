#pragma once

#include <stdexcept>
#include <string>

namespace qaff {

// All library errors carry a machine-checkable kind tag next to the message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
    throw Error(kind, msg);
}

inline void require(bool cond, const std::string& kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

} // namespace qaff
