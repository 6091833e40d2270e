// Domain error type shared across the library.
//
// Every precondition violation throws wdtk::domain_error carrying a stable
// machine-readable kind string ("MalformedTuple", "MultiComponent", ...).
// The CLI maps these to exit code 1 and prints the kind verbatim.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wdtk {

class domain_error : public std::runtime_error {
public:
    domain_error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
    throw domain_error(kind, message);
}

inline void require(bool cond, const std::string& kind, const std::string& message) {
    if (!cond)
        fail(kind, message);
}

// Non-fatal diagnostics. Constructions that can proceed under a suspect
// precondition (e.g. a companion with trivial Alexander polynomial) append
// here instead of throwing.
struct WarningLog {
    std::vector<std::pair<std::string, std::string>> entries;  // (kind, message)

    void add(const std::string& kind, const std::string& message) {
        entries.emplace_back(kind, message);
    }
    bool has(const std::string& kind) const {
        for (const auto& e : entries)
            if (e.first == kind)
                return true;
        return false;
    }
};

}  // namespace wdtk
