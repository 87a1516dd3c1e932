#pragma once

#include <stdexcept>
#include <string>

namespace lrw {

// Domain error with a stable machine-readable name. The CLI prints the name
// verbatim and exits 1, so names are part of the external contract.
class error : public std::runtime_error {
public:
    error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& what) {
    throw error(name, what);
}

} // namespace lrw
