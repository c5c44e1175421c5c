#pragma once

#include <stdexcept>
#include <string>

namespace permwqo {

/// Malformed argument: duplicate entries, index out of range, arity mismatch.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// An exhaustive search was refused because its size exceeds the configured cap.
class SizeGuardError : public std::runtime_error {
public:
    SizeGuardError(const std::string& op, std::size_t requested, std::size_t cap)
        : std::runtime_error(op + ": size " + std::to_string(requested) +
                             " exceeds cap " + std::to_string(cap) + " (raise with --max-n)"),
          requested_(requested),
          cap_(cap) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t requested_;
    std::size_t cap_;
};

inline void check_guard(const char* op, std::size_t requested, std::size_t cap) {
    if (requested > cap) throw SizeGuardError(op, requested, cap);
}

}  // namespace permwqo
