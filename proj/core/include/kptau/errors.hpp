#pragma once

#include <stdexcept>
#include <string>

namespace kptau {

/// A coefficient was requested beyond the order to which a series is known.
/// Thrown instead of ever returning a silently-truncated zero.
struct insufficient_truncation : std::runtime_error {
    explicit insufficient_truncation(const std::string& what)
        : std::runtime_error(what) {}
};

/// express_in_basis found a nonzero residual inside the reliable window.
struct not_in_span : std::runtime_error {
    explicit not_in_span(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kptau
