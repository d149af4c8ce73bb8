#pragma once

#include <stdexcept>
#include <string>

namespace cohrank {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Mode-count or index mismatch between operands.
class dimension_error : public error {
public:
    using error::error;
};

/// State with (near-)zero norm where a normalizable state is required.
class degenerate_error : public error {
public:
    using error::error;
};

/// A decomposition coefficient left the representable double range.
class overflow_error : public error {
public:
    using error::error;
};

/// A decomposition construction failed to produce finite parameters.
class decomposition_error : public error {
public:
    using error::error;
};

/// Argument outside its admissible range (factorials, Laguerre order, ...).
class range_error : public error {
public:
    using error::error;
};

/// Work or memory estimate exceeds a configured cap.
class resource_cap_error : public error {
public:
    using error::error;
};

/// Sampler could not find a valid starting configuration.
class init_error : public error {
public:
    using error::error;
};

/// Photon cutoff leaves too much probability mass unaccounted for.
class cutoff_error : public error {
public:
    using error::error;
};

/// Quadrature region too small: the integrand has mass on the boundary.
class radius_error : public error {
public:
    using error::error;
};

/// Semantic validation failure of an input (file contents, flag combination).
class validation_error : public error {
public:
    using error::error;
};

/// Syntactic failure reading an input file.
class parse_error : public error {
public:
    using error::error;
};

} // namespace cohrank
