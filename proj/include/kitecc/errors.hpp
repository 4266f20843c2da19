#ifndef KITECC_ERRORS_HPP
#define KITECC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kitecc {

// Base error carrying the originating module and a stable kind tag, so the
// CLI can emit machine-readable error records.
class Error : public std::runtime_error {
public:
    Error(std::string module, std::string kind, const std::string& message)
        : std::runtime_error(message), module_(std::move(module)), kind_(std::move(kind)) {}

    const std::string& module() const noexcept { return module_; }
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string module_;
    std::string kind_;
};

struct DegenerateGeometry : Error {
    DegenerateGeometry(std::string module, const std::string& msg)
        : Error(std::move(module), "DegenerateGeometry", msg) {}
};

struct OutOfDomain : Error {
    OutOfDomain(std::string module, const std::string& msg)
        : Error(std::move(module), "OutOfDomain", msg) {}
};

struct NoBracket : Error {
    explicit NoBracket(const std::string& msg) : Error("solver", "NoBracket", msg) {}
};

struct ConvergenceFailure : Error {
    ConvergenceFailure(std::string module, const std::string& msg)
        : Error(std::move(module), "ConvergenceFailure", msg) {}
};

struct NoSolution : Error {
    explicit NoSolution(const std::string& msg) : Error("solver", "NoSolution", msg) {}
};

struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& msg)
        : Error("analysis", "ZeroDenominator", msg) {}
};

struct CollisionSingularity : Error {
    explicit CollisionSingularity(const std::string& msg)
        : Error("nbody_oracle", "CollisionSingularity", msg) {}
};

struct InvalidArguments : Error {
    explicit InvalidArguments(const std::string& msg)
        : Error("cli_io", "InvalidArguments", msg) {}
};

struct IoFailure : Error {
    explicit IoFailure(const std::string& msg) : Error("cli_io", "IoFailure", msg) {}
};

} // namespace kitecc

#endif
