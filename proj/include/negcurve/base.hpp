#ifndef NEGCURVE_BASE_HPP
#define NEGCURVE_BASE_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace negcurve {

/// Thrown when an input value or file violates a precondition (malformed
/// JSON, non-negative curvature, degenerate triangle, ...). The CLI maps
/// this to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when the malnormal-family hypothesis is violated (two attaching
/// loops fully overlap, a loop is a proper power, ...). Carries a witness
/// description. The CLI maps this to exit code 1 (verified failure).
struct MalnormalError : std::runtime_error {
    std::string witness;
    explicit MalnormalError(const std::string& what, std::string witness_)
        : std::runtime_error(what), witness(std::move(witness_)) {}
};

namespace tol {
/// Absolute tolerance for angle/length identities. Overridable via the CLI
/// --tolerance flag; mutate before launching any computation.
inline double angle = 1e-9;
/// Inputs closer than this to a degenerate configuration are rejected.
constexpr double degenerate = 1e-12;
}  // namespace tol

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

/// Curvature of a model plane M^2_k. Strictly negative and finite.
class Curvature {
  public:
    explicit Curvature(double k) : k_(k) {
        if (!std::isfinite(k) || k >= 0.0)
            throw InputError("curvature must be finite and strictly negative, got " +
                             std::to_string(k));
    }
    double value() const { return k_; }
    /// Length scale relative to the unit-curvature plane: distances in M^2_k
    /// are unit-model distances divided by sqrt(-k).
    double scale() const { return std::sqrt(-k_); }

    friend bool operator==(const Curvature& a, const Curvature& b) { return a.k_ == b.k_; }

  private:
    double k_;
};

}  // namespace negcurve

#endif
