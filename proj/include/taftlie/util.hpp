#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace taftlie {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structural verification failed (module-algebra law, Hopf axiom, ...).
/// The message names the witness that broke the identity.
struct VerificationError : Error {
    using Error::Error;
};

/// A codimension computation would exceed the configured entry budget.
/// `required` is exact (may not fit a machine word), hence a string.
struct BudgetExceeded : Error {
    std::string required;
    unsigned long long budget;
    BudgetExceeded(std::string req, unsigned long long bud)
        : Error("evaluation matrix needs " + req + " entries, budget is " + std::to_string(bud)),
          required(std::move(req)), budget(bud) {}
};

/// Default seed for all randomized identity checks.  Reports record the seed
/// actually used so runs are reproducible bit for bit.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

// Deterministic small-integer source.  mt19937_64 is fully specified by the
// standard; we reduce by modulo instead of uniform_int_distribution, whose
// output is implementation-defined.
class SmallRng {
  public:
    explicit SmallRng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

    /// Integer in [lo, hi], inclusive.
    long next(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace taftlie
