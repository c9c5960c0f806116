#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace awcsp {

/// Raised when a request exceeds a configured size cap.
struct cap_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Raised when an internal count identity fails. Never expected in practice:
/// it means either a bug or a falsified counting claim.
struct structural_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Size limits for the expensive enumerations.
struct Caps {
    int max_poly_degree = 12;
    std::uint32_t max_q = 100;
    // upper bound on q^d for the irreducible-polynomial sieve
    std::uint64_t max_sieve_size = 100'000'000;
    int max_block_n = 6;
    std::uint32_t max_block_q = 13;
    int max_truncation = 4096;
    int max_count_n = 30;
    bool enforced = true;

    /// Default caps, or no caps at all when AWCSP_UNSAFE_NO_CAPS is set to a
    /// non-empty value other than "0". Uncapped runs may be very slow.
    static Caps from_env() {
        Caps caps;
        if (const char* v = std::getenv("AWCSP_UNSAFE_NO_CAPS"); v && *v && std::string(v) != "0")
            caps.enforced = false;
        return caps;
    }

    static Caps unlimited() {
        Caps caps;
        caps.enforced = false;
        return caps;
    }

    void check(bool within, const std::string& what) const {
        if (enforced && !within)
            throw cap_error(what + " exceeds cap (set AWCSP_UNSAFE_NO_CAPS=1 to override)");
    }
};

}  // namespace awcsp
