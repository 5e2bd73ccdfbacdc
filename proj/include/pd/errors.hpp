#ifndef PD_ERRORS_HPP
#define PD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pd {

// Error categories shared across devices, schemes, the game harness and the CLI.
enum class Errc {
    out_of_range,         // device address outside geometry
    bad_length,           // payload size does not match block/page size
    write_once_violation, // flash program requested a 1 -> 0 transition
    config,               // invalid geometry or scheme parameters
    rule_violation,       // challenge pattern fails a game requirement
    volume_full,          // logical address beyond declared capacity
    not_found,            // read of a never-written logical address
    stash_overflow,       // wORAM stash exceeded its bound
    log_full,             // append log has no reclaimable space
    queue_overflow,       // pending hidden-write queue exceeded its bound
    no_invalid_pages,     // no cover page available for a hidden flash write
    domain,               // argument outside mathematical domain
    precondition,         // caller violated a documented precondition
    usage,                // bad CLI arguments
};

const char* errc_name(Errc c);

class PdError : public std::runtime_error {
public:
    PdError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw PdError(code, what);
}

} // namespace pd

#endif
