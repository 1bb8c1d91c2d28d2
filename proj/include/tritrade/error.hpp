#pragma once

#include <climits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tritrade {

enum class errc {
    invalid_argument,
    not_a_unitrade,
    bad_base_word,
    out_of_range,
    empty_catalog,
    orbit_too_large,
    dimension_too_large,
    dimension_too_small,
    too_many_monomials,
    profile_has_equal_columns,
    degenerate_triple,
    bad_s,
    precondition_unverifiable,
    ambiguous_recovery,
    not_balanced,
    precondition_failed,
    rank_defect,
    interrupted,
    checkpoint_mismatch,
};

inline std::string_view to_string(errc code) {
    switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::not_a_unitrade: return "NotAUnitrade";
    case errc::bad_base_word: return "BadBaseWord";
    case errc::out_of_range: return "OutOfRange";
    case errc::empty_catalog: return "EmptyCatalog";
    case errc::orbit_too_large: return "OrbitTooLarge";
    case errc::dimension_too_large: return "DimensionTooLarge";
    case errc::dimension_too_small: return "DimensionTooSmall";
    case errc::too_many_monomials: return "TooManyMonomials";
    case errc::profile_has_equal_columns: return "ProfileHasEqualColumns";
    case errc::degenerate_triple: return "DegenerateTriple";
    case errc::bad_s: return "BadS";
    case errc::precondition_unverifiable: return "PreconditionUnverifiable";
    case errc::ambiguous_recovery: return "AmbiguousRecovery";
    case errc::not_balanced: return "NotBalanced";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::rank_defect: return "RankDefect";
    case errc::interrupted: return "Interrupted";
    case errc::checkpoint_mismatch: return "CheckpointMismatch";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

/// Sentinel for "minus infinity" results (degree of the zero function, r(W)
/// when a column carries all three symbols).
inline constexpr int minus_infinity = INT_MIN;

} // namespace tritrade
