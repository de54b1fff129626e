#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suppvar/module.hpp"

namespace suppvar {

/// Endomorphism spaces up to this many elements are scanned exhaustively.
inline constexpr std::uint64_t kExhaustiveScanLimit = 1'000'000;
inline constexpr std::size_t kRandomSamples = 200;

enum class IsoVerdict { Yes, No, Unknown };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::Unknown;
    Matrix witness;           ///< invertible intertwiner M -> N when Yes
    std::string certificate;  ///< failed invariant when No
};
IsoResult is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed = 0);

struct DecompositionReport {
    std::vector<ModuleRep> summands;
    /// Columns are the summand bases in M coordinates, in summand order:
    /// witness^-1 rho_M(a) witness = block_diag(rho_i(a)).
    Matrix witness;
    std::vector<bool> summand_certified;
    bool certified = false;
    std::size_t trials = 0;  ///< random endomorphisms drawn
};
DecompositionReport fitting_decompose(const ModuleRep& m, std::uint64_t seed = 0);

struct PeriodicityResult {
    std::optional<std::size_t> period;
    bool inconclusive = false;  ///< some comparison came back Unknown
    Matrix witness;             ///< Omega^period M -> M
};
PeriodicityResult detect_periodicity(const ModuleRep& m, std::size_t n_max = 8, std::uint64_t seed = 0);

}  // namespace suppvar
