#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliff/generators.hpp"
#include "cliff/report.hpp"

namespace cliff {

enum class VerifyScope { all, algebra, conformal, generators, twistor, pure };

std::optional<VerifyScope> parse_scope(const std::string& name);
std::string to_string(VerifyScope scope);
const std::vector<std::string>& scope_names();

// Runs the identity suites for a scope with a seeded sampler. The report is a
// pure function of its arguments. The M convention only affects the generator
// table; the reversed-order reading is expected to fail.
VerificationReport run_verify(VerifyScope scope, std::uint64_t seed,
                              MConvention convention = MConvention::standard);

VerificationReport verify_algebra(std::uint64_t seed);
VerificationReport verify_conformal(std::uint64_t seed);
// Klein absolute sweeps only (compactification and quadric equivalence).
VerificationReport verify_klein(std::uint64_t seed);
// Map table, unit closure, homomorphism and conformal factor.
VerificationReport verify_maps(std::uint64_t seed);
// Every relation family, checked directly and after P -> -K, K -> -P, D -> -D.
VerificationReport verify_generators(MConvention convention = MConvention::standard);
VerificationReport verify_twistor(std::uint64_t seed);
VerificationReport verify_pure(std::uint64_t seed);
VerificationReport verify_purity(std::uint64_t seed);
VerificationReport verify_orbits(std::uint64_t seed);
VerificationReport verify_flagpoles(std::uint64_t seed);

}  // namespace cliff
