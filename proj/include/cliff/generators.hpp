#pragma once

// Generators of the conformal algebra of Minkowski space inside C (x) Cl(1,3),
// metric diag(1, -1, -1, -1):
//
//   P_mu = (g_mu + i g_mu g5)/2    K_mu = -(g_mu - i g_mu g5)/2    D = i g5 / 2
//   M_mu,nu = (g_mu ^ g_nu)/2      (standard order; reversed swaps mu, nu)

#include <string>
#include <vector>

#include "cliff/multivector.hpp"
#include "cliff/report.hpp"

namespace cliff {

enum class GeneratorKind { P, K, D, M };
enum class MConvention { standard, reversed };

std::string to_string(GeneratorKind k);
std::string to_string(MConvention c);

struct ConfGenerator {
  GeneratorKind kind;
  std::vector<int> indices;
  Multivector<Exact> value;
};

// Throws DomainError for out-of-range indices, the wrong index count, or
// mu == nu for M.
ConfGenerator generator(GeneratorKind kind, const std::vector<int>& indices = {},
                        MConvention convention = MConvention::standard);

// The nine relation families, in display order.
const std::vector<std::string>& relation_families();

// Every family over every index tuple, evaluated in the multivector engine and
// in the 4x4 gamma-matrix oracle. A check passes when both residuals vanish
// and the engine residual maps onto the oracle residual.
VerificationReport commutation_table(MConvention convention = MConvention::standard);

// Same table after P -> -K, K -> -P, D -> -D.
VerificationReport duality_check(MConvention convention = MConvention::standard);

}  // namespace cliff
