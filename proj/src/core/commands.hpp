#pragma once

/// @file commands.hpp
/// @brief Front-end commands: canonical renderings of the universal
///        polynomials, zeta-task reports, verification reports and cache
///        management.
///
/// Every command returns a RunReport (or, for the universal polynomials,
/// the canonical text) and validates its argument ranges with usage
/// errors, so callers only translate exceptions into status codes.

#include <string>

#include "motive_doc.hpp"
#include "report.hpp"

namespace mzeta {

/// Canonical text of P_n (1 <= n <= 8).
std::string universal_p_text(UniversalEngine& engine, int n);
/// Canonical text of P_{n,r} (n, r >= 1, n*r <= 12).
std::string universal_pnr_text(UniversalEngine& engine, int n, int r);
/// Canonical text of q_{g,n} (1 <= g <= 3, 0 <= n <= 2g).
std::string universal_q_text(UniversalEngine& engine, int g, int n);

/// Zeta report for a document.  With a nonempty expr the single named class
/// is processed; otherwise the document's own task list runs in order.
/// order >= 0 overrides the series order (default: twice the expected
/// degree plus two when a split is declared, ten otherwise); weight >= 0
/// additionally checks the reflection T -> 1/(L^weight T), which requires a
/// declared plus/minus split.
RunReport cmd_zeta(UniversalEngine& engine, const MotiveDocument& doc,
                   const std::string& expr = "", int order = -1, int weight = -1);

RunReport cmd_verify_abelian(UniversalEngine& engine, int g);
RunReport cmd_verify_curve(UniversalEngine& engine, int g);
RunReport cmd_verify_product(UniversalEngine& engine, int gx = 1, int gy = 1);
RunReport cmd_verify_blowup(UniversalEngine& engine, int g = 2, int codim = 2);
RunReport cmd_verify_identities(UniversalEngine& engine, int max_weight = 8);

RunReport cmd_cache_status(UniversalEngine& engine);
RunReport cmd_cache_clear(UniversalEngine& engine);
RunReport cmd_cache_warm(UniversalEngine& engine, int g);

}  // namespace mzeta
