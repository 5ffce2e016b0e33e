#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qappell/appell.hpp"
#include "qappell/report.hpp"

namespace qappell {

enum class FamilyKind { bernoulli, euler, genocchi, hermite };

inline constexpr std::array<FamilyKind, 4> kAllFamilies{FamilyKind::bernoulli, FamilyKind::euler,
                                                        FamilyKind::genocchi, FamilyKind::hermite};

const char* to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view text);

/// Series truncation order used when none is given.
inline constexpr std::size_t kDefaultOrder = 24;

/// Generators, each known exactly up to t^order:
///   bernoulli  t / (e_q(t) - 1)
///   euler      2 / (e_q(t) + 1)
///   genocchi   2t / (e_q(t) + 1)
///   hermite    sum_n (-1)^n q^(n(n-1)) t^(2n) / [2n]_q!!
AppellFamily make_family(FamilyKind kind, std::size_t order);

/// t e_q(t) / (e_q(2t) - 1), the generator of the numbers e_{n,q}.
Series euler_number_series(std::size_t order);

/// e_{0,q} .. e_{max_n,q}, with e_{n,q} = [n]_q! [t^n] euler_number_series.
std::vector<QRat> euler_numbers(std::size_t max_n);

/// Specialised recurrences and difference equations exactly as printed for
/// each family. The Euler ones come in several readings of their number
/// symbol: `number` uses e_{m,q} from euler_number_series, `polynomial`
/// multiplies by E_{m,q}(x), `at_zero` uses E_{m,q}(0).
enum class PrintedTheorem {
  b1,
  b2,
  e1_number,
  e1_polynomial,
  e1_at_zero,
  e2_number,
  e2_at_zero,
  g1,
  g2,
};

inline constexpr std::array<PrintedTheorem, 9> kAllPrintedTheorems{
    PrintedTheorem::b1,        PrintedTheorem::b2,         PrintedTheorem::e1_number,
    PrintedTheorem::e1_polynomial, PrintedTheorem::e1_at_zero, PrintedTheorem::e2_number,
    PrintedTheorem::e2_at_zero, PrintedTheorem::g1,         PrintedTheorem::g2};

const char* to_string(PrintedTheorem t);
FamilyKind family_of(PrintedTheorem t);

/// Residual of the printed formula for every n in [n_first, n_last]
/// (n_first >= 2), summarised as a claim status. Inapplicable when `kind`
/// is not the theorem's family or the range is empty.
DiscrepancyReport verify_printed_theorem(FamilyKind kind, PrintedTheorem theorem, int n_first, int n_last);
DiscrepancyReport verify_printed_theorem(FamilyKind kind, PrintedTheorem theorem, int n);

/// The residual polynomials behind verify_printed_theorem.
std::vector<XPoly> printed_theorem_residuals(PrintedTheorem theorem, int n_first, int n_last);

/// e_{n,q} - 2^n E_{n,q}(1/2) for n = 0..max_n.
DiscrepancyReport verify_euler_number_relation(int max_n);

/// A_{n,q}(x) at q = 1. Throws pole_error if a coefficient is singular there.
RationalPoly classical_limit(FamilyKind kind, std::size_t n);
RationalPoly classical_limit(const AppellFamily& fam, std::size_t n);

}  // namespace qappell
