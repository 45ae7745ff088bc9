#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spectre {

enum class Variant { None, Plus, Minus };

/// KO-dimension label n mod 8.  Even dimensions carry a plus/minus variant
/// (the conventional and exotic columns of the extended sign table); odd
/// dimensions carry none.
struct KOLabel {
  int n = 0;
  Variant variant = Variant::Plus;

  bool even() const { return n % 2 == 0; }
  void validate() const;

  /// "0+", "4-", "5", ...
  std::string str() const;
  static KOLabel parse(std::string_view text);

  friend bool operator==(const KOLabel& a, const KOLabel& b) {
    return a.n == b.n && a.variant == b.variant;
  }
};

/// (eps, eps', eps'') with eps'' absent in odd parity.
struct SignTriple {
  int eps = +1;
  int eps_prime = +1;
  std::optional<int> eps_double_prime;
};

/// Column lookup in the KO sign tables.  Even labels read the 12-column
/// extended table; odd labels the conventional one.
SignTriple sign_table(const KOLabel& label);

/// eps''(n) for even n from the conventional table (it is the same for the
/// plus and minus columns).
int conventional_eps_double_prime(int n);

/// eps'(n) for odd n from the conventional table.
int odd_eps_prime(int n);

/// All 12 extended labels in table order: 0+, 0-, 1, 2+, 2-, 3, ..., 7.
const std::vector<KOLabel>& all_labels();

}  // namespace spectre
