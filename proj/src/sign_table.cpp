#include "spectre/sign_table.hpp"

#include <array>
#include <stdexcept>

namespace spectre {

namespace {

// Conventional table, n = 0..7.
constexpr std::array<int, 8> kEps = {+1, +1, -1, -1, -1, -1, +1, +1};
constexpr std::array<int, 8> kEpsPrime = {+1, -1, +1, +1, +1, -1, +1, +1};
constexpr std::array<int, 8> kEpsDoublePrime = {+1, 0, -1, 0, +1, 0, -1, 0};  // 0 = suppressed

// Extended table, exotic columns n_- for even n.
constexpr std::array<int, 8> kEpsMinus = {+1, 0, +1, 0, -1, 0, -1, 0};
constexpr std::array<int, 8> kEpsPrimeMinus = {-1, 0, -1, 0, -1, 0, -1, 0};
constexpr std::array<int, 8> kEpsDoublePrimeMinus = {+1, 0, -1, 0, +1, 0, -1, 0};

}  // namespace

void KOLabel::validate() const {
  if (n < 0 || n > 7) throw std::invalid_argument("KOLabel: n must be in 0..7");
  if (n % 2 == 0 && variant == Variant::None)
    throw std::invalid_argument("KOLabel: even dimension requires a plus/minus variant");
  if (n % 2 == 1 && variant != Variant::None)
    throw std::invalid_argument("KOLabel: odd dimension carries no variant");
}

std::string KOLabel::str() const {
  std::string out = std::to_string(n);
  if (variant == Variant::Plus) out += '+';
  if (variant == Variant::Minus) out += '-';
  return out;
}

KOLabel KOLabel::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("KOLabel: empty label");
  const char c = text.front();
  if (c < '0' || c > '7') throw std::invalid_argument("KOLabel: expected digit 0..7");
  KOLabel label;
  label.n = c - '0';
  std::string_view rest = text.substr(1);
  if (rest.empty())
    label.variant = label.n % 2 == 0 ? Variant::Plus : Variant::None;
  else if (rest == "+")
    label.variant = Variant::Plus;
  else if (rest == "-")
    label.variant = Variant::Minus;
  else
    throw std::invalid_argument("KOLabel: unrecognised label '" + std::string(text) + "'");
  label.validate();
  return label;
}

SignTriple sign_table(const KOLabel& label) {
  label.validate();
  SignTriple s;
  if (!label.even()) {
    s.eps = kEps[label.n];
    s.eps_prime = kEpsPrime[label.n];
    return s;
  }
  if (label.variant == Variant::Plus) {
    s.eps = kEps[label.n];
    s.eps_prime = kEpsPrime[label.n];
    s.eps_double_prime = kEpsDoublePrime[label.n];
  } else {
    s.eps = kEpsMinus[label.n];
    s.eps_prime = kEpsPrimeMinus[label.n];
    s.eps_double_prime = kEpsDoublePrimeMinus[label.n];
  }
  return s;
}

int conventional_eps_double_prime(int n) {
  if (n < 0 || n > 7 || n % 2 != 0)
    throw std::invalid_argument("conventional_eps_double_prime: need even n in 0..7");
  return kEpsDoublePrime[n];
}

int odd_eps_prime(int n) {
  if (n < 0 || n > 7 || n % 2 != 1) throw std::invalid_argument("odd_eps_prime: need odd n in 0..7");
  return kEpsPrime[n];
}

const std::vector<KOLabel>& all_labels() {
  static const std::vector<KOLabel> labels = [] {
    std::vector<KOLabel> out;
    for (int n = 0; n < 8; ++n) {
      if (n % 2 == 0) {
        out.push_back({n, Variant::Plus});
        out.push_back({n, Variant::Minus});
      } else {
        out.push_back({n, Variant::None});
      }
    }
    return out;
  }();
  return labels;
}

}  // namespace spectre
