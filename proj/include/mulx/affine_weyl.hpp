#pragma once

#include <span>
#include <string>
#include <vector>

#include "mulx/partition.hpp"

namespace mulx {

struct WeylLetter {
  enum class Kind { sigma, tau, tau_inv };

  Kind kind = Kind::tau;
  int index = 0;  // sigma only: 1..l-1

  static WeylLetter sigma(int c) { return {Kind::sigma, c}; }
  static WeylLetter tau() { return {Kind::tau, 0}; }
  static WeylLetter tau_inv() { return {Kind::tau_inv, 0}; }

  bool operator==(const WeylLetter&) const = default;
};

/// Word in sigma_c / tau / tau^-1. Acts on multicharges on the left; letters
/// apply right to left, so concatenation reads like a group product.
class WeylWord {
 public:
  WeylWord() = default;
  explicit WeylWord(std::vector<WeylLetter> letters) : letters_(std::move(letters)) {}

  const std::vector<WeylLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  WeylWord& operator*=(const WeylWord& rhs);
  friend WeylWord operator*(WeylWord lhs, const WeylWord& rhs) { return lhs *= rhs; }
  WeylWord pow(int k) const;

  bool operator==(const WeylWord&) const = default;

 private:
  std::vector<WeylLetter> letters_;
};

/// sigma_c swaps entries c-1 and c; tau maps (s_0,..,s_{l-1}) to
/// (s_1,..,s_{l-1},s_0+e). tau needs a finite modulus.
Multicharge act(const WeylWord& w, const Multicharge& s);

/// gamma_p rotates the tuple left by p.
WeylWord gamma_word(int p, int l);
/// alpha_p = tau^{l-p} gamma_p adds e to entries p..l-1.
WeylWord alpha_word(int p, int l);
/// Longest element: reverses the tuple.
WeylWord w0_word(int l);
/// eta = alpha_1^{2(p_{l-1}+1)} ... alpha_{l-1}^{2(p_1+1)} w_0.
WeylWord eta_word(std::span<const int> p, int l);

/// "a1^8 a2^8 w0" rendering of eta for the given exponents.
std::string eta_display(std::span<const int> p, int l);
/// Letter-by-letter rendering: "s2 s1 t t-"; identity renders as "".
std::string to_string(const WeylWord& w);

struct AsymptoticLift {
  Multicharge charge;
  std::vector<int> exponents;  // p_1..p_{l-1}
};

/// Lift of the residue class (entries taken in [0, e)) whose consecutive
/// differences exceed n-1: entry c is (+-)s_c + (p_1+..+p_c)e with each p_c
/// minimal. negate lifts -s instead of s.
AsymptoticLift asymptotic_lift(const std::vector<int>& charge_class, int n, int e, bool negate);

/// True iff s_{i+1} - s_i > n-1 for all i.
bool is_asymptotic(const Multicharge& s, int n);

}  // namespace mulx
