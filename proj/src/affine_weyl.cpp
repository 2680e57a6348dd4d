#include "mulx/affine_weyl.hpp"

#include <algorithm>

namespace mulx {

WeylWord& WeylWord::operator*=(const WeylWord& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

WeylWord WeylWord::pow(int k) const {
  if (k < 0) fail(errc::malformed_input, "negative word power");
  WeylWord out;
  out.letters_.reserve(letters_.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

Multicharge act(const WeylWord& w, const Multicharge& s) {
  Multicharge cur = s;
  const int l = cur.level();
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    switch (it->kind) {
      case WeylLetter::Kind::sigma: {
        const int c = it->index;
        if (c < 1 || c > l - 1)
          fail(errc::index_out_of_range,
               "sigma index " + std::to_string(c) + " outside 1.." + std::to_string(l - 1));
        std::swap(cur.charges[c - 1], cur.charges[c]);
        break;
      }
      case WeylLetter::Kind::tau: {
        if (!cur.e.is_finite()) fail(errc::malformed_input, "tau needs a finite modulus");
        std::rotate(cur.charges.begin(), cur.charges.begin() + 1, cur.charges.end());
        cur.charges.back() += cur.e.value();
        break;
      }
      case WeylLetter::Kind::tau_inv: {
        if (!cur.e.is_finite()) fail(errc::malformed_input, "tau needs a finite modulus");
        std::rotate(cur.charges.begin(), cur.charges.end() - 1, cur.charges.end());
        cur.charges.front() -= cur.e.value();
        break;
      }
    }
  }
  return cur;
}

namespace {

// w_(c,d) = sigma_c sigma_{c-1} ... sigma_d
WeylWord w_cd(int c, int d) {
  std::vector<WeylLetter> letters;
  for (int k = c; k >= d; --k) letters.push_back(WeylLetter::sigma(k));
  return WeylWord(std::move(letters));
}

void check_p(int p, int l) {
  if (l < 1) fail(errc::index_out_of_range, "level must be >= 1");
  if (p < 1 || p > l - 1)
    fail(errc::index_out_of_range,
         "p = " + std::to_string(p) + " outside 1.." + std::to_string(l - 1));
}

}  // namespace

WeylWord gamma_word(int p, int l) {
  check_p(p, l);
  WeylWord out;
  for (int j = 0; j < p; ++j) out *= w_cd(l - p + j, 1 + j);
  return out;
}

WeylWord alpha_word(int p, int l) {
  check_p(p, l);
  return WeylWord(std::vector<WeylLetter>(l - p, WeylLetter::tau())) * gamma_word(p, l);
}

WeylWord w0_word(int l) {
  if (l < 1) fail(errc::index_out_of_range, "level must be >= 1");
  WeylWord out;
  for (int j = 1; j <= l - 1; ++j) out *= w_cd(j, 1);
  return out;
}

WeylWord eta_word(std::span<const int> p, int l) {
  if (static_cast<int>(p.size()) != l - 1)
    fail(errc::malformed_input, "eta needs l-1 exponent parameters");
  for (int pc : p)
    if (pc < 0) fail(errc::malformed_input, "eta exponent parameters must be >= 0");
  WeylWord out;
  for (int k = 1; k <= l - 1; ++k) out *= alpha_word(k, l).pow(2 * (p[l - k - 1] + 1));
  return out * w0_word(l);
}

std::string eta_display(std::span<const int> p, int l) {
  std::string out;
  for (int k = 1; k <= l - 1; ++k) {
    out += "a" + std::to_string(k) + "^" + std::to_string(2 * (p[l - k - 1] + 1)) + " ";
  }
  return out + "w0";
}

std::string to_string(const WeylWord& w) {
  std::string out;
  for (const WeylLetter& letter : w.letters()) {
    if (!out.empty()) out += ' ';
    switch (letter.kind) {
      case WeylLetter::Kind::sigma: out += "s" + std::to_string(letter.index); break;
      case WeylLetter::Kind::tau: out += "t"; break;
      case WeylLetter::Kind::tau_inv: out += "t-"; break;
    }
  }
  return out;
}

AsymptoticLift asymptotic_lift(const std::vector<int>& charge_class, int n, int e, bool negate) {
  if (n < 0) fail(errc::malformed_input, "n must be >= 0");
  Modulus mod = Modulus::finite(e);
  if (charge_class.empty()) fail(errc::malformed_input, "empty multicharge");

  std::vector<int> base;
  base.reserve(charge_class.size());
  for (int c : charge_class) {
    const int r = mod.reduce(c);
    base.push_back(negate ? -r : r);
  }

  AsymptoticLift out;
  out.charge.e = mod;
  out.charge.charges.push_back(base[0]);
  int shift = 0;
  for (std::size_t c = 1; c < base.size(); ++c) {
    const int diff = base[c] - base[c - 1];
    const int t = n - 1 - diff;            // need p*e > t, p >= 0 minimal
    const int p = t < 0 ? 0 : t / e + 1;
    out.exponents.push_back(p);
    shift += p * e;
    out.charge.charges.push_back(base[c] + shift);
  }
  return out;
}

bool is_asymptotic(const Multicharge& s, int n) {
  for (std::size_t i = 0; i + 1 < s.charges.size(); ++i) {
    if (s.charges[i + 1] - s.charges[i] <= n - 1) return false;
  }
  return true;
}

}  // namespace mulx
