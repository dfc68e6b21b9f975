#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace grpt {

/// Exact rational with a positive denominator and gcd 1. Arithmetic is
/// overflow-checked through 128-bit intermediates; all comparisons are exact.
struct Rat {
  long long p = 0;
  long long q = 1;

  Rat() = default;
  Rat(long long num) : p(num), q(1) {}
  Rat(long long num, long long den) : p(num), q(den) { normalize(); }

  void normalize() {
    if (q == 0) throw std::domain_error("rational with zero denominator");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    long long const g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
      p /= g;
      q /= g;
    }
  }

  bool operator==(Rat const&) const = default;
};

namespace detail {
inline long long narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<long long>(v);
}

inline Rat make(__int128 p, __int128 q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  auto abs128 = [](__int128 v) { return v < 0 ? -v : v; };
  __int128 a = abs128(p), b = q;
  while (b) {
    __int128 const r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    p /= a;
    q /= a;
  }
  Rat out;
  out.p = narrow(p);
  out.q = narrow(q);
  return out;
}
}  // namespace detail

inline Rat operator+(Rat const& a, Rat const& b) {
  return detail::make(static_cast<__int128>(a.p) * b.q + static_cast<__int128>(b.p) * a.q,
                      static_cast<__int128>(a.q) * b.q);
}
inline Rat operator-(Rat const& a, Rat const& b) {
  return detail::make(static_cast<__int128>(a.p) * b.q - static_cast<__int128>(b.p) * a.q,
                      static_cast<__int128>(a.q) * b.q);
}
inline Rat operator*(Rat const& a, Rat const& b) {
  return detail::make(static_cast<__int128>(a.p) * b.p, static_cast<__int128>(a.q) * b.q);
}
inline Rat operator/(Rat const& a, Rat const& b) {
  if (b.p == 0) throw std::domain_error("rational division by zero");
  return detail::make(static_cast<__int128>(a.p) * b.q, static_cast<__int128>(a.q) * b.p);
}
inline Rat operator-(Rat const& a) {
  Rat out = a;
  out.p = -out.p;
  return out;
}

inline bool operator<(Rat const& a, Rat const& b) {
  return static_cast<__int128>(a.p) * b.q < static_cast<__int128>(b.p) * a.q;
}
inline bool operator>(Rat const& a, Rat const& b) { return b < a; }
inline bool operator<=(Rat const& a, Rat const& b) { return !(b < a); }
inline bool operator>=(Rat const& a, Rat const& b) { return !(a < b); }

inline std::string to_string(Rat const& r) {
  if (r.q == 1) return std::to_string(r.p);
  return std::to_string(r.p) + "/" + std::to_string(r.q);
}

/// Parses "p" or "p/q"; normalizes (so "3/6" loads as 1/2).
/// Throws std::invalid_argument on malformed input.
inline Rat parse_rational(std::string const& s) {
  auto const slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long const p = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters");
      return Rat{p};
    }
    long long const p = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("trailing characters");
    std::string const den = s.substr(slash + 1);
    long long const q = std::stoll(den, &used);
    if (used != den.size()) throw std::invalid_argument("trailing characters");
    return Rat{p, q};
  } catch (std::domain_error const&) {
    throw;
  } catch (std::exception const&) {
    throw std::invalid_argument("malformed rational \"" + s + "\"");
  }
}

}  // namespace grpt
