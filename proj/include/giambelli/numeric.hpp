#ifndef GIAMBELLI_NUMERIC_HPP
#define GIAMBELLI_NUMERIC_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace giambelli {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Scalar helpers shared by the exact-rational and floating backends.
// ---------------------------------------------------------------------------

inline Rational rat_from_long(long n) { return Rational(n); }

inline Integer factorial(long n) {
  Integer r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

template <class S>
S ipow(const S& base, long e) {
  if (e < 0) throw std::invalid_argument("ipow: negative exponent");
  S r = S(1);
  S b = base;
  long k = e;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

// Rising factorial (a)_k = a(a+1)...(a+k-1), (a)_0 = 1.
template <class S>
S pochhammer(const S& a, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative k");
  S r = S(1);
  S t = a;
  for (long i = 0; i < k; ++i) {
    r = r * t;
    t = t + S(1);
  }
  return r;
}

// Falling factorial n^{(down) m} = n(n-1)...(n-m+1); zero when n < m for
// integer n >= 0.
template <class S>
S falling(const S& n, long m) {
  S r = S(1);
  S t = n;
  for (long i = 0; i < m; ++i) {
    r = r * t;
    t = t - S(1);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Determinants.  Exact Gaussian elimination for field scalars; partial
// pivoting in the floating case.
// ---------------------------------------------------------------------------

inline double pivot_size(const Rational& x) { return x == 0 ? 0.0 : 1.0; }
inline double pivot_size(double x) { return std::abs(x); }
inline double pivot_size(const Complex& x) { return std::abs(x); }

template <class S>
S det(std::vector<std::vector<S>> m) {
  const size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det: non-square matrix");
  S result = S(1);
  for (size_t c = 0; c < n; ++c) {
    size_t best = c;
    double bestsz = pivot_size(m[c][c]);
    for (size_t r = c + 1; r < n; ++r) {
      double sz = pivot_size(m[r][c]);
      if (sz > bestsz) { best = r; bestsz = sz; }
    }
    if (bestsz == 0.0) return S(0);
    if (best != c) {
      std::swap(m[best], m[c]);
      result = -result;
    }
    result = result * m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      S f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Exact parsing and printing.  Accepted scalar forms: "3", "-5/7", "0.25"
// (decimals are converted exactly), and for complex input "a+bi" with both
// pieces in any of the previous forms.
// ---------------------------------------------------------------------------

Rational parse_rational(const std::string& s);
Complex parse_complex(const std::string& s);
bool looks_complex(const std::string& s);

std::string to_string(const Rational& q);

// Half-integers on Z' = Z + 1/2 are carried around as twice their value
// (an odd integer).  "7/2", "-1/2" rendering matches the wire format.
std::string half_to_string(int twice);
int parse_half(const std::string& s);

inline double half_value(int twice) { return 0.5 * twice; }

}  // namespace giambelli

#endif
