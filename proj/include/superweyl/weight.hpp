#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "superweyl/common.hpp"

namespace superweyl {

using Rat = boost::rational<long long>;

// Block sizes of GL(m|n). Coordinates 0..m-1 are even, m..m+n-1 are odd.
struct Superdim {
  int m = 0;
  int n = 0;

  Superdim() = default;
  Superdim(int m_, int n_) : m(m_), n(n_) {
    check_input(m >= 1 && n >= 1, "Superdim requires m >= 1 and n >= 1");
  }

  int total() const { return m + n; }

  // sigma_i: +1 on the first block, -1 on the second.
  int sign(int i) const {
    check_input(i >= 0 && i < total(), "coordinate index out of range");
    return i < m ? 1 : -1;
  }

  bool operator==(const Superdim& o) const { return m == o.m && n == o.n; }
  bool operator!=(const Superdim& o) const { return !(*this == o); }
};

// Element of X(T) ⊗ (1/2)Z in the epsilon basis. Coordinates are exact
// half-integers stored as twice their value, so arithmetic is pure int64.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim) : h_(dim, 0) {}

  // From integer coordinates.
  static Weight integral(std::vector<long long> coords) {
    Weight w;
    w.h_ = std::move(coords);
    for (auto& c : w.h_) {
      check_input(c <= (1LL << 60) && c >= -(1LL << 60), "coordinate overflow");
      c *= 2;
    }
    return w;
  }

  // From coordinates given in half-units (numerators over denominator 2).
  static Weight halves(std::vector<long long> numerators) {
    Weight w;
    w.h_ = std::move(numerators);
    return w;
  }

  std::size_t dim() const { return h_.size(); }
  bool empty() const { return h_.empty(); }

  long long half(std::size_t i) const { return h_.at(i); }
  Rat coord(std::size_t i) const { return Rat(h_.at(i), 2); }

  bool is_integral() const {
    for (long long c : h_)
      if (c % 2 != 0) return false;
    return true;
  }

  long long integer_coord(std::size_t i) const {
    long long c = h_.at(i);
    check_input(c % 2 == 0, "weight coordinate is not an integer");
    return c / 2;
  }

  std::vector<long long> integer_coords() const {
    std::vector<long long> out(h_.size());
    for (std::size_t i = 0; i < h_.size(); ++i) out[i] = integer_coord(i);
    return out;
  }

  const std::vector<long long>& half_units() const { return h_; }

  bool is_zero() const {
    for (long long c : h_)
      if (c != 0) return false;
    return true;
  }

  Weight operator+(const Weight& o) const {
    check_same(o);
    Weight r = *this;
    for (std::size_t i = 0; i < h_.size(); ++i) r.h_[i] += o.h_[i];
    return r;
  }

  Weight operator-(const Weight& o) const {
    check_same(o);
    Weight r = *this;
    for (std::size_t i = 0; i < h_.size(); ++i) r.h_[i] -= o.h_[i];
    return r;
  }

  Weight operator-() const {
    Weight r = *this;
    for (auto& c : r.h_) c = -c;
    return r;
  }

  Weight scaled(long long k) const {
    Weight r = *this;
    for (auto& c : r.h_) c *= k;
    return r;
  }

  // Exact halving; the result must again have half-integer coordinates.
  Weight halved() const {
    Weight r = *this;
    for (auto& c : r.h_) {
      check_internal(c % 2 == 0, "halving would leave quarter-integers");
      c /= 2;
    }
    return r;
  }

  // Sum of all coordinates, e.g. |lambda| for GL(1|1).
  Rat coord_sum() const {
    long long s = 0;
    for (long long c : h_) s += c;
    return Rat(s, 2);
  }

  bool operator==(const Weight& o) const { return h_ == o.h_; }
  bool operator!=(const Weight& o) const { return h_ != o.h_; }
  bool operator<(const Weight& o) const { return h_ < o.h_; }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < h_.size(); ++i) {
      if (i) os << ',';
      if (h_[i] % 2 == 0)
        os << h_[i] / 2;
      else
        os << h_[i] << "/2";
    }
    os << ')';
    return os.str();
  }

 private:
  void check_same(const Weight& o) const {
    check_internal(h_.size() == o.h_.size(), "weight dimension mismatch");
  }

  std::vector<long long> h_;
};

// Basis vector epsilon_i (0-based) in dimension d.
inline Weight epsilon(int i, int dim) {
  check_input(i >= 0 && i < dim, "epsilon index out of range");
  std::vector<long long> c(static_cast<std::size_t>(dim), 0);
  c[static_cast<std::size_t>(i)] = 1;
  return Weight::integral(std::move(c));
}

// Supersymmetric form: (a, b) = sum_i sigma_i a_i b_i.
inline Rat bilinear_form(const Weight& a, const Weight& b, const Superdim& d) {
  check_input(static_cast<int>(a.dim()) == d.total() &&
                  static_cast<int>(b.dim()) == d.total(),
              "bilinear_form: dimension mismatch");
  Rat s(0);
  for (int i = 0; i < d.total(); ++i)
    s += Rat(d.sign(i) * a.half(i) * b.half(i), 4);
  return s;
}

// A root epsilon_i - epsilon_j, i != j, stored 0-based.
struct Root {
  int i = 0;
  int j = 0;

  Root() = default;
  Root(int i_, int j_) : i(i_), j(j_) {
    check_input(i != j, "root requires i != j");
  }

  // 0 for even roots (both indices in one block), 1 for odd.
  int parity(const Superdim& d) const {
    return ((i < d.m) != (j < d.m)) ? 1 : 0;
  }

  Weight to_weight(int dim) const {
    Weight w = epsilon(i, dim) - epsilon(j, dim);
    return w;
  }

  // (eps_i - eps_j)^vee = eps'_i - eps'_j with eps'_k = sigma_k eps_k.
  Weight coroot(const Superdim& d) const {
    std::vector<long long> c(static_cast<std::size_t>(d.total()), 0);
    c[static_cast<std::size_t>(i)] = d.sign(i);
    c[static_cast<std::size_t>(j)] = -d.sign(j);
    return Weight::integral(std::move(c));
  }

  bool operator==(const Root& o) const { return i == o.i && j == o.j; }
  bool operator!=(const Root& o) const { return !(*this == o); }
  bool operator<(const Root& o) const {
    return i != o.i ? i < o.i : j < o.j;
  }

  std::string str() const {
    std::ostringstream os;
    os << 'e' << (i + 1) << "-e" << (j + 1);
    return os.str();
  }
};

// (mu, alpha) for alpha = eps_i - eps_j: sigma_i mu_i - sigma_j mu_j.
inline Rat pair_root(const Weight& mu, const Root& a, const Superdim& d) {
  return Rat(d.sign(a.i) * mu.half(a.i) - d.sign(a.j) * mu.half(a.j), 2);
}

// (mu, alpha^vee) = mu_i - mu_j for every root, even or odd.
inline Rat pair_coroot(const Weight& mu, const Root& a) {
  return Rat(mu.half(a.i) - mu.half(a.j), 2);
}

// (mu, alpha^vee) when it must be an integer; error messages carry the
// offending instance so callers can surface it.
inline long long pair_coroot_int(const Weight& mu, const Root& a) {
  long long diff = mu.half(a.i) - mu.half(a.j);
  check_input(diff % 2 == 0, "non-integral coroot pairing (" + mu.str() +
                                 ", (" + a.str() + ")^vee)");
  return diff / 2;
}

// Parity of a weight: sum of its odd-block coordinates mod 2. Only defined
// for weights that are integral, as characters of T live in X(T).
inline int parity_function(const Weight& lam, const Superdim& d) {
  check_input(static_cast<int>(lam.dim()) == d.total(),
              "parity_function: dimension mismatch");
  long long s = 0;
  for (int i = d.m; i < d.total(); ++i) s += lam.integer_coord(i);
  return static_cast<int>(((s % 2) + 2) % 2);
}

// Reflection in an even root: lambda - (lambda, alpha^vee) alpha, which for
// eps_i - eps_j is the coordinate transposition (i j).
inline Weight reflect(const Root& a, const Weight& lam, const Superdim& d) {
  check_input(a.parity(d) == 0, "reflect requires an even root");
  std::vector<long long> c = lam.half_units();
  std::swap(c[static_cast<std::size_t>(a.i)],
            c[static_cast<std::size_t>(a.j)]);
  Weight by_swap = Weight::halves(std::move(c));
  long long v = lam.half(a.i) - lam.half(a.j);  // 2 * (lam, alpha^vee)
  Weight by_formula = lam - a.to_weight(d.total()).scaled(v).halved();
  check_internal(by_swap == by_formula, "reflection formulas disagree");
  return by_swap;
}

}  // namespace superweyl
