#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "superweyl/weight.hpp"

namespace superweyl {

using Coeff = boost::multiprecision::cpp_int;

// Element of the group ring Z[X(T) ⊗ 1/2]: finite Coeff-combination of
// formal exponentials e^mu. Exponents are stored in half-units like Weight,
// keyed lexicographically (so map::rbegin is the leading term and the last
// coordinate is least significant).
class LaurentPoly {
 public:
  using Exp = std::vector<long long>;
  using Terms = std::map<Exp, Coeff>;

  LaurentPoly() = default;
  explicit LaurentPoly(int dim) : dim_(dim) {
    check_input(dim >= 1, "polynomial dimension must be positive");
  }

  static LaurentPoly zero(int dim) { return LaurentPoly(dim); }

  static LaurentPoly unit(int dim) {
    LaurentPoly p(dim);
    p.add_term_halves(Exp(static_cast<std::size_t>(dim), 0), 1);
    return p;
  }

  static LaurentPoly monomial(const Weight& e, const Coeff& c = 1) {
    LaurentPoly p(static_cast<int>(e.dim()));
    p.add_term_halves(e.half_units(), c);
    return p;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  const Terms& terms() const { return t_; }

  void add_term_halves(Exp e, const Coeff& c) {
    check_internal(static_cast<int>(e.size()) == dim_,
                   "term dimension mismatch");
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(std::move(e), c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  void add_term(const Weight& e, const Coeff& c) {
    add_term_halves(e.half_units(), c);
  }

  Coeff coeff_at(const Weight& e) const {
    auto it = t_.find(e.half_units());
    return it == t_.end() ? Coeff(0) : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_internal(dim_ == o.dim_, "polynomial dimension mismatch");
    for (const auto& [e, c] : o.t_) add_term_halves(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_internal(dim_ == o.dim_, "polynomial dimension mismatch");
    for (const auto& [e, c] : o.t_) add_term_halves(e, -c);
    return *this;
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
  }

  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
  }

  LaurentPoly operator*(const LaurentPoly& o) const {
    check_internal(dim_ == o.dim_, "polynomial dimension mismatch");
    LaurentPoly r(dim_);
    for (const auto& [e1, c1] : t_) {
      for (const auto& [e2, c2] : o.t_) {
        Exp e = e1;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
        r.add_term_halves(std::move(e), c1 * c2);
      }
    }
    return r;
  }

  LaurentPoly operator*(const Coeff& c) const {
    LaurentPoly r(dim_);
    if (c == 0) return r;
    for (const auto& [e, cc] : t_) r.t_.emplace(e, cc * c);
    return r;
  }

  bool operator==(const LaurentPoly& o) const {
    return dim_ == o.dim_ && t_ == o.t_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Every exponent, as a Weight, in key order.
  std::vector<Weight> support() const {
    std::vector<Weight> out;
    out.reserve(t_.size());
    for (const auto& [e, c] : t_) out.push_back(Weight::halves(e));
    return out;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print leading terms first.
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      Coeff c = it->second;
      if (!first) os << (c > 0 ? " + " : " - ");
      if (first && c < 0) os << '-';
      first = false;
      Coeff mag = abs(c);
      if (mag != 1) os << mag << '*';
      os << "e^" << Weight::halves(it->first).str();
    }
    return os.str();
  }

 private:
  int dim_ = 0;
  Terms t_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.str();
}

// Value at the identity element of the torus: the sum of coefficients.
inline Coeff evaluate_dimension(const LaurentPoly& f) {
  Coeff s = 0;
  for (const auto& [e, c] : f.terms()) s += c;
  return s;
}

// Exact division in the Laurent ring: returns q with q*g == f, or nullopt if
// no such q exists. Both inputs are translated into N^k by their
// componentwise exponent minima (exactness survives the shift: the minima of
// a product are the sums of the factors' minima coordinate by coordinate),
// then ordinary multivariate long division by the single divisor runs under
// the lex order; over Z a singleton divisor set is a Groebner basis of its
// ideal, so exact multiples always reduce to zero and any non-exactness
// surfaces as a monomial or coefficient divisibility failure. Each round
// strictly lowers the leading exponent in the lex well-order on N^k, so the
// loop terminates. The quotient is verified by multiplication before return.
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& f,
                                               const LaurentPoly& g) {
  check_input(f.dim() == g.dim(), "exact_divide: dimension mismatch");
  check_input(!g.is_zero(), "exact_divide: division by zero");
  const int dim = f.dim();
  if (f.is_zero()) return LaurentPoly::zero(dim);

  auto exponent_minima = [dim](const LaurentPoly& p) {
    std::vector<long long> mins(static_cast<std::size_t>(dim),
                                std::numeric_limits<long long>::max());
    for (const auto& [e, c] : p.terms())
      for (std::size_t i = 0; i < e.size(); ++i) mins[i] = std::min(mins[i], e[i]);
    return mins;
  };
  auto shifted = [dim](const LaurentPoly& p, const std::vector<long long>& by) {
    LaurentPoly out(dim);
    for (const auto& [e, c] : p.terms()) {
      LaurentPoly::Exp ne = e;
      for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += by[i];
      out.add_term_halves(std::move(ne), c);
    }
    return out;
  };
  auto negated = [](std::vector<long long> v) {
    for (auto& x : v) x = -x;
    return v;
  };

  std::vector<long long> minf = exponent_minima(f);
  std::vector<long long> ming = exponent_minima(g);
  LaurentPoly fs = shifted(f, negated(minf));
  LaurentPoly gs = shifted(g, negated(ming));

  const auto lt_g = *gs.terms().rbegin();
  LaurentPoly q(dim), r = fs;
  while (!r.is_zero()) {
    const auto lt_r = *r.terms().rbegin();
    LaurentPoly::Exp d = lt_r.first;
    bool divisible = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] -= lt_g.first[i];
      if (d[i] < 0) divisible = false;
    }
    if (!divisible) return std::nullopt;
    Coeff c = lt_r.second / lt_g.second;
    if (c * lt_g.second != lt_r.second) return std::nullopt;
    q.add_term_halves(d, c);
    for (const auto& [ge, gc] : gs.terms()) {
      LaurentPoly::Exp e = ge;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += d[i];
      r.add_term_halves(std::move(e), -(c * gc));
    }
  }

  std::vector<long long> back = minf;
  for (std::size_t i = 0; i < back.size(); ++i) back[i] -= ming[i];
  LaurentPoly result = shifted(q, back);
  check_internal(result * g == f, "exact_divide: verification failed");
  return result;
}

}  // namespace superweyl
