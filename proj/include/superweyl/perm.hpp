#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "superweyl/common.hpp"

namespace superweyl {

// Permutation of {1..k} in one-line notation, stored 0-based: img_[i] is the
// image of i. Printed and parsed 1-based, comma separated ("1,3,2").
class Perm {
 public:
  Perm() = default;

  static Perm identity(int k) {
    check_input(k >= 1, "permutation size must be positive");
    Perm p;
    p.img_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) p.img_[static_cast<std::size_t>(i)] = i;
    return p;
  }

  static Perm from_one_line(const std::vector<int>& one_based) {
    Perm p;
    int k = static_cast<int>(one_based.size());
    check_input(k >= 1, "permutation size must be positive");
    p.img_.assign(static_cast<std::size_t>(k), -1);
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
      int v = one_based[static_cast<std::size_t>(i)];
      check_input(v >= 1 && v <= k && !seen[static_cast<std::size_t>(v - 1)],
                  "not a permutation of 1..k");
      seen[static_cast<std::size_t>(v - 1)] = 1;
      p.img_[static_cast<std::size_t>(i)] = v - 1;
    }
    return p;
  }

  // Swap of a and b (0-based), identity elsewhere.
  static Perm transposition(int k, int a, int b) {
    Perm p = identity(k);
    check_input(a >= 0 && a < k && b >= 0 && b < k && a != b,
                "bad transposition indices");
    std::swap(p.img_[static_cast<std::size_t>(a)],
              p.img_[static_cast<std::size_t>(b)]);
    return p;
  }

  static std::optional<Perm> parse(const std::string& text) {
    std::vector<int> vals;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size()) return std::nullopt;
        vals.push_back(v);
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
    if (vals.empty()) return std::nullopt;
    try {
      return from_one_line(vals);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }

  int size() const { return static_cast<int>(img_.size()); }

  int apply(int i) const {
    check_input(i >= 0 && i < size(), "permutation argument out of range");
    return img_[static_cast<std::size_t>(i)];
  }

  // (this ∘ other)(i) = this(other(i)).
  Perm compose(const Perm& other) const {
    check_input(size() == other.size(), "permutation size mismatch");
    Perm r;
    r.img_.resize(img_.size());
    for (int i = 0; i < size(); ++i)
      r.img_[static_cast<std::size_t>(i)] = apply(other.apply(i));
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.assign(img_.size(), -1);
    for (int i = 0; i < size(); ++i)
      r.img_[static_cast<std::size_t>(apply(i))] = i;
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (apply(i) != i) return false;
    return true;
  }

  // Preserves {0..m-1} and {m..k-1} setwise.
  bool block_preserving(int m) const {
    for (int i = 0; i < size(); ++i)
      if ((i < m) != (apply(i) < m)) return false;
    return true;
  }

  // (-1)^inversions.
  int sign() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (apply(i) > apply(j)) ++inv;
    return inv % 2 == 0 ? 1 : -1;
  }

  std::string one_line() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
      if (i) os << ',';
      os << apply(i) + 1;
    }
    return os.str();
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

}  // namespace superweyl
