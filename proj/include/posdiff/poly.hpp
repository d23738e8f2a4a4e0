#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "posdiff/rat.hpp"

namespace posdiff {

// Multi-index of a monomial; one exponent per variable.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

// Canonical term order: higher total degree first, ties broken by the
// lexicographically larger exponent vector (x1 > x2 > ...).
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class ScalarPoly {
 public:
  using TermMap = std::map<Exponents, Rat, GradedLexGreater>;

  explicit ScalarPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static ScalarPoly constant(std::size_t nvars, const Rat& c);
  static ScalarPoly variable(std::size_t nvars, std::size_t index);
  static ScalarPoly monomial(Exponents exps, const Rat& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Largest total degree of a stored term; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  bool is_homogeneous(unsigned k) const;

  Rat coefficient(const Exponents& e) const;

  // Accumulates c into the coefficient of e; a zero sum removes the term.
  void add_term(const Exponents& e, const Rat& c);

  Rat evaluate(std::span<const Rat> x) const;

  // Substitutes args[i] for variable i. All args share one variable count,
  // which becomes the variable count of the result.
  ScalarPoly compose(std::span<const ScalarPoly> args) const;

  ScalarPoly pow(unsigned e) const;

  // Terms of total degree exactly k.
  ScalarPoly homogeneous_part(unsigned k) const;

  ScalarPoly& operator+=(const ScalarPoly& other);
  ScalarPoly& operator-=(const ScalarPoly& other);
  ScalarPoly& operator*=(const Rat& c);
  ScalarPoly operator-() const;

  friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
  friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
  friend ScalarPoly operator*(ScalarPoly a, const Rat& c) { return a *= c; }
  friend ScalarPoly operator*(const Rat& c, ScalarPoly a) { return a *= c; }
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_key(const Exponents& e) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// A polynomial map Q^n -> Q^m stored as m independent coordinate
/// polynomials over the same n variables. The codomain order is
/// coordinatewise.
class VectorPoly {
 public:
  // Zero polynomial.
  VectorPoly(std::size_t nvars, std::size_t codim);
  // Throws std::invalid_argument if coords is empty or the variable counts differ.
  explicit VectorPoly(std::vector<ScalarPoly> coords);

  static VectorPoly scalar(ScalarPoly p) { return VectorPoly(std::vector<ScalarPoly>{std::move(p)}); }

  std::size_t nvars() const { return nvars_; }
  std::size_t codim() const { return coords_.size(); }
  const std::vector<ScalarPoly>& coords() const { return coords_; }
  const ScalarPoly& operator[](std::size_t i) const { return coords_.at(i); }

  bool is_zero() const;
  std::optional<unsigned> degree() const;
  bool is_homogeneous(unsigned k) const;

  Vec evaluate(std::span<const Rat> x) const;
  VectorPoly compose(std::span<const ScalarPoly> args) const;

  // x -> P(c x); the degree k part scales by c^k.
  VectorPoly dilate(const Rat& c) const;

  VectorPoly homogeneous_part(unsigned k) const;

  // Entry k holds the total-degree-k terms, for k = 0..deg(P). The zero
  // polynomial yields a single zero entry.
  std::vector<VectorPoly> homogeneous_split() const;

  VectorPoly& operator+=(const VectorPoly& other);
  VectorPoly& operator-=(const VectorPoly& other);
  VectorPoly& operator*=(const Rat& c);

  friend VectorPoly operator+(VectorPoly a, const VectorPoly& b) { return a += b; }
  friend VectorPoly operator-(VectorPoly a, const VectorPoly& b) { return a -= b; }
  friend VectorPoly operator*(VectorPoly a, const Rat& c) { return a *= c; }
  friend VectorPoly operator*(const Rat& c, VectorPoly a) { return a *= c; }
  friend bool operator==(const VectorPoly& a, const VectorPoly& b) {
    return a.nvars_ == b.nvars_ && a.coords_ == b.coords_;
  }

 private:
  void check_compatible(const VectorPoly& other) const;

  std::size_t nvars_;
  std::vector<ScalarPoly> coords_;
};

// Variables offset .. offset+count-1 of a ring with total_vars variables,
// as polynomials. Used to build substitution arguments.
std::vector<ScalarPoly> variable_block(std::size_t total_vars, std::size_t offset,
                                       std::size_t count);

}  // namespace posdiff
