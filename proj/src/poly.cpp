#include "posdiff/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace posdiff {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------- ScalarPoly

ScalarPoly ScalarPoly::constant(std::size_t nvars, const Rat& c) {
  ScalarPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

ScalarPoly ScalarPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  ScalarPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

ScalarPoly ScalarPoly::monomial(Exponents exps, const Rat& c) {
  ScalarPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

std::optional<unsigned> ScalarPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  // The first key in graded order has the largest total degree.
  return total_degree(terms_.begin()->first);
}

bool ScalarPoly::is_homogeneous(unsigned k) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [k](const auto& t) { return total_degree(t.first) == k; });
}

Rat ScalarPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void ScalarPoly::check_key(const Exponents& e) const {
  if (e.size() != nvars_) throw std::invalid_argument("exponent vector length != nvars");
}

void ScalarPoly::add_term(const Exponents& e, const Rat& c) {
  check_key(e);
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rat ScalarPoly::evaluate(std::span<const Rat> x) const {
  if (x.size() != nvars_) throw std::invalid_argument("evaluate: point dimension mismatch");
  std::vector<std::vector<Rat>> powers(nvars_, std::vector<Rat>{Rat(1)});
  auto power = [&](std::size_t i, unsigned e) -> const Rat& {
    auto& table = powers[i];
    while (table.size() <= e) table.push_back(table.back() * x[i]);
    return table[e];
  };
  Rat sum = 0;
  Rat term;
  for (const auto& [exps, coef] : terms_) {
    term = coef;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps[i] != 0) term *= power(i, exps[i]);
    }
    sum += term;
  }
  return sum;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("multiply: nvars mismatch");
  ScalarPoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

ScalarPoly ScalarPoly::pow(unsigned e) const {
  ScalarPoly result = constant(nvars_, 1);
  ScalarPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

ScalarPoly ScalarPoly::compose(std::span<const ScalarPoly> args) const {
  if (args.size() != nvars_) throw std::invalid_argument("compose: expected one argument per variable");
  const std::size_t q = args.empty() ? 0 : args.front().nvars();
  for (const auto& a : args) {
    if (a.nvars() != q) throw std::invalid_argument("compose: arguments disagree on nvars");
  }
  std::vector<std::vector<ScalarPoly>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned e) -> const ScalarPoly& {
    auto& table = powers[i];
    if (table.empty()) table.push_back(constant(q, 1));
    while (table.size() <= e) table.push_back(table.back() * args[i]);
    return table[e];
  };
  ScalarPoly out(q);
  for (const auto& [exps, coef] : terms_) {
    ScalarPoly term = constant(q, coef);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps[i] != 0) term = term * power(i, exps[i]);
    }
    out += term;
  }
  return out;
}

ScalarPoly ScalarPoly::homogeneous_part(unsigned k) const {
  ScalarPoly out(nvars_);
  for (const auto& [exps, coef] : terms_) {
    if (total_degree(exps) == k) out.terms_.emplace_hint(out.terms_.end(), exps, coef);
  }
  return out;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("add: nvars mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("subtract: nvars mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

ScalarPoly& ScalarPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& [e, coef] : terms_) coef *= c;
  }
  return *this;
}

ScalarPoly ScalarPoly::operator-() const { return *this * Rat(-1); }

// ---------------------------------------------------------------- VectorPoly

VectorPoly::VectorPoly(std::size_t nvars, std::size_t codim)
    : nvars_(nvars), coords_(codim, ScalarPoly(nvars)) {
  if (codim == 0) throw std::invalid_argument("codomain dimension must be >= 1");
}

VectorPoly::VectorPoly(std::vector<ScalarPoly> coords) : nvars_(0), coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("codomain dimension must be >= 1");
  nvars_ = coords_.front().nvars();
  for (const auto& c : coords_) {
    if (c.nvars() != nvars_) throw std::invalid_argument("coordinates disagree on nvars");
  }
}

bool VectorPoly::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const auto& c) { return c.is_zero(); });
}

std::optional<unsigned> VectorPoly::degree() const {
  std::optional<unsigned> out;
  for (const auto& c : coords_) {
    const auto d = c.degree();
    if (d && (!out || *d > *out)) out = d;
  }
  return out;
}

bool VectorPoly::is_homogeneous(unsigned k) const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [k](const auto& c) { return c.is_homogeneous(k); });
}

Vec VectorPoly::evaluate(std::span<const Rat> x) const {
  if (x.size() != nvars_) throw std::invalid_argument("evaluate: point dimension mismatch");
  Vec out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.evaluate(x));
  return out;
}

VectorPoly VectorPoly::compose(std::span<const ScalarPoly> args) const {
  std::vector<ScalarPoly> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.compose(args));
  return VectorPoly(std::move(out));
}

VectorPoly VectorPoly::dilate(const Rat& c) const {
  std::vector<ScalarPoly> out;
  out.reserve(coords_.size());
  for (const auto& coord : coords_) {
    ScalarPoly scaled(nvars_);
    for (const auto& [e, coef] : coord.terms()) scaled.add_term(e, coef * pow(c, total_degree(e)));
    out.push_back(std::move(scaled));
  }
  return VectorPoly(std::move(out));
}

VectorPoly VectorPoly::homogeneous_part(unsigned k) const {
  std::vector<ScalarPoly> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.homogeneous_part(k));
  return VectorPoly(std::move(out));
}

std::vector<VectorPoly> VectorPoly::homogeneous_split() const {
  const unsigned top = degree().value_or(0);
  std::vector<VectorPoly> parts;
  parts.reserve(top + 1);
  for (unsigned k = 0; k <= top; ++k) parts.push_back(homogeneous_part(k));
  return parts;
}

void VectorPoly::check_compatible(const VectorPoly& other) const {
  if (other.nvars_ != nvars_ || other.codim() != codim()) {
    throw std::invalid_argument("vector polynomials have different shapes");
  }
}

VectorPoly& VectorPoly::operator+=(const VectorPoly& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

VectorPoly& VectorPoly::operator-=(const VectorPoly& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

VectorPoly& VectorPoly::operator*=(const Rat& c) {
  for (auto& coord : coords_) coord *= c;
  return *this;
}

std::vector<ScalarPoly> variable_block(std::size_t total_vars, std::size_t offset,
                                       std::size_t count) {
  std::vector<ScalarPoly> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(ScalarPoly::variable(total_vars, offset + i));
  return out;
}

}  // namespace posdiff
