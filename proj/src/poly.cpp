#include "evolalg/poly.hpp"

#include <algorithm>
#include <sstream>

#include "evolalg/algebra.hpp"

namespace evolalg {

Monomial Monomial::variable(std::size_t k, std::uint16_t power) {
  if (k >= kMaxPolyVars) throw EngineLimit("variable index beyond monomial storage");
  Monomial m;
  m.exp[k] = power;
  m.degree = power;
  return m;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  for (std::size_t k = kMaxPolyVars; k-- > 0;)
    if (a.exp[k] != b.exp[k]) return a.exp[k] > b.exp[k] ? -1 : 1;
  return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree > b.degree) return false;
  for (std::size_t k = 0; k < kMaxPolyVars; ++k)
    if (a.exp[k] > b.exp[k]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t k = 0; k < kMaxPolyVars; ++k) m.exp[k] = static_cast<std::uint16_t>(a.exp[k] + b.exp[k]);
  m.degree = a.degree + b.degree;
  return m;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial m;
  for (std::size_t k = 0; k < kMaxPolyVars; ++k) m.exp[k] = static_cast<std::uint16_t>(b.exp[k] - a.exp[k]);
  m.degree = b.degree - a.degree;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t k = 0; k < kMaxPolyVars; ++k) {
    m.exp[k] = std::max(a.exp[k], b.exp[k]);
    m.degree += m.exp[k];
  }
  return m;
}

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; }

// a - c*m*b for descending term lists.
std::vector<Term> sub_scaled(const std::vector<Term>& a, const Rat& c, const Monomial& m, const std::vector<Term>& b,
                             std::size_t a_from = 0) {
  std::vector<Term> out;
  out.reserve(a.size() - a_from + b.size());
  std::size_t i = a_from;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial shifted = b[j].mono * m;
    const int cmp = i == a.size() ? -1 : grevlex_compare(a[i].mono, shifted);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({shifted, -c * b[j].coeff});
      ++j;
    } else {
      Rat v = a[i].coeff - c * b[j].coeff;
      if (v != 0) out.push_back({shifted, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly::MPoly(std::size_t vars) : vars_(vars) {
  if (vars > kMaxPolyVars) throw EngineLimit("too many polynomial variables");
}

MPoly MPoly::constant(std::size_t vars, const Rat& c) {
  MPoly p(vars);
  if (c != 0) p.terms_.push_back({Monomial::one(), c});
  return p;
}

MPoly MPoly::variable(std::size_t vars, std::size_t k) {
  if (k >= vars) throw DimensionError("variable index out of range");
  MPoly p(vars);
  p.terms_.push_back({Monomial::variable(k), Rat(1)});
  return p;
}

MPoly MPoly::from_terms(std::size_t vars, std::vector<Term> terms) {
  MPoly p(vars);
  for (const auto& t : terms)
    for (std::size_t k = vars; k < kMaxPolyVars; ++k)
      if (t.mono.exp[k] != 0) throw DimensionError("monomial uses a variable outside the ring");
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().coeff == 0) p.terms_.pop_back();
  }
  return p;
}

const Term& MPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.front();
}

std::size_t MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree; }

Rat MPoly::evaluate(std::span<const Rat> point) const {
  if (point.size() != vars_) throw DimensionError("evaluation point has the wrong length");
  Rat total = 0;
  for (const auto& t : terms_) {
    Rat v = t.coeff;
    for (std::size_t k = 0; k < vars_ && v != 0; ++k)
      for (std::uint16_t e = 0; e < t.mono.exp[k]; ++e) v *= point[k];
    total += v;
  }
  return total;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  MPoly p = *this;
  const Rat inv = 1 / terms_.front().coeff;
  for (auto& t : p.terms_) t.coeff *= inv;
  return p;
}

MPoly MPoly::with_vars(std::size_t vars) const {
  if (vars < vars_) throw DimensionError("cannot drop variables");
  MPoly p = *this;
  p.vars_ = vars;
  if (vars > kMaxPolyVars) throw EngineLimit("too many polynomial variables");
  return p;
}

std::string MPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.coeff;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    const bool unit = c == 1 && t.mono.degree > 0;
    if (!unit) out << c.get_str();
    bool need_star = !unit;
    for (std::size_t k = 0; k < vars_; ++k) {
      if (t.mono.exp[k] == 0) continue;
      if (need_star) out << '*';
      out << (k < names.size() ? names[k] : "x" + std::to_string(k + 1));
      if (t.mono.exp[k] > 1) out << '^' << t.mono.exp[k];
      need_star = true;
    }
  }
  return out.str();
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.vars_ != b.vars_) throw DimensionError("polynomials live in different rings");
  MPoly p(a.vars_);
  p.terms_ = sub_scaled(a.terms_, Rat(-1), Monomial::one(), b.terms_);
  return p;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  if (a.vars_ != b.vars_) throw DimensionError("polynomials live in different rings");
  MPoly p(a.vars_);
  p.terms_ = sub_scaled(a.terms_, Rat(1), Monomial::one(), b.terms_);
  return p;
}

MPoly operator-(const MPoly& a) { return Rat(-1) * a; }

MPoly operator*(const Rat& c, const MPoly& a) {
  MPoly p(a.vars_);
  if (c == 0) return p;
  p.terms_ = a.terms_;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.vars_ != b.vars_) throw DimensionError("polynomials live in different rings");
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return MPoly::from_terms(a.vars_, std::move(terms));
}

bool PolyIdeal::is_unit() const {
  return generators.size() == 1 && generators.front().is_constant() && !generators.front().is_zero() &&
         generators.front().leading().coeff == 1;
}

MPoly normal_form(const MPoly& p, const PolyIdeal& g) {
  std::vector<Term> rest = p.terms();
  std::vector<Term> remainder;
  std::size_t head = 0;
  while (head < rest.size()) {
    const Term lt = rest[head];
    const MPoly* divisor = nullptr;
    for (const auto& q : g.generators)
      if (!q.is_zero() && divides(q.leading().mono, lt.mono)) {
        divisor = &q;
        break;
      }
    if (divisor == nullptr) {
      remainder.push_back(lt);
      ++head;
      continue;
    }
    const Term& dl = divisor->leading();
    rest = sub_scaled(rest, lt.coeff / dl.coeff, quotient(lt.mono, dl.mono), divisor->terms(), head);
    head = 0;
  }
  return MPoly::from_terms(p.vars(), std::move(remainder));
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

PolyIdeal groebner_unchecked(std::size_t vars, const std::vector<MPoly>& input, std::size_t pair_cap) {
  std::vector<MPoly> basis;
  std::vector<Pair> queue;
  std::vector<std::vector<bool>> pending;  // pending[i][j] for i < j

  auto unit = [&] { return PolyIdeal{vars, {MPoly::constant(vars, 1)}}; };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending[a][b];
  };
  auto add = [&](MPoly p) {
    const std::size_t m = basis.size();
    for (auto& row : pending) row.push_back(false);
    pending.emplace_back(m + 1, false);
    for (std::size_t i = 0; i < m; ++i) {
      queue.push_back({i, m, lcm(basis[i].leading().mono, p.leading().mono)});
      pending[i][m] = true;
    }
    basis.push_back(std::move(p));
  };

  for (const auto& f : input) {
    if (f.is_zero()) continue;
    if (f.is_constant()) return unit();
    add(f.monic());
  }

  std::size_t taken = 0;
  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(), [](const Pair& a, const Pair& b) {
      const int c = grevlex_compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair pair = *best;
    queue.erase(best);
    pending[pair.i][pair.j] = false;
    if (++taken > pair_cap) throw EngineLimit("Groebner S-pair cap of " + std::to_string(pair_cap) + " exceeded");

    const Monomial& li = basis[pair.i].leading().mono;
    const Monomial& lj = basis[pair.j].leading().mono;
    // Product criterion: coprime leading monomials reduce to zero.
    if (pair.lcm.degree == li.degree + lj.degree) continue;
    // Chain criterion.
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chained = divides(basis[k].leading().mono, pair.lcm) && !is_pending(pair.i, k) && !is_pending(pair.j, k);
    }
    if (chained) continue;

    // Both polynomials are monic, so the S-polynomial needs no scaling.
    auto shifted = [&](const MPoly& p, const Monomial& m) {
      std::vector<Term> terms;
      terms.reserve(p.terms().size());
      for (const auto& t : p.terms()) terms.push_back({t.mono * m, t.coeff});
      return MPoly::from_terms(vars, std::move(terms));
    };
    const MPoly s = shifted(basis[pair.i], quotient(pair.lcm, li)) - shifted(basis[pair.j], quotient(pair.lcm, lj));
    MPoly h = normal_form(s, PolyIdeal{vars, basis});
    if (h.is_zero()) continue;
    if (h.is_constant()) return unit();
    add(h.monic());
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another survivor's.
  std::vector<MPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = basis[i].leading().mono;
      const auto& mj = basis[j].leading().mono;
      redundant = divides(mj, mi) && (mj != mi || j < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Reduced basis: reduce every tail against the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    PolyIdeal others{vars, {}};
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.generators.push_back(minimal[j]);
    const Term lead = minimal[i].leading();
    MPoly tail = minimal[i] - MPoly::from_terms(vars, {lead});
    minimal[i] = MPoly::from_terms(vars, {lead}) + normal_form(tail, others);
  }
  std::sort(minimal.begin(), minimal.end(), [](const MPoly& a, const MPoly& b) {
    return grevlex_compare(a.leading().mono, b.leading().mono) < 0;
  });
  return PolyIdeal{vars, std::move(minimal)};
}

void check_vars(const PolyIdeal& ideal, const GroebnerOptions& options) {
  if (ideal.vars > options.var_bound)
    throw EngineLimit("Groebner engine limited to " + std::to_string(options.var_bound) + " variables, ideal has " +
                      std::to_string(ideal.vars));
  for (const auto& g : ideal.generators)
    if (g.vars() != ideal.vars) throw DimensionError("generator lives in a different ring");
}

// Membership of f in the radical of the ideal with Groebner basis `gb`.
bool in_radical_of_basis(const PolyIdeal& gb, const MPoly& f, const GroebnerOptions& options) {
  if (f.is_zero() || gb.is_unit()) return true;
  if (normal_form(f, gb).is_zero()) return true;
  const std::size_t vars = gb.vars + 1;
  std::vector<MPoly> extended;
  for (const auto& g : gb.generators) extended.push_back(g.with_vars(vars));
  // 1 - y f with the auxiliary y as the last variable.
  extended.push_back(MPoly::constant(vars, 1) - MPoly::variable(vars, gb.vars) * f.with_vars(vars));
  return groebner_unchecked(vars, extended, options.pair_cap).is_unit();
}

}  // namespace

PolyIdeal groebner(const PolyIdeal& ideal, const GroebnerOptions& options) {
  check_vars(ideal, options);
  return groebner_unchecked(ideal.vars, ideal.generators, options.pair_cap);
}

bool in_radical(const PolyIdeal& ideal, const MPoly& f, const GroebnerOptions& options) {
  if (f.vars() != ideal.vars) throw DimensionError("polynomial lives in a different ring");
  return in_radical_of_basis(groebner(ideal, options), f, options);
}

std::vector<std::size_t> radical_variables(const PolyIdeal& ideal, const GroebnerOptions& options) {
  const PolyIdeal gb = groebner(ideal, options);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ideal.vars; ++k)
    if (in_radical_of_basis(gb, MPoly::variable(ideal.vars, k), options)) out.push_back(k);
  return out;
}

bool variety_is_only_origin(const PolyIdeal& ideal, const GroebnerOptions& options) {
  const PolyIdeal gb = groebner(ideal, options);
  for (std::size_t k = 0; k < ideal.vars; ++k)
    if (!in_radical_of_basis(gb, MPoly::variable(ideal.vars, k), options)) return false;
  return true;
}

std::vector<MPoly> n2_entries(const EvolutionAlgebra& a) {
  const std::size_t n = a.dim();
  if (n > kMaxPolyVars) throw EngineLimit("too many polynomial variables");
  std::vector<MPoly> out;
  out.reserve(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i < n; ++i) {
        const Rat c = a.omega(k, i) * a.omega(i, l);
        if (c != 0) terms.push_back({Monomial::variable(i) * Monomial::variable(l), c});
      }
      out.push_back(MPoly::from_terms(n, std::move(terms)));
    }
  return out;
}

PolyIdeal n2_ideal(const EvolutionAlgebra& a) {
  PolyIdeal ideal{a.dim(), {}};
  for (auto& p : n2_entries(a))
    if (!p.is_zero()) ideal.generators.push_back(std::move(p));
  return ideal;
}

}  // namespace evolalg
