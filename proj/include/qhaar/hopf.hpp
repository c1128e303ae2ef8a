#pragma once

// Symbolic *-algebra of the q-deformed az+b relations: an invertible normal
// generator a and a normal generator b with
//     ab = lambda ba,   ab* = b*a,   a*b = ba*,   a*b* = lambda b*a*
// (lambda a root of unity of order n).  Elements are kept in the normal order
// a^p a*^pbar b^r b*^rbar.  The quotient mode additionally identifies
// a*^n = a^n and b*^n = b^n.

#include <array>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhaar/common.hpp"

namespace qhaar::hopf {

enum class Mode { Free, Quotient };

struct AlgebraParams {
  int n = 2;
  cplx lambda;
  cplx q;
  Mode mode = Mode::Free;
  // Permits negative powers of b and b* (localization at b); used for the
  // dual-pair generators ab^{-1}, b^{-1}a.  Incompatible with Quotient.
  bool localized = false;

  static AlgebraParams make(int n, Mode mode = Mode::Free, bool localized = false) {
    if (n < 2) throw UnsupportedOperand("AlgebraParams: n must be >= 2");
    if (mode == Mode::Quotient && localized)
      throw UnsupportedOperand("AlgebraParams: quotient mode cannot be localized");
    AlgebraParams p;
    p.n = n;
    p.lambda = lambda_phase(n);
    p.q = q_phase(n);
    p.mode = mode;
    p.localized = localized;
    return p;
  }

  /// lambda^k, exact phase arithmetic.
  cplx lam(long long k) const { return unit_phase(2.0 * pi * static_cast<double>(k) / n); }
  /// q^k
  cplx qp(long long k) const { return unit_phase(pi * static_cast<double>(k) / n); }
};

struct Monomial {
  int p = 0;     // exponent of a
  int pbar = 0;  // exponent of a*
  int r = 0;     // exponent of b
  int rbar = 0;  // exponent of b*

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  bool is_one() const { return p == 0 && pbar == 0 && r == 0 && rbar == 0; }
  int b_degree() const { return std::abs(r) + std::abs(rbar); }
};

inline constexpr double kDropTol = 1e-14;

class Element {
 public:
  using Terms = std::map<Monomial, cplx>;

  Element() = default;
  static Element zero() { return {}; }
  static Element one() { return monomial({}, 1.0); }
  static Element monomial(Monomial m, cplx c) {
    Element e;
    if (std::abs(c) >= kDropTol) e.terms_[m] = c;
    return e;
  }
  static Element gen_a(int k = 1) { return monomial({k, 0, 0, 0}, 1.0); }
  static Element gen_astar(int k = 1) { return monomial({0, k, 0, 0}, 1.0); }
  static Element gen_b(int k = 1) { return monomial({0, 0, k, 0}, 1.0); }
  static Element gen_bstar(int k = 1) { return monomial({0, 0, 0, k}, 1.0); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(Monomial m, cplx c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (std::abs(c) >= kDropTol) terms_[m] = c;
    } else {
      it->second += c;
      if (std::abs(it->second) < kDropTol) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Element& operator*=(cplx s) {
    if (std::abs(s) < kDropTol) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(cplx s, Element x) { return x *= s; }

  /// sup-norm over coefficients
  double norm() const {
    double m = 0.0;
    for (const auto& [mono, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

  /// `re+imi * a^p a*^pbar b^r b*^rbar + ...`, terms in key order,
  /// coefficients with 17 significant digits.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      char buf[96];
      std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
      out += buf;
      std::snprintf(buf, sizeof buf, " * a^%d a*^%d b^%d b*^%d", m.p, m.pbar, m.r, m.rbar);
      out += buf;
    }
    return out;
  }

 private:
  Terms terms_;
};

inline void check_valid(const Monomial& m, const AlgebraParams& P) {
  if (!P.localized && (m.r < 0 || m.rbar < 0))
    throw UnsupportedOperand("negative power of b outside localized mode");
  if (P.mode == Mode::Quotient && (m.pbar < 0 || m.pbar >= P.n || m.rbar < 0 || m.rbar >= P.n))
    throw UnsupportedOperand("monomial not reduced for quotient mode");
}

/// Reduce starred exponents into [0, n) via a*^n = a^n, b*^n = b^n.
inline std::pair<Monomial, cplx> quotient_reduce(Monomial m, cplx c, const AlgebraParams& P) {
  if (P.mode != Mode::Quotient) return {m, c};
  int n = P.n;
  auto fold = [n](int& from, int& to) {
    int k = from >= 0 ? from / n : -((-from + n - 1) / n);
    from -= k * n;
    to += k * n;
  };
  fold(m.pbar, m.p);
  fold(m.rbar, m.r);
  return {m, c};  // the identifications are phase-free in normal order
}

/// Product of two normal-ordered monomials.  Moving y's a^p2 left past x's
/// b^r1 costs lambda^{-p2 r1}; y's a*^pbar2 past x's b*^rbar1 costs
/// lambda^{-pbar2 rbar1}; every other generator pair commutes.
inline std::pair<Monomial, cplx> monomial_product(const Monomial& x, const Monomial& y,
                                                  const AlgebraParams& P) {
  long long e = -(static_cast<long long>(y.p) * x.r + static_cast<long long>(y.pbar) * x.rbar);
  Monomial m{x.p + y.p, x.pbar + y.pbar, x.r + y.r, x.rbar + y.rbar};
  return quotient_reduce(m, P.lam(e), P);
}

inline Element multiply(const Element& x, const Element& y, const AlgebraParams& P) {
  Element out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      auto [m, ph] = monomial_product(mx, my, P);
      out.add_term(m, cx * cy * ph);
    }
  return out;
}

/// Monomial element in canonical (quotient-reduced) form.
inline Element canonical_monomial(Monomial m, cplx c, const AlgebraParams& P) {
  auto [mm, cc] = quotient_reduce(m, c, P);
  return Element::monomial(mm, cc);
}

inline Element canonicalize(const Element& x, const AlgebraParams& P) {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    auto [mm, cc] = quotient_reduce(m, c, P);
    out.add_term(mm, cc);
  }
  return out;
}

/// Inverse of a single-term element whose monomial is invertible.
inline Element invert(const Element& x, const AlgebraParams& P) {
  if (x.size() != 1) throw UnsupportedOperand("invert: not a monomial element");
  const auto& [m, c] = *x.terms().begin();
  if (!P.localized && (m.r != 0 || m.rbar != 0))
    throw UnsupportedOperand("invert: b-power not invertible outside localized mode");
  long long e = static_cast<long long>(m.p) * m.r + static_cast<long long>(m.pbar) * m.rbar;
  Monomial inv{-m.p, -m.pbar, -m.r, -m.rbar};
  return canonical_monomial(inv, P.lam(-e) / c, P);
}

inline Element power(const Element& x, int k, const AlgebraParams& P) {
  if (k == 0) return Element::one();
  Element base = k > 0 ? x : invert(x, P);
  Element out = Element::one();
  for (int i = 0; i < std::abs(k); ++i) out = multiply(out, base, P);
  return out;
}

/// Antilinear involution: a <-> a*, b <-> b*, (xy)* = y* x*.
inline Element adjoint(const Element& x, const AlgebraParams& P) {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    // (a^p a*^pb b^r b*^rb)* = b^rb b*^r a^pb a*^p; re-ordering moves a^pb
    // past b^rb and a*^p past b*^r, so it costs lambda^{-(pb rb + p r)}.
    long long e = -(static_cast<long long>(m.pbar) * m.rbar + static_cast<long long>(m.p) * m.r);
    auto [mm, cc] = quotient_reduce(Monomial{m.pbar, m.p, m.rbar, m.r}, std::conj(c) * P.lam(e), P);
    out.add_term(mm, cc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor powers.  Each leg carries the same commutation rules independently.

template <int Legs>
struct TensorMonomial {
  std::array<Monomial, Legs> leg;
  friend auto operator<=>(const TensorMonomial&, const TensorMonomial&) = default;
};

template <int Legs>
class Tensor {
 public:
  using Key = TensorMonomial<Legs>;
  using Terms = std::map<Key, cplx>;

  static Tensor one() {
    Tensor t;
    t.terms_[Key{}] = 1.0;
    return t;
  }
  static Tensor term(Key k, cplx c) {
    Tensor t;
    if (std::abs(c) >= kDropTol) t.terms_[k] = c;
    return t;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, cplx c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (std::abs(c) >= kDropTol) terms_[k] = c;
    } else {
      it->second += c;
      if (std::abs(it->second) < kDropTol) terms_.erase(it);
    }
  }
  Tensor& operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Tensor& operator*=(cplx s) {
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend Tensor operator+(Tensor x, const Tensor& y) { return x += y; }
  friend Tensor operator-(Tensor x, const Tensor& y) { return x -= y; }

  double norm() const {
    double m = 0.0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

 private:
  Terms terms_;
};

template <int Legs>
Tensor<Legs> multiply(const Tensor<Legs>& x, const Tensor<Legs>& y, const AlgebraParams& P) {
  Tensor<Legs> out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      cplx coeff = cx * cy;
      TensorMonomial<Legs> k;
      for (int l = 0; l < Legs; ++l) {
        auto [m, ph] = monomial_product(kx.leg[l], ky.leg[l], P);
        k.leg[l] = m;
        coeff *= ph;
      }
      out.add_term(k, coeff);
    }
  return out;
}

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

template <int Legs>
Tensor<Legs> tensor_power(const Tensor<Legs>& x, int k, const AlgebraParams& P) {
  Tensor<Legs> out = Tensor<Legs>::one();
  for (int i = 0; i < k; ++i) out = multiply(out, x, P);
  return out;
}

// ---------------------------------------------------------------------------
// Structure maps.

/// Counit: homomorphism with eps(a) = 1, eps(b) = 0.
inline cplx counit(const Element& x, const AlgebraParams&) {
  cplx s = 0.0;
  for (const auto& [m, c] : x.terms())
    if (m.r == 0 && m.rbar == 0) s += c;
  return s;
}

/// Comultiplication: Delta(a) = a(x)a, Delta(b) = a(x)b + b(x)1 and the
/// starred twins.  Defined for non-negative b-exponents.
inline Tensor2 comultiply(const Element& x, const AlgebraParams& P) {
  Tensor2 out;
  for (const auto& [m, c] : x.terms()) {
    if (m.r < 0 || m.rbar < 0)
      throw UnsupportedOperand("comultiply: negative b-power has no polynomial coproduct");
    Tensor2 t = Tensor2::term({Monomial{m.p, m.pbar, 0, 0}, Monomial{m.p, m.pbar, 0, 0}}, c);
    if (m.r > 0) {
      Tensor2 db;
      db.add_term({Monomial{1, 0, 0, 0}, Monomial{0, 0, 1, 0}}, 1.0);
      db.add_term({Monomial{0, 0, 1, 0}, Monomial{}}, 1.0);
      t = multiply(t, tensor_power(db, m.r, P), P);
    }
    if (m.rbar > 0) {
      Tensor2 dbs;
      dbs.add_term({Monomial{0, 1, 0, 0}, Monomial{0, 0, 0, 1}}, 1.0);
      dbs.add_term({Monomial{0, 0, 0, 1}, Monomial{}}, 1.0);
      t = multiply(t, tensor_power(dbs, m.rbar, P), P);
    }
    out += t;
  }
  return out;
}

/// Apply Delta to one leg of a 2-tensor, producing a 3-tensor.
inline Tensor3 comultiply_leg(const Tensor2& x, int leg, const AlgebraParams& P) {
  Tensor3 out;
  for (const auto& [k, c] : x.terms()) {
    Tensor2 dl = comultiply(Element::monomial(k.leg[leg], 1.0), P);
    for (const auto& [dk, dc] : dl.terms()) {
      TensorMonomial<3> key;
      if (leg == 0) {
        key.leg = {dk.leg[0], dk.leg[1], k.leg[1]};
      } else {
        key.leg = {k.leg[0], dk.leg[0], dk.leg[1]};
      }
      out.add_term(key, c * dc);
    }
  }
  return out;
}

/// Multiplication map m: H(x)H -> H.
inline Element multiply_legs(const Tensor2& x, const AlgebraParams& P) {
  Element out;
  for (const auto& [k, c] : x.terms()) {
    auto [m, ph] = monomial_product(k.leg[0], k.leg[1], P);
    out.add_term(m, c * ph);
  }
  return out;
}

inline Tensor2 flip(const Tensor2& x) {
  Tensor2 out;
  for (const auto& [k, c] : x.terms()) out.add_term({k.leg[1], k.leg[0]}, c);
  return out;
}

// ---------------------------------------------------------------------------
// Generator maps: (anti)multiplicative extensions of images of the generators.

struct GeneratorMap {
  enum class Kind { Homomorphism, AntiHomomorphism };
  std::string name;
  Kind kind = Kind::Homomorphism;
  bool star_compatible = false;
  Element img_a, img_a_inv, img_astar, img_astar_inv, img_b, img_bstar;
};

/// Max relation residual of the map over the six defining relations.
inline double relation_residual(const GeneratorMap& g, const AlgebraParams& P) {
  const cplx lam = P.lambda;
  auto mul = [&](const Element& x, const Element& y) { return multiply(x, y, P); };
  double res = 0.0;
  auto upd = [&](const Element& e) { res = std::max(res, e.norm()); };
  if (g.kind == GeneratorMap::Kind::Homomorphism) {
    upd(mul(g.img_a, g.img_b) - lam * mul(g.img_b, g.img_a));
    upd(mul(g.img_a, g.img_bstar) - mul(g.img_bstar, g.img_a));
    upd(mul(g.img_astar, g.img_b) - mul(g.img_b, g.img_astar));
    upd(mul(g.img_astar, g.img_bstar) - lam * mul(g.img_bstar, g.img_astar));
  } else {
    upd(mul(g.img_b, g.img_a) - lam * mul(g.img_a, g.img_b));
    upd(mul(g.img_bstar, g.img_a) - mul(g.img_a, g.img_bstar));
    upd(mul(g.img_b, g.img_astar) - mul(g.img_astar, g.img_b));
    upd(mul(g.img_bstar, g.img_astar) - lam * mul(g.img_astar, g.img_bstar));
  }
  upd(mul(g.img_a, g.img_a_inv) - Element::one());
  upd(mul(g.img_astar, g.img_astar_inv) - Element::one());
  if (g.star_compatible) {
    upd(adjoint(g.img_a, P) - g.img_astar);
    upd(adjoint(g.img_b, P) - g.img_bstar);
  }
  return res;
}

inline Element apply_generator_map(const GeneratorMap& g, const Element& x,
                                   const AlgebraParams& P, bool validate = true) {
  if (validate) {
    double res = relation_residual(g, P);
    if (res > 1e-9)
      throw RelationViolated(g.name + ": defining relations violated, residual " +
                             std::to_string(res));
  }
  auto pow_a = [&](const Element& img, const Element& img_inv, int k) {
    return k >= 0 ? power(img, k, P) : power(img_inv, -k, P);
  };
  auto pow_b = [&](const Element& img, int k) {
    return k >= 0 ? power(img, k, P) : power(invert(img, P), -k, P);
  };
  Element out;
  for (const auto& [m, c] : x.terms()) {
    Element acc = Element::one();
    auto mulacc = [&](const Element& e) { acc = multiply(acc, e, P); };
    if (g.kind == GeneratorMap::Kind::Homomorphism) {
      mulacc(pow_a(g.img_a, g.img_a_inv, m.p));
      mulacc(pow_a(g.img_astar, g.img_astar_inv, m.pbar));
      mulacc(pow_b(g.img_b, m.r));
      mulacc(pow_b(g.img_bstar, m.rbar));
    } else {
      mulacc(pow_b(g.img_bstar, m.rbar));
      mulacc(pow_b(g.img_b, m.r));
      mulacc(pow_a(g.img_astar, g.img_astar_inv, m.pbar));
      mulacc(pow_a(g.img_a, g.img_a_inv, m.p));
    }
    out += c * acc;
  }
  return out;
}

// Canonical maps -------------------------------------------------------------

/// Antipode: S(a) = a^{-1}, S(b) = -a^{-1} b (anti-homomorphism).
inline GeneratorMap antipode_map(const AlgebraParams& P) {
  GeneratorMap g;
  g.name = "S";
  g.kind = GeneratorMap::Kind::AntiHomomorphism;
  g.img_a = Element::gen_a(-1);
  g.img_a_inv = Element::gen_a(1);
  g.img_astar = Element::gen_astar(-1);
  g.img_astar_inv = Element::gen_astar(1);
  g.img_b = Element::monomial({-1, 0, 1, 0}, -1.0);
  g.img_bstar = Element::monomial({0, -1, 0, 1}, -1.0);
  for (Element* e : {&g.img_a, &g.img_a_inv, &g.img_astar, &g.img_astar_inv, &g.img_b,
                     &g.img_bstar})
    *e = canonicalize(*e, P);
  return g;
}

/// Inverse antipode: S^{-1}(b) = -b a^{-1} = -lambda a^{-1} b.
inline GeneratorMap antipode_inv_map(const AlgebraParams& P) {
  GeneratorMap g;
  g.name = "S^-1";
  g.kind = GeneratorMap::Kind::AntiHomomorphism;
  g.img_a = Element::gen_a(-1);
  g.img_a_inv = Element::gen_a(1);
  g.img_astar = Element::gen_astar(-1);
  g.img_astar_inv = Element::gen_astar(1);
  g.img_b = Element::monomial({-1, 0, 1, 0}, -P.lambda);
  g.img_bstar = Element::monomial({0, -1, 0, 1}, -P.lambda);
  for (Element* e : {&g.img_a, &g.img_a_inv, &g.img_astar, &g.img_astar_inv, &g.img_b,
                     &g.img_bstar})
    *e = canonicalize(*e, P);
  return g;
}

inline Element antipode(const Element& x, const AlgebraParams& P, bool inverse = false) {
  return apply_generator_map(inverse ? antipode_inv_map(P) : antipode_map(P), x, P, false);
}

/// Scaling group at complex time z: tau_z(a) = a, tau_z(b) = e^{2 pi z / n} b,
/// a diagonal phase on monomials.
inline GeneratorMap scaling_map(cplx z, const AlgebraParams& P) {
  GeneratorMap g;
  g.name = "tau_z";
  g.kind = GeneratorMap::Kind::Homomorphism;
  g.star_compatible = std::abs(z.imag()) < 1e-15;
  cplx f = std::exp(2.0 * pi * z / static_cast<double>(P.n));
  g.img_a = Element::gen_a(1);
  g.img_a_inv = Element::gen_a(-1);
  g.img_astar = Element::gen_astar(1);
  g.img_astar_inv = Element::gen_astar(-1);
  g.img_b = f * Element::gen_b(1);
  g.img_bstar = f * Element::gen_bstar(1);
  for (Element* e : {&g.img_a, &g.img_a_inv, &g.img_astar, &g.img_astar_inv, &g.img_b,
                     &g.img_bstar})
    *e = canonicalize(*e, P);
  return g;
}

/// Fast path: tau_z scales a monomial by e^{2 pi z (r + rbar)/n}.
inline Element scaling_apply(const Element& x, cplx z, const AlgebraParams& P) {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    cplx f = std::exp(2.0 * pi * z * static_cast<double>(m.r + m.rbar) / static_cast<double>(P.n));
    out.add_term(m, c * f);
  }
  return out;
}

/// Unitary antipode R = S tau_{i/2}: R(a) = a^{-1}, R(b) = -q a^{-1} b.
inline GeneratorMap unitary_antipode_map(const AlgebraParams& P) {
  GeneratorMap g;
  g.name = "R";
  g.kind = GeneratorMap::Kind::AntiHomomorphism;
  g.star_compatible = true;
  g.img_a = Element::gen_a(-1);
  g.img_a_inv = Element::gen_a(1);
  g.img_astar = Element::gen_astar(-1);
  g.img_astar_inv = Element::gen_astar(1);
  g.img_b = Element::monomial({-1, 0, 1, 0}, -P.q);
  g.img_bstar = Element::monomial({0, -1, 0, 1}, -P.q);
  for (Element* e : {&g.img_a, &g.img_a_inv, &g.img_astar, &g.img_astar_inv, &g.img_b,
                     &g.img_bstar})
    *e = canonicalize(*e, P);
  return g;
}

/// Modular automorphism of the right Haar weight: sigma_t(a) = e^{2 pi t/n} a,
/// sigma_t(b) = b.
inline GeneratorMap modular_map(double t, const AlgebraParams& P) {
  GeneratorMap g;
  g.name = "sigma_t";
  g.kind = GeneratorMap::Kind::Homomorphism;
  g.star_compatible = true;
  cplx f = std::exp(cplx(2.0 * pi * t / static_cast<double>(P.n), 0.0));
  g.img_a = f * Element::gen_a(1);
  g.img_a_inv = (1.0 / f) * Element::gen_a(-1);
  g.img_astar = f * Element::gen_astar(1);
  g.img_astar_inv = (1.0 / f) * Element::gen_astar(-1);
  g.img_b = Element::gen_b(1);
  g.img_bstar = Element::gen_bstar(1);
  for (Element* e : {&g.img_a, &g.img_a_inv, &g.img_astar, &g.img_astar_inv, &g.img_b,
                     &g.img_bstar})
    *e = canonicalize(*e, P);
  return g;
}

// ---------------------------------------------------------------------------
// Dual pairing on the unstarred subalgebra (free mode):
//   <a,a> = lambda, <a,b> = <b,a> = 0, <b,b> = t,
// extended by <xy,z> = <x(x)y, Delta z> and <x,yz> = <Delta x, y(x)z>.

namespace detail {

enum class Gen { A, AInv, B };

inline cplx eps_mono(const Monomial& m) { return m.r == 0 ? cplx(1.0) : cplx(0.0); }

/// <g, m> for a single generator g against a monomial a^s b^u.
inline cplx pair_generator(Gen g, const Monomial& m, cplx t, const AlgebraParams& P) {
  switch (g) {
    case Gen::A:
      return m.r > 0 ? cplx(0.0) : P.lam(m.p);
    case Gen::AInv:
      return m.r > 0 ? cplx(0.0) : P.lam(-m.p);
    case Gen::B: {
      // <b, h m'> = <a,h><b,m'> + <b,h> eps(m'), peeling h from the left.
      if (m.is_one()) return 0.0;
      if (m.p > 0) {
        Monomial rest{m.p - 1, 0, m.r, 0};
        return P.lambda * pair_generator(Gen::B, rest, t, P);
      }
      if (m.p < 0) {
        Monomial rest{m.p + 1, 0, m.r, 0};
        return P.lam(-1) * pair_generator(Gen::B, rest, t, P);
      }
      // h = b
      Monomial rest{0, 0, m.r - 1, 0};
      return t * eps_mono(rest);
    }
  }
  return 0.0;
}

inline cplx pair_mono(const Monomial& mx, const Monomial& my, cplx t, const AlgebraParams& P);

inline cplx pair_peel(Gen g, const Monomial& rest, const Monomial& my, cplx t,
                      const AlgebraParams& P) {
  // <g rest, my> = sum <g, my_(1)> <rest, my_(2)>
  Tensor2 dy = comultiply(Element::monomial(my, 1.0), P);
  cplx s = 0.0;
  for (const auto& [k, c] : dy.terms()) {
    cplx pg = pair_generator(g, k.leg[0], t, P);
    if (std::abs(pg) < 1e-300) continue;
    s += c * pg * pair_mono(rest, k.leg[1], t, P);
  }
  return s;
}

inline cplx pair_mono(const Monomial& mx, const Monomial& my, cplx t, const AlgebraParams& P) {
  if (mx.is_one()) return eps_mono(my);
  if (mx.p > 0) return pair_peel(Gen::A, {mx.p - 1, 0, mx.r, 0}, my, t, P);
  if (mx.p < 0) return pair_peel(Gen::AInv, {mx.p + 1, 0, mx.r, 0}, my, t, P);
  return pair_peel(Gen::B, {0, 0, mx.r - 1, 0}, my, t, P);
}

}  // namespace detail

inline cplx pair(const Element& x, const Element& y, cplx t_param, const AlgebraParams& P) {
  if (P.mode != Mode::Free)
    throw UnsupportedOperand("pair: defined in free mode only (degenerate at roots of unity)");
  auto check_unstarred = [](const Element& e) {
    for (const auto& [m, c] : e.terms()) {
      (void)c;
      if (m.pbar != 0 || m.rbar != 0)
        throw UnsupportedOperand("pair: starred generator in operand");
      if (m.r < 0) throw UnsupportedOperand("pair: negative b-power in operand");
    }
  };
  check_unstarred(x);
  check_unstarred(y);
  cplx s = 0.0;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) s += cx * cy * detail::pair_mono(mx, my, t_param, P);
  return s;
}

inline cplx pair_tensor(const Tensor2& xy, const Element& z1, const Element& z2, cplx t,
                        const AlgebraParams& P) {
  cplx s = 0.0;
  for (const auto& [k, c] : xy.terms())
    s += c * pair(Element::monomial(k.leg[0], 1.0), z1, t, P) *
         pair(Element::monomial(k.leg[1], 1.0), z2, t, P);
  return s;
}

}  // namespace qhaar::hopf
