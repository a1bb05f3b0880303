#include "jspec/generators.hpp"

#include <sstream>

namespace jspec {

namespace {

RatComplex rand_gauss_int(Rng& rng, int mag) {
  std::uniform_int_distribution<int> d(-mag, mag);
  return {Rational(d(rng)), Rational(d(rng))};
}

// upper triangular nilpotent with random sparsity
ExactMatrix rand_nilpotent(Rng& rng, Index dim, int mag) {
  ExactMatrix n = ExactMatrix::Zero(dim, dim);
  std::uniform_int_distribution<int> keep(0, 2);
  for (Index i = 0; i < dim; ++i)
    for (Index j = i + 1; j < dim; ++j)
      if (keep(rng) != 0) n(i, j) = rand_gauss_int(rng, mag);
  return n;
}

}  // namespace

GeneratedTuple random_commuting_tuple(Rng& rng, const TupleGenConfig& cfg) {
  std::uniform_int_distribution<int> nd(cfg.n_min, cfg.n_max);
  std::uniform_int_distribution<Index> dd(cfg.dim_min, cfg.dim_max);
  const int n = nd(rng);
  const Index dim = dd(rng);

  // partition the space into blocks
  std::vector<Index> blocks;
  Index left = dim;
  while (left > 0) {
    std::uniform_int_distribution<Index> bd(1, std::min<Index>(3, left));
    const Index b = bd(rng);
    blocks.push_back(b);
    left -= b;
  }

  GeneratedTuple out;
  out.tuple.dim = dim;
  out.tuple.ops.assign(static_cast<size_t>(n), ExactMatrix::Zero(dim, dim));

  std::uniform_int_distribution<int> coeff(-cfg.entry_mag, cfg.entry_mag);
  Index at = 0;
  for (Index b : blocks) {
    const ExactMatrix nil = rand_nilpotent(rng, b, cfg.entry_mag);
    const ExactMatrix nil2 = ExactMatrix(nil * nil);
    Point<RatComplex> value;
    for (int i = 0; i < n; ++i) {
      const RatComplex alpha = rand_gauss_int(rng, cfg.entry_mag);
      const RatComplex c1 = rand_gauss_int(rng, cfg.entry_mag);
      const RatComplex c2{Rational(coeff(rng)), Rational(0)};
      ExactMatrix blk = ExactMatrix(c1 * nil) + ExactMatrix(c2 * nil2);
      for (Index k = 0; k < b; ++k) blk(k, k) = blk(k, k) + alpha;
      out.tuple.ops[static_cast<size_t>(i)].block(at, at, b, b) = blk;
      value.push_back(alpha);
    }
    out.block_values.push_back(std::move(value));
    at += b;
  }

  if (cfg.conjugate) {
    // a few elementary integer shears; the inverse is applied in reverse
    struct Shear {
      Index row, col;
      RatComplex c;
    };
    std::vector<Shear> shears;
    std::uniform_int_distribution<Index> pick(0, dim - 1);
    for (int k = 0; k < 4 && dim >= 2; ++k) {
      Index i = pick(rng), j = pick(rng);
      if (i == j) continue;
      shears.push_back({i, j, rand_gauss_int(rng, 1)});
    }
    ExactMatrix u = identity<RatComplex>(dim);
    ExactMatrix uinv = identity<RatComplex>(dim);
    for (const auto& s : shears) {
      ExactMatrix e = identity<RatComplex>(dim);
      e(s.row, s.col) = s.c;
      u = ExactMatrix(u * e);
    }
    for (auto it = shears.rbegin(); it != shears.rend(); ++it) {
      ExactMatrix e = identity<RatComplex>(dim);
      e(it->row, it->col) = -it->c;
      uinv = ExactMatrix(uinv * e);
    }
    for (auto& op : out.tuple.ops) op = ExactMatrix(u * op * uinv);
  }

  std::ostringstream ss;
  ss << "tuple(n=" << n << ",dim=" << dim << ",blocks=" << blocks.size()
     << (cfg.conjugate ? ",conjugated" : "") << ")";
  out.desc = ss.str();
  return out;
}

PolynomialMap<RatComplex> random_polynomial_map(Rng& rng, int vars, int comps,
                                                int max_degree) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  PolynomialMap<RatComplex> p;
  p.vars = vars;
  for (int c = 0; c < comps; ++c) {
    Polynomial<RatComplex> poly;
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
      Monomial<RatComplex> m;
      m.coeff = rand_gauss_int(rng, 2);
      if (ScalarTraits<RatComplex>::is_zero(m.coeff)) m.coeff = RatComplex(1);
      int budget = deg(rng);
      m.exps.assign(static_cast<size_t>(vars), 0);
      for (int v = 0; v < vars && budget > 0; ++v) {
        std::uniform_int_distribution<int> e(0, budget);
        m.exps[static_cast<size_t>(v)] = e(rng);
        budget -= m.exps[static_cast<size_t>(v)];
      }
      poly.terms.push_back(std::move(m));
    }
    p.components.push_back(std::move(poly));
  }
  return p;
}

namespace {

Complexd rand_lattice_point(Rng& rng) {
  // small half-integer lattice keeps coincidences between factors likely
  std::uniform_int_distribution<int> d(-3, 3);
  return {d(rng) * 0.5, d(rng) * 0.5};
}

}  // namespace

DiagonalTupleSpec random_diagonal_spec(Rng& rng, const DiagonalGenConfig& cfg) {
  DiagonalTupleSpec d;
  d.n = cfg.n;
  std::uniform_int_distribution<int> natoms(1, cfg.max_atoms);
  std::uniform_int_distribution<int> naccs(0, cfg.max_accumulations);
  std::uniform_int_distribution<int> mult(1, 3);
  std::uniform_int_distribution<int> inf(0, 3);
  auto rand_point = [&]() {
    PointCd p;
    for (int i = 0; i < cfg.n; ++i) p.push_back(rand_lattice_point(rng));
    return p;
  };
  const int na = natoms(rng);
  for (int i = 0; i < na; ++i) {
    Atom a;
    a.point = rand_point();
    bool dup = false;
    for (const auto& b : d.atoms) dup = dup || b.point == a.point;
    if (dup) continue;
    a.mult = (cfg.allow_infinite && inf(rng) == 0) ? kInfiniteMult : mult(rng);
    d.atoms.push_back(std::move(a));
  }
  if (d.atoms.empty()) d.atoms.push_back({rand_point(), 1});
  const int nc = naccs(rng);
  for (int i = 0; i < nc; ++i) {
    PointCd p = rand_point();
    bool dup = false;
    for (const auto& q : d.accumulations) dup = dup || q == p;
    if (!dup) d.accumulations.push_back(std::move(p));
  }
  validate(d);
  return d;
}

ShiftSpec random_shift_spec(Rng& rng) {
  ShiftSpec s;
  std::uniform_int_distribution<int> dir(0, 1);
  s.direction = dir(rng) == 0 ? ShiftSpec::Direction::Forward : ShiftSpec::Direction::Backward;
  std::uniform_int_distribution<int> np(0, 2);
  const Complexd pool[] = {{1, 0}, {2, 0}, {0.5, 0}, {1, 1}};
  std::uniform_int_distribution<size_t> pick(0, 3);
  const int p = np(rng);
  for (int i = 0; i < p; ++i) s.prefix.push_back(pool[pick(rng)]);
  const double tails[] = {0.5, 1.0, 2.0};
  std::uniform_int_distribution<size_t> tp(0, 2);
  s.tail = tails[tp(rng)];
  validate(s);
  return s;
}

namespace {

std::string fmt_cd(Complexd z) {
  std::ostringstream ss;
  ss << z.real();
  if (z.imag() != 0) ss << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
  return ss.str();
}

}  // namespace

std::string describe(const DiagonalTupleSpec& d) {
  std::ostringstream ss;
  ss << "diag(n=" << d.n << ",atoms=[";
  for (size_t i = 0; i < d.atoms.size(); ++i) {
    if (i) ss << ",";
    ss << "(";
    for (size_t c = 0; c < d.atoms[i].point.size(); ++c) {
      if (c) ss << ",";
      ss << fmt_cd(d.atoms[i].point[c]);
    }
    ss << ")x" << (d.atoms[i].infinite() ? std::string("inf") : std::to_string(d.atoms[i].mult));
  }
  ss << "],accs=[";
  for (size_t i = 0; i < d.accumulations.size(); ++i) {
    if (i) ss << ",";
    ss << "(";
    for (size_t c = 0; c < d.accumulations[i].size(); ++c) {
      if (c) ss << ",";
      ss << fmt_cd(d.accumulations[i][c]);
    }
    ss << ")";
  }
  ss << "])";
  return ss.str();
}

std::string describe(const ShiftSpec& s) {
  std::ostringstream ss;
  ss << "shift(" << (s.direction == ShiftSpec::Direction::Forward ? "fwd" : "bwd")
     << ",prefix=[";
  for (size_t i = 0; i < s.prefix.size(); ++i) {
    if (i) ss << ",";
    ss << fmt_cd(s.prefix[i]);
  }
  ss << "],tail=" << s.tail << ")";
  return ss.str();
}

}  // namespace jspec
