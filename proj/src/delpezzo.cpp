#include "schubert/delpezzo.hpp"

#include <algorithm>
#include <functional>

namespace schubert {

namespace {

void require_N(int N) {
  if (N < 1 || N > 8) throw DomainError("N must lie in [1, 8], got " + std::to_string(N));
}

std::string idx(int i) { return std::to_string(i); }

}  // namespace

Pic10Class Pic10Class::zero(int N) {
  require_N(N);
  Pic10Class c;
  c.N = N;
  c.h = 0;
  c.e.assign(static_cast<std::size_t>(N), Rational(0));
  c.f.assign(static_cast<std::size_t>(10 - N), Rational(0));
  return c;
}

Pic10Class Pic10Class::hyperplane(int N) {
  Pic10Class c = zero(N);
  c.h = 1;
  return c;
}

Pic10Class Pic10Class::exc_e(int N, int i) {
  Pic10Class c = zero(N);
  if (i < 1 || i > N) throw DomainError("e_" + idx(i) + " is not in the basis");
  c.e[static_cast<std::size_t>(i - 1)] = 1;
  return c;
}

Pic10Class Pic10Class::exc_f(int N, int j) {
  Pic10Class c = zero(N);
  if (j < 1 || j > 10 - N) throw DomainError("f_" + idx(j) + " is not in the basis");
  c.f[static_cast<std::size_t>(j - 1)] = 1;
  return c;
}

Pic10Class& Pic10Class::operator+=(const Pic10Class& o) {
  if (N != o.N) throw DomainError("classes on different surfaces");
  h += o.h;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
  for (std::size_t j = 0; j < f.size(); ++j) f[j] += o.f[j];
  return *this;
}

Pic10Class& Pic10Class::operator*=(const Rational& s) {
  h *= s;
  for (auto& x : e) x *= s;
  for (auto& x : f) x *= s;
  return *this;
}

std::string Pic10Class::str() const {
  std::string out;
  auto term = [&](const Rational& c, const std::string& name) {
    if (c == 0) return;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Rational m = abs(c);
    out += (m == 1 ? "" : to_string(m) + "*") + name;
  };
  term(h, "h");
  for (std::size_t i = 0; i < e.size(); ++i) term(e[i], "e" + idx(static_cast<int>(i) + 1));
  for (std::size_t j = 0; j < f.size(); ++j) term(f[j], "f" + idx(static_cast<int>(j) + 1));
  return out.empty() ? "0" : out;
}

Rational intersect(const Pic10Class& x, const Pic10Class& y) {
  if (x.N != y.N) throw DomainError("classes on different surfaces");
  Rational s = x.h * y.h;
  for (std::size_t i = 0; i < x.e.size(); ++i) s -= x.e[i] * y.e[i];
  for (std::size_t j = 0; j < x.f.size(); ++j) s -= x.f[j] * y.f[j];
  return s;
}

RadicalNumber intersect(const RadicalClass& x, const Pic10Class& y) {
  if (x.N != y.N) throw DomainError("classes on different surfaces");
  RadicalNumber s = y.h * x.h;
  for (std::size_t i = 0; i < x.e.size(); ++i) s -= y.e[i] * x.e[i];
  for (std::size_t j = 0; j < x.f.size(); ++j) s -= y.f[j] * x.f[j];
  return s;
}

RadicalNumber intersect(const RadicalClass& x, const RadicalClass& y) {
  if (x.N != y.N) throw DomainError("classes on different surfaces");
  RadicalNumber s = x.h * y.h;
  for (std::size_t i = 0; i < x.e.size(); ++i) s -= x.e[i] * y.e[i];
  for (std::size_t j = 0; j < x.f.size(); ++j) s -= x.f[j] * y.f[j];
  return s;
}

std::pair<Rational, Rational> admissible_q_interval(int N) {
  require_N(N);
  return {make_rational(8 - N, 9 * (9 - N)), make_rational(1, 9)};
}

Rational q_prime(int N, const Rational& q) { return (9 - N) * (make_rational(1, 9) - q); }

std::vector<Rational> admissible_q_samples(int N, int count) {
  auto [lo, hi] = admissible_q_interval(N);
  std::vector<Rational> out;
  for (int t = 1; t <= count; ++t) {
    Rational x = lo + (hi - lo) * make_rational(t, count + 1);
    x.canonicalize();
    out.push_back(x);
  }
  return out;
}

RadicalClass build_D_delta(int N, const Rational& q) {
  auto [lo, hi] = admissible_q_interval(N);
  if (!(lo < q && q < hi)) {
    throw DomainError("q = " + to_string(q) + " violates sqrt((8-N)/(9(9-N))) < delta < 1/3, i.e. " + to_string(lo) +
                      " < q < 1/9 for N = " + idx(N));
  }
  const Rational q2 = q_prime(N, q);
  RadicalClass D{N, RadicalNumber::rational(1, q, q2), {}, {}};
  for (int i = 0; i < N; ++i) D.e.push_back(RadicalNumber::rational(make_rational(-1, 3), q, q2));
  D.f.push_back(RadicalNumber(0, 0, -1, q, q2));
  for (int j = 1; j < 10 - N; ++j) D.f.push_back(RadicalNumber(0, -1, 0, q, q2));
  return D;
}

bool symbolic_self_intersection_vanishes(int N) {
  if (N < 0 || N > 8) throw DomainError("N must lie in [0, 8], got " + std::to_string(N));
  // Squared coefficients of D as affine functions c0 + c1*q, weighted by the
  // diagonal form (h^2 = 1, every exceptional class -1).
  using Affine = std::pair<Rational, Rational>;
  std::vector<std::pair<int, Affine>> squares;
  squares.push_back({1, {1, 0}});
  for (int i = 0; i < N; ++i) squares.push_back({-1, {make_rational(1, 9), 0}});
  // q' = (9 - N)(1/9 - q), squared coefficient of f_1
  squares.push_back({-1, {make_rational(9 - N, 9), Rational(-(9 - N))}});
  for (int j = 1; j < 10 - N; ++j) squares.push_back({-1, {0, 1}});
  Affine total{0, 0};
  for (const auto& [sign, a] : squares) {
    total.first += sign * a.first;
    total.second += sign * a.second;
  }
  return total.first == 0 && total.second == 0;
}

bool DelPezzoReport::all_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == "fail"; });
}

namespace {

CheckRecord sign_check(const std::string& name, const RadicalNumber& value, int want_sign, bool allow_zero = false) {
  const int s = value.sign();
  const bool ok = s == want_sign || (allow_zero && s == 0);
  return {name, ok ? "pass" : "fail", value.str()};
}

CheckRecord rational_check(const std::string& name, bool ok, const std::string& value) {
  return {name, ok ? "pass" : "fail", value};
}

const char* kShghAssumption = "SHGH";

}  // namespace

DelPezzoReport verify_nef_conditions(int N, const Rational& q) {
  const RadicalClass D = build_D_delta(N, q);
  DelPezzoReport r;
  r.N = N;
  r.q = q;
  r.q2 = q_prime(N, q);
  r.checks.push_back(sign_check("D^2 = 0", intersect(D, D), 0));
  r.checks.push_back(sign_check("D.h > 0", intersect(D, Pic10Class::hyperplane(N)), 1));
  for (int i = 1; i <= N; ++i) r.checks.push_back(sign_check("D.e" + idx(i) + " > 0", intersect(D, Pic10Class::exc_e(N, i)), 1));
  for (int j = 1; j <= 10 - N; ++j) {
    r.checks.push_back(sign_check("D.f" + idx(j) + " > 0", intersect(D, Pic10Class::exc_f(N, j)), 1));
  }
  r.checks.push_back(rational_check("9q < 1", 9 * q < 1, to_string(Rational(9 * q))));
  r.checks.push_back(rational_check("9q' < 1", 9 * r.q2 < 1, to_string(Rational(9 * r.q2))));
  r.checks.push_back({"D.C >= 0 for K-nonnegative C (Cauchy-Schwarz on C^2 >= 0)", "assumed", kShghAssumption});
  r.assumptions.push_back(kShghAssumption);
  return r;
}

namespace {

Pic10Class h_minus_3(int N, bool is_e, int i) {
  Pic10Class c = Pic10Class::hyperplane(N);
  Pic10Class x = is_e ? Pic10Class::exc_e(N, i) : Pic10Class::exc_f(N, i);
  return c - Rational(3) * x;
}

FanoCase hypersurface_like(std::string key, std::string name, int degree, int f_from, int f_to) {
  FanoCase row{std::move(key), std::move(name), degree, 9 - degree, {}, {}, {}};
  const int N = row.N;
  for (int i = 1; i <= N; ++i) row.kernel.emplace_back("h-3e" + idx(i), h_minus_3(N, true, i));
  for (int j = f_from; j <= f_to; ++j) {
    if (j > 10 - N) {
      row.missing.push_back("h-3f" + idx(j));
      continue;
    }
    row.gamma.emplace_back("h-3f" + idx(j), h_minus_3(N, false, j));
  }
  return row;
}

std::vector<FanoCase> build_table() {
  std::vector<FanoCase> t;
  t.push_back(hypersurface_like("grass25", "G(2,5)", 5, 1, 6));
  t.push_back(hypersurface_like("quadrics", "Q1 ∩ Q2", 4, 1, 5));
  t.push_back(hypersurface_like("cubic", "cubic hypersurface", 3, 1, 4));

  {
    FanoCase row{"p2xp2", "P2 x P2", 6, 3, {}, {}, {}};
    const int N = 3;
    for (int i = 1; i <= N; ++i) {
      for (int j = 1; j <= N; ++j) {
        if (i != j) row.kernel.emplace_back("e" + idx(i) + "-e" + idx(j), Pic10Class::exc_e(N, i) - Pic10Class::exc_e(N, j));
      }
    }
    for (int i = 1; i <= N; ++i) {
      for (int j = 1; j <= 10 - N; ++j) {
        row.gamma.emplace_back("e" + idx(i) + "-f" + idx(j), Pic10Class::exc_e(N, i) - Pic10Class::exc_f(N, j));
      }
    }
    for (int i = 1; i <= N; ++i) {
      for (int j = i + 1; j <= N; ++j) {
        for (int k = 1; k <= 10 - N; ++k) {
          row.gamma.emplace_back("h-e" + idx(i) + "-e" + idx(j) + "-f" + idx(k),
                                 Pic10Class::hyperplane(N) - Pic10Class::exc_e(N, i) - Pic10Class::exc_e(N, j) -
                                     Pic10Class::exc_f(N, k));
        }
      }
    }
    t.push_back(std::move(row));
  }
  {
    FanoCase row{"p1xp1xp1", "P1 x P1 x P1", 6, 3, {}, {}, {}};
    const int N = 3;
    row.kernel.emplace_back("h-e1-e2-e3", Pic10Class::hyperplane(N) - Pic10Class::exc_e(N, 1) -
                                              Pic10Class::exc_e(N, 2) - Pic10Class::exc_e(N, 3));
    for (int i = 1; i <= N; ++i) {
      for (int k = 1; k <= 10 - N; ++k) {
        row.gamma.emplace_back("e" + idx(i) + "-f" + idx(k), Pic10Class::exc_e(N, i) - Pic10Class::exc_f(N, k));
      }
    }
    t.push_back(std::move(row));
  }
  t.push_back(hypersurface_like("double-cover", "double cover of P^n", 2, 1, 3));
  // Printed as j = 2..4; with N = 8 only f_1, f_2 exist.
  t.push_back(hypersurface_like("sextic", "sextic in P(3,2,1,...,1)", 1, 2, 4));
  t.push_back(hypersurface_like("blowup-p3", "blow-up of P3 at a point", 7, 1, 8));
  return t;
}

}  // namespace

const std::vector<FanoCase>& fano_table() {
  static const std::vector<FanoCase> table = build_table();
  return table;
}

const FanoCase& fano_case(const std::string& key) {
  for (const auto& row : fano_table()) {
    if (row.key == key) return row;
  }
  std::string known;
  for (const auto& row : fano_table()) known += (known.empty() ? "" : ", ") + row.key;
  throw DomainError("unknown case '" + key + "' (known: " + known + ")");
}

std::vector<LabeledClass> lemma65_samples(int N) {
  require_N(N);
  // Points 0..9: the first N are e_1..e_N, the rest f_1..f_{10-N}.
  auto point = [&](int p) { return p < N ? Pic10Class::exc_e(N, p + 1) : Pic10Class::exc_f(N, p - N + 1); };
  auto name = [&](int p) { return p < N ? "e" + idx(p + 1) : "f" + idx(p - N + 1); };
  std::vector<LabeledClass> out;
  for (int p = 0; p < 10; ++p) out.emplace_back(name(p), point(p));
  for (int p = 0; p < 10; ++p) {
    for (int s = p + 1; s < 10; ++s) out.emplace_back("h-" + name(p) + "-" + name(s), Pic10Class::hyperplane(N) - point(p) - point(s));
  }
  std::vector<int> pick;
  std::function<void(int, int, const std::function<void()>&)> subsets = [&](int start, int size, const std::function<void()>& emit) {
    if (static_cast<int>(pick.size()) == size) {
      emit();
      return;
    }
    for (int p = start; p < 10; ++p) {
      pick.push_back(p);
      subsets(p + 1, size, emit);
      pick.pop_back();
    }
  };
  subsets(0, 5, [&] {
    Pic10Class c = Rational(2) * Pic10Class::hyperplane(N);
    std::string label = "2h";
    for (int p : pick) {
      c = c - point(p);
      label += "-" + name(p);
    }
    out.emplace_back(label, c);
  });
  for (int dbl = 0; dbl < 10; ++dbl) {
    pick.clear();
    std::vector<int> others;
    for (int p = 0; p < 10; ++p) {
      if (p != dbl) others.push_back(p);
    }
    // Six of the remaining nine points.
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
      if (pick.size() == 6) {
        Pic10Class c = Rational(3) * Pic10Class::hyperplane(N) - Rational(2) * point(dbl);
        std::string label = "3h-2" + name(dbl);
        for (int p : pick) {
          c = c - point(p);
          label += "-" + name(p);
        }
        out.emplace_back(label, c);
        return;
      }
      for (std::size_t t = start; t < others.size(); ++t) {
        pick.push_back(others[t]);
        choose(t + 1);
        pick.pop_back();
      }
    };
    choose(0);
  }
  return out;
}

namespace {

// g is a rational multiple of D: all 2x2 minors of (D, g) vanish.
bool proportional(const RadicalClass& D, const Pic10Class& g) {
  std::vector<RadicalNumber> dv = {D.h};
  std::vector<Rational> gv = {g.h};
  dv.insert(dv.end(), D.e.begin(), D.e.end());
  dv.insert(dv.end(), D.f.begin(), D.f.end());
  gv.insert(gv.end(), g.e.begin(), g.e.end());
  gv.insert(gv.end(), g.f.begin(), g.f.end());
  for (std::size_t i = 0; i < dv.size(); ++i) {
    for (std::size_t j = i + 1; j < dv.size(); ++j) {
      if ((gv[j] * dv[i] - gv[i] * dv[j]).sign() != 0) return false;
    }
  }
  return true;
}

}  // namespace

DelPezzoReport check_lemma65(const RadicalClass& D, const std::vector<LabeledClass>& kernel,
                             const std::vector<LabeledClass>& gamma, const std::vector<LabeledClass>& samples) {
  DelPezzoReport r;
  r.N = D.N;
  r.q = D.h.q();
  r.q2 = D.h.q2();
  r.checks.push_back(sign_check("(1) D^2 = 0", intersect(D, D), 0));
  r.checks.push_back(sign_check("(1) D.h > 0", intersect(D, Pic10Class::hyperplane(D.N)), 1));
  std::size_t bad = 0;
  std::string first_bad;
  for (const auto& [label, g] : samples) {
    const auto v = intersect(D, g);
    const int s = v.sign();
    if (s < 0 || (s == 0 && !proportional(D, g))) {
      if (bad++ == 0) first_bad = label + ": " + v.str();
    }
  }
  r.checks.push_back({"(1) D.C >= 0 on " + std::to_string(samples.size()) + " sampled (-1)-curves", bad ? "fail" : "pass",
                      bad ? first_bad : "all nonnegative"});
  r.checks.push_back({"(1) D nef on all of Eff(S)", "assumed", kShghAssumption});
  for (const auto& [label, c] : kernel) r.checks.push_back(sign_check("(2) D.(" + label + ") = 0", intersect(D, c), 0));
  for (const auto& [label, c] : gamma) r.checks.push_back(sign_check("(3) D.(" + label + ") > 0", intersect(D, c), 1));
  r.assumptions.push_back(kShghAssumption);
  return r;
}

DelPezzoReport verify_fano_case(const FanoCase& row, const Rational& q) {
  DelPezzoReport r = verify_nef_conditions(row.N, q);
  const RadicalClass D = build_D_delta(row.N, q);
  DelPezzoReport l = check_lemma65(D, row.kernel, row.gamma, lemma65_samples(row.N));
  r.checks.insert(r.checks.end(), l.checks.begin(), l.checks.end());
  for (const auto& m : row.missing) r.checks.push_back({"(3) D.(" + m + ") > 0", "not-applicable", "printed index outside basis"});
  r.checks.push_back({"D^2 = 0 identically in q", symbolic_self_intersection_vanishes(row.N) ? "pass" : "fail", "affine in q"});
  return r;
}

H0Count h0_count(int n, int d) {
  if (n < 3) throw DomainError("h0_count needs n >= 3");
  if (d < 1 || d > 8) throw DomainError("h0_count needs 1 <= d <= 8");
  return {Integer(n + d - 1), Integer(n - 2)};
}

}  // namespace schubert
