#pragma once

// The blow-up S of P^2 at 10 points: N_1(S) with basis h, e_1..e_N, f_1..f_{10-N},
// the classes D = h - (1/3) sum e_i - delta' f_1 - delta sum_{j>=2} f_j with
// delta^2 = q, delta'^2 = q' = (9-N)(1/9 - q), and the extremality checks
// on the Fano table.

#include <string>
#include <utility>
#include <vector>

#include "schubert/radical.hpp"

namespace schubert {

struct Pic10Class {
  int N = 0;
  Rational h;
  std::vector<Rational> e;  // N entries
  std::vector<Rational> f;  // 10 - N entries

  static Pic10Class zero(int N);
  static Pic10Class hyperplane(int N);
  /// 1-based indices, as in the table.
  static Pic10Class exc_e(int N, int i);
  static Pic10Class exc_f(int N, int j);
  Pic10Class& operator+=(const Pic10Class& o);
  Pic10Class& operator*=(const Rational& s);
  friend Pic10Class operator+(Pic10Class a, const Pic10Class& b) { return a += b; }
  friend Pic10Class operator-(Pic10Class a, Pic10Class b) { return a += (b *= Rational(-1)); }
  friend Pic10Class operator*(const Rational& s, Pic10Class a) { return a *= s; }
  friend bool operator==(const Pic10Class&, const Pic10Class&) = default;
  std::string str() const;
};

struct RadicalClass {
  int N = 0;
  RadicalNumber h;
  std::vector<RadicalNumber> e;
  std::vector<RadicalNumber> f;
};

/// x.y = x_h y_h - sum x_e y_e - sum x_f y_f.
Rational intersect(const Pic10Class& x, const Pic10Class& y);
RadicalNumber intersect(const RadicalClass& x, const Pic10Class& y);
RadicalNumber intersect(const RadicalClass& x, const RadicalClass& y);

/// Open interval ((8-N)/(9(9-N)), 1/9) of admissible q = delta^2.
std::pair<Rational, Rational> admissible_q_interval(int N);
Rational q_prime(int N, const Rational& q);
/// Five rationals evenly spaced strictly inside the admissible interval.
std::vector<Rational> admissible_q_samples(int N, int count = 5);

/// Throws DomainError quoting sqrt((8-N)/(9(9-N))) < delta < 1/3 when q is outside.
RadicalClass build_D_delta(int N, const Rational& q);

/// D^2 as an affine function of a formal q vanishes identically.
bool symbolic_self_intersection_vanishes(int N);

struct CheckRecord {
  std::string name;
  std::string status;  // "pass", "fail" or "assumed"
  std::string value;
};

struct DelPezzoReport {
  int N = 0;
  Rational q;
  Rational q2;
  std::vector<CheckRecord> checks;
  std::vector<std::string> assumptions;
  bool all_pass() const;
};

DelPezzoReport verify_nef_conditions(int N, const Rational& q);

using LabeledClass = std::pair<std::string, Pic10Class>;

struct FanoCase {
  std::string key;
  std::string name;
  int degree = 0;
  int N = 0;
  std::vector<LabeledClass> kernel;
  std::vector<LabeledClass> gamma;
  /// Generators printed in the table but outside the basis (sextic row).
  std::vector<std::string> missing;
};

const std::vector<FanoCase>& fano_table();
const FanoCase& fano_case(const std::string& key);

/// (-1)-curves of degree <= 3 on the blow-up at 10 points: e, f, h - x - y,
/// 2h - (five points), 3h - 2x - (six others).
std::vector<LabeledClass> lemma65_samples(int N);

DelPezzoReport check_lemma65(const RadicalClass& D, const std::vector<LabeledClass>& kernel,
                             const std::vector<LabeledClass>& gamma, const std::vector<LabeledClass>& samples);

/// Nef conditions plus the kernel / Gamma checks for one table row.
DelPezzoReport verify_fano_case(const FanoCase& row, const Rational& q);

struct H0Count {
  Integer h0;
  Integer residual;
};
/// h^0(Z, H) = n + d - 1 and the residual system dimension n - 2.
H0Count h0_count(int n, int d);

}  // namespace schubert
