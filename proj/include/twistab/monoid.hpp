#pragma once

#include <vector>

#include "twistab/groups.hpp"
#include "twistab/intmat.hpp"
#include "twistab/rational.hpp"

namespace twistab {

// Finitely generated submonoid N of Q^n_{>=0} containing the nonnegative
// integer orthant. Membership follows the saturation model: v is in N iff
// v >= 0 coordinatewise and v lies in the group span N^gp. The standard
// basis vectors are implicit generators and never need to be listed.
class AdmissibleMonoid {
 public:
  AdmissibleMonoid(int n, std::vector<QVec> generators);

  int dim() const { return n_; }
  const std::vector<QVec>& generators() const { return gens_; }

  // Common denominator D of all generators; D*N^gp is an integer lattice.
  const Int& common_denominator() const { return den_; }

  // Columns D*v_j followed by D*e_i; their span over Z is D*N^gp.
  const IMat& span_columns() const { return span_; }
  const SnfResult& span_snf() const { return span_snf_; }

  bool contains(const QVec& v) const;

  // r_i with projection of N to coordinate i equal to (1/r_i)Z_{>=0}.
  const std::vector<long long>& projection_orders() const { return proj_; }
  // m with summation image of N equal to (1/m)Z_{>=0}.
  long long summation_order() const { return sum_order_; }

 private:
  int n_;
  std::vector<QVec> gens_;
  Int den_;
  IMat span_;
  SnfResult span_snf_;
  std::vector<long long> proj_;
  long long sum_order_;
};

struct CoordinateData {
  std::vector<long long> r;
  long long m_sum;
};
CoordinateData coordinate_data(const AdmissibleMonoid& n);

// Direct sum of the finest single-coordinate projections of the inputs:
// coordinate i contributes (1/lcm_j r_i^{(j)})Z_{>=0}. Contains every input.
AdmissibleMonoid monoid_join(const std::vector<AdmissibleMonoid>& ns);

// Element of an XGroup in canonical coordinates: one entry per invariant
// factor, reduced into [0, factor).
using TorsionClass = std::vector<Int>;

// The finite group X = N^gp / Z^n together with the summation character
// chi: X -> Q/Z and rational lifts for every generator of the presentation.
class XGroup {
 public:
  const AdmissibleMonoid& monoid() const { return monoid_; }
  const std::vector<Int>& factors() const { return factors_; }
  const Int& order() const { return order_; }

  TorsionClass zero() const { return TorsionClass(factors_.size(), 0); }
  TorsionClass reduce(TorsionClass x) const;
  TorsionClass add(const TorsionClass& a, const TorsionClass& b) const;

  // chi of a class, as the canonical representative in [0, 1).
  Rat chi(const TorsionClass& x) const;

  // The unique representative of x with all coordinates in [0, 1).
  QVec lift(const TorsionClass& x) const;

  // Class of a vector in N^gp; throws NotInMonoid when v is not in the span.
  TorsionClass class_of(const QVec& v) const;

  // Classes of the monoid's listed generators, in order.
  const std::vector<TorsionClass>& generator_classes() const {
    return gen_classes_;
  }

  std::vector<TorsionClass> all_elements() const;

 private:
  friend XGroup x_group(const AdmissibleMonoid& n);
  explicit XGroup(AdmissibleMonoid m) : monoid_(std::move(m)) {}

  AdmissibleMonoid monoid_;
  std::vector<Int> factors_;           // invariant factors > 1
  std::vector<QVec> factor_lifts_;     // lift in [0,1)^n per factor generator
  std::vector<Rat> factor_chi_;        // chi per factor generator, in [0,1)
  std::vector<TorsionClass> gen_classes_;
  Int order_ = 1;

  // Presentation data for class_of: row transform, surviving diagonal
  // positions, full SNF diagonal.
  IMat class_u_;
  std::vector<int> class_keep_;
  std::vector<Int> class_s_;
};

XGroup x_group(const AdmissibleMonoid& n);

// Subgroup X_m = {x : m * chi(x) = 0 in Q/Z} with its own invariant factors
// and the inclusion into X given on its factor generators.
struct XmSubgroup {
  long long m = 1;
  std::vector<Int> factors;
  std::vector<TorsionClass> generators;  // images in X, one per factor
  Int order = 1;

  FiniteAbelianGroup abstract_type() const;
  bool contains(const XGroup& x, const TorsionClass& cls) const;
  std::vector<TorsionClass> all_elements(const XGroup& x) const;
};

XmSubgroup x_m(const XGroup& x, long long m);

// Torsion Picard group of the stacky projective line with distinct stacky
// points of orders r_1..r_k plus one point of order m.
FiniteAbelianGroup torsion_pic(const std::vector<long long>& root_orders,
                               long long m);

// deg of the line bundle attached to a monoid element: -(coordinate sum).
// Throws NotInMonoid when ell is not in N.
Rat degree_of_generator_bundle(const AdmissibleMonoid& n, const QVec& ell);

struct MinimalLift {
  QVec n_lambda;  // all coordinates in [0, 1)
  Int s;          // integer part of chi(n_lambda)
  Int w;          // m * fractional part, in [0, m)
};

// Throws NotInXm when lam is not killed by m*chi.
MinimalLift minimal_lift(const XGroup& x, long long m, const TorsionClass& lam);

// Number of isomorphism classes of G-torsors with abelian structure on the
// stacky line: hom classes from the torsion Picard group into G.
long long count_abelian_torsors(const std::vector<long long>& root_orders,
                                long long m, const FiniteGroup& g);

// Independent oracle: abelianization of the orbifold fundamental group
// <c_1..c_k, c | c_i^{r_i}, c^m, c_1...c_k c> via one Smith normal form.
FiniteAbelianGroup orbifold_abelianization(
    const std::vector<long long>& root_orders, long long m);

}  // namespace twistab
