#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numrad/convex_function.hpp"
#include "numrad/matrix.hpp"
#include "numrad/norms.hpp"
#include "numrad/radius.hpp"

namespace numrad {

/// Every inequality, lemma, refinement chain and generalized-radius bound
/// checked by the library. Notation: w = numerical radius, ||.|| = operator
/// norm, |X| = (X*X)^{1/2}, <.,.> linear in the first slot, x a unit vector.
enum class InequalityId {
  Eq38Lower,          // ||T|| / 2 <= w(T)
  Eq38Upper,          // w(T) <= ||T||
  Eq37,               // w(T) <= (||T|| + ||T^2||^{1/2}) / 2
  Eq36,               // w^2(T) <= ||T|^2 + |T*|^2|| / 2
  Eq41,               // w^{2r}(T) <= ||T|^{2r} + |T*|^{2r}|| / 2
  RefinedCs,          // |<a,e><e,b>| <= (|<a,b>| + |a||b|) / 2, plus the two-term chain
  Ineq30,             // |<Ax,x><Bx,x>| <= (|<BAx,x>| + |Ax||B*x|) / 2
  ThmMainSq,          // f(|<Ax,x><Bx,x>|^2) <= [f(|<BAx,x>|^2) + <(a f(|A|^{2/a}) + (1-a) f(|B*|^{2/(1-a)}))x,x>] / 2
  ThmMain,            // f(|<Ax,x><Bx,x>|) <= f(|<BAx,x>|)/2 + <(f(|A|^2) + f(|B*|^2))x,x>/4
  Cor14Sq,            // f = t^r form of ThmMainSq
  Cor14,              // f = t^r form of ThmMain
  Cor12F,             // f(w^2(B*A)) <= f(w(|B|^2|A|^2))/2 + ||f(|A|^4) + f(|B|^4)||/4
  Cor12Pow,           // w^{2r}(B*A) <= w^r(|B|^2|A|^2)/2 + ||A|^{4r} + |B|^{4r}||/4
  Drag2,              // w^{2r}(B*A) <= ||A|^{4r} + |B|^{4r}|| / 2
  Chain44,            // Cor12Pow lhs <= Cor12Pow rhs <= Drag2 rhs
  SingleFSq,          // f(w^4(T)) <= [f(w^2(|T||T*|)) + ||(1-a) f(|T|^{2/(1-a)}) + a f(|T*|^{2/a})||] / 2
  SingleF,            // f(w^2(T)) <= f(w(|T||T*|))/2 + ||f(|T|^2) + f(|T*|^2)||/4
  Eq21,               // w^{4r}(T) <= [w^{2r}(|T||T*|) + ||(1-a)|T|^{2r/(1-a)} + a|T*|^{2r/a}||] / 2
  Eq31,               // w^{2r}(T) <= w^r(|T||T*|)/2 + ||T|^{2r} + |T*|^{2r}||/4
  Prop33_20,          // w^{2r}(|T||T*|) <= ||(1-a)|T|^{2r/(1-a)} + a|T*|^{2r/a}||
  Prop33_34,          // w^r(|T||T*|) <= ||T|^{2r} + |T*|^{2r}|| / 2
  Prop33_19Pointwise, // |<|T||T*|x,x>|^{2r} <= <((1-a)|T|^{2r/(1-a)} + a|T*|^{2r/a})x,x>
  Prop33_46Pointwise, // |<|T||T*|x,x>|^r <= <(|T|^{2r} + |T*|^{2r})x,x> / 2
  Chain35,            // Eq31 lhs <= Eq31 rhs <= Eq41 rhs
  KittanehChain,      // w(T) <= sqrt(2w(|T||T*|) + ||T|^2 + |T*|^2||)/2 <= (||T^2||^{1/2} + ||T||)/2
  Lem22,              // a^a' b^{1-a'} <= a'a + (1-a')b <= (a'a^r + (1-a')b^r)^{1/r}
  Lem23,              // f(<Hx,x>) <= <f(H)x,x>
  Lem16,              // |<Tx,x>|^2 <= <|T|x,x><|T*|x,x>
  Lem43,              // ||T|^2 + |T*|^2|| <= ||T^2|| + ||T||^2
  LemAujla,           // ||f((A+B)/2)|| <= ||(f(A) + f(B))/2||, A, B >= 0
  WnPropAlpha,        // w_N(|T||T*|) <= N({(1-a)|T|^{2r/(1-a)} + a|T*|^{2r/a}}^{1/(2r)})
  WnPropMean,         // w_N(|T||T*|) <= N({(|T|^{2r} + |T*|^{2r})/2}^{1/r})
};

std::string_view to_string(InequalityId id);
/// Accepts the upper-case catalog names ("EQ38_LOWER", "WN_PROP_MEAN", ...).
InequalityId parse_inequality_id(std::string_view text);
std::span<const InequalityId> all_inequality_ids();

/// Operands and parameters an id consumes.
struct IdRequirements {
  bool pair = false;          // A, B
  bool single = false;        // T
  bool unit_vector = false;   // x
  bool vectors = false;       // vec_a, vec_b, e
  bool scalars = false;       // scalar_a, scalar_b
  bool hermitian = false;     // H
  bool psd_pair = false;      // A, B positive semidefinite
  bool uses_r = false;
  bool uses_alpha = false;
  bool fractional_alpha = false;  // exponent 2/a or 2/(1-a): a must lie in (0, 1)
  bool uses_f = false;
  bool uses_norm = false;
  bool chain = false;
};
IdRequirements requirements(InequalityId id);

/// Largest matrix-power exponent the catalog will form.
inline constexpr double kMaxMatrixExponent = 80.0;

struct Operands {
  std::optional<ComplexMatrix> a;
  std::optional<ComplexMatrix> b;
  std::optional<ComplexMatrix> t;
  std::optional<ComplexMatrix> h;
  std::optional<UnitVector> x;
  std::optional<ComplexVector> vec_a;
  std::optional<ComplexVector> vec_b;
  std::optional<UnitVector> e;
  double scalar_a = 0.0;
  double scalar_b = 0.0;
};

struct CheckParams {
  double r = 1.0;
  double alpha = 0.5;
  std::optional<ConvexFunctionSpec> f;
  std::optional<NormSpec> norm;  // defaults to the operator norm
};

struct Tolerances {
  double abs = 1e-9;
  double rel = 1e-9;
  double radius = kDefaultRadiusTolerance;
};

/// lower <= upper + abs + rel * max(1, |upper|).
bool within_tolerance(double lower, double upper, const Tolerances& tol);

struct InequalityReport {
  InequalityId id = InequalityId::Eq38Lower;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // smallest adjacent difference over all chains
  bool pass = false;
  std::vector<double> chain;            // non-decreasing when the statement holds; {lhs, rhs} for plain ids
  std::vector<double> secondary_chain;  // only for RefinedCs: |<a,b>| <= two-term sum <= |a||b|
  CheckParams params;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::string operand_digest;
  Tolerances tolerances;
};

/// Recomputes lhs, rhs, slack and pass from the chains.
void finalize_report(InequalityReport& report);

/// 64-bit FNV-1a over every present operand, as 16 hex digits.
std::string operand_digest(const Operands& operands);

/// Evaluates catalog entries against one operand set, caching the spectral
/// data (|A|, |T|, w(T), w(|T||T*|), ...) shared between ids and parameters.
/// Not thread-safe; use one context per thread.
class CheckContext {
 public:
  explicit CheckContext(Operands operands, Tolerances tolerances = {});
  ~CheckContext();
  CheckContext(CheckContext&&) noexcept;
  CheckContext& operator=(CheckContext&&) noexcept;

  /// Throws InvalidArgument for missing operands, dimension mismatches, or
  /// parameters outside the id's domain; DomainError when a function is not
  /// defined on the needed spectrum; NonConvergence from the solvers.
  InequalityReport evaluate(InequalityId id, const CheckParams& params);

  const Operands& operands() const;
  const std::string& digest() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

InequalityReport evaluate_check(InequalityId id, const Operands& operands, const CheckParams& params,
                                const Tolerances& tolerances = {});

/// (ThmMainSq, ThmMain) for the same operands.
std::pair<InequalityReport, InequalityReport> check_theorem_main(const ComplexMatrix& a, const ComplexMatrix& b,
                                                                 const UnitVector& x,
                                                                 const ConvexFunctionSpec& f, double alpha,
                                                                 const Tolerances& tolerances = {});
InequalityReport check_scalar_lemma22(double a, double b, double alpha, double r,
                                      const Tolerances& tolerances = {});
InequalityReport check_jensen_lemma23(const ComplexMatrix& h, const UnitVector& x, const ConvexFunctionSpec& f,
                                      const Tolerances& tolerances = {});
InequalityReport check_mixed_schwarz(const ComplexMatrix& t, const UnitVector& x,
                                     const Tolerances& tolerances = {});
InequalityReport check_lemma43(const ComplexMatrix& t, const Tolerances& tolerances = {});
InequalityReport check_lemma_aujla(const ComplexMatrix& a, const ComplexMatrix& b, const ConvexFunctionSpec& f,
                                   const Tolerances& tolerances = {});
InequalityReport check_refined_cauchy_schwarz(const ComplexVector& a, const ComplexVector& b,
                                              const UnitVector& e, const Tolerances& tolerances = {});
/// (WnPropAlpha, WnPropMean).
std::pair<InequalityReport, InequalityReport> check_wn_propositions(const ComplexMatrix& t, const NormSpec& spec,
                                                                    double r, double alpha,
                                                                    const Tolerances& tolerances = {});

}  // namespace numrad
