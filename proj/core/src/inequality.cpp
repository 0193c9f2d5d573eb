#include "numrad/inequality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <string>

#include "numrad/errors.hpp"
#include "numrad/spectral.hpp"

namespace numrad {
namespace {

struct Entry {
  InequalityId id;
  std::string_view name;
  IdRequirements req;
};

constexpr IdRequirements single() {
  IdRequirements r;
  r.single = true;
  return r;
}

constexpr IdRequirements single_r() {
  auto r = single();
  r.uses_r = true;
  return r;
}

constexpr IdRequirements single_r_alpha() {
  auto r = single_r();
  r.uses_alpha = true;
  r.fractional_alpha = true;
  return r;
}

constexpr IdRequirements pair_x() {
  IdRequirements r;
  r.pair = true;
  r.unit_vector = true;
  return r;
}

constexpr IdRequirements with(IdRequirements r, bool IdRequirements::*flag) {
  r.*flag = true;
  return r;
}

constexpr std::array<Entry, 32> kCatalog{{
    {InequalityId::Eq38Lower, "EQ38_LOWER", single()},
    {InequalityId::Eq38Upper, "EQ38_UPPER", single()},
    {InequalityId::Eq37, "EQ37", single()},
    {InequalityId::Eq36, "EQ36", single()},
    {InequalityId::Eq41, "EQ41", single_r()},
    {InequalityId::RefinedCs, "REFINED_CS", with(IdRequirements{}, &IdRequirements::vectors)},
    {InequalityId::Ineq30, "INEQ30", pair_x()},
    {InequalityId::ThmMainSq, "THM_MAIN_SQ",
     with(with(with(pair_x(), &IdRequirements::uses_f), &IdRequirements::uses_alpha),
          &IdRequirements::fractional_alpha)},
    {InequalityId::ThmMain, "THM_MAIN", with(pair_x(), &IdRequirements::uses_f)},
    {InequalityId::Cor14Sq, "COR14_SQ",
     with(with(with(pair_x(), &IdRequirements::uses_r), &IdRequirements::uses_alpha),
          &IdRequirements::fractional_alpha)},
    {InequalityId::Cor14, "COR14", with(pair_x(), &IdRequirements::uses_r)},
    {InequalityId::Cor12F, "COR12_F", with(with(IdRequirements{}, &IdRequirements::pair), &IdRequirements::uses_f)},
    {InequalityId::Cor12Pow, "COR12_POW", with(with(IdRequirements{}, &IdRequirements::pair), &IdRequirements::uses_r)},
    {InequalityId::Drag2, "DRAG2", with(with(IdRequirements{}, &IdRequirements::pair), &IdRequirements::uses_r)},
    {InequalityId::Chain44, "CHAIN44",
     with(with(with(IdRequirements{}, &IdRequirements::pair), &IdRequirements::uses_r), &IdRequirements::chain)},
    {InequalityId::SingleFSq, "SINGLE_F_SQ",
     with(with(with(single(), &IdRequirements::uses_f), &IdRequirements::uses_alpha),
          &IdRequirements::fractional_alpha)},
    {InequalityId::SingleF, "SINGLE_F", with(single(), &IdRequirements::uses_f)},
    {InequalityId::Eq21, "EQ21", single_r_alpha()},
    {InequalityId::Eq31, "EQ31", single_r()},
    {InequalityId::Prop33_20, "PROP33_20", single_r_alpha()},
    {InequalityId::Prop33_34, "PROP33_34", single_r()},
    {InequalityId::Prop33_19Pointwise, "PROP33_19_POINTWISE", with(single_r_alpha(), &IdRequirements::unit_vector)},
    {InequalityId::Prop33_46Pointwise, "PROP33_46_POINTWISE", with(single_r(), &IdRequirements::unit_vector)},
    {InequalityId::Chain35, "CHAIN35", with(single_r(), &IdRequirements::chain)},
    {InequalityId::KittanehChain, "KITTANEH_CHAIN", with(single(), &IdRequirements::chain)},
    {InequalityId::Lem22, "LEM22",
     with(with(with(IdRequirements{}, &IdRequirements::scalars), &IdRequirements::uses_r),
          &IdRequirements::uses_alpha)},
    {InequalityId::Lem23, "LEM23",
     with(with(with(IdRequirements{}, &IdRequirements::hermitian), &IdRequirements::unit_vector),
          &IdRequirements::uses_f)},
    {InequalityId::Lem16, "LEM16", with(single(), &IdRequirements::unit_vector)},
    {InequalityId::Lem43, "LEM43", single()},
    {InequalityId::LemAujla, "LEM_AUJLA",
     with(with(IdRequirements{}, &IdRequirements::psd_pair), &IdRequirements::uses_f)},
    {InequalityId::WnPropAlpha, "WN_PROP_ALPHA", with(single_r_alpha(), &IdRequirements::uses_norm)},
    {InequalityId::WnPropMean, "WN_PROP_MEAN", with(single_r(), &IdRequirements::uses_norm)},
}};

const Entry& entry(InequalityId id) {
  for (const auto& e : kCatalog)
    if (e.id == id) return e;
  throw InvalidArgument("unknown inequality id");
}

constexpr std::array<InequalityId, kCatalog.size()> make_id_list() {
  std::array<InequalityId, kCatalog.size()> ids{};
  for (std::size_t i = 0; i < kCatalog.size(); ++i) ids[i] = kCatalog[i].id;
  return ids;
}

constexpr auto kAllIds = make_id_list();

void check_exponent(double q) {
  if (!(q <= kMaxMatrixExponent)) throw DomainError("matrix power exponent exceeds " + std::to_string(kMaxMatrixExponent));
}

std::vector<double> powers(std::span<const double> values, double p) {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = p == 1.0 ? values[i] : std::pow(values[i], p);
    if (!std::isfinite(out[i])) throw DomainError("matrix power overflows");
  }
  return out;
}

double finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " is not finite");
  return v;
}

void fnv_bytes(std::uint64_t& h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
}

void fnv_tag(std::uint64_t& h, char tag) { fnv_bytes(h, &tag, 1); }

void fnv_complex(std::uint64_t& h, std::span<const Complex> values) {
  const std::uint64_t count = values.size();
  fnv_bytes(h, &count, sizeof count);
  for (const auto& z : values) {
    const double parts[2] = {z.real(), z.imag()};
    fnv_bytes(h, parts, sizeof parts);
  }
}

// Slots of cached eigendecompositions.
enum Slot : std::size_t {
  kGramA,     // A*A    -> |A|
  kGramB,     // B*B    -> |B|
  kCogramB,   // B B*   -> |B*|
  kGramT,     // T*T    -> |T|
  kCogramT,   // T T*   -> |T*|
  kPsdA,      // A itself (PSD pair)
  kPsdB,      // B itself (PSD pair)
  kHermH,     // H itself, unclamped
  kSlotCount
};

struct Spectrum {
  HermitianEigenDecomposition eig;
  std::vector<double> values;  // clamped for Gram/PSD slots
};

}  // namespace

std::string_view to_string(InequalityId id) { return entry(id).name; }

InequalityId parse_inequality_id(std::string_view text) {
  for (const auto& e : kCatalog)
    if (e.name == text) return e.id;
  throw InvalidArgument("unknown inequality id '" + std::string(text) + "'");
}

std::span<const InequalityId> all_inequality_ids() { return kAllIds; }

IdRequirements requirements(InequalityId id) { return entry(id).req; }

bool within_tolerance(double lower, double upper, const Tolerances& tol) {
  return lower <= upper + tol.abs + tol.rel * std::max(1.0, std::abs(upper));
}

void finalize_report(InequalityReport& report) {
  if (report.chain.size() < 2) throw InvalidArgument("a report needs at least two values");
  report.lhs = report.chain.front();
  report.rhs = report.chain.back();
  report.pass = true;
  report.slack = std::numeric_limits<double>::infinity();
  for (const auto* chain : {&report.chain, &report.secondary_chain}) {
    for (std::size_t i = 1; i < chain->size(); ++i) {
      const double lo = (*chain)[i - 1], hi = (*chain)[i];
      report.slack = std::min(report.slack, hi - lo);
      if (!within_tolerance(lo, hi, report.tolerances) || std::isnan(lo) || std::isnan(hi)) report.pass = false;
    }
  }
}

std::string operand_digest(const Operands& ops) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const std::pair<char, const std::optional<ComplexMatrix>*> matrices[] = {
      {'A', &ops.a}, {'B', &ops.b}, {'T', &ops.t}, {'H', &ops.h}};
  for (const auto& [tag, m] : matrices) {
    if (!*m) continue;
    fnv_tag(h, tag);
    fnv_complex(h, (*m)->entries());
  }
  if (ops.x) {
    fnv_tag(h, 'x');
    fnv_complex(h, ops.x->components());
  }
  if (ops.vec_a) {
    fnv_tag(h, 'a');
    fnv_complex(h, *ops.vec_a);
  }
  if (ops.vec_b) {
    fnv_tag(h, 'b');
    fnv_complex(h, *ops.vec_b);
  }
  if (ops.e) {
    fnv_tag(h, 'e');
    fnv_complex(h, ops.e->components());
  }
  fnv_tag(h, 's');
  const double scalars[2] = {ops.scalar_a, ops.scalar_b};
  fnv_bytes(h, scalars, sizeof scalars);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct CheckContext::Impl {
  Operands ops;
  Tolerances tol;
  std::string digest;
  std::size_t n = 0;

  std::array<std::optional<Spectrum>, kSlotCount> spectra;
  std::optional<double> w_t, w_bstar_a, w_gram_product, w_x;
  std::optional<ComplexMatrix> x_matrix;  // |T||T*|
  std::map<std::string, double> wn_x;

  const ComplexMatrix& need(const std::optional<ComplexMatrix>& m, const char* name) const {
    if (!m) throw InvalidArgument(std::string("missing operand ") + name);
    return *m;
  }

  const ComplexMatrix& a() const { return need(ops.a, "A"); }
  const ComplexMatrix& b() const { return need(ops.b, "B"); }
  const ComplexMatrix& t() const { return need(ops.t, "T"); }

  const UnitVector& x() const {
    if (!ops.x) throw InvalidArgument("missing unit vector x");
    return *ops.x;
  }

  const Spectrum& spectrum(Slot slot) {
    auto& s = spectra[slot];
    if (s) return *s;
    ComplexMatrix m(1);
    bool clamp = true;
    switch (slot) {
      case kGramA: m = matmul(adjoint(a()), a()); break;
      case kGramB: m = matmul(adjoint(b()), b()); break;
      case kCogramB: m = matmul(b(), adjoint(b())); break;
      case kGramT: m = matmul(adjoint(t()), t()); break;
      case kCogramT: m = matmul(t(), adjoint(t())); break;
      case kPsdA: m = a(); break;
      case kPsdB: m = b(); break;
      case kHermH: m = need(ops.h, "H"); clamp = false; break;
      default: throw InvalidArgument("bad slot");
    }
    auto eig = hermitian_eig(m);
    auto values = clamp ? clamp_psd(eig.eigenvalues) : eig.eigenvalues;
    s = Spectrum{std::move(eig), std::move(values)};
    return *s;
  }

  // Eigenvalues of |M|^q for the Gram slot of M, i.e. lambda^{q/2}.
  std::vector<double> abs_power(Slot slot, double q) {
    check_exponent(q);
    return powers(spectrum(slot).values, q / 2.0);
  }

  double form(Slot slot, std::span<const double> values) {
    return spectral_quadratic_form(spectrum(slot).eig, values, x().components());
  }

  // Eigenvalues (ascending) of sum_k w_k V_k diag(values_k) V_k*.
  std::vector<double> psd_sum(double w1, Slot s1, std::vector<double> v1, double w2, Slot s2,
                              std::vector<double> v2) {
    const PsdTerm terms[2] = {{w1, &spectrum(s1).eig, std::move(v1)}, {w2, &spectrum(s2).eig, std::move(v2)}};
    return psd_sum_eigenvalues(terms);
  }

  double psd_sum_norm(double w1, Slot s1, std::vector<double> v1, double w2, Slot s2, std::vector<double> v2) {
    return finite(psd_sum(w1, s1, std::move(v1), w2, s2, std::move(v2)).back(), "norm");
  }

  double radius(const ComplexMatrix& m) { return numerical_radius(m, tol.radius).value; }

  double w_T() {
    if (!w_t) w_t = radius(t());
    return *w_t;
  }
  double w_BstarA() {
    if (!w_bstar_a) w_bstar_a = radius(matmul(adjoint(b()), a()));
    return *w_bstar_a;
  }
  // w(|B|^2 |A|^2) from the Gram products directly.
  double w_GramProduct() {
    if (!w_gram_product) w_gram_product = radius(matmul(matmul(adjoint(b()), b()), matmul(adjoint(a()), a())));
    return *w_gram_product;
  }
  const ComplexMatrix& X() {
    if (!x_matrix) {
      const auto& g = spectrum(kGramT);
      const auto& c = spectrum(kCogramT);
      x_matrix = matmul(reconstruct(g.eig, powers(g.values, 0.5)), reconstruct(c.eig, powers(c.values, 0.5)));
    }
    return *x_matrix;
  }
  double w_X() {
    if (!w_x) w_x = radius(X());
    return *w_x;
  }
  double wn_X(const NormSpec& spec) {
    const auto key = spec.to_string();
    auto it = wn_x.find(key);
    if (it == wn_x.end()) it = wn_x.emplace(key, generalized_numerical_radius(X(), spec, tol.radius).value).first;
    return it->second;
  }

  double norm_T() { return std::sqrt(spectrum(kGramT).values.back()); }
  double norm_T2() { return operator_norm(matmul(t(), t())); }

  // || |T|^{2r} + |T*|^{2r} ||
  double mean_power_norm(double r) {
    return psd_sum_norm(1.0, kGramT, abs_power(kGramT, 2 * r), 1.0, kCogramT, abs_power(kCogramT, 2 * r));
  }
  // || (1-a)|T|^{2r/(1-a)} + a|T*|^{2r/a} ||
  double alpha_power_norm(double r, double alpha) {
    return psd_sum_norm(1 - alpha, kGramT, abs_power(kGramT, 2 * r / (1 - alpha)), alpha, kCogramT,
                        abs_power(kCogramT, 2 * r / alpha));
  }
  // || |A|^{4r} + |B|^{4r} ||
  double pair_power_norm(double r) {
    return psd_sum_norm(1.0, kGramA, abs_power(kGramA, 4 * r), 1.0, kGramB, abs_power(kGramB, 4 * r));
  }

  void check_pair() {
    if (a().size() != b().size()) throw DimensionMismatch("A and B differ in dimension");
    n = a().size();
  }
  void check_single() { n = t().size(); }
  void check_x() {
    if (x().size() != n) throw DimensionMismatch("x does not match the operand dimension");
  }

  InequalityReport evaluate(InequalityId id, const CheckParams& p);
};

namespace {

void validate_params(InequalityId id, const IdRequirements& req, const CheckParams& p) {
  const auto name = std::string(to_string(id));
  if (req.uses_r && !(std::isfinite(p.r) && p.r >= 1.0)) throw InvalidArgument(name + ": r must be >= 1");
  if (req.fractional_alpha) {
    if (!(p.alpha > 0.0 && p.alpha < 1.0))
      throw InvalidArgument(name + ": alpha must lie strictly inside (0, 1)");
  } else if (req.uses_alpha) {
    if (!(p.alpha >= 0.0 && p.alpha <= 1.0)) throw InvalidArgument(name + ": alpha must lie in [0, 1]");
  }
  if (req.uses_f && !p.f) throw InvalidArgument(name + ": requires a convex function f");
}

}  // namespace

InequalityReport CheckContext::Impl::evaluate(InequalityId id, const CheckParams& p) {
  const auto req = requirements(id);
  validate_params(id, req, p);
  if (req.pair || req.psd_pair) check_pair();
  if (req.single) check_single();
  if (req.hermitian) n = need(ops.h, "H").size();
  if (req.unit_vector) check_x();

  InequalityReport rep;
  rep.id = id;
  rep.params = p;
  rep.tolerances = tol;
  rep.operand_digest = digest;

  const double r = p.r;
  const double al = p.alpha;
  auto& chain = rep.chain;

  switch (id) {
    case InequalityId::Eq38Lower:
      chain = {0.5 * norm_T(), w_T()};
      break;
    case InequalityId::Eq38Upper:
      chain = {w_T(), norm_T()};
      break;
    case InequalityId::Eq37:
      chain = {w_T(), 0.5 * (norm_T() + std::sqrt(norm_T2()))};
      break;
    case InequalityId::Eq36:
      chain = {w_T() * w_T(), 0.5 * mean_power_norm(1.0)};
      break;
    case InequalityId::Eq41:
      chain = {std::pow(w_T(), 2 * r), 0.5 * mean_power_norm(r)};
      break;

    case InequalityId::RefinedCs: {
      if (!ops.vec_a || !ops.vec_b || !ops.e) throw InvalidArgument("REFINED_CS: requires vectors a, b, e");
      const auto& va = *ops.vec_a;
      const auto& vb = *ops.vec_b;
      const auto& e = ops.e->components();
      if (va.size() != vb.size() || va.size() != e.size()) throw DimensionMismatch("REFINED_CS: vector sizes differ");
      n = va.size();
      const Complex ab = inner(va, vb);
      const Complex aeeb = inner(va, e) * inner(e, vb);
      const double prod = norm(va) * norm(vb);
      chain = {std::abs(aeeb), 0.5 * (std::abs(ab) + prod)};
      rep.secondary_chain = {std::abs(ab), std::abs(aeeb) + std::abs(ab - aeeb), prod};
      break;
    }

    case InequalityId::Ineq30: {
      const auto& xs = x().components();
      const double lhs = std::abs(quadratic_form(a(), xs) * quadratic_form(b(), xs));
      const double bax = std::abs(quadratic_form(matmul(b(), a()), xs));
      chain = {lhs, 0.5 * (bax + norm(matvec(a(), xs)) * norm(matvec(adjoint(b()), xs)))};
      break;
    }

    case InequalityId::ThmMainSq:
    case InequalityId::ThmMain:
    case InequalityId::Cor14Sq:
    case InequalityId::Cor14: {
      const auto& xs = x().components();
      const double prod = std::abs(quadratic_form(a(), xs) * quadratic_form(b(), xs));
      const double bax = std::abs(quadratic_form(matmul(b(), a()), xs));
      const bool sq = id == InequalityId::ThmMainSq || id == InequalityId::Cor14Sq;
      const bool is_f = id == InequalityId::ThmMainSq || id == InequalityId::ThmMain;
      // g is f, or t -> t^r for the corollary forms (r = 1 when the id takes no r).
      const auto g = [&](double v) { return is_f ? (*p.f)(v) : std::pow(v, r); };
      const auto gmap = [&](std::vector<double> v) {
        if (is_f) return p.f->map(v);
        return powers(v, r);
      };
      if (sq) {
        const double qa = 2.0 / al, qb = 2.0 / (1 - al);
        if (!is_f) {
          check_exponent(qa * r);
          check_exponent(qb * r);
        }
        const double mixed = al * form(kGramA, gmap(abs_power(kGramA, qa))) +
                             (1 - al) * form(kCogramB, gmap(abs_power(kCogramB, qb)));
        chain = {g(prod * prod), 0.5 * (g(bax * bax) + mixed)};
      } else {
        if (!is_f) check_exponent(2 * r);
        const double sum = form(kGramA, gmap(abs_power(kGramA, 2))) + form(kCogramB, gmap(abs_power(kCogramB, 2)));
        chain = {g(prod), 0.5 * g(bax) + 0.25 * sum};
      }
      break;
    }

    case InequalityId::Cor12F: {
      const auto& f = *p.f;
      const double w = w_BstarA();
      const double nrm = psd_sum_norm(1.0, kGramA, f.map(abs_power(kGramA, 4)), 1.0, kGramB,
                                      f.map(abs_power(kGramB, 4)));
      chain = {f(w * w), 0.5 * f(w_GramProduct()) + 0.25 * nrm};
      break;
    }
    case InequalityId::Cor12Pow:
      chain = {std::pow(w_BstarA(), 2 * r), 0.5 * std::pow(w_GramProduct(), r) + 0.25 * pair_power_norm(r)};
      break;
    case InequalityId::Drag2:
      chain = {std::pow(w_BstarA(), 2 * r), 0.5 * pair_power_norm(r)};
      break;
    case InequalityId::Chain44: {
      const double nrm = pair_power_norm(r);
      chain = {std::pow(w_BstarA(), 2 * r), 0.5 * std::pow(w_GramProduct(), r) + 0.25 * nrm, 0.5 * nrm};
      break;
    }

    case InequalityId::SingleFSq: {
      const auto& f = *p.f;
      const double w = w_T(), wx = w_X();
      const double nrm = psd_sum_norm(1 - al, kGramT, f.map(abs_power(kGramT, 2 / (1 - al))), al, kCogramT,
                                      f.map(abs_power(kCogramT, 2 / al)));
      chain = {f(std::pow(w, 4)), 0.5 * (f(wx * wx) + nrm)};
      break;
    }
    case InequalityId::SingleF: {
      const auto& f = *p.f;
      const double w = w_T();
      const double nrm =
          psd_sum_norm(1.0, kGramT, f.map(abs_power(kGramT, 2)), 1.0, kCogramT, f.map(abs_power(kCogramT, 2)));
      chain = {f(w * w), 0.5 * f(w_X()) + 0.25 * nrm};
      break;
    }
    case InequalityId::Eq21:
      chain = {std::pow(w_T(), 4 * r), 0.5 * (std::pow(w_X(), 2 * r) + alpha_power_norm(r, al))};
      break;
    case InequalityId::Eq31:
      chain = {std::pow(w_T(), 2 * r), 0.5 * std::pow(w_X(), r) + 0.25 * mean_power_norm(r)};
      break;
    case InequalityId::Prop33_20:
      chain = {std::pow(w_X(), 2 * r), alpha_power_norm(r, al)};
      break;
    case InequalityId::Prop33_34:
      chain = {std::pow(w_X(), r), 0.5 * mean_power_norm(r)};
      break;
    case InequalityId::Prop33_19Pointwise: {
      const double u = std::abs(quadratic_form(X(), x()));
      const double rhs = (1 - al) * form(kGramT, abs_power(kGramT, 2 * r / (1 - al))) +
                         al * form(kCogramT, abs_power(kCogramT, 2 * r / al));
      chain = {std::pow(u, 2 * r), rhs};
      break;
    }
    case InequalityId::Prop33_46Pointwise: {
      const double u = std::abs(quadratic_form(X(), x()));
      const double rhs = 0.5 * (form(kGramT, abs_power(kGramT, 2 * r)) + form(kCogramT, abs_power(kCogramT, 2 * r)));
      chain = {std::pow(u, r), rhs};
      break;
    }
    case InequalityId::Chain35: {
      const double nrm = mean_power_norm(r);
      chain = {std::pow(w_T(), 2 * r), 0.5 * std::pow(w_X(), r) + 0.25 * nrm, 0.5 * nrm};
      break;
    }
    case InequalityId::KittanehChain:
      chain = {w_T(), 0.5 * std::sqrt(2 * w_X() + mean_power_norm(1.0)), 0.5 * (std::sqrt(norm_T2()) + norm_T())};
      break;

    case InequalityId::Lem22: {
      const double a = ops.scalar_a, b = ops.scalar_b;
      if (!(a >= 0 && b >= 0 && std::isfinite(a) && std::isfinite(b)))
        throw InvalidArgument("LEM22: a and b must be finite and non-negative");
      n = 1;
      chain = {std::pow(a, al) * std::pow(b, 1 - al), al * a + (1 - al) * b,
               std::pow(al * std::pow(a, r) + (1 - al) * std::pow(b, r), 1.0 / r)};
      break;
    }

    case InequalityId::Lem23: {
      const auto& f = *p.f;
      const auto& s = spectrum(kHermH);
      double u = quadratic_form(*ops.h, x()).real();
      std::vector<double> values = s.eig.eigenvalues;
      if (f.domain_lower() == 0.0) {
        values = clamp_psd(values);
        const double slack = 1e-10 * (1.0 + std::abs(s.eig.eigenvalues.back()));
        if (u < -slack) throw DomainError("LEM23: <Hx,x> lies outside the domain of f");
        u = std::max(u, 0.0);
      }
      chain = {f(u), spectral_quadratic_form(s.eig, f.map(values), x().components())};
      break;
    }
    case InequalityId::Lem16: {
      const double u = std::abs(quadratic_form(t(), x()));
      chain = {u * u, form(kGramT, abs_power(kGramT, 1)) * form(kCogramT, abs_power(kCogramT, 1))};
      break;
    }
    case InequalityId::Lem43: {
      const double nt = norm_T();
      chain = {mean_power_norm(1.0), norm_T2() + nt * nt};
      break;
    }
    case InequalityId::LemAujla: {
      const auto& f = *p.f;
      const auto fa = f.map(spectrum(kPsdA).values);
      const auto fb = f.map(spectrum(kPsdB).values);
      const auto mid = clamp_psd(hermitian_eigenvalues(0.5 * (a() + b())));
      double lhs = 0.0;
      for (double v : f.map(mid)) lhs = std::max(lhs, std::abs(v));
      chain = {lhs, psd_sum_norm(0.5, kPsdA, fa, 0.5, kPsdB, fb)};
      break;
    }

    case InequalityId::WnPropAlpha:
    case InequalityId::WnPropMean: {
      const NormSpec spec = p.norm.value_or(NormSpec::operator_norm());
      std::vector<double> eig;
      double root;
      if (id == InequalityId::WnPropAlpha) {
        eig = psd_sum(1 - al, kGramT, abs_power(kGramT, 2 * r / (1 - al)), al, kCogramT,
                      abs_power(kCogramT, 2 * r / al));
        root = 1.0 / (2 * r);
      } else {
        eig = psd_sum(0.5, kGramT, abs_power(kGramT, 2 * r), 0.5, kCogramT, abs_power(kCogramT, 2 * r));
        root = 1.0 / r;
      }
      auto sv = powers(clamp_psd(eig), root);
      std::sort(sv.begin(), sv.end(), std::greater<>());
      chain = {wn_X(spec), finite(spec.from_singular_values(sv), "norm")};
      rep.params.norm = spec;
      break;
    }
  }

  for (double v : chain) finite(v, std::string(to_string(id)).c_str());
  rep.n = n;
  finalize_report(rep);
  return rep;
}

CheckContext::CheckContext(Operands operands, Tolerances tolerances) : impl_(std::make_unique<Impl>()) {
  if (!(tolerances.radius > 0.0)) throw InvalidArgument("radius tolerance must be positive");
  if (!(tolerances.abs >= 0.0 && tolerances.rel >= 0.0)) throw InvalidArgument("tolerances must be non-negative");
  impl_->digest = operand_digest(operands);
  impl_->ops = std::move(operands);
  impl_->tol = tolerances;
}

CheckContext::~CheckContext() = default;
CheckContext::CheckContext(CheckContext&&) noexcept = default;
CheckContext& CheckContext::operator=(CheckContext&&) noexcept = default;

InequalityReport CheckContext::evaluate(InequalityId id, const CheckParams& params) {
  return impl_->evaluate(id, params);
}

const Operands& CheckContext::operands() const { return impl_->ops; }
const std::string& CheckContext::digest() const { return impl_->digest; }

InequalityReport evaluate_check(InequalityId id, const Operands& operands, const CheckParams& params,
                                const Tolerances& tolerances) {
  CheckContext ctx(operands, tolerances);
  return ctx.evaluate(id, params);
}

std::pair<InequalityReport, InequalityReport> check_theorem_main(const ComplexMatrix& a, const ComplexMatrix& b,
                                                                 const UnitVector& x, const ConvexFunctionSpec& f,
                                                                 double alpha, const Tolerances& tolerances) {
  Operands ops;
  ops.a = a;
  ops.b = b;
  ops.x = x;
  CheckContext ctx(std::move(ops), tolerances);
  CheckParams p;
  p.f = f;
  p.alpha = alpha;
  auto sq = ctx.evaluate(InequalityId::ThmMainSq, p);
  return {std::move(sq), ctx.evaluate(InequalityId::ThmMain, p)};
}

InequalityReport check_scalar_lemma22(double a, double b, double alpha, double r, const Tolerances& tolerances) {
  Operands ops;
  ops.scalar_a = a;
  ops.scalar_b = b;
  CheckParams p;
  p.alpha = alpha;
  p.r = r;
  return evaluate_check(InequalityId::Lem22, ops, p, tolerances);
}

InequalityReport check_jensen_lemma23(const ComplexMatrix& h, const UnitVector& x, const ConvexFunctionSpec& f,
                                      const Tolerances& tolerances) {
  Operands ops;
  ops.h = h;
  ops.x = x;
  CheckParams p;
  p.f = f;
  return evaluate_check(InequalityId::Lem23, ops, p, tolerances);
}

InequalityReport check_mixed_schwarz(const ComplexMatrix& t, const UnitVector& x, const Tolerances& tolerances) {
  Operands ops;
  ops.t = t;
  ops.x = x;
  return evaluate_check(InequalityId::Lem16, ops, {}, tolerances);
}

InequalityReport check_lemma43(const ComplexMatrix& t, const Tolerances& tolerances) {
  Operands ops;
  ops.t = t;
  return evaluate_check(InequalityId::Lem43, ops, {}, tolerances);
}

InequalityReport check_lemma_aujla(const ComplexMatrix& a, const ComplexMatrix& b, const ConvexFunctionSpec& f,
                                   const Tolerances& tolerances) {
  Operands ops;
  ops.a = a;
  ops.b = b;
  CheckParams p;
  p.f = f;
  return evaluate_check(InequalityId::LemAujla, ops, p, tolerances);
}

InequalityReport check_refined_cauchy_schwarz(const ComplexVector& a, const ComplexVector& b, const UnitVector& e,
                                              const Tolerances& tolerances) {
  Operands ops;
  ops.vec_a = a;
  ops.vec_b = b;
  ops.e = e;
  return evaluate_check(InequalityId::RefinedCs, ops, {}, tolerances);
}

std::pair<InequalityReport, InequalityReport> check_wn_propositions(const ComplexMatrix& t, const NormSpec& spec,
                                                                    double r, double alpha,
                                                                    const Tolerances& tolerances) {
  Operands ops;
  ops.t = t;
  CheckContext ctx(std::move(ops), tolerances);
  CheckParams p;
  p.r = r;
  p.alpha = alpha;
  p.norm = spec;
  auto first = ctx.evaluate(InequalityId::WnPropAlpha, p);
  return {std::move(first), ctx.evaluate(InequalityId::WnPropMean, p)};
}

}  // namespace numrad
