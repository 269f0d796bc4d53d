#include "qrconf/coadjoint.hpp"
#include "qrconf/generators.hpp"
#include "qrconf/projective.hpp"
#include "qrconf/reports.hpp"
#include "qrconf/witt.hpp"

#include "report_util.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <functional>
#include <future>
#include <random>

namespace qrconf {

using detail::json;

namespace {

struct Check
{
  std::string suite;
  std::string name;
  /// The invariant being checked, in words.
  std::string invariant;
  /// pass, fail, skipped or exploratory.
  std::string status;
  json value;
  std::string value_text;
  std::string error_text;
};

class Checks
{
public:
  void add(std::string suite, std::string name, std::string invariant, bool ok, json value = nullptr,
           std::string value_text = {}, std::string error_text = {})
  {
    list_.push_back({std::move(suite), std::move(name), std::move(invariant), ok ? "pass" : "fail", std::move(value),
                     std::move(value_text), std::move(error_text)});
  }
  void skip(std::string suite, std::string name, std::string invariant, const std::string& reason)
  {
    list_.push_back({std::move(suite), std::move(name), std::move(invariant), "skipped: " + reason, nullptr, {}, {}});
  }
  void explore(std::string suite, std::string name, std::string invariant, json value, std::string value_text = {},
               std::string error_text = {})
  {
    list_.push_back({std::move(suite), std::move(name), std::move(invariant), "exploratory", std::move(value),
                     std::move(value_text), std::move(error_text)});
  }
  /// A check whose estimate has not settled is neither passed nor failed.
  void judge(std::string suite, std::string name, std::string invariant, bool settled, bool ok, json value = nullptr,
             std::string value_text = {}, std::string error_text = {})
  {
    if (settled) {
      add(std::move(suite), std::move(name), std::move(invariant), ok, std::move(value), std::move(value_text),
          std::move(error_text));
      return;
    }
    list_.push_back({std::move(suite), std::move(name), std::move(invariant),
                     "inconclusive: contraction not settled at this M", std::move(value), std::move(value_text),
                     std::move(error_text)});
  }
  const std::vector<Check>& list() const { return list_; }

private:
  std::vector<Check> list_;
};

// ---- exact operator relations --------------------------------------------

template <class S>
void relation_suites(const Weight<S>& w, int order, Checks& out)
{
  const auto D = make_D(w, order);
  const auto F = make_F(w, order);
  const auto lm = make_l(-1, w, order);
  const auto l0 = make_l(0, w, order);
  const auto lp = make_l(1, w, order);
  const auto E = GradedOperator<S>::identity(order);
  const auto DF = D * F;
  const auto FD = F * D;

  struct Rel
  {
    std::string name;
    GradedOperator<S> residual;
  };
  std::vector<Rel> rels = {
      {"[D,l_-1] = 1", commutator(D, lm) - E},
      {"[D,l_0] = D", commutator(D, l0) - D},
      {"[D,l_1] = D^2", commutator(D, lp) - D * D},
      // The F row mirrors the D row under l_i -> l_-i; degrees force this pairing.
      {"[l_1,F] = 1", commutator(lp, F) - E},
      {"[l_0,F] = F", commutator(l0, F) - F},
      {"[l_-1,F] = F^2", commutator(lm, F) - F * F},
      {"[FD,DF] = 0", commutator(FD, DF)},
  };
  for (const auto& r : rels) {
    out.add("lobachevskii_berezin", r.name, "residual vanishes on the interior window", vanishes_on_window(r.residual));
  }
  if (w.q_r) {
    const auto rhs = *w.q_r * ((E - DF) * (E - FD));
    out.add("lobachevskii_berezin", "[D,F] = q_R(1-DF)(1-FD)", "residual vanishes on the interior window",
            vanishes_on_window(commutator(D, F) - rhs));
  } else {
    out.skip("lobachevskii_berezin", "[D,F] = q_R(1-DF)(1-FD)", "residual vanishes on the interior window",
             "undefined q_R");
  }

  std::map<int, GradedOperator<S>> L;
  for (int n = -16; n <= 16; ++n) {
    L.emplace(n, make_L(n, w, order));
  }
  const GradedOperator<S>* l[3] = {&lm, &l0, &lp};
  int bad = 0, total = 0;
  for (int i = -1; i <= 1; ++i) {
    for (int n = -8; n <= 8; ++n) {
      ++total;
      if (!vanishes_on_window(commutator(*l[i + 1], L.at(n)) - from_int<S>(i - n) * L.at(i + n))) {
        ++bad;
      }
    }
  }
  out.add("tensor_operators", "[l_i,L_n] = (i-n)L_{i+n}, |n| <= 8", "residual vanishes on the interior window",
          bad == 0, {{"failures", bad}, {"cases", total}});

  bad = total = 0;
  int anti_bad = 0;
  for (int n = -8; n <= 8; ++n) {
    for (int m = -8; m <= 8; ++m) {
      const auto a = commutator(L.at(n), L.at(m)) - from_int<S>(n - m) * L.at(n + m);
      if ((n >= -1 && m >= -1) || (n <= 1 && m <= 1)) {
        ++total;
        if (!vanishes_on_window(a)) {
          ++bad;
        }
      }
      const auto b = commutator(L.at(m), L.at(n)) - from_int<S>(m - n) * L.at(n + m);
      if (!vanishes_on_window(a + b)) {
        ++anti_bad;
      }
    }
  }
  out.add("tensor_operators", "[L_n,L_m] = (n-m)L_{n+m} for n,m >= -1 or n,m <= 1",
          "deviation vanishes on the interior window", bad == 0, {{"failures", bad}, {"cases", total}});
  out.add("tensor_operators", "A_{n,m} + A_{m,n} = 0, |n|,|m| <= 8", "antisymmetry on the interior window",
          anti_bad == 0, {{"failures", anti_bad}});

  bad = total = 0;
  for (int n = -1; n <= 4; ++n) {
    for (int m = 1; m <= 3; ++m) {
      ++total;
      const auto lhs = commutator(L.at(n), make_J(m, w, order));
      if (!vanishes_on_window(lhs + from_int<S>(m) * make_J(n + m, w, order))) {
        ++bad;
      }
      const auto lhs_f = commutator(L.at(-n), make_J(-m, w, order));
      if (!vanishes_on_window(lhs_f - from_int<S>(m) * make_J(-(n + m), w, order))) {
        ++bad;
      }
    }
  }
  out.add("tensor_operators", "[L_n,D^m] = -m D^{n+m} and [L_-n,F^m] = m F^{n+m}, -1 <= n <= 4",
          "residual vanishes on the interior window", bad == 0, {{"failures", bad}, {"cases", 2 * total}});
}

template <class S>
void adjoint_suites(const Weight<S>& w, int order, Checks& out)
{
  const auto table = norm_table(w, order);
  int bad = 0;
  for (int n = -5; n <= 5; ++n) {
    if (!equal_on_window(adjoint(make_L(n, w, order), table), make_L(-n, w, order))) {
      ++bad;
    }
  }
  out.add("adjoints", "L_n* = L_-n, |n| <= 5", "entrywise equality on the interior window", bad == 0,
          {{"failures", bad}});
  out.add("adjoints", "D* = F", "entrywise equality on the interior window",
          equal_on_window(adjoint(make_D(w, order), table), make_F(w, order)));
  const std::vector<std::vector<int>> words = {{2, -2}, {3, 1, -4}, {1, -1}, {-3, 5, -2}, {4, -1, -3}};
  bad = 0;
  for (const auto& word : words) {
    if (!is_self_adjoint_word(word, w, order)) {
      ++bad;
    }
  }
  out.add("adjoints", "degree-0 words in L are self-adjoint", "operator equals its adjoint on the window", bad == 0,
          {{"failures", bad}, {"words", words}});
}

// ---- numeric suites ------------------------------------------------------

template <class S>
bool exact_or_close(const S& x, const S& scale)
{
  if constexpr (std::is_same_v<S, Rational>) {
    (void)scale;
    return is_zero(x);
  } else {
    return abs_of(x) <= Real("1e-30") * (abs_of(scale) + 1);
  }
}

bool finite(const Real& x) { return boost::multiprecision::isfinite(x); }

template <class S>
json verify_h(const S& h, const RunConfig& config, Checks& out)
{
  const auto w = classify_weight(h);
  json block{{"weight", detail::weight_json(w)}};
  const bool rational = std::is_same_v<S, Rational>;
  if (!w.nondegenerate) {
    out.skip("all", "operator suites", "nondegenerate weight required", "degenerate weight");
    return block;
  }

  const int rel_order = std::min(config.N, 512);
  if (rational) {
    relation_suites(w, rel_order, out);
    if (w.unitarizable) {
      adjoint_suites(w, std::min(config.N, 128), out);
    } else {
      out.skip("adjoints", "L_n* = L_-n", "Hilbert adjoint", "form not positive definite");
    }
  } else {
    out.skip("lobachevskii_berezin", "exact relations", "residual vanishes exactly", "exact suites run in rational mode");
    out.skip("tensor_operators", "exact relations", "residual vanishes exactly", "exact suites run in rational mode");
    out.skip("adjoints", "exact adjoints", "entrywise equality", "exact suites run in rational mode");
  }

  // Constants.
  const auto form = fundamental_form(w);
  const auto c = central_charge(w);
  json constants{{"kappa", detail::number_json(form.kappa)}, {"c", detail::number_json(c.direct)}};
  if (w.q_r) {
    const auto id = identity_check(w);
    constants["c_from_qR"] = detail::number_json(*c.from_qr);
    constants["alpha"] = detail::number_json(id.alpha);
    constants["residual_27"] = detail::number_json(id.residual_27);
    out.add("central_charge", "-2(6h^2-6h+1) = 1 - 3/q_R^2", "both central charge formulas agree",
            exact_or_close<S>(c.direct - *c.from_qr, c.direct), detail::number_json(c.direct), detail::cell(c.direct));
    out.add("constants", "alpha^2 (1-c) = 27", "identity residual vanishes",
            exact_or_close<S>(id.residual_27, from_int<S>(27)), detail::number_json(id.residual_27),
            detail::cell(id.residual_27));
    out.add("constants", "alpha = -3 q_R", "identity residual vanishes",
            exact_or_close<S>(id.residual_alpha_qr, id.alpha), detail::number_json(id.residual_alpha_qr),
            detail::cell(id.residual_alpha_qr));
  } else {
    for (const char* name : {"-2(6h^2-6h+1) = 1 - 3/q_R^2", "alpha^2 (1-c) = 27", "alpha = -3 q_R"}) {
      out.skip("constants", name, "q_R-dependent identity", "undefined q_R");
    }
  }
  block["constants"] = constants;

  // Fundamental form: closed against empirical traces.
  json ff = json::array();
  for (int n = 2; n <= 4; ++n) {
    const auto t = fundamental_form_empirical(n, w, config.cutoffs);
    const Real closed = to_real(form(n, -n));
    const Real diff = abs_of(t.extrapolated - closed);
    ff.push_back({{"n", n}, {"closed", detail::number_json(form(n, -n))}, {"empirical", detail::tail_json(t)}});
    out.add("fundamental_form", "Tr A_{" + std::to_string(n) + ",-" + std::to_string(n) + "} = alpha_{n,-n}",
            "|empirical - closed| <= 1e-5", !t.diverges && diff <= Real("1e-5"), detail::tail_json(t),
            to_decimal(t.extrapolated), to_decimal(t.error_bound));
  }
  block["fundamental_form"] = ff;

  if (detail::near_root(w)) {
    const auto t = fundamental_form_empirical(2, w, config.cutoffs);
    out.add("vanishing_locus", "Tr A_{2,-2} at a root of 6h^2-6h+1", "|Tr A_{2,-2}| < 1e-4",
            abs_of(t.extrapolated) < Real("1e-4"), detail::tail_json(t), to_decimal(t.extrapolated),
            to_decimal(t.error_bound));
  }

  // Cocycle identities around beta.
  const std::vector<std::array<int, 3>> triples = {{{2, 3, -5}}, {{-4, 1, 3}}, {{5, -2, -3}}, {{3, -4, 1}}, {{2, 2, -4}}};
  for (const auto& t : triples) {
    const auto b0 = beta_and_dalpha(t[0], t[1], t[2], w, config.cutoffs);
    const auto b1 = beta_and_dalpha(t[1], t[2], t[0], w, config.cutoffs);
    const auto b2 = beta_and_dalpha(t[2], t[0], t[1], w, config.cutoffs);
    const std::string idx = std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
    out.add("beta", "beta(" + idx + ") = 0", "|beta| < 1e-6", abs_of(b0.beta.extrapolated) < Real("1e-6"),
            detail::tail_json(b0.beta), to_decimal(b0.beta.extrapolated), to_decimal(b0.beta.error_bound));
    out.add("beta", "dalpha(" + idx + ") = 0", "cyclic sum of alpha_{X,[Y,Z]} vanishes",
            exact_or_close<S>(b0.dalpha, from_int<S>(1)), detail::number_json(b0.dalpha), detail::cell(b0.dalpha));
    const Real sum = to_real(b0.dalpha) + b0.beta.extrapolated + b1.beta.extrapolated + b2.beta.extrapolated;
    const Real err = b0.beta.error_bound + b1.beta.error_bound + b2.beta.error_bound;
    out.add("beta", "dalpha + cyclic beta = 0 at (" + idx + ")", "residual within combined error + 1e-6",
            finite(err) && abs_of(sum) <= err + Real("1e-6"), detail::real_json(sum), to_decimal(sum), to_decimal(err));
  }

  // Hilbert-Schmidt diagnostics and closedness.
  if (w.unitarizable) {
    const int hs_order = config.cutoffs.back() + 8;
    const auto table = norm_table(w, hs_order + 8);
    const auto a = deviation(2, -2, w, hs_order + 8);
    const auto hs_a = hs_norm_sq(a, table, config.cutoffs);
    out.add("hilbert_schmidt", "A_{2,-2} is Hilbert-Schmidt", "partial sums converge", !hs_a.diverges,
            detail::tail_json(hs_a), to_decimal(hs_a.extrapolated), to_decimal(hs_a.error_bound));
    for (int n : {2, -2, 1}) {
      const auto ln = make_L(n, w, hs_order + 8);
      const auto hs_l = hs_norm_sq(ln, table, config.cutoffs);
      out.add("hilbert_schmidt", "L_" + std::to_string(n) + " is unbounded", "partial sums flagged divergent",
              hs_l.diverges, detail::tail_json(hs_l));
    }
    const auto cl = closedness_check({2, -3, 1}, w, config.cutoffs);
    out.add("closedness", "[[L_2,L_-3],L_1] + 10 L_0 is Hilbert-Schmidt", "remainder partial sums converge",
            !cl.remainder_hs.diverges && cl.witt_index == 0, detail::tail_json(cl.remainder_hs),
            to_decimal(cl.remainder_hs.extrapolated), to_decimal(cl.remainder_hs.error_bound));
  } else {
    out.skip("hilbert_schmidt", "HS diagnostics", "positive-definite form", "h <= 0");
  }

  // Contractions over the inverse pairing.
  if (!detail::in_contraction_domain(w)) {
    const std::string reason = detail::near_root(w) ? "fundamental form vanishes" : "needs h > 1/2";
    for (const char* name : {"mean deviation = alpha E", "rho2 = alpha", "rho1 proportional across n"}) {
      out.skip("einstein", name, "contraction over the inverse pairing", reason);
    }
    return block;
  }
  const S alpha = deviation_constant(w);
  const Real alpha_r = to_real(alpha);
  // Contractions run at 50 digits; exact rationals grow too large here.
  const auto wr = classify_weight(to_real(w.h));

  const auto mean = mean_deviation(wr, config.M, config.N, 10);
  Real worst = 0;
  Real worst_error = 0;
  json mean_entries = json::array();
  for (const auto& e : mean.entries) {
    worst = std::max(worst, abs_of(e.extrapolated - alpha_r));
    worst_error = finite(e.error_bound) ? std::max(worst_error, e.error_bound) : e.error_bound;
    mean_entries.push_back(detail::tail_json(e));
  }
  bool only_band0 = true;
  for (const auto& [d, b] : mean.partial.bands()) {
    (void)b;
    only_band0 = only_band0 && d == 0;
  }
  block["mean_deviation"] = mean_entries;
  const Real tol("1e-3");
  out.judge("einstein", "mean deviation = alpha E (first 10 degrees)", "max |entry - alpha| <= 1e-3",
            finite(worst_error) && worst_error <= tol, worst <= tol, detail::real_json(worst), to_decimal(worst),
            to_decimal(worst_error));
  out.add("einstein", "mean deviation has only band 0", "off-diagonal bands vanish exactly", only_band0);

  json rho = json::array();
  const auto ladder = ricci_cutoffs(config.cutoffs, config.M);
  std::vector<RicciEstimate> r1, r2;
  for (int n = 2; n <= 4; ++n) {
    r1.push_back(ricci(1, n, -n, wr, config.M, ladder));
    r2.push_back(ricci(2, n, -n, wr, config.M, ladder));
    rho.push_back({{"n", n}, {"rho1", detail::estimate_json(r1.back().rho)}, {"rho2", detail::estimate_json(r2.back().rho)}});
  }
  block["rho"] = rho;
  out.judge("einstein", "rho2(2,-2) = alpha", "|rho2 - alpha| <= 1e-3",
            finite(r2[0].rho.error) && r2[0].rho.error <= tol, abs_of(r2[0].rho.value - alpha_r) <= tol,
            detail::estimate_json(r2[0].rho), to_decimal(r2[0].rho.value), to_decimal(r2[0].rho.error));
  for (std::size_t i = 1; i < r1.size(); ++i) {
    const std::string n = std::to_string(i + 2);
    const Real e2 = r2[i].rho.error + r2[0].rho.error;
    const Real d2 = abs_of(r2[i].rho.value - r2[0].rho.value);
    out.judge("einstein", "rho2(" + n + ",-" + n + ") = rho2(2,-2)", "difference within combined error",
              finite(e2) && e2 <= tol, d2 <= e2, detail::real_json(d2), to_decimal(d2), to_decimal(e2));
    const Real e1 = r1[i].rho.error + r1[0].rho.error;
    const Real d1 = abs_of(r1[i].rho.value - r1[0].rho.value);
    out.judge("einstein", "rho1(" + n + ",-" + n + ") = rho1(2,-2)", "difference within combined error",
              finite(e1) && e1 <= tol, d1 <= e1, detail::real_json(d1), to_decimal(d1), to_decimal(e1));
  }

  // B_X against alpha T(X): reported, not asserted.
  for (int n : {0, 2}) {
    const auto b = b_operator(n, wr, config.M, config.N, 10);
    const auto ln = make_L(n, w, config.N);
    Real dev = 0;
    for (std::size_t i = 0; i < b.entries.size(); ++i) {
      dev = std::max(dev, abs_of(b.entries[i].extrapolated - alpha_r * to_real(ln.coeff(-n, b.columns[i]))));
    }
    out.explore("b_operator", "B_" + std::to_string(n) + " against alpha L_" + std::to_string(n),
                "max |B - alpha L| on the first 10 degrees", detail::real_json(dev), to_decimal(dev));
  }
  return block;
}

// ---- h-independent structure ---------------------------------------------

void structure_suites(Checks& out)
{
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> idx(-12, 12);
  std::uniform_int_distribution<int> coef(-5, 5);
  auto random_element = [&] {
    WittElement x;
    for (int t = 0; t < 3; ++t) {
      x.add(idx(rng), GaussRational(Rational(coef(rng)), Rational(coef(rng))));
    }
    return x;
  };

  int bad_witt = 0, bad_vir = 0, bad_cocycle = 0;
  for (int t = 0; t < 100; ++t) {
    const auto x = random_element();
    const auto y = random_element();
    const auto z = random_element();
    const auto j = witt_bracket(witt_bracket(x, y), z) + witt_bracket(witt_bracket(y, z), x) +
                   witt_bracket(witt_bracket(z, x), y);
    bad_witt += j.is_zero() ? 0 : 1;
    const VirasoroElement vx{x, Rational(coef(rng))}, vy{y, Rational(coef(rng))}, vz{z, Rational(coef(rng))};
    const auto a = virasoro_bracket(virasoro_bracket(vx, vy), vz);
    const auto b = virasoro_bracket(virasoro_bracket(vy, vz), vx);
    const auto c = virasoro_bracket(virasoro_bracket(vz, vx), vy);
    bad_vir += ((a.witt + b.witt + c.witt).is_zero() && (a.central + b.central + c.central).is_zero()) ? 0 : 1;
    const auto w = gf_cocycle_modified(witt_bracket(x, y), z) + gf_cocycle_modified(witt_bracket(y, z), x) +
                   gf_cocycle_modified(witt_bracket(z, x), y);
    bad_cocycle += w.is_zero() ? 0 : 1;
  }
  out.add("witt", "Jacobi identity, 100 random triples", "cyclic sum vanishes exactly", bad_witt == 0,
          {{"failures", bad_witt}});
  out.add("virasoro", "Jacobi identity, 100 random triples", "cyclic sum vanishes exactly", bad_vir == 0,
          {{"failures", bad_vir}});
  out.add("virasoro", "modified cocycle is a 2-cocycle", "cyclic sum of w([x,y],z) vanishes", bad_cocycle == 0,
          {{"failures", bad_cocycle}});

  int bad_inv = 0;
  for (int i = -1; i <= 1; ++i) {
    for (int k = -20; k <= 20; ++k) {
      if (!gf_cocycle_modified(WittElement::basis(i), WittElement::basis(k)).is_zero()) {
        ++bad_inv;
      }
    }
  }
  out.add("virasoro", "modified cocycle is sl2-invariant", "w(e_i, e_k) = 0 for |i| <= 1, |k| <= 20", bad_inv == 0);

  // Printed real-basis table with c_0 and s_0 read as absent.
  auto sgn = [](int v) { return (v > 0) - (v < 0); };
  auto s = [](int n, Rational k) { return n == 0 ? RealWittElement{} : RealWittElement::sine(n, GaussRational(k)); };
  auto c = [](int n, Rational k) {
    return n == 0 ? RealWittElement{} : RealWittElement::cosine(n, GaussRational(k));
  };
  auto plus = [](RealWittElement a, const RealWittElement& b) {
    a.s += b.s;
    a.c += b.c;
    a.h += b.h;
    return a;
  };
  int bad_table = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 6; ++m) {
      const Rational half(1, 2);
      const auto ss = plus(s(n + m, half * (m - n)), s(std::abs(n - m), half * sgn(n - m) * (n + m)));
      const auto cc = plus(s(n + m, half * (n - m)), s(std::abs(n - m), half * sgn(n - m) * (n + m)));
      auto sc = plus(c(n + m, half * (m - n)), c(std::abs(n - m), -half * (m + n)));
      if (n == m) {
        sc.h += GaussRational(Rational(-n));
      }
      bad_table += real_basis_bracket(RealWittElement::sine(n), RealWittElement::sine(m)) == ss ? 0 : 1;
      bad_table += real_basis_bracket(RealWittElement::cosine(n), RealWittElement::cosine(m)) == cc ? 0 : 1;
      bad_table += real_basis_bracket(RealWittElement::sine(n), RealWittElement::cosine(m)) == sc ? 0 : 1;
    }
    bad_table += real_basis_bracket(RealWittElement::rotation(), RealWittElement::sine(n)) ==
                         RealWittElement::cosine(n, GaussRational(Rational(n)))
                     ? 0
                     : 1;
    bad_table += real_basis_bracket(RealWittElement::rotation(), RealWittElement::cosine(n)) ==
                         RealWittElement::sine(n, GaussRational(Rational(-n)))
                     ? 0
                     : 1;
  }
  out.add("witt", "real-basis table from complexification", "all brackets for 1 <= n,m <= 6 match", bad_table == 0,
          {{"failures", bad_table}});

  int bad_witness = 0;
  for (int j = 0; j <= 10; ++j) {
    const auto wv = coboundary_witness(j);
    bad_witness += (wv.raw - wv.trivial == Rational(j * j * j - j)) ? 0 : 1;
  }
  out.add("virasoro", "raw minus trivial cocycle = j^3 - j, j <= 10", "coboundary witness", bad_witness == 0);

  std::uniform_int_distribution<int> mob(-6, 6);
  int bad_schwarz = 0;
  for (int t = 0; t < 10; ++t) {
    Rational a, b, cc, d;
    do {
      a = mob(rng);
      b = mob(rng);
      cc = mob(rng);
      d = mob(rng);
    } while (d == 0 || a * d - b * cc == 0);
    const auto sch = schwarzian(mobius_series(a, b, cc, d, 16), 13);
    for (const auto& x : sch.c) {
      bad_schwarz += is_zero(x) ? 0 : 1;
    }
  }
  out.add("coadjoint", "Schwarzian of Moebius maps vanishes", "coefficients through order 12 are 0", bad_schwarz == 0);

  int bad_stab = 0, points = 0;
  for (int bi : {1, 2, -1, 3, -2}) {
    const Rational b(bi);
    std::vector<std::pair<Rational, int>> cases;
    for (int n = 1; n <= 5; ++n) {
      cases.emplace_back(Rational(-n * n) * b / 2, 3);
    }
    for (const Rational& f : {Rational(1), Rational(0), Rational(-3, 4), Rational(-1), Rational(-3)}) {
      cases.emplace_back(f * b, 1);
    }
    for (const auto& [a, expected] : cases) {
      ++points;
      bad_stab += stabilizer_dimension(a, b, 10) == expected ? 0 : 1;
    }
  }
  out.add("coadjoint", "stabilizer dimension 3 exactly on a/b = -n^2/2", "50-point grid", bad_stab == 0,
          {{"failures", bad_stab}, {"points", points}});
}

void append_rows(const std::string& h, const Checks& checks, Report& report, json& list, int& failed)
{
  for (const auto& c : checks.list()) {
    list.push_back({{"suite", c.suite},
                    {"check", c.name},
                    {"invariant", c.invariant},
                    {"status", c.status},
                    {"value", c.value}});
    report.csv_rows.push_back({h, c.suite, c.name, c.status, c.value_text, c.error_text, c.invariant});
    failed += c.status == "fail" ? 1 : 0;
  }
}

template <class S>
void verify_all(const RunConfig& config, Report& report)
{
  const auto weights = detail::parse_weights<S>(config);
  std::vector<Checks> checks(weights.size());
  std::vector<std::future<json>> jobs;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    jobs.push_back(
        std::async(std::launch::async, [&, i] { return verify_h(weights[i].second, config, checks[i]); }));
  }
  Checks structure;
  structure_suites(structure);

  int failed = 0;
  json structure_list = json::array();
  append_rows("", structure, report, structure_list, failed);
  report.json["structure"] = structure_list;
  json results = json::object();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    json block = jobs[i].get();
    json list = json::array();
    append_rows(weights[i].first, checks[i], report, list, failed);
    block["checks"] = list;
    results[weights[i].first] = block;
  }
  report.json["results"] = results;
  report.json["summary"] = {{"failed", failed}};
  report.exit_status = failed == 0 ? exit_pass : exit_fail;
}

}  // namespace

Report run_verify(const RunConfig& config)
{
  validate(config, true);
  if (config.h_values.empty()) {
    throw ConfigError("verify needs at least one --h value");
  }
  Report report;
  report.json = {{"tool", "qrconf"}, {"version", tool_version()}, {"config", detail::config_json(config, "verify")}};
  report.csv_schema = "verify/1";
  report.csv_header = {"h", "suite", "check", "status", "value", "error", "invariant"};
  if (config.mode == ScalarMode::rational) {
    verify_all<Rational>(config, report);
  } else {
    verify_all<Real>(config, report);
  }
  return report;
}

}  // namespace qrconf
