#include "glgu/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "glgu/kernels.hpp"

namespace glgu {

// ---- Context ----

struct Context::Entry {
  GroupSpec spec;
  std::optional<Group> G;
  std::optional<ClassPartition> P;
  std::optional<RealitySweep> S;
  std::optional<GU2Classifier> C;
  std::optional<std::vector<ConjClass>> classes;
  std::optional<ClassData> D;
  std::optional<CharTable> T;
};

Context::Context(cache::Store& store, std::uint64_t budget, std::uint64_t seed, Exec exec)
    : store_(store), budget_(budget), seed_(seed), exec_(exec) {}

Context::~Context() = default;

template <class F>
auto Context::timed(const std::string& what, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  auto out = f();
  timing_.emplace_back(what, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return out;
}

Context::Entry& Context::entry(const GroupSpec& s) {
  auto& slot = entries_[s.describe()];
  if (!slot) {
    slot = std::make_unique<Entry>();
    slot->spec = s;
  }
  return *slot;
}

const Group& Context::group(const GroupSpec& s) {
  Entry& e = entry(s);
  if (!e.G) e.G.emplace(timed("enumerate " + s.describe(), [&] { return store_.group(s, budget_, exec_); }));
  return *e.G;
}

const ClassPartition& Context::partition(const GroupSpec& s) {
  Entry& e = entry(s);
  if (!e.P) {
    const Group& G = group(s);
    e.P.emplace(timed("classes " + s.describe(), [&] { return conjugacy_partition(G, exec_); }));
  }
  return *e.P;
}

const RealitySweep& Context::sweep(const GroupSpec& s) {
  Entry& e = entry(s);
  if (!e.S) {
    const Group& G = group(s);
    const ClassPartition& P = partition(s);
    e.S.emplace(timed("reality " + s.describe(), [&] { return reality_sweep(G, P, exec_); }));
  }
  return *e.S;
}

const GU2Classifier* Context::labels(const GroupSpec& s) {
  if (s.kind != GroupKind::GU2) return nullptr;
  Entry& e = entry(s);
  if (!e.C) {
    const Group& G = group(s);
    const ClassPartition& P = partition(s);
    e.C.emplace(timed("labels " + s.describe(), [&] { return store_.gu2_labels(G, P); }));
  }
  return &*e.C;
}

const std::vector<ConjClass>& Context::classes(const GroupSpec& s) {
  Entry& e = entry(s);
  if (!e.classes) {
    const Group& G = group(s);
    const ClassPartition& P = partition(s);
    const RealitySweep& S = sweep(s);
    e.classes.emplace(describe_classes(G, P, S, labels(s)));
  }
  return *e.classes;
}

const ClassData& Context::class_data(const GroupSpec& s) {
  Entry& e = entry(s);
  if (!e.D) {
    const Group& G = group(s);
    const ClassPartition& P = partition(s);
    e.D.emplace(timed("class structure " + s.describe(), [&] { return class_structure(G, P, exec_, budget_); }));
  }
  return *e.D;
}

CharTable& Context::table(const GroupSpec& s) {
  Entry& e = entry(s);
  if (!e.T) {
    const Group& G = group(s);
    const ClassData& D = class_data(s);
    e.T.emplace(timed("character table " + s.describe(), [&] { return store_.character_table(G, D, seed_); }));
    if (s.ell >= 2) {
      timed("restriction typing " + s.describe(), [&] {
        restriction_typing(*e.T, D, G);
        return 0;
      });
    }
  }
  return *e.T;
}

// ---- helpers ----

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::string tag(const GroupSpec& s) {
  return std::string(to_string(s.kind)) + ".q" + std::to_string(s.q()) + ".l" + std::to_string(s.ell);
}

std::string fmt_complex(std::complex<double> z) {
  auto clean = [](double v) { return std::abs(v) < 5e-7 ? 0.0 : v; };
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6f%+.6fi", clean(z.real()), clean(z.imag()));
  return buf;
}

ordered_json row_json(const TableRow& r) { return {r.regular, r.nonregular, r.strongly_real}; }

}  // namespace

GroupSpec desk_spec(GroupKind kind, unsigned q, unsigned ell) {
  if (is_prime(q)) return GroupSpec{kind, Family::Mixed, q, 1, ell};
  for (unsigned p = 3; p < q; p += 2) {
    if (!is_prime(p)) continue;
    unsigned f = 0;
    std::uint64_t pf = 1;
    while (pf < q) pf *= p, ++f;
    if (pf == q) return GroupSpec{kind, Family::Equal, p, f, ell};
  }
  throw std::invalid_argument("q = " + std::to_string(q) + " is not an odd prime power");
}

// ---- command claim builders ----

std::vector<Claim> involution_claims(Context& ctx, const GroupSpec& s, ordered_json* result) {
  const std::uint64_t count = ctx.sweep(s).involutions.size();
  const std::uint64_t formula = involution_formula(s.kind, s.q(), s.ell);
  if (result) {
    (*result)["order"] = ctx.group(s).order();
    (*result)["count"] = count;
    (*result)["formula"] = formula;
  }
  return {make_claim("involution-count." + tag(s), "number of involutions is (q - d_G) q^(2l-1) + 2", formula, count)};
}

std::vector<Claim> census_claims(Context& ctx, const GroupSpec& s, ordered_json* result) {
  const Group& G = ctx.group(s);
  const auto& classes = ctx.classes(s);
  const RealitySweep& S = ctx.sweep(s);
  const ClassCensus brute = real_class_census(G, classes);
  const ClassCensus formula = formula_report(s.q(), s.ell, s.kind);
  const std::string t = tag(s);
  std::vector<Claim> out;
  out.push_back(make_claim("real-class-count." + t, "real classes: 1 + q^l + 2 sum_{i<l} q^i", formula.real, brute.real));
  out.push_back(make_claim("strongly-real-count." + t,
                           s.kind == GroupKind::GL2 ? "strongly real classes: all real classes"
                                                    : "strongly real classes: q^l + 1",
                           formula.strongly_real, brute.strongly_real));
  out.push_back(make_claim("real-regular-count." + t, "real regular classes: q^l + 1", formula.real_regular,
                           brute.real_regular));
  out.push_back(make_claim("real-nonregular-count." + t, "real non-regular classes: 2 sum_{i<l} q^i",
                           formula.real_nonregular, brute.real_nonregular));

  // Element-level oracle agreement for the closed-form criteria.
  std::uint64_t real_mismatch = 0, strong_mismatch = 0, real_not_strong = 0;
  const GU2Classifier* C = ctx.labels(s);
  for (Group::Index g = 0; g < G.order(); ++g) {
    const bool real = S.real[g] != 0;
    const bool strong = S.strong_witness[g] >= 0;
    real_mismatch += criterion_real(G.ring(), G.element(g)) != real;
    real_not_strong += real && !strong;
    if (C) strong_mismatch += (criterion_real(G.ring(), G.element(g)) && C->element_label(g).tag != 'D') != strong;
  }
  out.push_back(make_claim("reality-criterion." + t, "g is real iff det g = +-1 and tr g = tr g^-1 (mismatches)",
                           0, real_mismatch));
  if (s.kind == GroupKind::GL2) {
    out.push_back(make_claim("gl2-real-is-strongly-real." + t,
                             "every real element of GL2(o_l) is strongly real (counterexamples)", 0, real_not_strong));
  } else {
    out.push_back(make_claim("strong-reality-criterion." + t,
                             "g is strongly real iff g is real and not of type D (mismatches)", 0, strong_mismatch));
    std::uint64_t class_mismatch = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (classes[c].real)
        class_mismatch += (!classes[c].strongly_real) != (C->class_label(static_cast<std::uint32_t>(c)).tag == 'D');
    out.push_back(make_claim("real-not-strongly-real-is-row5." + t,
                             "real classes that are not strongly real are exactly the type D classes (mismatches)", 0,
                             class_mismatch));
    for (int r = 0; r < 5; ++r)
      out.push_back(make_claim("table-row" + std::to_string(r + 1) + "." + t,
                               "real class table row " + std::to_string(r + 1) + " [regular, non-regular, strongly real]",
                               row_json((*formula.rows)[r]), row_json((*brute.rows)[r])));
    TableRow sum;
    for (const auto& row : *brute.rows) {
      sum.regular += row.regular;
      sum.nonregular += row.nonregular;
      sum.strongly_real += row.strongly_real;
    }
    std::uint64_t two_sum = 0;
    for (unsigned i = 0; i < s.ell; ++i) two_sum += 2 * ipow(s.q(), i);
    const std::uint64_t ql1 = ipow(s.q(), s.ell) + 1;
    out.push_back(make_claim("table-totals." + t, "table totals (q^l + 1, 2 sum_{i<l} q^i, q^l + 1)",
                             ordered_json{ql1, two_sum, ql1}, row_json(sum)));
  }
  if (result) {
    (*result)["order"] = G.order();
    (*result)["classes"] = classes.size();
    (*result)["realTotal"] = brute.real;
    (*result)["stronglyReal"] = brute.strongly_real;
    (*result)["realRegular"] = brute.real_regular;
    (*result)["realNonRegular"] = brute.real_nonregular;
    if (brute.rows) {
      ordered_json rows = ordered_json::array();
      for (const auto& row : *brute.rows)
        rows.push_back({{"regular", row.regular}, {"nonRegular", row.nonregular}, {"stronglyReal", row.strongly_real}});
      (*result)["tableRows"] = rows;
    }
  }
  return out;
}

std::vector<Claim> classify_claims(Context& ctx, const GroupSpec& s, ordered_json* result) {
  const Group& G = ctx.group(s);
  const Ring& R = G.ring();
  const ClassPartition& P = ctx.partition(s);
  const std::string t = tag(s);
  std::vector<Claim> out;
  if (s.kind == GroupKind::GL2) {
    std::set<GL2CanonicalForm> forms;
    for (auto r : P.reps) forms.insert(gl2_canonical_form(R, G.element(r)));
    std::uint64_t moved = 0;
    for (Group::Index g = 0; g < G.order(); ++g)
      moved += gl2_canonical_form(R, G.element(g)) != gl2_canonical_form(R, G.element(P.reps[P.class_of[g]]));
    out.push_back(make_claim("gl2-forms-separate-classes." + t, "distinct canonical forms over class representatives",
                             P.count(), forms.size()));
    out.push_back(make_claim("gl2-forms-class-invariant." + t, "elements whose canonical form differs from their class",
                             0, moved));
    out.push_back(make_claim("gl2-symbolic-class-count." + t, "number of symbolic canonical forms M(d, i, alpha, beta)",
                             P.count(), gl2_forms_symbolic(R).size()));
  } else {
    const GU2Classifier* C = ctx.labels(s);
    std::uint64_t unmet = 0;
    for (std::uint32_t c = 0; c < P.count(); ++c) unmet += C->tags_hitting(c).empty();
    out.push_back(make_claim("gu2-classification-exhaustive." + t, "classes met by no family A-D", 0, unmet));
    out.push_back(make_claim("gu2-single-tag." + t, "classes met by more than one family tag", 0,
                             C->multi_tag_classes()));
  }
  if (result) {
    const auto& classes = ctx.classes(s);
    (*result)["order"] = G.order();
    ordered_json list = ordered_json::array();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto& cl = classes[c];
      ordered_json j{{"index", c},
                     {"rep", mat::to_string(R, G.element(cl.rep))},
                     {"size", cl.size},
                     {"label", cl.label},
                     {"type", std::string(to_string(cl.type))},
                     {"regular", cl.regular},
                     {"real", cl.real},
                     {"stronglyReal", cl.strongly_real}};
      if (s.kind == GroupKind::GU2) j["tableRow"] = cl.table_row;
      list.push_back(j);
    }
    (*result)["classes"] = list;
  }
  return out;
}

std::vector<Claim> chartab_claims(Context& ctx, const GroupSpec& s, bool long_running, ordered_json* result) {
  const Group& G = ctx.group(s);
  const ClassData& D = ctx.class_data(s);
  CharTable& T = ctx.table(s);
  const auto& classes = ctx.classes(s);
  const std::string t = tag(s);
  const std::uint64_t q = s.q();
  std::vector<Claim> out;

  std::uint64_t sum_sq = 0;
  for (auto d : T.degrees) sum_sq += d * d;
  std::uint64_t real_classes = 0;
  for (const auto& c : classes) real_classes += c.real;
  const auto sd = self_dual_census(T);
  const auto why = orthogonality_failure(T, D);

  out.push_back(make_claim("character-count." + t, "irreducible characters = conjugacy classes", D.count(), T.count()));
  out.push_back(make_claim("degree-square-sum." + t, "sum of squared degrees = |G|", G.order(), sum_sq));
  out.push_back(make_claim("orthogonality." + t, "row and column orthogonality mod m", "ok", why ? *why : "ok"));
  out.push_back(make_claim("fs-aggregate." + t, "sum nu(chi) deg(chi) = #{g : g^2 = 1}",
                           static_cast<std::int64_t>(ctx.sweep(s).involutions.size()), sd.fs_sum));
  out.push_back(make_claim("brauer-real-count." + t, "real-valued characters = real classes", real_classes,
                           sd.real_characters));
  if (s.kind == GroupKind::GL2) {
    std::uint64_t mismatch = 0;
    for (std::size_t x = 0; x < T.count(); ++x) mismatch += (T.real_valued[x] != 0) != (T.fs[x] == 1);
    out.push_back(make_claim("gl2-real-iff-orthogonal." + t, "real-valued iff nu = +1 (mismatches)", 0, mismatch));
    out.push_back(make_claim("symplectic-dimension." + t, "b_l = 0 for GL2", 0, sd.symplectic_dim));
  } else {
    out.push_back(make_claim("orthogonal-dimension." + t, "a_l = q^(2l) + 1", ipow(q, 2 * s.ell) + 1, sd.orthogonal_dim));
    out.push_back(
        make_claim("symplectic-dimension." + t, "b_l = q^(2l-1) - 1", ipow(q, 2 * s.ell - 1) - 1, sd.symplectic_dim));
    if (s.ell >= 2) {
      bool regular_symplectic = false;
      for (std::size_t x = 0; x < T.count(); ++x)
        regular_symplectic = regular_symplectic || (T.fs[x] == -1 && T.types[x] && *T.types[x] != OrbitType::nreg);
      out.push_back(make_claim("regular-symplectic." + t, "some character with nu = -1 is regular", true,
                               regular_symplectic));
    }
  }
  std::optional<TangibilityCensus> tc;
  if (s.ell == 2 || (s.ell == 3 && long_running)) {
    tc = tangibility_census(T, D, G, long_running);
    const auto m = tangible_formula(q, s.ell);
    const char* names[] = {"ss", "sns", "cus"};
    const char* forms[] = {"m_ss = q^(l-2) (q-1)^2 / 2", "m_sns = 2 q^(l-1)", "m_cus = q^(l-2) (q^2-1) / 2"};
    for (int k = 0; k < 3; ++k)
      out.push_back(make_claim(std::string("tangible-") + names[k] + "." + t, forms[k], m[k], tc->tangible_by_type[k]));
    const std::uint64_t below = formula_report(q, s.ell - 1, s.kind).real;
    out.push_back(make_claim("nonregular-self-dual." + t, "non-regular self-dual characters = real classes one level down",
                             below, tc->nonregular_self_dual));
    out.push_back(make_claim("nonregular-self-dual-pulled-back." + t,
                             "non-regular self-dual characters are trivial on K^(l-1)", tc->nonregular_self_dual,
                             tc->nonregular_self_dual_pulled_back));
    out.push_back(make_claim("tangible-iff-self-dual." + t, "regular: tangible iff self-dual (mismatches)",
                             ordered_json::array(), tc->mismatches));
  }
  if (result) {
    (*result)["order"] = G.order();
    (*result)["classes"] = D.count();
    (*result)["modulus"] = T.modulus;
    (*result)["exponent"] = T.exponent;
    (*result)["zeta"] = T.zeta;
    (*result)["primesTried"] = T.primes_tried;
    (*result)["fsSum"] = sd.fs_sum;
    (*result)["orthogonalDim"] = sd.orthogonal_dim;
    (*result)["symplecticDim"] = sd.symplectic_dim;
    (*result)["realCharacters"] = sd.real_characters;
    ordered_json reps = ordered_json::array();
    for (std::size_t c = 0; c < D.count(); ++c)
      reps.push_back({{"rep", mat::to_string(G.ring(), G.element(D.reps[c]))}, {"size", D.sizes[c]}});
    (*result)["classReps"] = reps;
    ordered_json chars = ordered_json::array();
    for (std::size_t x = 0; x < T.count(); ++x) {
      ordered_json j{{"index", x}, {"degree", T.degrees[x]}, {"fs", T.fs[x]}, {"realValued", T.real_valued[x] != 0}};
      j["type"] = T.types[x] ? ordered_json(std::string(to_string(*T.types[x]))) : ordered_json(nullptr);
      j["tangible"] = T.tangible[x] ? ordered_json(*T.tangible[x]) : ordered_json(nullptr);
      j["values"] = T.values[x];
      ordered_json lifts = ordered_json::array();
      for (std::size_t c = 0; c < D.count(); ++c) lifts.push_back(fmt_complex(complex_value(T, D, x, c)));
      j["lifts"] = lifts;
      chars.push_back(j);
    }
    (*result)["characters"] = chars;
    if (tc) {
      ordered_json recs = ordered_json::array();
      for (const auto& r : tc->records)
        recs.push_back({{"character", r.character},
                        {"A", mat::to_string(G.ring().at_level(s.ell / 2), r.orbit_datum)},
                        {"type", std::string(to_string(r.type))},
                        {"T1", r.t1},
                        {"T2", r.t2},
                        {"selfDual", r.self_dual}});
      (*result)["tangibility"] = recs;
    }
  }
  return out;
}

// ---- centralizers ----

std::uint64_t centralizer_formula(GroupKind kind, OrbitType type, std::uint64_t q, unsigned ell) {
  const std::uint64_t q_minus_d = kind == GroupKind::GL2 ? q + 1 : q - 1;  // d_GL = -1, d_GU = +1
  switch (type) {
    case OrbitType::cus: return (q + 1) * q_minus_d * ipow(q, 2 * ell - 2);
    case OrbitType::sns: return q_minus_d * ipow(q, 2 * ell - 1);
    case OrbitType::ss: return (q - 1) * q_minus_d * ipow(q, 2 * ell - 2);
    default: throw std::invalid_argument("no centralizer formula for non-regular type");
  }
}

Mat2 least_regular_of_type(GroupKind kind, const Ring& R, OrbitType type) {
  for (const auto& A : lie_algebra(kind, R))
    if (mat::is_regular(R, A) && lie_type(kind, R, A) == type) return A;
  throw std::logic_error("no regular element of the requested type");
}

// ---- formula regression ----

std::vector<Claim> formula_regression_claims() {
  std::vector<Claim> out;
  for (unsigned q : {3U, 5U, 7U, 9U})
    for (unsigned ell = 1; ell <= 4; ++ell)
      for (auto kind : {GroupKind::GL2, GroupKind::GU2}) {
        const GroupSpec s = desk_spec(kind, q, ell);
        const std::string t = tag(s);
        const ClassCensus f = formula_report(q, ell, kind);
        out.push_back(make_claim("regression.split." + t, "real = real regular + real non-regular", f.real,
                                 f.real_regular + f.real_nonregular));
        if (kind == GroupKind::GU2) {
          TableRow sum;
          for (const auto& r : *f.rows) {
            sum.regular += r.regular;
            sum.nonregular += r.nonregular;
            sum.strongly_real += r.strongly_real;
          }
          out.push_back(make_claim("regression.rows." + t, "table rows sum to (real regular, real non-regular, strongly real)",
                                   ordered_json{f.real_regular, f.real_nonregular, f.strongly_real}, row_json(sum)));
          continue;
        }
        const Ring R = group_ring(s);
        if (R.size() > 729) continue;
        std::uint64_t regular = 0, nonregular = 0;
        for (const auto& form : gl2_forms_symbolic(R)) {
          if (!criterion_real(R, gl2_form_matrix(R, form))) continue;
          (form.i == 0 ? regular : nonregular)++;
        }
        out.push_back(make_claim("regression.symbolic." + t,
                                 "real canonical forms [total, regular, non-regular] counted symbolically",
                                 ordered_json{f.real, f.real_regular, f.real_nonregular},
                                 ordered_json{regular + nonregular, regular, nonregular}));
      }
  return out;
}

// ---- acceptance ----

bool Criterion::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

std::vector<Criterion> acceptance_suite(Context& ctx) {
  using K = GroupKind;
  const std::vector<std::pair<unsigned, unsigned>> desk{{3, 1}, {3, 2}, {5, 1}};
  std::vector<Criterion> out;
  auto run = [&](std::string id, std::string title, double limit, auto&& body) {
    Criterion c{std::move(id), std::move(title), limit, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(c.claims);
    } catch (const Falsification& e) {
      c.claims.push_back(make_claim("falsification", "no statement is contradicted", "none", e.what()));
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(c));
  };
  auto pick = [](const std::vector<Claim>& claims, const std::string& prefix) {
    std::vector<Claim> sel;
    for (const auto& c : claims)
      if (c.id.rfind(prefix, 0) == 0) sel.push_back(c);
    return sel;
  };
  auto append = [](std::vector<Claim>& to, std::vector<Claim> from) {
    for (auto& c : from) to.push_back(std::move(c));
  };

  run("1", "GL2 real class counts", 120, [&](auto& claims) {
    for (auto [q, l] : desk) append(claims, pick(census_claims(ctx, desk_spec(K::GL2, q, l)), "real-class-count"));
    const std::uint64_t stated[] = {6, 18, 10};
    for (std::size_t i = 0; i < desk.size(); ++i)
      claims.push_back(make_claim("real-class-count-stated." + tag(desk_spec(K::GL2, desk[i].first, desk[i].second)),
                                  "stated value", stated[i], formula_report(desk[i].first, desk[i].second, K::GL2).real));
  });
  run("2", "GL2 real implies strongly real", 300, [&](auto& claims) {
    for (auto [q, l] : desk) append(claims, pick(census_claims(ctx, desk_spec(K::GL2, q, l)), "gl2-real-is-strongly-real"));
  });
  const GroupSpec gu32 = desk_spec(K::GU2, 3, 2);
  run("3", "GU2 real and strongly real counts", 600, [&](auto& claims) {
    const auto all = census_claims(ctx, gu32);
    for (const char* p : {"real-class-count", "strongly-real-count", "real-regular-count", "real-nonregular-count",
                          "real-not-strongly-real-is-row5"})
      append(claims, pick(all, p));
    const ClassCensus b = real_class_census(ctx.group(gu32), ctx.classes(gu32));
    claims.push_back(make_claim("stated-values.gu2.q3.l2", "stated [real, strongly real, regular, non-regular]",
                                ordered_json{18, 10, 10, 8},
                                ordered_json{b.real, b.strongly_real, b.real_regular, b.real_nonregular}));
  });
  run("4", "GU2 real class table rows", 600, [&](auto& claims) {
    const auto all = census_claims(ctx, gu32);
    append(claims, pick(all, "table-row"));
    append(claims, pick(all, "table-totals"));
  });
  run("5", "involution counts", 60, [&](auto& claims) {
    for (auto kind : {K::GL2, K::GU2})
      for (unsigned l : {1U, 2U}) append(claims, involution_claims(ctx, desk_spec(kind, 3, l)));
  });
  const char* c6[] = {"character-count", "degree-square-sum", "orthogonality", "fs-aggregate", "brauer-real-count"};
  run("6", "character tables", 900, [&](auto& claims) {
    for (auto kind : {K::GL2, K::GU2})
      for (unsigned l : {1U, 2U}) {
        const GroupSpec s = desk_spec(kind, 3, l);
        const auto all = chartab_claims(ctx, s, false);
        for (const char* p : c6) append(claims, pick(all, p));
        if (l == 2)
          claims.push_back(make_claim("real-character-count-stated." + tag(s), "stated value", 18,
                                      self_dual_census(ctx.table(s)).real_characters));
      }
  });
  run("7", "orthogonal / symplectic dichotomy", 900, [&](auto& claims) {
    const auto gl = chartab_claims(ctx, desk_spec(K::GL2, 3, 2), false);
    append(claims, pick(gl, "gl2-real-iff-orthogonal"));
    append(claims, pick(gl, "symplectic-dimension"));
    const auto gu2 = chartab_claims(ctx, gu32, false);
    append(claims, pick(gu2, "orthogonal-dimension"));
    append(claims, pick(gu2, "symplectic-dimension"));
    append(claims, pick(gu2, "regular-symplectic"));
    const auto gu1 = chartab_claims(ctx, desk_spec(K::GU2, 3, 1), false);
    append(claims, pick(gu1, "orthogonal-dimension"));
    append(claims, pick(gu1, "symplectic-dimension"));
    const auto b2 = self_dual_census(ctx.table(gu32)).symplectic_dim;
    const auto b1 = self_dual_census(ctx.table(desk_spec(K::GU2, 3, 1))).symplectic_dim;
    claims.push_back(make_claim("symplectic-increment.gu2.q3.l2", "b_l - b_(l-1) = (q^2 - 1) q^(2l-3)", 24, b2 - b1));
  });
  run("8", "tangibility", 600, [&](auto& claims) {
    for (auto kind : {K::GL2, K::GU2}) {
      const auto all = chartab_claims(ctx, desk_spec(kind, 3, 2), false);
      for (const char* p : {"tangible-", "nonregular-self-dual", "tangible-iff-self-dual"}) append(claims, pick(all, p));
    }
  });
  const OrbitType types[] = {OrbitType::ss, OrbitType::sns, OrbitType::cus};
  run("9a", "centralizer orders", 600, [&](auto& claims) {
    for (auto kind : {K::GL2, K::GU2}) {
      const GroupSpec s = desk_spec(kind, 3, 2);
      const Ring& R = ctx.group(s).ring();
      for (auto ty : types) {
        const auto rep = centralizer_and_za(kind, R, least_regular_of_type(kind, R, ty));
        claims.push_back(make_claim("centralizer-order-" + std::string(to_string(ty)) + "." + tag(s),
                                    "|C_G(A)| = (q-1)(q-d_G)q^(2l-2), (q-d_G)q^(2l-1), (q+1)(q-d_G)q^(2l-2)",
                                    centralizer_formula(kind, ty, 3, 2), rep.centralizer_order));
      }
    }
  });
  run("9b", "Z_A index", 600, [&](auto& claims) {
    for (auto kind : {K::GL2, K::GU2}) {
      const GroupSpec s = desk_spec(kind, 3, 2);
      const Ring& R = ctx.group(s).ring();
      for (auto ty : types) {
        const auto rep = centralizer_and_za(kind, R, least_regular_of_type(kind, R, ty));
        claims.push_back(make_claim("za-index-" + std::string(to_string(ty)) + "." + tag(s),
                                    "[Z_l : Z_A] = 2 for sns, 1 for ss and cus", ty == OrbitType::sns ? 2 : 1,
                                    rep.za_index));
      }
    }
  });
  run("10", "structural properties", 600, [&](auto& claims) {
    const GroupSpec gl32 = desk_spec(K::GL2, 3, 2);
    const Group& G = ctx.group(gl32);
    const Ring& R = G.ring();
    std::mt19937_64 rng(ctx.seed());
    std::uint64_t not_idempotent = 0, not_invariant = 0;
    for (int n = 0; n < 1000; ++n) {
      const auto a = static_cast<Group::Index>(rng() % G.order());
      const auto g = static_cast<Group::Index>(rng() % G.order());
      const auto form = gl2_canonical_form(R, G.element(a));
      not_idempotent += gl2_canonical_form(R, gl2_form_matrix(R, form)) != form;
      not_invariant += gl2_canonical_form(R, G.element(G.conjugate(g, a))) != form;
    }
    claims.push_back(make_claim("gl2-form-idempotence.gl2.q3.l2", "canonical form of a form matrix is itself (failures in 1000)",
                                0, not_idempotent));
    claims.push_back(make_claim("gl2-form-invariance.gl2.q3.l2", "canonical form is conjugation invariant (failures in 1000)",
                                0, not_invariant));
    for (auto [q, l] : desk) {
      const GroupSpec s = desk_spec(K::GU2, q, l);
      append(claims, classify_claims(ctx, s));
    }
    const Ring& U = ctx.group(gu32).ring();
    claims.push_back(make_claim("norm-one-kernel-size.gu2.q3.l2", "|ker N| = q^l + q^(l-1)", 12, U.norm_one_kernel().size()));
    for (auto kind : {K::GL2, K::GU2})
      for (auto [q, l] : desk) {
        const auto all = census_claims(ctx, desk_spec(kind, q, l));
        append(claims, pick(all, "reality-criterion"));
        append(claims, pick(all, "strong-reality-criterion"));
      }
  });
  run("R", "formula regression up to (9, 4)", 600, [&](auto& claims) { append(claims, formula_regression_claims()); });
  return out;
}

// ---- batch entry point ----

Report run_command(const RunConfig& cfg) {
  if (std::find(std::begin(kCommands), std::end(kCommands), cfg.command) == std::end(kCommands))
    throw std::invalid_argument("unknown command: " + cfg.command);
  cache::Store store(cache::resolve_dir(cfg.cache_dir));
  Context ctx(store, cfg.budget, cfg.seed);
  Report r;
  r.config = cfg;
  const GroupSpec s = cfg.spec();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (cfg.command == "involutions") {
      r.claims = involution_claims(ctx, s, &r.result);
    } else if (cfg.command == "census") {
      r.claims = census_claims(ctx, s, &r.result);
    } else if (cfg.command == "classify") {
      r.claims = classify_claims(ctx, s, &r.result);
    } else if (cfg.command == "chartab") {
      r.claims = chartab_claims(ctx, s, cfg.long_running, &r.result);
    } else {
      ordered_json criteria = ordered_json::array();
      for (auto& c : acceptance_suite(ctx)) {
        criteria.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass()}});
        for (auto& claim : c.claims) {
          claim.id = "c" + c.id + "." + claim.id;
          r.claims.push_back(std::move(claim));
        }
      }
      r.result["criteria"] = criteria;
    }
  } catch (const Falsification& e) {
    r.claims.push_back(make_claim("falsification", "no statement is contradicted", "none", e.what()));
  }
  r.warnings = store.warnings();
  r.timing = ctx.timing();
  r.timing.emplace_back("total", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return r;
}

}  // namespace glgu
