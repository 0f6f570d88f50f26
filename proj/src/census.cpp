#include "glgu/census.hpp"

namespace glgu {

std::vector<ConjClass> describe_classes(const Group& G, const ClassPartition& P, const RealitySweep& sweep,
                                        const GU2Classifier* gu2) {
  const Ring& R = G.ring();
  if (G.kind() == GroupKind::GU2 && !gu2) throw std::invalid_argument("GU2 census needs the class labels");
  std::optional<std::uint32_t> weyl_class;
  if (G.kind() == GroupKind::GU2) weyl_class = P.class_of[G.index_of_checked(mat::weyl(R))];
  std::vector<ConjClass> out;
  out.reserve(P.count());
  for (std::uint32_t c = 0; c < P.count(); ++c) {
    ConjClass cc;
    cc.rep = P.reps[c];
    cc.size = P.sizes[c];
    const Mat2& A = G.element(cc.rep);
    cc.real = sweep.real[cc.rep];
    cc.strongly_real = sweep.strong_witness[cc.rep] >= 0;
    cc.regular = mat::is_regular(R, A);
    cc.type = element_type(G.kind(), R, A);
    if (G.kind() == GroupKind::GL2) {
      cc.label = to_string(R, gl2_canonical_form(R, A));
    } else {
      const GU2ClassRep& lab = gu2->class_label(c);
      cc.label = lab.to_string(R);
      if (cc.real) {
        switch (lab.tag) {
          case 'A': cc.table_row = 1; break;
          case 'B': cc.table_row = 2; break;
          // The W row is the class of W itself; other real C classes form row 4.
          case 'C': cc.table_row = c == *weyl_class ? 3 : 4; break;
          case 'D': cc.table_row = 5; break;
          default: break;
        }
      }
    }
    out.push_back(std::move(cc));
  }
  return out;
}

ClassCensus real_class_census(const Group& G, const std::vector<ConjClass>& classes) {
  ClassCensus c;
  c.source = "bruteforce";
  c.kind = G.kind();
  c.q = G.spec().q();
  c.ell = G.spec().ell;
  c.classes = classes.size();
  std::array<TableRow, 5> rows{};
  for (const auto& cl : classes) {
    if (!cl.real) continue;
    ++c.real;
    c.strongly_real += cl.strongly_real;
    (cl.regular ? c.real_regular : c.real_nonregular)++;
    if (G.kind() == GroupKind::GU2) {
      if (cl.table_row < 1 || cl.table_row > 5) {
        throw Falsification("real GU2 class " + cl.label + " fits no table row");
      }
      TableRow& row = rows[cl.table_row - 1];
      (cl.regular ? row.regular : row.nonregular)++;
      row.strongly_real += cl.strongly_real;
    }
  }
  if (G.kind() == GroupKind::GU2) c.rows = rows;
  return c;
}

ClassCensus formula_report(std::uint64_t q, unsigned ell, GroupKind kind) {
  std::uint64_t ql = 1;
  for (unsigned i = 0; i < ell; ++i) ql *= q;
  const std::uint64_t ql1 = ql / q;
  std::uint64_t sum = 0;  // sum_{i<l} q^i
  std::uint64_t sum2 = 0;  // sum_{i<=l-2} q^i
  for (std::uint64_t i = 0, qi = 1; i < ell; ++i, qi *= q) {
    sum += qi;
    if (i + 2 <= ell) sum2 += qi;
  }
  ClassCensus c;
  c.source = "formula";
  c.kind = kind;
  c.q = q;
  c.ell = ell;
  c.real = 1 + ql + 2 * sum;
  c.real_regular = ql + 1;
  c.real_nonregular = 2 * sum;
  if (kind == GroupKind::GL2) {
    c.strongly_real = c.real;
    return c;
  }
  c.strongly_real = ql + 1;
  std::array<TableRow, 5> rows{};
  rows[0] = {0, 2, 2};
  rows[1] = {(q - 3) * ql1 / 2, ql1 - 1, (q - 1) * ql1 / 2 - 1};
  rows[2] = {1, 0, 1};
  rows[3] = {(q - 1) * ql1 / 2, ql1 - 1, (q + 1) * ql1 / 2 - 1};
  rows[4] = {2 * ql1, 2 * sum2, 0};
  c.rows = rows;
  return c;
}

std::optional<std::string> first_difference(const ClassCensus& a, const ClassCensus& b) {
  if (a.classes && b.classes && *a.classes != *b.classes) return "classes";
  if (a.real != b.real) return "real";
  if (a.strongly_real != b.strongly_real) return "stronglyReal";
  if (a.real_regular != b.real_regular) return "realRegular";
  if (a.real_nonregular != b.real_nonregular) return "realNonRegular";
  if (a.rows && b.rows) {
    for (int r = 0; r < 5; ++r) {
      const auto& x = (*a.rows)[r];
      const auto& y = (*b.rows)[r];
      const std::string row = "row" + std::to_string(r + 1);
      if (x.regular != y.regular) return row + ".regular";
      if (x.nonregular != y.nonregular) return row + ".nonregular";
      if (x.strongly_real != y.strongly_real) return row + ".stronglyReal";
    }
  }
  return std::nullopt;
}

}  // namespace glgu
