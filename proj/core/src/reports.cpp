#include "symres/reports.hpp"

#include <json.hpp>

namespace symres {

namespace {

using Json = nlohmann::ordered_json;

Json json_partition(const Partition& p) { return Json(p.parts()); }

Json json_rational(const Rational& q) {
  return Json{{"num", to_int64(Rational(q.get_num()))}, {"den", to_int64(Rational(q.get_den()))}};
}

Json json_symfn_obj(const SymFn& f) {
  Json terms = Json::array();
  for (const auto& [idx, c] : f.terms()) {
    terms.push_back(Json{{"idx", json_partition(idx)},
                         {"num", to_int64(Rational(c.get_num()))},
                         {"den", to_int64(Rational(c.get_den()))}});
  }
  return Json{{"basis", basis_name(f.basis())}, {"terms", std::move(terms)}};
}

Json json_witness(const std::optional<FailureWitness>& w) {
  if (!w) return nullptr;
  return Json{{"cycle_type", json_partition(w->rho)},
              {"lhs", json_rational(w->lhs)},
              {"rhs", json_rational(w->rhs)}};
}

Json json_slice_obj(const SliceReport& r) {
  return Json{{"m", r.m},
              {"n", r.n},
              {"i", r.i},
              {"chain_dims", r.chain_dims},
              {"ranks", r.ranks},
              {"cohomology", r.cohomology},
              {"far_left_expected", r.far_left_expected},
              {"d2_zero", r.d2_zero},
              {"euler_ok", r.euler_ok},
              {"pass", r.pass}};
}

std::string csv_quote(const std::string& field) { return '"' + field + '"'; }

}  // namespace

OrthogonalityReport verify_orthogonality(const CharacterEngine& chars, int n) {
  OrthogonalityReport report;
  report.n = n;
  report.pass = true;
  std::vector<Partition> all = partitions_of(n);
  std::vector<ClassFunction> rows;
  rows.reserve(all.size());
  for (const Partition& lambda : all) rows.push_back(chars.irreducible(lambda));
  for (size_t a = 0; a < all.size(); ++a) {
    for (size_t b = 0; b < all.size(); ++b) {
      Rational value = cf_inner(rows[a], rows[b]);
      ++report.pairs_checked;
      Rational expected = a == b ? 1 : 0;
      if (value != expected && report.pass) {
        report.pass = false;
        report.witness = OrthogonalityWitness{all[a], all[b], value};
      }
    }
  }
  return report;
}

std::string json_symfn(const SymFn& f) { return json_symfn_obj(f).dump(); }

std::string json_expansion(const Expansion& e) {
  Json terms = Json::array();
  for (const ExpansionTerm& t : e.terms)
    terms.push_back(Json{{"lambda", json_partition(t.lambda)}, {"coeff", t.coeff}});
  return Json{{"mu", json_partition(e.mu)}, {"terms", std::move(terms)}}.dump();
}

std::string json_inversion(const InversionReport& r) {
  return Json{{"mu", json_partition(r.mu)},
              {"n", r.n},
              {"pass", r.pass},
              {"witness", json_witness(r.witness)}}
      .dump();
}

std::string json_littlewood(const LittlewoodReport& r) {
  Json failure = nullptr;
  if (r.first_failure) {
    failure = Json{{"lambda", json_partition(r.first_failure->lambda)},
                   {"mu", json_partition(r.first_failure->mu)},
                   {"expected", r.first_failure->expected},
                   {"got", r.first_failure->got}};
  }
  return Json{{"max_size", r.max_size},
              {"pass", r.pass},
              {"pairs_checked", r.pairs_checked},
              {"first_failure", std::move(failure)}}
      .dump();
}

std::string json_orthogonality(const OrthogonalityReport& r) {
  Json witness = nullptr;
  if (r.witness) {
    witness = Json{{"lambda", json_partition(r.witness->lambda)},
                   {"nu", json_partition(r.witness->nu)},
                   {"value", json_rational(r.witness->value)}};
  }
  return Json{{"n", r.n},
              {"pass", r.pass},
              {"pairs_checked", r.pairs_checked},
              {"witness", std::move(witness)}}
      .dump();
}

std::string json_slice(const SliceReport& r) { return json_slice_obj(r).dump(); }

std::string json_resolution(const ResolutionReport& r) {
  Json terms = Json::array();
  for (const TermReport& t : r.terms) {
    Json coeffs = Json::array();
    for (const ExpansionTerm& c : t.coefficients)
      coeffs.push_back(Json{{"lambda", json_partition(c.lambda)}, {"coeff", c.coeff}});
    terms.push_back(Json{{"k", t.k},
                         {"coefficients", std::move(coeffs)},
                         {"consistent", t.consistent},
                         {"nonneg_integral", t.nonneg_integral},
                         {"matches_construction", t.matches_construction}});
  }
  return Json{{"mu", json_partition(r.mu)},
              {"m", r.m},
              {"n", r.n},
              {"slice", json_slice_obj(r.slice)},
              {"euler_match", r.euler_match},
              {"euler_witness", json_witness(r.euler_witness)},
              {"terms", std::move(terms)},
              {"matrix_check_ran", r.matrix_check_ran},
              {"matrix_far_left_ok", r.matrix_far_left_ok},
              {"pass", r.pass}}
      .dump();
}

std::string json_chartable(const CharacterEngine& chars, int n) {
  Json classes = Json::array();
  for (const auto& [rho, size] : chars.class_table(n))
    classes.push_back(Json{{"rho", json_partition(rho)}, {"size", to_int64(size)}});
  Json rows = Json::array();
  for (const Partition& lambda : partitions_of(n)) {
    Json values = Json::array();
    for (const Partition& rho : partitions_of(n)) values.push_back(chars.mn_character(lambda, rho));
    rows.push_back(Json{{"lambda", json_partition(lambda)}, {"values", std::move(values)}});
  }
  return Json{{"n", n}, {"classes", std::move(classes)}, {"rows", std::move(rows)}}.dump();
}

std::string csv_chartable(const CharacterEngine& chars, int n) {
  std::string out = "lambda";
  for (const Partition& rho : partitions_of(n)) out += "," + csv_quote(rho.to_text());
  out += '\n';
  for (const Partition& lambda : partitions_of(n)) {
    out += csv_quote(lambda.to_text());
    for (const Partition& rho : partitions_of(n))
      out += "," + std::to_string(chars.mn_character(lambda, rho));
    out += '\n';
  }
  return out;
}

std::string csv_expansion(const Expansion& e) {
  std::string out = "lambda,coeff\n";
  for (const ExpansionTerm& t : e.terms)
    out += csv_quote(t.lambda.to_text()) + "," + std::to_string(t.coeff) + '\n';
  return out;
}

std::string json_freelie(const GAlgebra& g) {
  Json witt = Json::array();
  for (int d = 1; d <= g.max_degree(); ++d) witt.push_back(witt_dim(g.m(), d));
  Json basis = Json::array();
  for (int idx = 0; idx < g.dim(); ++idx) {
    const GVector& v = g.vec(idx);
    basis.push_back(
        Json{{"index", idx}, {"word", v.word}, {"copy", v.copy}, {"degree", g.degree(idx)}});
  }
  Json brackets = Json::array();
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = i + 1; j < g.dim(); ++j) {
      auto entry = g.bracket(i, j);
      if (entry.empty()) continue;
      Json terms = Json::array();
      for (const auto& [idx, c] : entry)
        terms.push_back(Json{{"index", idx},
                             {"num", to_int64(Rational(c.get_num()))},
                             {"den", to_int64(Rational(c.get_den()))}});
      brackets.push_back(Json{{"i", i}, {"j", j}, {"terms", std::move(terms)}});
    }
  }
  return Json{{"m", g.m()},
              {"max_degree", g.max_degree()},
              {"copies", g.copies()},
              {"witt", std::move(witt)},
              {"basis", std::move(basis)},
              {"brackets", std::move(brackets)}}
      .dump();
}

}  // namespace symres
