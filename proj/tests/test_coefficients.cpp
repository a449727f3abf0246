#include <doctest.h>

#include "oracles.hpp"
#include "symres/coefficients.hpp"
#include "symres/reports.hpp"

using namespace symres;

namespace {
CoefficientEngine& engine() {
  static CoefficientEngine coeffs;
  return coeffs;
}

long long stable_pairing(const Partition& lambda, const Partition& mu, int n) {
  const CharacterEngine& chars = engine().sym().characters();
  return to_int64(cf_inner(chars.restriction_character(lambda, n), chars.irreducible(pad(mu, n))));
}
}  // namespace

TEST_CASE("a_coeff: Littlewood delta values on |mu| >= |lambda|") {
  CHECK(engine().a_coeff(Partition{2, 1}, Partition{2, 1}, AMethod::plethysm) == 1);
  CHECK(engine().a_coeff(Partition{2, 1}, Partition{3}, AMethod::plethysm) == 0);
  CHECK(engine().a_coeff(Partition{2}, Partition{2}, AMethod::character) == 1);
  CHECK(engine().a_coeff(Partition{}, Partition{}, AMethod::plethysm) == 1);
  CHECK(engine().a_coeff(Partition{}, Partition{3}, AMethod::plethysm) == 0);
}

TEST_CASE("a_coeff: stable values below the delta regime") {
  // Res Sym^2(C^n) = 2 S^{(n)} + 2 S^{(n-1,1)} + S^{(n-2,2)} stably (the
  // diagonal and off-diagonal permutation modules), so:
  CHECK(engine().a_coeff(Partition{2}, Partition{}, AMethod::plethysm) == 2);
  CHECK(engine().a_coeff(Partition{2}, Partition{1}, AMethod::plethysm) == 2);
  CHECK(engine().a_coeff(Partition{2}, Partition{2}, AMethod::plethysm) == 1);
  CHECK(engine().a_coeff(Partition{2}, Partition{1, 1}, AMethod::plethysm) == 0);
  CHECK(engine().a_coeff(Partition{1}, Partition{}, AMethod::plethysm) == 1);
  CHECK(engine().a_coeff(Partition{1}, Partition{1}, AMethod::plethysm) == 1);
}

TEST_CASE("a_coeff: the two routes agree up to size 4") {
  for (int ls = 0; ls <= 4; ++ls)
    for (const Partition& lambda : partitions_of(ls))
      for (int ms = 0; ms <= 4; ++ms)
        for (const Partition& mu : partitions_of(ms))
          CHECK(engine().a_coeff(lambda, mu, AMethod::plethysm) ==
                engine().a_coeff(lambda, mu, AMethod::character));
}

TEST_CASE("a_coeff is stable in n at and beyond the evaluation point") {
  for (int ls = 0; ls <= 4; ++ls)
    for (const Partition& lambda : partitions_of(ls))
      for (int ms = 0; ms <= 3; ++ms)
        for (const Partition& mu : partitions_of(ms)) {
          int n0 = CoefficientEngine::stable_n(lambda, mu);
          long long at_n0 = stable_pairing(lambda, mu, n0);
          CHECK(at_n0 == engine().a_coeff(lambda, mu, AMethod::character));
          CHECK(stable_pairing(lambda, mu, n0 + 1) == at_n0);
          CHECK(stable_pairing(lambda, mu, n0 + 2) == at_n0);
        }
}

TEST_CASE("b_coeff: examples") {
  CHECK(engine().b_coeff(Partition{}, Partition{}) == 1);
  CHECK(engine().b_coeff(Partition{1}, Partition{1}) == 1);
  CHECK(engine().b_coeff(Partition{2}, Partition{1}) == 0);  // |lambda| > |mu|
  CHECK(engine().b_coeff(Partition{}, Partition{1}) == -1);
  CHECK(engine().b_coeff(Partition{1}, Partition{2}) == -2);
  // insensitive to the truncation degree once D >= |mu|
  CHECK(engine().b_coeff(Partition{1}, Partition{2}, 5) == -2);
  CHECK_THROWS_AS(engine().b_coeff(Partition{1}, Partition{2, 1}, 2), std::invalid_argument);
}

TEST_CASE("Assaf-Speyer: chi^{mu[n]} = sum_lambda b_lambda^mu Res S^lambda(C^n)") {
  const CharacterEngine& chars = engine().sym().characters();
  for (int size = 0; size <= 3; ++size) {
    for (const Partition& mu : partitions_of(size)) {
      for (int n = std::max(1, mu.size() + mu.part(0)); n <= 6; ++n) {
        ClassFunction lhs = chars.irreducible(pad(mu, n));
        ClassFunction rhs(n);
        for (int ls = 0; ls <= size; ++ls) {
          for (const Partition& lambda : partitions_of(ls)) {
            long long b = engine().b_coeff(lambda, mu);
            if (!b) continue;
            ClassFunction part = chars.restriction_character(lambda, n);
            part *= Rational(static_cast<long>(b));
            rhs += part;
          }
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("m_expansion: frozen small cases") {
  Expansion e0 = engine().m_expansion(Partition{});
  REQUIRE(e0.terms.size() == 1);
  CHECK(e0.terms[0].lambda == Partition{});
  CHECK(e0.terms[0].coeff == 1);

  Expansion e1 = engine().m_expansion(Partition{1});
  REQUIRE(e1.terms.size() == 1);
  CHECK(e1.terms[0].lambda == Partition{1});
  CHECK(e1.terms[0].coeff == 1);

  Expansion e2 = engine().m_expansion(Partition{2});
  REQUIRE(e2.terms.size() == 2);
  CHECK(e2.terms[0].lambda == Partition{2});
  CHECK(e2.terms[0].coeff == 1);
  CHECK(e2.terms[1].lambda == Partition{1});
  CHECK(e2.terms[1].coeff == -1);

  Expansion e11 = engine().m_expansion(Partition{1, 1});
  REQUIRE(e11.terms.size() == 1);
  CHECK(e11.terms[0].lambda == Partition{1, 1});
  CHECK(e11.terms[0].coeff == 1);

  // frozen from the hand plethysm computation in degree 3
  Expansion e21 = engine().m_expansion(Partition{2, 1});
  REQUIRE(e21.terms.size() == 4);
  CHECK(e21.terms[0].lambda == Partition{2, 1});
  CHECK(e21.terms[0].coeff == 1);
  CHECK(e21.terms[1].lambda == Partition{2});
  CHECK(e21.terms[1].coeff == -1);
  CHECK(e21.terms[2].lambda == Partition{1, 1});
  CHECK(e21.terms[2].coeff == -1);
  CHECK(e21.terms[3].lambda == Partition{1});
  CHECK(e21.terms[3].coeff == 1);
}

TEST_CASE("m_expansion: sign pattern and degree bound up to size 4") {
  for (int size = 0; size <= 4; ++size) {
    for (const Partition& mu : partitions_of(size)) {
      for (const ExpansionTerm& t : engine().m_expansion(mu).terms) {
        CHECK(t.lambda.size() <= mu.size());
        int sign = (mu.size() - t.lambda.size()) % 2 == 0 ? 1 : -1;
        CHECK(t.coeff * sign > 0);
      }
    }
  }
}

TEST_CASE("verify_inversion: examples and failure witness") {
  CHECK(engine().verify_inversion(Partition{}, 3).pass);
  CHECK(engine().verify_inversion(Partition{1}, 4).pass);
  CHECK(engine().verify_inversion(Partition{2, 1}, 7).pass);
  CHECK_THROWS_AS(engine().verify_inversion(Partition{2}, 3), std::invalid_argument);

  // corrupted-coefficient fixture: the report must fail and carry a witness
  Expansion corrupt = engine().m_expansion(Partition{2});
  corrupt.terms[0].coeff += 1;
  InversionReport r = engine().verify_inversion_against(corrupt, 5);
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->lhs != r.witness->rhs);
}

TEST_CASE("verify_littlewood") {
  CHECK(engine().verify_littlewood(2).pass);
  LittlewoodReport r = engine().verify_littlewood(4);
  CHECK(r.pass);
  // pair count: sum over |mu| <= 4 of p(|mu|) * sum_{s <= |mu|} p(s)
  long long expected_pairs = 0;
  for (int ms = 0; ms <= 4; ++ms)
    for (int ls = 0; ls <= ms; ++ls)
      expected_pairs += static_cast<long long>(partitions_of(ms).size()) *
                        static_cast<long long>(partitions_of(ls).size());
  CHECK(r.pairs_checked == expected_pairs);
  CHECK_THROWS_AS(engine().verify_littlewood(0), std::invalid_argument);
}

TEST_CASE("a-matrix in the M-basis and the m_expansion matrix are mutual inverses") {
  // index set: partitions of size <= 4; stable n = 9
  const int n = 9;
  std::vector<Partition> index;
  for (int s = 0; s <= 4; ++s)
    for (const Partition& p : partitions_of(s)) index.push_back(p);
  const size_t dim = index.size();
  auto pos_of = [&](const Partition& p) {
    for (size_t i = 0; i < dim; ++i)
      if (index[i] == p) return i;
    throw std::logic_error("index lookup failed: " + p.to_text());
  };

  // Pieri matrix: [M^mu] = sum_{mu/nu h.s.} [S^{nu[n]}]
  std::vector<std::vector<Rational>> pieri(dim, std::vector<Rational>(dim, 0));
  for (size_t r = 0; r < dim; ++r)
    for (const Partition& nu : horizontal_strip_subpartitions(index[r]))
      pieri[r][pos_of(nu)] = 1;

  // invert (unitriangular in the table order)
  std::vector<std::vector<Rational>> pieri_inv(dim, std::vector<Rational>(dim, 0));
  for (size_t r = 0; r < dim; ++r) pieri_inv[r][r] = 1;
  {
    auto a = pieri;
    for (size_t col = 0; col < dim; ++col) {
      for (size_t r = 0; r < dim; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rational f = a[r][col];
        for (size_t c = 0; c < dim; ++c) {
          a[r][c] -= f * a[col][c];
          pieri_inv[r][c] -= f * pieri_inv[col][c];
        }
      }
    }
  }

  // A[lambda][mu]: coefficient of [M^mu] in [Res S^lambda(C^9)]
  const CharacterEngine& chars = engine().sym().characters();
  std::vector<std::vector<Rational>> a_matrix(dim, std::vector<Rational>(dim, 0));
  for (size_t l = 0; l < dim; ++l) {
    auto mult = chars.decompose(chars.restriction_character(index[l], n));
    std::vector<Rational> s_coords(dim, 0);
    for (const auto& [kappa, count] : mult) {
      std::vector<int> tail(kappa.parts().begin() + (kappa.length() ? 1 : 0), kappa.parts().end());
      Partition theta(tail);
      REQUIRE(theta.size() <= 4);  // stability: nothing outside the index set
      s_coords[pos_of(theta)] = Rational(static_cast<long>(count));
    }
    for (size_t m = 0; m < dim; ++m)
      for (size_t t = 0; t < dim; ++t) a_matrix[l][m] += s_coords[t] * pieri_inv[t][m];
  }

  // B[mu][lambda]: m_expansion coefficients
  std::vector<std::vector<Rational>> b_matrix(dim, std::vector<Rational>(dim, 0));
  for (size_t r = 0; r < dim; ++r)
    for (const ExpansionTerm& t : engine().m_expansion(index[r]).terms)
      b_matrix[r][pos_of(t.lambda)] = Rational(static_cast<long>(t.coeff));

  for (size_t r = 0; r < dim; ++r) {
    CHECK(b_matrix[r][r] == 1);  // unitriangular diagonal (Littlewood)
    for (size_t c = 0; c < dim; ++c) {
      Rational ab = 0, ba = 0;
      for (size_t k = 0; k < dim; ++k) {
        ab += a_matrix[r][k] * b_matrix[k][c];
        ba += b_matrix[r][k] * a_matrix[k][c];
      }
      CHECK(ab == (r == c ? 1 : 0));
      CHECK(ba == (r == c ? 1 : 0));
    }
  }
}

TEST_CASE("coeff_table: construction enforces the a-invariants") {
  CoeffTable a = engine().coeff_table(CoeffKind::a, 3, 3);
  CHECK(a.at(Partition{2, 1}, Partition{2, 1}) == 1);
  CHECK(a.at(Partition{2, 1}, Partition{3}) == 0);
  CHECK(a.at(Partition{2}, Partition{1}) == 2);
  for (const auto& [key, value] : a.entries) CHECK(value > 0);  // zeros are not stored

  CoeffTable b = engine().coeff_table(CoeffKind::b, 3, 3);
  CHECK(b.at(Partition{1}, Partition{2}) == -2);

  // the a- and b-matrices over the padded bases are mutual inverses:
  // sum_lambda b_lambda^mu a_nu^lambda = delta_{mu,nu}
  std::vector<Partition> index;
  for (int s = 0; s <= 3; ++s)
    for (const Partition& p : partitions_of(s)) index.push_back(p);
  for (const Partition& mu : index) {
    for (const Partition& nu : index) {
      long long acc = 0;
      for (const Partition& lambda : index) acc += b.at(lambda, mu) * a.at(lambda, nu);
      CHECK(acc == (mu == nu ? 1 : 0));
    }
  }
}

TEST_CASE("h_series_plethysm truncation consistency") {
  // recomputing at a higher degree and truncating gives the same element
  Partition kappa{2, 1};
  SymFn low = engine().h_series_plethysm(kappa, 3);
  SymFn high = engine().h_series_plethysm(kappa, 5);
  CHECK(SymEngine::truncate(high, 3) == low);
}
