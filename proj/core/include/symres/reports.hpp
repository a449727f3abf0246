#ifndef SYMRES_REPORTS_HPP
#define SYMRES_REPORTS_HPP

#include <optional>
#include <string>

#include "symres/cecomplex.hpp"
#include "symres/characters.hpp"
#include "symres/coefficients.hpp"
#include "symres/symfunc.hpp"

namespace symres {

struct OrthogonalityWitness {
  Partition lambda, nu;
  Rational value;
};

struct OrthogonalityReport {
  int n = 0;
  bool pass = false;
  long long pairs_checked = 0;
  std::optional<OrthogonalityWitness> witness;
};

/// Checks <chi^lambda, chi^nu> = delta over all pairs of partitions of n.
OrthogonalityReport verify_orthogonality(const CharacterEngine& chars, int n);

// Compact JSON payloads. Term order follows the stored canonical orders, so
// identical inputs serialize to identical bytes.
std::string json_symfn(const SymFn& f);
std::string json_expansion(const Expansion& e);
std::string json_inversion(const InversionReport& r);
std::string json_littlewood(const LittlewoodReport& r);
std::string json_orthogonality(const OrthogonalityReport& r);
std::string json_slice(const SliceReport& r);
std::string json_resolution(const ResolutionReport& r);
std::string json_chartable(const CharacterEngine& chars, int n);
std::string json_freelie(const GAlgebra& g);

std::string csv_chartable(const CharacterEngine& chars, int n);
std::string csv_expansion(const Expansion& e);

}  // namespace symres

#endif
