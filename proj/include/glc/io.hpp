#pragma once

#include "glc/duality.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace glc {

// A parsed instance file. Sections: [ring] (required, first), [quotient],
// [module M], [module N], [params]. Missing module sections default to the
// rank-one free module S itself.
struct Instance {
  GradingData grading;
  Scalar characteristic = 32003;
  std::vector<Polynomial> quotient;
  Presentation mod_m;
  Presentation mod_n;
  std::size_t window = 4;
  std::size_t max_resolution = 12;
  std::size_t oracle_tmax = 5;
  std::size_t trunc_extra = 1;
  std::optional<std::string> scenario;

  RingSpec ring() const { return RingSpec(grading, PrimeField(characteristic)); }
  QuotientContext context() const { return QuotientContext::make(ring(), quotient); }
};

// Throws ParseError with 1-based line numbers.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

// Free-standing grammar helpers (line is attached to thrown ParseErrors).
Polynomial parse_polynomial(const RingSpec& ring, const std::string& text, std::size_t line = 0);
ModuleElement parse_module_element(const RingSpec& ring, std::size_t rank, const std::string& text,
                                   std::size_t line = 0);
Multidegree parse_degree_tuple(const std::string& text, std::size_t r, std::size_t line = 0);

// ----- report rendering -------------------------------------------------------

std::string degree_str(const Multidegree& d);
std::string hypothesis_text(const HypothesisReport& h);
// Summary line `PASS k/k cells` or `FAIL j/k cells` plus one line per failure.
std::string duality_report_text(const DualityReport& rep);
// Machine-readable: header then one row per cell.
std::string duality_report_tsv(const DualityReport& rep);
std::string betti_table_text(const Resolution& res);
// "sharp" or "not sharp" with an integer witness (alpha, beta).
std::string sharp_report_text(const GradingData& g);

}  // namespace glc
