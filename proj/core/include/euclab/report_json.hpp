#ifndef EUCLAB_REPORT_JSON_HPP
#define EUCLAB_REPORT_JSON_HPP

#include <nlohmann/json.hpp>

#include "euclab/census.hpp"
#include "euclab/estimator.hpp"
#include "euclab/euclid.hpp"
#include "euclab/factorpat.hpp"
#include "euclab/genlead.hpp"
#include "euclab/montecarlo.hpp"

namespace euclab {

/// {"fraction": "p/q", "value": double}
nlohmann::json rational_json(const Rational& x);
nlohmann::json poly_json(const Poly& p);

nlohmann::json to_json(const EuclidTrace& t);
nlohmann::json to_json(const FactorProfile& p);
nlohmann::json to_json(const MainTerms& m);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const CensusReport& r);
nlohmann::json to_json(const SampleReport& r);
nlohmann::json to_json(const GenericLeadSet& s);

}  // namespace euclab

#endif  // EUCLAB_REPORT_JSON_HPP
