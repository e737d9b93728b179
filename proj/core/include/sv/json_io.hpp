#pragma once

#include <json.hpp>

#include "sv/extension.hpp"
#include "sv/forms.hpp"
#include "sv/involution.hpp"
#include "sv/series.hpp"

namespace sv {

using Json = nlohmann::ordered_json;

// Scalars serialize as exact textual strings; no floating point anywhere.
Json to_json(const GaussRat& q);
Json to_json(const Rat& q);

// {"type":"plus","rho":...,"beta":...,"nu":...} or
// {"type":"minus","tau":...,"r1":...,"r2":...,"sigma":...}
Json involution_to_json(const InvolutionParams& p);
InvolutionParams involution_from_json(const Json& j);

// Compact command-line form: "plus:rho=1,beta=1+1*i,nu=3/5+4/5*i" or
// "minus:tau=1,r1=1,r2=0,sigma=i".
InvolutionParams parse_involution_spec(const std::string& spec);

// {"series":{"kind":"Aab","a":...,"b":...,"aux":...}}
Json series_to_json(const SeriesSpec& s);
SeriesSpec series_from_json(const Json& j);

// {"verma":{"h":...,"m":...,"z":...,"depth":D}}
Json verma_spec_to_json(const Weight& wt, long long depth);
std::pair<Weight, long long> verma_spec_from_json(const Json& j);

Json check_report_to_json(const CheckReport& rep);

// {"level":d,"dimension":n,"matrix":[[...]],"verdict":"...","radical_dim":r,"witness":[...]}
Json gram_report_to_json(long long level, const Mat& g, const PositivityVerdict& verdict,
                         const std::vector<Vec>& radical);

Json extension_report_to_json(const ExtensionSystem& sys, const std::vector<Vec>& basis,
                              const ReplayReport* replay);

} // namespace sv
