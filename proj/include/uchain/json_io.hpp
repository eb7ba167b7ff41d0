#pragma once

#include <map>

#include <json.hpp>

#include "uchain/complex.hpp"
#include "uchain/error.hpp"
#include "uchain/homology.hpp"
#include "uchain/lefschetz.hpp"
#include "uchain/normal_form.hpp"

namespace uchain {

// Insertion-ordered so that output bytes follow the documented field order.
using Json = nlohmann::ordered_json;

Json to_json(const NormalForm& nf);
/// Terms {"gen": id, "exp": k}, sorted by identifier then exponent.
Json to_json(const GradedComplex& c, const LaurentChain& x);
Json to_json(const GradedComplex& c, const HomologyPresentation& h);
Json to_json(const LesReport& report);
Json to_json(const VerificationReport& report);
Json to_json(const std::map<int, std::size_t>& betti);
Json error_json(const Error& e);

}  // namespace uchain
