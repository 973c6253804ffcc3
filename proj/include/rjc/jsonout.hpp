#pragma once

#include <json.hpp>

#include "rjc/hrc.hpp"
#include "rjc/positivity.hpp"

namespace rjc {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

ordered_json json_classify(const BPoly& p, const Verdict& v);
ordered_json json_critical(const BPoly& p, const std::optional<WitnessBox>& w);
ordered_json json_connected(const BPoly& p, const ConnectednessCertificate& cert);
ordered_json json_subres(const BPoly& p, const BPoly& q, Var var, int k, const UPoly& result);
ordered_json json_refute(const Family& f, const BPoly& q, const RefutationCertificate& cert);
ordered_json json_bruna(const std::vector<Rat>& b, const BrunaWitnesses& w);
ordered_json json_hankel(int j, int k, const Rat& det, const std::vector<Rat>* minors);
ordered_json json_hrc_integral(const Family& f, const BPoly& h, const Rat& eps, double value);
ordered_json json_tau(const Family& f, const BPoly& h, int t);

}  // namespace rjc
