#pragma once

#include <json.hpp>

#include "crp/antichain.hpp"
#include "crp/cr_semantics.hpp"
#include "crp/model.hpp"
#include "crp/proofs.hpp"

namespace crp {

nlohmann::ordered_json json_of(const Context& c);
nlohmann::ordered_json json_of(const Rule& r);
nlohmann::ordered_json json_of(const Program& p);
nlohmann::ordered_json json_of(const AbductiveSupport& s);
nlohmann::ordered_json json_of(const CrSolution& s);
nlohmann::ordered_json json_of(const Proof& pr);
nlohmann::ordered_json json_of(const AntichainReport& r);
nlohmann::ordered_json json_of(const GenConfig& cfg);
nlohmann::ordered_json json_of(const Counterexample& ce);
nlohmann::ordered_json json_of(const FalsifyReport& r);

}  // namespace crp
