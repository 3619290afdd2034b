#pragma once

#include "xm/crystal.hpp"
#include "xm/partition.hpp"
#include "xm/qseries.hpp"
#include "xm/rigged.hpp"

#include <json.hpp>

namespace xm {

/*
 * Wire forms:
 *   Partition            [2,2,1]                       (empty: [])
 *   LaurentPoly          {"2":1,"3":1}                 (zero: {})
 *   Path                 {"type":"A","rank":1,"letters":[2,1,1,2,1]}
 *                        letters leftmost factor first, barred = negative
 *   RiggedConfiguration  {"type":"A","rank":4,"length":7,
 *                         "nu":[[2,2,1],...],"riggings":[[0,0,3],...]}
 *                        riggings[a][k] labels nu[a][k]; vacancy numbers
 *                        are never serialized, always recomputed
 */

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Laurent& p);
Laurent laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Path& p);
Path path_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RiggedConfiguration& rc);
RiggedConfiguration rc_from_json(const nlohmann::json& j);

CartanType type_from_json(const nlohmann::json& j);  // reads "type" and "rank"

}  // namespace xm
